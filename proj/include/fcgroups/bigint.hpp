#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "fcgroups/errors.hpp"

namespace fcg {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const BigInt& v) { return v.str(); }

/// num / den, raising InexactDivision unless den divides num.
inline BigInt exact_div(const BigInt& num, const BigInt& den, const char* what = "division") {
  if (den == 0) throw InexactDivision(std::string(what) + ": division by zero");
  BigInt q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0) throw InexactDivision(std::string(what) + ": " + num.str() + " / " + den.str() + " is not integral");
  return q;
}

inline BigInt factorial(long long n) {
  if (n < 0) throw InexactDivision("factorial of negative argument " + std::to_string(n));
  BigInt r = 1;
  for (long long i = 2; i <= n; ++i) r *= i;
  return r;
}

/// C(n, k); zero when k < 0 or k > n.
inline BigInt binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact: r is C(n-k+i, i) after this step
  }
  return r;
}

inline BigInt pow(const BigInt& base, unsigned exp) {
  BigInt r = 1;
  for (unsigned i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace fcg
