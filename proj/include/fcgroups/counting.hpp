#pragma once

// Closed-form counts of fully commutative elements, in exact arithmetic.

#include <numeric>
#include <string>
#include <vector>

#include "fcgroups/bigint.hpp"

namespace fcg {

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidSpec(what);
}

}  // namespace detail

inline BigInt catalan(long long n) {
  detail::require(n >= 0, "catalan: n must be >= 0");
  return exact_div(binomial(2 * n, n), n + 1, "catalan");
}

/// Type B_n: (n+2) C_n - 1.
inline BigInt fc_count_B(long long n) {
  detail::require(n >= 1, "fc_count_B: n must be >= 1");
  return (n + 2) * catalan(n) - 1;
}

/// Type D_n: (n+3)/2 C_n - 1.
inline BigInt fc_count_D(long long n) {
  detail::require(n >= 2, "fc_count_D: n must be >= 2");
  return exact_div((n + 3) * catalan(n), 2, "fc_count_D") - 1;
}

/// Count for G(m,1,n), n >= 3, as a sum over s of ballot-number terms.
inline BigInt fc_count_fklo(long long m, long long n) {
  detail::require(n >= 3, "fc_count_fklo: n must be >= 3");
  detail::require(m >= 1, "fc_count_fklo: m must be >= 1");
  BigInt sum = 0;
  for (long long s = 0; s <= n - 2; ++s) {
    const BigInt term = exact_div(factorial(n + s) * (n - s + 1), factorial(s) * factorial(n + 1), "fc_count_fklo term");
    sum += term * pow(BigInt(m), static_cast<unsigned>(n - 2 - s));
  }
  return m * (m - 1) * sum + (2 * m - 1) * catalan(n) - (m - 1);
}

/// Number of fully commutative elements of B_n with k entries equal to -1.
inline BigInt alpha(long long n, long long k) {
  detail::require(n >= 0 && k >= 0 && k <= n, "alpha: need 0 <= k <= n");
  if (k == 1) return catalan(n + 1) - 1;
  return binomial(2 * n, n + k) - binomial(2 * n, n + k + 1);
}

/// Count for G(m,1,n) as a polynomial in (m-1), valid for every n >= 1.
inline BigInt fc_count_formula1(long long m, long long n) {
  detail::require(n >= 1, "fc_count_formula1: n must be >= 1");
  detail::require(m >= 1, "fc_count_formula1: m must be >= 1");
  BigInt sum = 0;
  for (long long k = 0; k <= n; ++k)
    sum += (binomial(2 * n, n + k) - binomial(2 * n, n + k + 1)) * pow(BigInt(m - 1), static_cast<unsigned>(k));
  return sum + (catalan(n) - 1) * (m - 1);
}

/// Type H_n: C(2n+2, n+1) - 2^{n+2} + n + 3.
inline BigInt fc_count_H(long long n) {
  detail::require(n >= 2, "fc_count_H: n must be >= 2");
  return binomial(2 * n + 2, n + 1) - pow(BigInt(2), static_cast<unsigned>(n + 2)) + n + 3;
}

enum class FibonacciIndexing {
  shifted,   ///< f_0 = f_1 = 1, f_2 = 2 (the indexing that gives 106 for F_4)
  standard,  ///< f_0 = 0, f_1 = f_2 = 1
};

inline BigInt fibonacci(long long i, FibonacciIndexing idx = FibonacciIndexing::shifted) {
  detail::require(i >= 0, "fibonacci: index must be >= 0");
  BigInt a = 0, b = 1;  // F_0, F_1
  const long long target = idx == FibonacciIndexing::shifted ? i + 1 : i;
  for (long long t = 0; t < target; ++t) {
    BigInt c = a + b;
    a = std::move(b);
    b = std::move(c);
  }
  return a;
}

/// Type F_n. Every quotient in the sum is a Catalan number times a Fibonacci number
/// and is checked for exactness.
inline BigInt fc_count_F(long long n, FibonacciIndexing idx = FibonacciIndexing::shifted) {
  detail::require(n >= 3, "fc_count_F: n must be >= 3");
  auto f = [idx](long long i) { return fibonacci(i, idx); };
  BigInt sum = 0;
  for (long long k = 2; k <= n - 1; ++k)
    sum += exact_div(f(3 * k - 5) * binomial(2 * n - 2 * k, n - k), n - k + 1, "fc_count_F term");
  return 5 * f(3 * n - 4) - 5 * sum + exact_div(binomial(2 * n - 2, n - 1), n, "fc_count_F catalan") -
         2 * f(2 * n - 2) - 2 * f(2 * n - 4) + f(n - 1) - 1;
}

/// Cycle data of a permutation for the star-factorization count.
struct CycleType {
  std::vector<long long> lengths;  ///< all cycle lengths, fixed points included
  long long fixed_not_one = 0;     ///< fixed points other than the point 1
  long long n = 0;
};

/// Cycle type of a 0-based one-line permutation; point 0 plays the role of 1.
inline CycleType cycle_type(const std::vector<int>& perm) {
  CycleType ct;
  ct.n = static_cast<long long>(perm.size());
  std::vector<char> seen(perm.size(), 0);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    long long len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
      seen[j] = 1;
      ++len;
    }
    ct.lengths.push_back(len);
    if (len == 1 && i != 0) ++ct.fixed_not_one;
  }
  return ct;
}

/// Minimal factorizations into star transpositions (1 i):
/// (n + c - 2(k+1))! / (n-k)! * l_1 ... l_c for c cycles and k fixed points other than 1.
inline BigInt star_factorization_count(const CycleType& ct) {
  const long long c = static_cast<long long>(ct.lengths.size());
  const long long k = ct.fixed_not_one;
  const long long top = ct.n + c - 2 * (k + 1);
  if (top < 0) throw InexactDivision("star_factorization_count: negative factorial argument");
  BigInt prod = 1;
  for (long long l : ct.lengths) prod *= l;
  return exact_div(factorial(top) * prod, factorial(ct.n - k), "star_factorization_count");
}

/// S_n with star transpositions: 1 + sum_{t=1}^{n-1} prod_{j=1}^{t} (n-j).
inline BigInt fc_count_star_sym(long long n) {
  detail::require(n >= 2, "fc_count_star_sym: n must be >= 2");
  BigInt total = 1, prod = 1;
  for (long long t = 1; t <= n - 1; ++t) {
    prod *= n - t;
    total += prod;
  }
  return total;
}

/// G(m,m,2): every element of G(2,2,2), otherwise all but one of the 2m elements.
inline BigInt fc_count_mm2(long long m) {
  detail::require(m >= 2, "fc_count_mm2: m must be >= 2");
  return m == 2 ? BigInt(4) : BigInt(2 * m - 1);
}

}  // namespace fcg
