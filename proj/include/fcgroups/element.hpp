#pragma once

// Monomial matrices whose nonzero entries are roots of unity, stored exactly.
//
// An n x n monomial matrix g is kept as a pair (perm, weights):
//   perm[j]    = row (0-based) of the nonzero entry in column j,
//   weights[j] = exponent a_j of omega = exp(2 pi i / m) in column j, in [0, m).
// Textually this is the shorthand [f(g); (a_1, ..., a_n)] with 1-based rows.

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fcgroups/errors.hpp"

namespace fcg {

struct Element {
  std::vector<int> perm;
  std::vector<int> weights;

  std::size_t rank() const { return perm.size(); }

  friend bool operator==(const Element&, const Element&) = default;
  friend auto operator<=>(const Element&, const Element&) = default;
};

struct ElementHash {
  std::size_t operator()(const Element& g) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&h](int v) {
      h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    };
    for (int v : g.perm) mix(v);
    for (int v : g.weights) mix(v);
    return static_cast<std::size_t>(h);
  }
};

inline int mod(long long x, int m) {
  long long r = x % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

inline Element identity_element(std::size_t n) {
  Element e;
  e.perm.resize(n);
  std::iota(e.perm.begin(), e.perm.end(), 0);
  e.weights.assign(n, 0);
  return e;
}

/// True when perm is a bijection on {0..n-1} and every weight lies in [0, m).
inline bool is_well_formed(const Element& g, int m) {
  const std::size_t n = g.perm.size();
  if (g.weights.size() != n) return false;
  std::vector<char> seen(n, 0);
  for (int r : g.perm) {
    if (r < 0 || static_cast<std::size_t>(r) >= n || seen[r]) return false;
    seen[r] = 1;
  }
  return std::all_of(g.weights.begin(), g.weights.end(), [m](int w) { return w >= 0 && w < m; });
}

/// Matrix product g*h. Column j of h sends e_j to omega^{h_j} e_{h.perm[j]}, and g then
/// contributes the weight of its column h.perm[j].
inline Element multiply(int m, const Element& g, const Element& h) {
  const std::size_t n = g.rank();
  Element r;
  r.perm.resize(n);
  r.weights.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    const int k = h.perm[j];
    r.perm[j] = g.perm[k];
    r.weights[j] = (g.weights[k] + h.weights[j]) % m;
  }
  return r;
}

inline Element inverse(int m, const Element& g) {
  const std::size_t n = g.rank();
  Element r;
  r.perm.resize(n);
  r.weights.resize(n);
  for (std::size_t j = 0; j < n; ++j) r.perm[g.perm[j]] = static_cast<int>(j);
  for (std::size_t j = 0; j < n; ++j) r.weights[j] = mod(-g.weights[r.perm[j]], m);
  return r;
}

inline std::vector<int> underlying_permutation(const Element& g) { return g.perm; }

/// Replaces every nontrivial root of unity with -1 (exponent 1 over m = 2).
inline Element project_to_B(const Element& g) {
  Element r = g;
  for (int& w : r.weights) w = w == 0 ? 0 : 1;
  return r;
}

inline int weight_sum(const Element& g, int m) {
  long long s = 0;
  for (int w : g.weights) s += w;
  return mod(s, m);
}

inline std::size_t nontrivial_count(const Element& g) {
  return static_cast<std::size_t>(
      std::count_if(g.weights.begin(), g.weights.end(), [](int w) { return w != 0; }));
}

/// Shorthand text: `214536;(0,17,2,3,2,6)` for n <= 9, `[2,1,...];(...)` otherwise.
inline std::string format_element(const Element& g) {
  std::string out;
  const std::size_t n = g.rank();
  if (n <= 9) {
    for (int r : g.perm) out += static_cast<char>('1' + r);
  } else {
    out += '[';
    for (std::size_t j = 0; j < n; ++j) {
      if (j) out += ',';
      out += std::to_string(g.perm[j] + 1);
    }
    out += ']';
  }
  out += ";(";
  for (std::size_t j = 0; j < n; ++j) {
    if (j) out += ',';
    out += std::to_string(g.weights[j]);
  }
  out += ')';
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Element& g) { return os << format_element(g); }

namespace detail {

inline std::string strip_spaces(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t' && c != '\n' && c != '\r') s += c;
  return s;
}

inline long long parse_int(std::string_view s, std::string_view context) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    throw ParseError("bad integer '" + std::string(s) + "' in " + std::string(context));
  return v;
}

inline std::vector<long long> parse_int_list(std::string_view s, std::string_view context) {
  std::vector<long long> out;
  if (s.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto comma = s.find(',', start);
    out.push_back(parse_int(s.substr(start, comma - start), context));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

// Entries of one cycle or one-line body: comma list when a comma is present, else digits.
inline std::vector<long long> parse_points(std::string_view s, std::string_view context) {
  if (s.find(',') != std::string_view::npos) return parse_int_list(s, context);
  std::vector<long long> out;
  for (char c : s) {
    if (c < '0' || c > '9') throw ParseError("bad permutation text in " + std::string(context));
    out.push_back(c - '0');
  }
  return out;
}

inline std::vector<int> parse_permutation(std::string_view s, std::size_t n, std::string_view ctx) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  if (s == "id" || s == "e") return perm;
  auto check_point = [&](long long p) {
    if (p < 1 || static_cast<std::size_t>(p) > n)
      throw ParseError("point " + std::to_string(p) + " out of range in " + std::string(ctx));
    return static_cast<int>(p - 1);
  };
  if (!s.empty() && s.front() == '(') {
    std::vector<char> moved(n, 0);
    std::size_t pos = 0;
    while (pos < s.size()) {
      if (s[pos] != '(') throw ParseError("bad cycle notation in " + std::string(ctx));
      const auto close = s.find(')', pos);
      if (close == std::string_view::npos) throw ParseError("unclosed cycle in " + std::string(ctx));
      const auto pts = parse_points(s.substr(pos + 1, close - pos - 1), ctx);
      for (std::size_t i = 0; i < pts.size(); ++i) {
        const int a = check_point(pts[i]);
        const int b = check_point(pts[(i + 1) % pts.size()]);
        if (moved[a]) throw ParseError("point repeated across cycles in " + std::string(ctx));
        moved[a] = 1;
        perm[a] = b;
      }
      pos = close + 1;
    }
    return perm;
  }
  std::vector<long long> pts;
  if (!s.empty() && s.front() == '[') {
    if (s.back() != ']') throw ParseError("unclosed bracket in " + std::string(ctx));
    pts = parse_int_list(s.substr(1, s.size() - 2), ctx);
  } else {
    pts = parse_points(s, ctx);
  }
  if (pts.size() != n)
    throw ParseError("permutation length does not match weight count in " + std::string(ctx));
  for (std::size_t j = 0; j < n; ++j) perm[j] = check_point(pts[j]);
  return perm;
}

}  // namespace detail

/// Parses the shorthand. Accepts one-line digits, a bracketed comma list, cycle
/// notation such as `(132)(56)`, or `id`; an outer `[...]` wrapper is ignored.
/// Weights must already lie in [0, m).
inline Element parse_element(std::string_view text, int m) {
  std::string s = detail::strip_spaces(text);
  const std::string ctx = "'" + std::string(text) + "'";
  if (s.size() >= 2 && s.front() == '[' && s.back() == ']') s = s.substr(1, s.size() - 2);
  const auto semi = s.find(';');
  if (semi == std::string::npos) throw ParseError("missing ';' in " + ctx);
  const std::string_view perm_part = std::string_view(s).substr(0, semi);
  std::string_view weight_part = std::string_view(s).substr(semi + 1);
  if (weight_part.size() < 2 || weight_part.front() != '(' || weight_part.back() != ')')
    throw ParseError("weights must be written as (w1,...,wn) in " + ctx);
  const auto ws = detail::parse_int_list(weight_part.substr(1, weight_part.size() - 2), ctx);
  if (ws.empty()) throw ParseError("empty weight vector in " + ctx);
  Element g;
  g.weights.reserve(ws.size());
  for (long long w : ws) {
    if (w < 0 || w >= m)
      throw ParseError("weight " + std::to_string(w) + " outside [0," + std::to_string(m) + ") in " + ctx);
    g.weights.push_back(static_cast<int>(w));
  }
  g.perm = detail::parse_permutation(perm_part, ws.size(), ctx);
  if (!is_well_formed(g, m)) throw ParseError("permutation is not a bijection in " + ctx);
  return g;
}

}  // namespace fcg
