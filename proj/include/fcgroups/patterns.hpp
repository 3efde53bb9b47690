#pragma once

// Weighted pattern containment in monomial matrices and the pattern-avoidance
// deciders for G(m,1,n) and for D_n = G(2,2,n).

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fcgroups/group.hpp"

namespace fcg {

enum class WeightPred { zero, nonzero, any };

inline bool satisfies(WeightPred pred, int weight) {
  switch (pred) {
    case WeightPred::zero: return weight == 0;
    case WeightPred::nonzero: return weight != 0;
    case WeightPred::any: return true;
  }
  return false;
}

/// k x k template: column j has its entry in row perm[j] with a weight matching preds[j].
struct Pattern {
  std::string name;
  std::vector<int> perm;
  std::vector<WeightPred> preds;

  std::size_t size() const { return perm.size(); }
};

enum class PatternFamily { Gm1n, Bn, Dn };

struct PatternCatalog {
  PatternFamily family;
  std::vector<Pattern> patterns;
};

/// The pattern rows for G(m,1,n); `Bn` reads them with m = 2. `Dn` drops the
/// two-column row and adds (+-1,-2,-3), which (-1,-2) makes redundant in type B.
inline PatternCatalog catalog(PatternFamily family) {
  using W = WeightPred;
  std::vector<Pattern> rows = {
      {"(-1,-2)", {0, 1}, {W::nonzero, W::nonzero}},
      {"(+-3,2,+-1)", {2, 1, 0}, {W::any, W::zero, W::any}},
      {"(+-3,+-1,-2)", {1, 2, 0}, {W::any, W::nonzero, W::any}},
      {"(+-2,+-1,-3)", {1, 0, 2}, {W::any, W::any, W::nonzero}},
      {"(+-2,-3,+-1)", {2, 0, 1}, {W::any, W::any, W::nonzero}},
      {"(+-1,-3,-2)", {0, 2, 1}, {W::any, W::nonzero, W::nonzero}},
  };
  if (family == PatternFamily::Dn) {
    rows.erase(rows.begin());
    rows.push_back({"(+-1,-2,-3)", {0, 1, 2}, {W::any, W::nonzero, W::nonzero}});
  }
  return {family, std::move(rows)};
}

/// Concrete signed patterns (weights 0 or 1 over m = 2) represented by `p`, in the
/// order of a mixed-radix count over the `any` columns; duplicates removed.
inline std::vector<Element> expand_signed(const Pattern& p) {
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < p.size(); ++j)
    if (p.preds[j] == WeightPred::any) free_cols.push_back(j);
  std::set<Element> seen;
  std::vector<Element> out;
  for (unsigned mask = 0; mask < (1u << free_cols.size()); ++mask) {
    Element e;
    e.perm = p.perm;
    e.weights.resize(p.size());
    for (std::size_t j = 0; j < p.size(); ++j) e.weights[j] = p.preds[j] == WeightPred::nonzero ? 1 : 0;
    for (std::size_t f = 0; f < free_cols.size(); ++f) e.weights[free_cols[f]] = (mask >> f) & 1u;
    if (seen.insert(e).second) out.push_back(std::move(e));
  }
  return out;
}

/// Submatrix of g on the given columns (ascending), rows order-standardized.
inline Element submatrix(const Element& g, const std::vector<int>& columns) {
  Element sub;
  std::vector<int> rows;
  for (int c : columns) rows.push_back(g.perm[static_cast<std::size_t>(c)]);
  std::vector<int> sorted = rows;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    sub.perm.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), rows[j]) - sorted.begin()));
    sub.weights.push_back(g.weights[static_cast<std::size_t>(columns[j])]);
  }
  return sub;
}

inline bool matches(const Element& sub, const Pattern& p) {
  if (sub.perm != p.perm) return false;
  for (std::size_t j = 0; j < p.size(); ++j)
    if (!satisfies(p.preds[j], sub.weights[j])) return false;
  return true;
}

/// First column set (lexicographic, 0-based) whose submatrix matches `p`.
inline std::optional<std::vector<int>> find_pattern(const Element& g, const Pattern& p) {
  const int n = static_cast<int>(g.rank());
  const int k = static_cast<int>(p.size());
  if (k > n) return std::nullopt;
  std::vector<int> cols(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) cols[static_cast<std::size_t>(i)] = i;
  while (true) {
    if (matches(submatrix(g, cols), p)) return cols;
    int i = k - 1;
    while (i >= 0 && cols[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return std::nullopt;
    ++cols[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) cols[static_cast<std::size_t>(j)] = cols[static_cast<std::size_t>(j - 1)] + 1;
  }
}

inline bool contains(const Element& g, const Pattern& p) { return find_pattern(g, p).has_value(); }

struct PatternWitness {
  Pattern pattern;
  std::vector<int> columns;
};

inline std::optional<PatternWitness> find_any(const Element& g, const PatternCatalog& cat) {
  for (const Pattern& p : cat.patterns)
    if (auto cols = find_pattern(g, p)) return PatternWitness{p, std::move(*cols)};
  return std::nullopt;
}

inline PatternFamily pattern_family_for(const GroupSpec& spec) {
  switch (spec.genset()) {
    case GenSet::coxeterB: return PatternFamily::Bn;
    case GenSet::gm1n: return spec.m() == 2 ? PatternFamily::Bn : PatternFamily::Gm1n;
    case GenSet::classical:
      if (spec.m() == 2) return PatternFamily::Dn;
      break;
    default: break;
  }
  throw Unsupported("no pattern characterization of full commutativity for " + spec.name());
}

inline bool is_fc_by_patterns(const GroupSpec& spec, const Element& g) {
  const auto cat = catalog(pattern_family_for(spec));
  require_member(spec, g);
  return !find_any(g, cat).has_value();
}

}  // namespace fcg
