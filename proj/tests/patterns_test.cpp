#include <gtest/gtest.h>

#include <cstdlib>

#include "fcgroups/canonical.hpp"
#include "fcgroups/cayley.hpp"
#include "fcgroups/patterns.hpp"

namespace fcg {
namespace {

Element E(const GroupSpec& spec, const char* text) { return parse_element(text, spec); }

// Signed one-line window read by rows: w(r) = +-(column + 1), negative when the entry is nontrivial.
std::vector<int> row_window(const Element& g) {
  std::vector<int> w(g.rank());
  for (std::size_t c = 0; c < g.rank(); ++c)
    w[static_cast<std::size_t>(g.perm[c])] = (g.weights[c] ? -1 : 1) * static_cast<int>(c + 1);
  return w;
}

// Oracle for the type D condition stated directly on signed triples:
// (a,b,c) with |a| > b > c or -b > |a| > c.
bool has_type_d_triple(const Element& g) {
  const auto w = row_window(g);
  const int n = static_cast<int>(w.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        const int x[3] = {w[static_cast<std::size_t>(i)], w[static_cast<std::size_t>(j)], w[static_cast<std::size_t>(k)]};
        int s[3];
        for (int u = 0; u < 3; ++u) {
          int rank = 1;
          for (int v = 0; v < 3; ++v) rank += std::abs(x[v]) < std::abs(x[u]);
          s[u] = x[u] < 0 ? -rank : rank;
        }
        const int a = s[0], b = s[1], c = s[2];
        if ((std::abs(a) > b && b > c) || (-b > std::abs(a) && std::abs(a) > c)) return true;
      }
  return false;
}

TEST(Catalog, Rows) {
  const auto gm = catalog(PatternFamily::Gm1n);
  ASSERT_EQ(gm.patterns.size(), 6u);
  EXPECT_EQ(gm.patterns[0].perm, (std::vector<int>{0, 1}));
  EXPECT_EQ(gm.patterns[0].preds, (std::vector<WeightPred>{WeightPred::nonzero, WeightPred::nonzero}));
  EXPECT_EQ(gm.patterns[1].perm, (std::vector<int>{2, 1, 0}));
  EXPECT_EQ(gm.patterns[1].preds, (std::vector<WeightPred>{WeightPred::any, WeightPred::zero, WeightPred::any}));

  const auto d = catalog(PatternFamily::Dn);
  ASSERT_EQ(d.patterns.size(), 6u);
  for (std::size_t i = 0; i < 5; ++i) EXPECT_EQ(d.patterns[i].name, gm.patterns[i + 1].name);
  EXPECT_EQ(d.patterns[5].name, "(+-1,-2,-3)");
  for (const auto& p : d.patterns) EXPECT_EQ(p.size(), 3u);
}

TEST(Catalog, SignedExpansion) {
  std::set<Element> all;
  std::size_t total = 0;
  for (const auto& p : catalog(PatternFamily::Gm1n).patterns) {
    const auto concrete = expand_signed(p);
    total += concrete.size();
    all.insert(concrete.begin(), concrete.end());
    for (const auto& e : concrete) EXPECT_TRUE(matches(e, p)) << p.name;
  }
  EXPECT_EQ(total, 19u);
  EXPECT_EQ(all.size(), 19u);
}

TEST(Contains, SignedTripleInB4) {
  const auto b4 = make_group(2, 1, 4, GenSet::coxeterB);
  const auto g2 = E(b4, "(1342);(0,0,1,1)");
  const auto cat = catalog(PatternFamily::Bn);
  const auto& row = cat.patterns[3];
  ASSERT_EQ(row.name, "(+-2,+-1,-3)");
  const auto cols = find_pattern(g2, row);
  ASSERT_TRUE(cols);
  EXPECT_EQ(*cols, (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(submatrix(g2, *cols), (Element{{1, 0, 2}, {0, 0, 1}}));
  EXPECT_FALSE(is_fc_by_patterns(b4, g2));
  EXPECT_TRUE(is_fc_by_patterns(b4, E(b4, "(24);(0,0,1,0)")));
}

TEST(Contains, SmallCases) {
  const auto g313 = make_group(3, 1, 3, GenSet::gm1n);
  const auto cat = catalog(PatternFamily::Gm1n);
  EXPECT_FALSE(find_any(identity(g313), cat));
  const auto w = find_any(E(g313, "id;(2,1,0)"), cat);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->pattern.name, "(-1,-2)");
  EXPECT_EQ(w->columns, (std::vector<int>{0, 1}));
  EXPECT_TRUE(is_fc_by_patterns(g313, E(g313, "(13);(1,1,1)")));
  EXPECT_FALSE(contains(Element{{0, 1}, {1, 1}}, cat.patterns[1]));
}

TEST(Deciders, UnsupportedSpecs) {
  EXPECT_THROW(is_fc_by_patterns(make_group(3, 3, 3, GenSet::classical), identity_element(3)), Unsupported);
  EXPECT_THROW(is_fc_by_patterns(make_group(2, 2, 3, GenSet::affine), identity_element(3)), Unsupported);
  EXPECT_THROW(is_fc_by_patterns(make_group(3, 1, 3, GenSet::gm1n), Element{{0, 1}, {1, 0}}), NotMember);
}

TEST(Deciders, ThreeWayAgreement) {
  for (const auto& spec : {make_group(2, 1, 3, GenSet::coxeterB), make_group(2, 1, 4, GenSet::coxeterB),
                           make_group(3, 1, 3, GenSet::gm1n), make_group(4, 1, 3, GenSet::gm1n),
                           make_group(3, 1, 4, GenSet::gm1n)}) {
    const auto t = build_length_table(spec);
    const auto brute = FcAnalyzer(t).classify_all(2);
    for (LengthTable::Id id = 0; id < t.size(); ++id) {
      const auto& g = t.element(id);
      ASSERT_EQ(is_fc_by_patterns(spec, g), brute[id] != 0) << spec.name() << " " << g;
      ASSERT_EQ(is_fc_by_criterion(canonical_word(spec, g)), brute[id] != 0) << spec.name() << " " << g;
    }
  }
}

TEST(Deciders, TypeDAgreement) {
  for (int n = 3; n <= 5; ++n) {
    const auto spec = make_group(2, 2, n, GenSet::classical);
    const auto t = build_length_table(spec);
    const auto brute = FcAnalyzer(t).classify_all(2);
    for (LengthTable::Id id = 0; id < t.size(); ++id) {
      const auto& g = t.element(id);
      ASSERT_EQ(is_fc_by_patterns(spec, g), brute[id] != 0) << g;
      ASSERT_EQ(!has_type_d_triple(g), brute[id] != 0) << g;
    }
  }
}

// Without (+-1,-2,-3) the five type B rows leave some non-f.c. elements of D_n undetected.
TEST(Deciders, FiveRowsAreNotEnoughForD) {
  const std::size_t expected_misses[] = {1, 6, 25};
  for (int n = 3; n <= 5; ++n) {
    const auto spec = make_group(2, 2, n, GenSet::classical);
    const auto t = build_length_table(spec);
    const auto brute = FcAnalyzer(t).classify_all();
    auto five = catalog(PatternFamily::Dn);
    const Pattern extra = five.patterns.back();
    five.patterns.pop_back();
    std::size_t misses = 0;
    for (LengthTable::Id id = 0; id < t.size(); ++id) {
      const auto& g = t.element(id);
      if (brute[id] || find_any(g, five)) continue;
      ++misses;
      EXPECT_TRUE(contains(g, extra)) << g;
    }
    EXPECT_EQ(misses, expected_misses[n - 3]) << n;
  }
}

TEST(Patterns, MonotoneUnderProjection) {
  const auto spec = make_group(4, 1, 3, GenSet::gm1n);
  const auto cat = catalog(PatternFamily::Gm1n);
  const auto t = build_length_table(spec);
  for (const auto& g : t.elements())
    for (const auto& p : cat.patterns) ASSERT_EQ(contains(g, p), contains(project_to_B(g), p));
}

TEST(Patterns, WitnessSoundness) {
  const auto spec = make_group(3, 1, 4, GenSet::gm1n);
  const auto cat = catalog(PatternFamily::Gm1n);
  const auto t = build_length_table(spec);
  for (const auto& g : t.elements())
    if (const auto w = find_any(g, cat)) {
      const auto sub = submatrix(g, w->columns);
      ASSERT_EQ(sub.perm, w->pattern.perm);
      for (std::size_t j = 0; j < sub.rank(); ++j) ASSERT_TRUE(satisfies(w->pattern.preds[j], sub.weights[j]));
    }
}

// f.c. in G(3,3,3) does not pass to the -1 image in D_3.
TEST(Patterns, NegativeControlForMmn) {
  const auto g333 = make_group(3, 3, 3, GenSet::classical);
  const auto d3 = make_group(2, 2, 3, GenSet::classical);
  const auto t3 = build_length_table(g333);
  const auto td = build_length_table(d3);
  for (const char* text : {"(123);(1,2,0)", "312;(0,2,1)"}) {
    const auto g = E(g333, text);
    EXPECT_TRUE(is_fully_commutative_bruteforce(g333, g, t3)) << text;
    ASSERT_TRUE(is_member(d3, project_to_B(g)));
    EXPECT_FALSE(is_fully_commutative_bruteforce(d3, project_to_B(g), td)) << text;
    EXPECT_FALSE(is_fc_by_patterns(d3, project_to_B(g))) << text;
  }
  EXPECT_FALSE(is_member(d3, project_to_B(E(g333, "(23);(1,1,1)"))));
}

}  // namespace
}  // namespace fcg
