#include <gtest/gtest.h>

#include <algorithm>

#include "fcgroups/canonical.hpp"
#include "fcgroups/cayley.hpp"

namespace fcg {
namespace {

Element E(const GroupSpec& spec, const char* text) { return parse_element(text, spec); }
Word W(const GroupSpec& spec, const char* text) { return parse_word(spec, text); }

std::vector<GroupSpec> tower_groups() {
  return {make_group(3, 1, 3, GenSet::gm1n), make_group(4, 1, 3, GenSet::gm1n), make_group(3, 1, 4, GenSet::gm1n),
          make_group(2, 1, 4, GenSet::coxeterB)};
}

TEST(CosetReps, ListForB) {
  for (int n = 2; n <= 5; ++n) {
    const auto spec = make_group(2, 1, n, GenSet::coxeterB);
    std::vector<Word> expected = {{}};
    for (int i = n - 1; i >= 1; --i) {
      Word w;
      for (int j = i; j < n; ++j) w.push_back(j);
      expected.push_back(w);
    }
    for (int i = 0; i < n; ++i) {
      Word w;
      for (int j = i; j >= 1; --j) w.push_back(j);
      w.push_back(0);
      for (int j = 1; j < n; ++j) w.push_back(j);
      expected.push_back(w);
    }
    std::vector<Word> got;
    for (const auto& rep : coset_representatives(spec, n)) got.push_back(rep.block ? block_word(*rep.block) : Word{});
    EXPECT_EQ(got, expected) << n;
  }
}

TEST(CosetReps, LevelOne) {
  const auto spec = make_group(3, 1, 3, GenSet::gm1n);
  const auto reps = coset_representatives(spec, 1);
  ASSERT_EQ(reps.size(), 3u);
  EXPECT_EQ(reps[0].element, identity(spec));
  EXPECT_EQ(reps[1].element, E(spec, "id;(1,0,0)"));
  EXPECT_EQ(reps[2].element, E(spec, "id;(2,0,0)"));
  EXPECT_THROW(coset_representatives(spec, 0), InvalidSpec);
  EXPECT_THROW(coset_representatives(spec, 4), InvalidSpec);
}

TEST(CosetReps, CountAndSupport) {
  for (const auto& spec : tower_groups())
    for (int level = 1; level <= spec.n(); ++level) {
      const auto reps = coset_representatives(spec, level);
      EXPECT_EQ(static_cast<int>(reps.size()), spec.m() * level);
      for (const auto& rep : reps) {
        EXPECT_EQ(multiply(spec, inverse(spec, rep.element), rep.element), identity(spec));
        for (int j = level; j < spec.n(); ++j) {
          EXPECT_EQ(rep.element.perm[static_cast<std::size_t>(j)], j);
          EXPECT_EQ(rep.element.weights[static_cast<std::size_t>(j)], 0);
        }
      }
    }
}

// Each rep is the unique shortest element of its left coset u G(m,1,level-1).
TEST(CosetReps, ShortestInCoset) {
  for (const auto& spec : {make_group(3, 1, 3, GenSet::gm1n), make_group(2, 1, 4, GenSet::coxeterB)}) {
    const auto t = build_length_table(spec);
    for (int level = 1; level <= spec.n(); ++level) {
      std::vector<Element> sub;
      for (const auto& h : t.elements()) {
        bool fixed = true;
        for (int j = level - 1; j < spec.n(); ++j)
          fixed = fixed && h.perm[static_cast<std::size_t>(j)] == j && h.weights[static_cast<std::size_t>(j)] == 0;
        if (fixed) sub.push_back(h);
      }
      for (const auto& rep : coset_representatives(spec, level)) {
        const int len = t.length_of(rep.element);
        EXPECT_EQ(static_cast<std::size_t>(len), rep.block ? rep.block->letters() : 0u);
        for (const auto& h : sub) {
          if (h == identity(spec)) continue;
          ASSERT_GT(t.length_of(multiply(spec, rep.element, h)), len);
        }
      }
    }
  }
}

TEST(CanonicalWord, RankSixExample) {
  const auto spec = make_group(7, 1, 6, GenSet::gm1n);
  const auto g = E(spec, "(132)(4)(56);(1,2,0,4,5,6)");
  const auto cw = canonical_word(spec, g);
  EXPECT_EQ(format_canonical(cw), "[-4^6,5][-4^5,4][-3^4,3][2,2][0^2,1][0,0]");
  EXPECT_EQ(cw, parse_canonical("[-4^6,5][-4^5,4][-3^4,3][2,2][0^2,1][0,0]", 7));
  EXPECT_EQ(evaluate(spec, word_from_canonical(cw)), g);
  EXPECT_EQ(project_to_B(g), parse_element("(132)(56);(1,1,0,1,1,1)", 2));
  EXPECT_EQ(format_canonical(project_canonical(cw)), "[-4,5][-4,4][-3,3][2,2][0,1][0,0]");
  const auto b6 = make_group(2, 1, 6, GenSet::coxeterB);
  EXPECT_EQ(canonical_word(b6, project_to_B(g)), project_canonical(cw));
}

TEST(CanonicalWord, SmallExamples) {
  const auto spec = make_group(3, 1, 3, GenSet::gm1n);
  EXPECT_EQ(format_canonical(canonical_word(spec, E(spec, "id;(2,1,0)"))), "[-1,1][0^2,0]");
  EXPECT_EQ(format_canonical(canonical_word(spec, E(spec, "(13);(1,1,1)"))), "[0,2][0,1][0,0]");
  EXPECT_TRUE(canonical_word(spec, identity(spec)).blocks.empty());
  EXPECT_EQ(format_canonical(canonical_word(spec, identity(spec))), "e");

  const auto b4 = make_group(2, 1, 4, GenSet::coxeterB);
  EXPECT_EQ(format_canonical(canonical_word(b4, E(b4, "(24);(0,0,1,0)"))), "[2,3][-1,2]");
  // the listed word for g2 evaluates to the inverse of its displayed matrix
  const auto g2 = E(b4, "(1342);(0,0,1,1)");
  EXPECT_EQ(format_canonical(canonical_word(b4, inverse(b4, g2))), "[-2,3][1,2][-1,1]");
  EXPECT_EQ(evaluate(b4, W(b4, "s2 s1 s0 s1 s2 s3 s1 s2 s1 s0 s1")), inverse(b4, g2));
}

TEST(CanonicalWord, Errors) {
  EXPECT_THROW(canonical_word(make_group(3, 3, 3, GenSet::classical), identity_element(3)), Unsupported);
  const auto spec = make_group(3, 1, 3, GenSet::gm1n);
  EXPECT_THROW(canonical_word(spec, Element{{0, 1}, {0, 0}}), NotMember);
  EXPECT_THROW(parse_canonical("[1,2", 3), ParseError);
  EXPECT_THROW(parse_canonical("[x,2]", 3), ParseError);
}

TEST(WordFromCanonical, Expansion) {
  const auto g313 = make_group(3, 1, 3, GenSet::gm1n);
  const auto b4 = make_group(2, 1, 4, GenSet::coxeterB);
  EXPECT_EQ(word_from_canonical(parse_canonical("[-1,1][0^2,0]", 3)), W(g313, "s1 s0 s1 s0 s0"));
  EXPECT_EQ(word_from_canonical(parse_canonical("[2,3]", 2)), W(b4, "s2 s3"));
  EXPECT_TRUE(word_from_canonical(parse_canonical("e", 2)).empty());
  EXPECT_EQ(parse_canonical("[-4^6,5]", 7).letters(), 15u);
}

TEST(CanonicalWord, ExhaustiveStructure) {
  for (const auto& spec : tower_groups()) {
    const auto t = build_length_table(spec);
    for (LengthTable::Id id = 0; id < t.size(); ++id) {
      const auto& g = t.element(id);
      const auto cw = canonical_word(spec, g);
      ASSERT_EQ(evaluate(spec, word_from_canonical(cw)), g);
      ASSERT_EQ(static_cast<int>(length_via_canonical(spec, g)), t.length(id)) << g;
      std::vector<int> exps, weights;
      for (std::size_t i = 0; i < cw.blocks.size(); ++i) {
        const Block& b = cw.blocks[i];
        if (i > 0) ASSERT_GT(cw.blocks[i - 1].n, b.n);
        ASSERT_LE(std::abs(b.m), b.n);
        ASSERT_GE(b.n, 0);
        if (b.m > 0) ASSERT_EQ(b.a, 1);
        if (b.m <= 0) exps.push_back(b.a);
      }
      for (int w : g.weights)
        if (w) weights.push_back(w);
      std::sort(exps.begin(), exps.end());
      std::sort(weights.begin(), weights.end());
      ASSERT_EQ(exps, weights) << g;
    }
  }
}

TEST(Criterion, Examples) {
  EXPECT_TRUE(is_fc_by_criterion(parse_canonical("[2,3][-1,2]", 2)));
  EXPECT_FALSE(is_fc_by_criterion(parse_canonical("[-2,3][1,2][-1,1]", 2)));
  EXPECT_TRUE(is_fc_by_criterion(parse_canonical("e", 2)));
  EXPECT_TRUE(is_fc_by_criterion(parse_canonical("[3,4][2,3][0,1][0,0]", 2)));
  EXPECT_TRUE(is_fc_by_criterion(parse_canonical("[3,4][2,3][-1,2]", 2)));
  EXPECT_FALSE(is_fc_by_criterion(parse_canonical("[3,4][1,3][-3,2]", 2)));
  EXPECT_FALSE(is_fc_by_criterion(parse_canonical("[0,1][1,0]", 2)));
  EXPECT_FALSE(is_fc_by_criterion(parse_canonical("[-1,1][0,0]", 2)));
}

TEST(Criterion, AgreesWithBruteForce) {
  for (const auto& spec : tower_groups()) {
    const auto t = build_length_table(spec);
    const auto verdicts = FcAnalyzer(t).classify_all(2);
    for (LengthTable::Id id = 0; id < t.size(); ++id)
      ASSERT_EQ(is_fc_by_criterion(canonical_word(spec, t.element(id))), verdicts[id] != 0)
          << spec.name() << " " << t.element(id);
  }
}

TEST(Projection, CommutingSquare) {
  for (int m : {3, 4}) {
    const auto spec = make_group(m, 1, 3, GenSet::gm1n);
    const auto b3 = make_group(2, 1, 3, GenSet::coxeterB);
    const auto t = build_length_table(spec);
    for (const auto& g : t.elements())
      ASSERT_EQ(project_canonical(canonical_word(spec, g)), canonical_word(b3, project_to_B(g))) << g;
  }
  const auto positive = parse_canonical("[2,3][1,2]", 5);
  EXPECT_EQ(project_canonical(positive).blocks, positive.blocks);
}

// FC elements of G(3,1,3) with three nontrivial entries sit on the reverse diagonal.
TEST(Remark, ReverseIdentity) {
  const auto spec = make_group(3, 1, 3, GenSet::gm1n);
  const auto t = build_length_table(spec);
  int seen = 0;
  for (const auto& g : all_fc_elements(t)) {
    if (nontrivial_count(g) != 3) continue;
    ++seen;
    EXPECT_EQ(g.perm, (std::vector<int>{2, 1, 0}));
    const auto cw = canonical_word(spec, g);
    ASSERT_EQ(cw.blocks.size(), 3u);
    for (int i = 0; i < 3; ++i) {
      EXPECT_EQ(cw.blocks[static_cast<std::size_t>(i)].m, 0);
      EXPECT_EQ(cw.blocks[static_cast<std::size_t>(i)].n, 2 - i);
    }
  }
  EXPECT_EQ(seen, 8);
}

}  // namespace
}  // namespace fcg
