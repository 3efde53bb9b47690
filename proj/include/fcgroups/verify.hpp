#pragma once

// Exhaustive checks of the structural results over small groups, the search for
// f.c. elements with a non-f.c. square submatrix, conjecture data, and single
// element diagnostics.

#include <chrono>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fcgroups/canonical.hpp"
#include "fcgroups/cayley.hpp"
#include "fcgroups/counting.hpp"
#include "fcgroups/patterns.hpp"
#include "fcgroups/tables.hpp"

namespace fcg {

struct VerificationReport {
  std::string check;
  std::string universe;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::vector<std::string> counterexamples;  ///< first few failures, formatted
  std::vector<std::string> notes;
  double seconds = 0;

  bool pass() const { return failures == 0; }

  void fail(std::string what) {
    ++failures;
    if (counterexamples.size() < 20) counterexamples.push_back(std::move(what));
  }
};

namespace detail {

class Stopwatch {
 public:
  double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count(); }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline void expect_equal(VerificationReport& r, const std::string& what, const BigInt& expected, const BigInt& actual) {
  ++r.checked;
  r.notes.push_back(what + " = " + to_string(actual));
  if (expected != actual) r.fail(what + ": expected " + to_string(expected) + ", got " + to_string(actual));
}

inline GroupSpec tower_group(int m, int n) {
  return m == 2 ? make_group(2, 1, n, GenSet::coxeterB) : make_group(m, 1, n, GenSet::gm1n);
}

}  // namespace detail

/// g in G(m,1,n) is f.c. iff its -1 image is f.c. in B_n, element by element.
inline VerificationReport verify_pi_theorem(int m, int n, const Caps& caps = {}) {
  detail::Stopwatch clock;
  const auto spec = detail::tower_group(m, n);
  const auto bn = make_group(2, 1, n, GenSet::coxeterB);
  VerificationReport r{"pi-theorem", spec.name() + " -> " + bn.name()};
  const auto t = build_length_table(spec, caps.element_cap);
  const auto tb = build_length_table(bn, caps.element_cap);
  const auto fc = FcAnalyzer(t).classify_all(caps.jobs);
  const auto fcb = FcAnalyzer(tb).classify_all(caps.jobs);
  for (LengthTable::Id id = 0; id < t.size(); ++id) {
    const auto& g = t.element(id);
    const auto image = project_to_B(g);
    ++r.checked;
    if ((fc[id] != 0) != (fcb[tb.id_of(image)] != 0))
      r.fail(format_element(g) + (fc[id] ? " is" : " is not") + " f.c. but its image " + format_element(image) +
             (fcb[tb.id_of(image)] ? " is" : " is not"));
  }
  r.seconds = clock.seconds();
  return r;
}

/// Brute force, canonical-word criterion and pattern avoidance on every element.
inline VerificationReport verify_decider_agreement(const GroupSpec& spec, const Caps& caps = {}) {
  detail::Stopwatch clock;
  VerificationReport r{"decider-agreement", spec.name()};
  const auto t = build_length_table(spec, caps.element_cap);
  const auto brute = FcAnalyzer(t).classify_all(caps.jobs);
  const bool tower = spec.genset() == GenSet::gm1n || spec.genset() == GenSet::coxeterB;
  const auto cat = catalog(pattern_family_for(spec));
  if (!tower) r.notes.push_back("no canonical words for " + spec.name() + "; comparing brute force with patterns only");
  for (LengthTable::Id id = 0; id < t.size(); ++id) {
    const auto& g = t.element(id);
    const bool b = brute[id] != 0;
    const bool p = !find_any(g, cat).has_value();
    const bool c = tower ? is_fc_by_criterion(canonical_word(spec, g)) : b;
    ++r.checked;
    if (b != p || b != c)
      r.fail(format_element(g) + ": brute " + std::to_string(b) + ", criterion " + std::to_string(c) + ", patterns " +
             std::to_string(p));
  }
  r.seconds = clock.seconds();
  return r;
}

/// Enumerated f.c. count of G(m,1,n) against the closed forms; for m = 2 also the
/// split by number of -1 entries against alpha(n, k).
inline VerificationReport verify_counts(int m, int n, const Caps& caps = {}) {
  detail::Stopwatch clock;
  const auto spec = detail::tower_group(m, n);
  VerificationReport r{"counts", spec.name()};
  const auto t = build_length_table(spec, caps.element_cap);
  const auto fc = FcAnalyzer(t).classify_all(caps.jobs);
  std::vector<BigInt> by_k(static_cast<std::size_t>(n + 1), 0);
  BigInt total = 0;
  for (LengthTable::Id id = 0; id < t.size(); ++id)
    if (fc[id]) {
      ++total;
      ++by_k[nontrivial_count(t.element(id))];
    }
  r.notes.push_back("enumerated = " + to_string(total));
  detail::expect_equal(r, "formula1(" + std::to_string(m) + "," + std::to_string(n) + ")", fc_count_formula1(m, n), total);
  if (n >= 3) detail::expect_equal(r, "fklo(" + std::to_string(m) + "," + std::to_string(n) + ")", fc_count_fklo(m, n), total);
  if (m == 2) {
    detail::expect_equal(r, "B(" + std::to_string(n) + ")", fc_count_B(n), total);
    for (int k = 0; k <= n; ++k)
      detail::expect_equal(r, "alpha(" + std::to_string(n) + "," + std::to_string(k) + ")", alpha(n, k), by_k[static_cast<std::size_t>(k)]);
  }
  r.seconds = clock.seconds();
  return r;
}

/// Enumerated count for D_n = G(2,2,n) with the classical generators.
inline VerificationReport verify_count_D(int n, const Caps& caps = {}) {
  detail::Stopwatch clock;
  const auto spec = make_group(2, 2, n, GenSet::classical);
  VerificationReport r{"count-D", spec.name()};
  const auto h = fc_histogram(spec, caps);
  detail::expect_equal(r, "D(" + std::to_string(n) + ")", fc_count_D(n), h.total);
  r.seconds = clock.seconds();
  return r;
}

/// Enumerated count for G(m,m,2).
inline VerificationReport verify_count_mm2(int m, const Caps& caps = {}) {
  detail::Stopwatch clock;
  const auto spec = make_group(m, m, 2, GenSet::classical);
  VerificationReport r{"count-mm2", spec.name()};
  const auto h = fc_histogram(spec, caps);
  detail::expect_equal(r, "mm2(" + std::to_string(m) + ")", fc_count_mm2(m), h.total);
  r.seconds = clock.seconds();
  return r;
}

/// Reduced-expression counts in S_n under star transpositions against the
/// factorization formula, and f.c. elements against the cycles through 1.
inline VerificationReport verify_star_factorizations(int n, const Caps& caps = {}) {
  detail::Stopwatch clock;
  const auto spec = make_group(1, 1, n, GenSet::symStar);
  VerificationReport r{"star-factorizations", spec.name()};
  const auto t = build_length_table(spec, caps.element_cap);
  const FcAnalyzer fc(t);
  std::size_t fc_total = 0;
  for (LengthTable::Id id = 0; id < t.size(); ++id) {
    const auto& g = t.element(id);
    const BigInt expected = star_factorization_count(cycle_type(g.perm));
    ++r.checked;
    if (fc.re_count(id) != expected)
      r.fail(format_element(g) + ": " + to_string(fc.re_count(id)) + " reduced expressions, formula gives " + to_string(expected));
    fc_total += fc.is_fc(id);
  }
  detail::expect_equal(r, "star-sym(" + std::to_string(n) + ")", fc_count_star_sym(n), fc_total);
  r.seconds = clock.seconds();
  return r;
}

/// In G(m,m,n) with the given generators: f.c. iff exactly one reduced expression.
inline VerificationReport verify_unique_re(const GroupSpec& spec, const Caps& caps = {}) {
  detail::Stopwatch clock;
  VerificationReport r{"fc-iff-unique-re", spec.name()};
  const auto t = build_length_table(spec, caps.element_cap);
  const FcAnalyzer fc(t);
  const auto verdicts = fc.classify_all(caps.jobs);
  for (LengthTable::Id id = 0; id < t.size(); ++id) {
    ++r.checked;
    if ((verdicts[id] != 0) != fc.has_unique_reduced_expression(id))
      r.fail(format_element(t.element(id)) + ": f.c. " + std::to_string(verdicts[id] != 0) + ", reduced expressions " +
             to_string(fc.re_count(id)));
  }
  r.seconds = clock.seconds();
  return r;
}

/// An f.c. element of G(m,m,n) with n-1 columns forming a non-f.c. member of G(m,m,n-1).
struct StrangeFc {
  Element element;
  int length = 0;
  std::vector<int> columns;  ///< first witness column set, 0-based
  Element witness;
};

/// All such elements for the classical generators, sorted by (length, text).
/// Submatrices keep their exact weights.
inline std::vector<StrangeFc> find_strange_fc(int m, int n, const Caps& caps = {}) {
  const auto big = make_group(m, m, n, GenSet::classical);
  const auto small = make_group(m, m, n - 1, GenSet::classical);
  const auto tb = build_length_table(big, caps.element_cap);
  const auto ts = build_length_table(small, caps.element_cap);
  const auto fc_big = FcAnalyzer(tb).classify_all(caps.jobs);
  const auto fc_small = FcAnalyzer(ts).classify_all(caps.jobs);

  std::vector<StrangeFc> out;
  for (LengthTable::Id id = 0; id < tb.size(); ++id) {
    if (!fc_big[id]) continue;
    const auto& g = tb.element(id);
    for (int skip = n - 1; skip >= 0; --skip) {
      std::vector<int> cols;
      for (int c = 0; c < n; ++c)
        if (c != skip) cols.push_back(c);
      const Element sub = submatrix(g, cols);
      if (!is_member(small, sub) || fc_small[ts.id_of(sub)]) continue;
      out.push_back({g, tb.length(id), cols, sub});
      break;
    }
  }
  std::sort(out.begin(), out.end(), [](const StrangeFc& a, const StrangeFc& b) {
    return std::make_pair(a.length, format_element(a.element)) < std::make_pair(b.length, format_element(b.element));
  });
  return out;
}

/// Reference list of such elements: each f.c. element with its word, and the
/// non-f.c. submatrix with its two listed reduced expressions.
struct StrangeFixture {
  int m;
  const char* element;
  const char* word;
  const char* companion;
  const char* companion_words[2];
};

inline const std::vector<StrangeFixture>& strange_fixtures() {
  static const std::vector<StrangeFixture> rows = {
      {3, "4132;(2,0,2,2)", "s1bar s1 s2 s1bar s3 s1 s2 s1bar", "321;(2,2,2)",
       {"s1bar s1 s2 s1bar s2", "s1bar s1 s1bar s2 s1bar"}},
      {3, "1432;(0,2,2,2)", "s1bar s1 s2 s1bar s3 s1 s2 s1bar s1", "321;(2,2,2)",
       {"s1bar s1 s2 s1bar s2", "s1bar s1 s1bar s2 s1bar"}},
      {3, "2431;(0,1,1,1)", "s1bar s2 s1 s1bar s3 s2 s1 s1bar", "321;(1,1,1)",
       {"s1bar s2 s1 s1bar s1", "s1bar s2 s1bar s1 s1bar"}},
      {3, "1432;(0,1,1,1)", "s1 s1bar s2 s1 s1bar s3 s2 s1 s1bar", "321;(1,1,1)",
       {"s1bar s2 s1 s1bar s1", "s1bar s2 s1bar s1 s1bar"}},
      {4, "2431;(0,1,1,2)", "s1bar s1 s1bar s2 s1 s1bar s3 s2 s1 s1bar", "321;(1,1,2)",
       {"s1 s1bar s2 s1 s1bar s1 s2", "s1bar s1 s1bar s2 s1 s1bar s1"}},
      {4, "4132;(2,0,3,3)", "s1bar s1 s2 s1bar s3 s1 s2 s1bar s1 s1bar", "321;(2,3,3)",
       {"s1 s1bar s1 s2 s1bar s1 s1bar", "s2 s1 s1bar s1 s2 s1bar s1"}},
  };
  return rows;
}

/// Totals and per-length counts along a family, with first differences of the totals.
struct ConjectureRow {
  int m = 0;
  LengthHistogram histogram;
  std::optional<std::int64_t> difference;
};

enum class ConjectureFamily { affine, star, classical };

inline std::vector<ConjectureRow> conjecture_data(ConjectureFamily family, int n, int m_lo, int m_hi,
                                                  const Caps& caps = {}) {
  const GenSet g = family == ConjectureFamily::affine ? GenSet::affine
                   : family == ConjectureFamily::star ? GenSet::star
                                                      : GenSet::classical;
  std::vector<ConjectureRow> rows;
  for (int m = m_lo; m <= m_hi; ++m) {
    ConjectureRow row{m, fc_histogram(make_group(m, m, n, g), caps), std::nullopt};
    if (!rows.empty())
      row.difference = static_cast<std::int64_t>(row.histogram.total) - static_cast<std::int64_t>(rows.back().histogram.total);
    rows.push_back(std::move(row));
  }
  return rows;
}

enum class Method { brute, criterion, patterns, all };

inline Method parse_method(const std::string& s) {
  if (s == "brute") return Method::brute;
  if (s == "criterion") return Method::criterion;
  if (s == "patterns") return Method::patterns;
  if (s == "all") return Method::all;
  throw InvalidSpec("unknown method '" + s + "' (brute, criterion, patterns, all)");
}

struct ElementCheck {
  Element element;
  std::optional<int> length;
  std::optional<BigInt> re_count;
  std::vector<Word> sample_words;  ///< a few reduced expressions, sorted
  std::optional<bool> brute, criterion, patterns;
  std::optional<CanonicalWord> canonical;
  std::optional<PatternWitness> witness;

  /// Verdict of the first method that ran.
  bool fc() const { return brute ? *brute : criterion ? *criterion : patterns.value_or(false); }
  bool consistent() const {
    const bool v = fc();
    return (!brute || *brute == v) && (!criterion || *criterion == v) && (!patterns || *patterns == v);
  }
};

/// Runs the chosen deciders on one element. With Method::all, deciders that do not
/// apply to the group are skipped; naming one explicitly raises Unsupported.
inline ElementCheck check_element(const GroupSpec& spec, const Element& g, Method method, const Caps& caps = {},
                                  std::size_t sample = 4) {
  require_member(spec, g);
  ElementCheck out;
  out.element = g;
  const bool tower = spec.genset() == GenSet::gm1n || spec.genset() == GenSet::coxeterB;
  bool has_patterns = true;
  try {
    (void)pattern_family_for(spec);
  } catch (const Unsupported&) {
    has_patterns = false;
  }

  if (method == Method::brute || method == Method::all) {
    const auto t = build_length_table(spec, caps.element_cap);
    const FcAnalyzer fc(t);
    const auto id = t.id_of(g);
    out.length = t.length(id);
    out.re_count = fc.re_count(id);
    out.brute = fc.is_fc(id);
    if (*out.re_count <= caps.word_cap) {
      auto words = reduced_expressions(spec, g, t, caps.word_cap);
      if (words.size() > sample) words.resize(sample);
      out.sample_words = std::move(words);
    }
  }
  if (method == Method::criterion || (method == Method::all && tower)) {
    out.canonical = canonical_word(spec, g);
    out.criterion = is_fc_by_criterion(*out.canonical);
    if (!out.length) out.length = static_cast<int>(out.canonical->letters());
  } else if (tower) {
    out.canonical = canonical_word(spec, g);
  }
  if (method == Method::patterns || (method == Method::all && has_patterns)) {
    out.witness = find_any(g, catalog(pattern_family_for(spec)));
    out.patterns = !out.witness.has_value();
  }
  return out;
}

inline ElementCheck check_element(const GroupSpec& spec, const std::string& text, Method method, const Caps& caps = {}) {
  return check_element(spec, parse_element(text, spec), method, caps);
}

}  // namespace fcg
