// Acceptance run: one PASS/FAIL line per criterion, with timing against its budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "fcgroups/cayley.hpp"
#include "fcgroups/counting.hpp"
#include "fcgroups/tables.hpp"
#include "fcgroups/verify.hpp"

using namespace fcg;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (cond) return;
    ok = false;
    if (detail.size() < 400) detail += (detail.empty() ? "" : "; ") + what;
  }
  void absorb(const VerificationReport& r) {
    require(r.pass(), r.check + " " + r.universe + (r.counterexamples.empty() ? "" : ": " + r.counterexamples.front()));
  }
};

std::string big(const BigInt& v) { return to_string(v); }

// Table totals are checked both cell by cell against the fixtures and against the
// totals row typed out here.
void table_totals(Outcome& out, const std::string& id, int lo, int hi, const std::vector<std::uint64_t>& totals) {
  TableOptions opts;
  opts.min_param = lo;
  opts.max_param = hi;
  opts.big = true;
  const auto report = reproduce_table(id, opts);
  std::vector<std::uint64_t> got;
  for (const auto& c : report.columns) {
    if (!c.computed) continue;
    got.push_back(c.histogram.total);
    for (const auto& d : c.diffs)
      out.require(false, "table " + id + " " + report.param_name + "=" + std::to_string(d.param) + " length " +
                             std::to_string(d.length) + ": " + std::to_string(d.expected) + " vs " + std::to_string(d.actual));
  }
  out.require(got == totals, "table " + id + " totals differ");
}

Outcome table2() {
  Outcome o;
  table_totals(o, "2", 2, 5, {14, 28, 50, 80});
  return o;
}

Outcome table4() {
  Outcome o;
  table_totals(o, "4", 2, 6, {16, 28, 40, 52, 64});
  table_totals(o, "4b", 2, 4, {75, 135, 195});
  return o;
}

Outcome table5() {
  Outcome o;
  table_totals(o, "5", 3, 6, {5, 16, 65, 326});
  return o;
}

Outcome table6() {
  Outcome o;
  table_totals(o, "6", 2, 3, {72, 189});
  return o;
}

Outcome counting() {
  Outcome o;
  const std::uint64_t b[] = {7, 24, 83};
  for (int n = 2; n <= 4; ++n) {
    const auto h = fc_histogram(make_group(2, 1, n, GenSet::coxeterB));
    o.require(h.total == b[n - 2] && fc_count_B(n) == h.total, "B_" + std::to_string(n) + " enumerated " + std::to_string(h.total));
  }
  const std::uint64_t d[] = {14, 48};
  for (int n = 3; n <= 4; ++n) {
    const auto h = fc_histogram(make_group(2, 2, n, GenSet::classical));
    o.require(h.total == d[n - 3] && fc_count_D(n) == h.total, "D_" + std::to_string(n) + " enumerated " + std::to_string(h.total));
  }
  for (auto [m, n] : {std::pair{3, 3}, {4, 3}, {3, 4}}) {
    const auto h = fc_histogram(make_group(m, 1, n, GenSet::gm1n));
    const BigInt total = h.total;
    o.require(fc_count_fklo(m, n) == total && fc_count_formula1(m, n) == total,
              "G(" + std::to_string(m) + ",1," + std::to_string(n) + ") enumerated " + big(total) + ", fklo " +
                  big(fc_count_fklo(m, n)) + ", formula1 " + big(fc_count_formula1(m, n)));
    o.absorb(verify_counts(m, n));
  }
  o.require(fc_histogram(make_group(3, 1, 3, GenSet::gm1n)).total == 59, "G(3,1,3) total is not 59");
  return o;
}

Outcome pi_theorem() {
  Outcome o;
  for (auto [m, n] : {std::pair{3, 3}, {4, 3}, {3, 4}}) o.absorb(verify_pi_theorem(m, n));
  return o;
}

Outcome deciders() {
  Outcome o;
  o.absorb(verify_decider_agreement(make_group(2, 1, 4, GenSet::coxeterB)));
  o.absorb(verify_decider_agreement(make_group(3, 1, 3, GenSet::gm1n)));
  return o;
}

Outcome pins() {
  Outcome o;
  o.require(fc_count_H(3) == 44, "H_3 = " + big(fc_count_H(3)));
  o.require(fc_count_H(4) == 195, "H_4 = " + big(fc_count_H(4)));
  o.require(fc_count_F(4) == 106, "F_4 = " + big(fc_count_F(4)));
  o.require(fc_count_star_sym(6) == 326, "star-sym(6) = " + big(fc_count_star_sym(6)));
  for (int m = 2; m <= 7; ++m) o.absorb(verify_count_mm2(m));
  return o;
}

Outcome alpha_consistency() {
  Outcome o;
  for (int n = 2; n <= 4; ++n) {
    o.absorb(verify_counts(2, n));
    BigInt sum = 0;
    for (int k = 0; k <= n; ++k) sum += alpha(n, k);
    o.require(sum == fc_count_B(n), "sum of alpha(" + std::to_string(n) + ",k) = " + big(sum));
  }
  return o;
}

Outcome star_oracle() {
  Outcome o;
  for (int n = 4; n <= 5; ++n) o.absorb(verify_star_factorizations(n));
  return o;
}

Outcome strange() {
  Outcome o;
  const std::size_t expected_count[] = {4, 2};
  for (int m : {3, 4}) {
    const auto spec = make_group(m, m, 4, GenSet::classical);
    const auto t = build_length_table(spec);
    const auto pairs = commuting_pairs(spec);
    std::set<Element> listed, found;
    for (const auto& fx : strange_fixtures()) {
      if (fx.m != m) continue;
      const auto g = parse_element(fx.element, spec);
      listed.insert(g);
      const auto w = parse_word(spec, fx.word);
      o.require(evaluate(spec, w) == g, std::string(fx.element) + " is not the value of its word");
      o.require(reduced_expressions(spec, g, t) == commutation_class(w, pairs),
                std::string(fx.element) + ": reduced expressions are not the commutation class of the listed word");
    }
    for (const auto& s : find_strange_fc(m, 4)) found.insert(s.element);
    o.require(found.size() == expected_count[m - 3], "G(" + std::to_string(m) + "," + std::to_string(m) + ",4): found " +
                                                         std::to_string(found.size()));
    o.require(found == listed, "G(" + std::to_string(m) + "," + std::to_string(m) + ",4) set differs from the list");
  }
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double budget;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Table 2: G(m,m,3) classical, m=2..5", 60, table2},
      {2, "Table 4: affine G(m,m,3) m=2..6 and G(m,m,4) m=2..4", 300, table4},
      {3, "Table 5: S_n star, n=3..6", 60, table5},
      {4, "Table 6: G(m,m,4) star, m=2..3", 120, table6},
      {5, "counting cross-checks (B_n, D_n, fklo, formula1)", 300, counting},
      {6, "pi image theorem on G(3,1,3), G(4,1,3), G(3,1,4)", 300, pi_theorem},
      {7, "three deciders agree on B_4 and G(3,1,3)", 120, deciders},
      {8, "closed-form pins and G(m,m,2) counts", 10, pins},
      {9, "alpha(n,k) against the B_n histogram, n=2..4", 60, alpha_consistency},
      {10, "star factorization counts on S_4 and S_5", 120, star_oracle},
      {11, "f.c. elements with a non-f.c. submatrix in G(3,3,4), G(4,4,4)", 300, strange},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.ok = false;
      out.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget) out.require(false, "over the " + std::to_string(static_cast<int>(c.budget)) + " s budget");
    std::printf("%s criterion %2d: %s (%.3f s)%s%s\n", out.ok ? "PASS" : "FAIL", c.id, c.name, secs,
                out.detail.empty() ? "" : " -- ", out.detail.c_str());
    failed += !out.ok;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
