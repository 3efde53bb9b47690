#pragma once

// Per-length counts of fully commutative elements and the reference tables they
// are checked against.

#include <chrono>
#include <climits>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fcgroups/cayley.hpp"

namespace fcg {

struct LengthHistogram {
  GroupSpec spec;
  std::map<int, std::uint64_t> counts;  ///< length -> number of f.c. elements
  std::uint64_t total = 0;
};

inline LengthHistogram fc_histogram(const LengthTable& table, unsigned jobs = 1) {
  const auto verdicts = FcAnalyzer(table).classify_all(jobs);
  LengthHistogram h{table.spec(), {}, 0};
  for (LengthTable::Id id = 0; id < table.size(); ++id)
    if (verdicts[id]) {
      ++h.counts[table.length(id)];
      ++h.total;
    }
  return h;
}

inline LengthHistogram fc_histogram(const GroupSpec& spec, const Caps& caps = {}) {
  return fc_histogram(build_length_table(spec, caps.element_cap), caps.jobs);
}

/// One column of a reference table: counts by length 0, 1, ... and the total row.
struct TableColumn {
  int param = 0;  ///< the varying parameter (m, or n for the symmetric group)
  int m = 0, p = 0, n = 0;
  GenSet genset = GenSet::classical;
  std::vector<std::uint64_t> counts;
  std::uint64_t total = 0;
  bool big = false;  ///< only computed on request

  GroupSpec spec() const { return make_group(m, p, n, genset); }
};

struct TableFixture {
  std::string id;
  std::string caption;
  std::string param_name;
  std::vector<TableColumn> columns;
};

namespace detail {

inline TableColumn column(int param, int m, int p, int n, GenSet g, std::vector<std::uint64_t> counts,
                          std::uint64_t total, bool big = false) {
  return {param, m, p, n, g, std::move(counts), total, big};
}

inline std::vector<TableFixture> make_fixtures() {
  using G = GenSet;
  std::vector<TableFixture> out;

  TableFixture t2{"2", "f.c. elements in G(m,m,3) with classical generating set", "m", {}};
  t2.columns = {
      column(2, 2, 2, 3, G::classical, {1, 3, 5, 4, 1}, 14),
      column(3, 3, 3, 3, G::classical, {1, 3, 6, 6, 6, 6}, 28),
      column(4, 4, 4, 3, G::classical, {1, 3, 6, 8, 10, 12, 10}, 50),
      column(5, 5, 5, 3, G::classical, {1, 3, 6, 8, 12, 16, 16, 16, 2}, 80),
      column(6, 6, 6, 3, G::classical, {1, 3, 6, 8, 12, 18, 20, 22, 18, 4}, 112, true),
      column(7, 7, 7, 3, G::classical, {1, 3, 6, 8, 12, 18, 22, 26, 24, 26, 10}, 156, true),
      column(8, 8, 8, 3, G::classical, {1, 3, 6, 8, 12, 18, 22, 28, 28, 32, 26, 14}, 198, true),
      column(9, 9, 9, 3, G::classical, {1, 3, 6, 8, 12, 18, 22, 28, 30, 36, 32, 36, 18, 4}, 254, true),
      column(10, 10, 10, 3, G::classical, {1, 3, 6, 8, 12, 18, 22, 28, 30, 38, 36, 42, 34, 24, 8}, 310, true),
  };
  out.push_back(std::move(t2));

  TableFixture t4{"4", "f.c. elements in G(m,m,3) with affine generating set", "m", {}};
  t4.columns = {
      column(2, 2, 2, 3, G::affine, {1, 3, 6, 6}, 16),
      column(3, 3, 3, 3, G::affine, {1, 3, 6, 6, 6, 6}, 28),
      column(4, 4, 4, 3, G::affine, {1, 3, 6, 6, 6, 6, 6, 6}, 40),
      column(5, 5, 5, 3, G::affine, {1, 3, 6, 6, 6, 6, 6, 6, 6, 6}, 52),
      column(6, 6, 6, 3, G::affine, {1, 3, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6}, 64),
  };
  out.push_back(std::move(t4));

  TableFixture t4b{"4b", "f.c. elements in G(m,m,4) with affine generating set", "m", {}};
  t4b.columns = {
      column(2, 2, 2, 4, G::affine, {1, 4, 10, 16, 18, 16, 10}, 75),
      column(3, 3, 3, 4, G::affine, {1, 4, 10, 16, 18, 16, 18, 16, 18, 8, 10}, 135),
      column(4, 4, 4, 4, G::affine, {1, 4, 10, 16, 18, 16, 18, 16, 18, 16, 18, 16, 10, 8, 10}, 195),
      column(5, 5, 5, 4, G::affine, {1, 4, 10, 16, 18, 16, 18, 16, 18, 16, 18, 16, 18, 16, 18, 8, 10, 8, 10}, 255,
             true),
  };
  out.push_back(std::move(t4b));

  TableFixture t5{"5", "f.c. elements in S_n with star generating set", "n", {}};
  t5.columns = {
      column(3, 1, 1, 3, G::symStar, {1, 2, 2}, 5),
      column(4, 1, 1, 4, G::symStar, {1, 3, 6, 6}, 16),
      column(5, 1, 1, 5, G::symStar, {1, 4, 12, 24, 24}, 65),
      column(6, 1, 1, 6, G::symStar, {1, 5, 20, 60, 120, 120}, 326),
  };
  out.push_back(std::move(t5));

  TableFixture t6{"6", "f.c. elements in G(m,m,4) with star generating set", "m", {}};
  t6.columns = {
      column(2, 2, 2, 4, G::star, {1, 4, 11, 20, 20, 8, 8}, 72),
      column(3, 3, 3, 4, G::star, {1, 4, 12, 24, 36, 44, 48, 20}, 189),
      column(4, 4, 4, 4, G::star, {1, 4, 12, 26, 44, 68, 92, 96, 68, 28}, 439),
      column(5, 5, 5, 4, G::star, {1, 4, 12, 26, 46, 76, 116, 152, 176, 124, 60, 24}, 817),
      column(6, 6, 6, 4, G::star, {1, 4, 12, 26, 46, 78, 124, 176, 232, 232, 220, 128, 40, 20}, 1339),
  };
  out.push_back(std::move(t6));
  return out;
}

}  // namespace detail

inline const std::vector<TableFixture>& table_fixtures() {
  static const std::vector<TableFixture> fixtures = detail::make_fixtures();
  return fixtures;
}

inline const TableFixture& table_fixture(const std::string& id) {
  for (const auto& f : table_fixtures())
    if (f.id == id) return f;
  throw InvalidSpec("unknown table '" + id + "' (known: 2, 4, 4b, 5, 6)");
}

/// A cell that differs from the fixture; length -1 stands for the total row.
struct CellDiff {
  int param = 0;
  int length = 0;
  std::uint64_t expected = 0;
  std::uint64_t actual = 0;
};

struct ColumnResult {
  TableColumn fixture;
  bool computed = false;  ///< false when skipped (big column or outside the limits)
  LengthHistogram histogram;
  std::vector<CellDiff> diffs;
  double seconds = 0;
};

struct TableReport {
  std::string id;
  std::string caption;
  std::string param_name;
  std::vector<ColumnResult> columns;

  bool ok() const {
    for (const auto& c : columns)
      if (!c.diffs.empty()) return false;
    return true;
  }
  std::size_t computed_columns() const {
    std::size_t k = 0;
    for (const auto& c : columns) k += c.computed;
    return k;
  }
};

struct TableOptions {
  int min_param = INT_MIN;
  int max_param = INT_MAX;
  bool big = false;
  Caps caps;
};

inline std::vector<CellDiff> diff_column(const TableColumn& fixture, const LengthHistogram& h) {
  std::vector<CellDiff> diffs;
  int top = static_cast<int>(fixture.counts.size()) - 1;
  if (!h.counts.empty()) top = std::max(top, h.counts.rbegin()->first);
  for (int len = 0; len <= top; ++len) {
    const std::uint64_t expected = len < static_cast<int>(fixture.counts.size()) ? fixture.counts[static_cast<std::size_t>(len)] : 0;
    const auto it = h.counts.find(len);
    const std::uint64_t actual = it == h.counts.end() ? 0 : it->second;
    if (expected != actual) diffs.push_back({fixture.param, len, expected, actual});
  }
  if (fixture.total != h.total) diffs.push_back({fixture.param, -1, fixture.total, h.total});
  return diffs;
}

inline TableReport reproduce_table(const std::string& id, const TableOptions& opts = {}) {
  const TableFixture& fx = table_fixture(id);
  TableReport report{fx.id, fx.caption, fx.param_name, {}};
  for (const auto& col : fx.columns) {
    ColumnResult r;
    r.fixture = col;
    r.histogram.spec = col.spec();
    if (col.param >= opts.min_param && col.param <= opts.max_param && (!col.big || opts.big)) {
      const auto start = std::chrono::steady_clock::now();
      r.histogram = fc_histogram(col.spec(), opts.caps);
      r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      r.diffs = diff_column(col, r.histogram);
      r.computed = true;
    }
    report.columns.push_back(std::move(r));
  }
  return report;
}

}  // namespace fcg
