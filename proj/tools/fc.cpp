// fc: command-line front end for the fcgroups library.

#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fcgroups/cache.hpp"
#include "fcgroups/canonical.hpp"
#include "fcgroups/cayley.hpp"
#include "fcgroups/counting.hpp"
#include "fcgroups/patterns.hpp"
#include "fcgroups/tables.hpp"
#include "fcgroups/verify.hpp"

namespace {

using json = nlohmann::json;
using namespace fcg;

constexpr int kSchemaVersion = 1;

enum Exit { kOk = 0, kMismatch = 1, kUsage = 2, kCap = 3 };

enum class Format { md, csv, json };

struct Options {
  std::string format = "md";
  std::size_t cap = Caps{}.element_cap;
  std::size_t word_cap = Caps{}.word_cap;
  unsigned jobs = 1;
  bool big = false;
  bool explain = false;
  std::string cache_dir;

  Format fmt() const { return format == "csv" ? Format::csv : format == "json" ? Format::json : Format::md; }
  Caps caps() const { return {cap, word_cap, jobs}; }
};

struct GroupArgs {
  std::string group;
  std::string gens;
};

GroupSpec parse_group(const GroupArgs& a) {
  std::vector<int> v;
  std::stringstream ss(a.group);
  for (std::string part; std::getline(ss, part, ',');) {
    try {
      std::size_t used = 0;
      v.push_back(std::stoi(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw InvalidSpec("--group expects m,p,n; got '" + a.group + "'");
    }
  }
  if (v.size() != 3) throw InvalidSpec("--group expects m,p,n; got '" + a.group + "'");
  const int m = v[0], p = v[1], n = v[2];
  GenSet g;
  if (!a.gens.empty()) {
    g = parse_genset(a.gens);
  } else if (m == 1) {
    g = GenSet::symAdjacent;
  } else if (p == 1) {
    g = m == 2 ? GenSet::coxeterB : GenSet::gm1n;
  } else if (p == m) {
    g = GenSet::classical;
  } else {
    throw InvalidSpec("no default generating set for G(" + a.group + "); pass --gens");
  }
  return make_group(m, p, n, g);
}

json group_json(const GroupSpec& s) {
  return {{"m", s.m()}, {"p", s.p()}, {"n", s.n()}, {"gens", std::string(to_string(s.genset()))}, {"name", s.name()}};
}

json envelope(const char* command) { return {{"schema_version", kSchemaVersion}, {"command", command}}; }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// ---- list

int run_list(const Options& o, const GroupArgs& ga, bool histogram, std::optional<int> only_length) {
  const auto spec = parse_group(ga);
  const auto table = o.cache_dir.empty() ? build_length_table(spec, o.cap) : cached_length_table(spec, o.cache_dir, o.cap);
  const FcAnalyzer fc(table);
  const auto verdicts = fc.classify_all(o.jobs);

  if (histogram) {
    const auto h = fc_histogram(table, o.jobs);
    switch (o.fmt()) {
      case Format::csv:
        std::cout << "length,count\n";
        for (auto [len, c] : h.counts) std::cout << len << ',' << c << '\n';
        break;
      case Format::json: {
        auto j = envelope("list");
        j["group"] = group_json(spec);
        j["histogram"] = json::array();
        for (auto [len, c] : h.counts) j["histogram"].push_back({{"length", len}, {"count", c}});
        j["total"] = h.total;
        std::cout << j.dump(2) << '\n';
        break;
      }
      case Format::md:
        std::cout << "f.c. elements of " << spec.name() << " by length\n\n| length | count |\n|---:|---:|\n";
        for (auto [len, c] : h.counts) std::cout << "| " << len << " | " << c << " |\n";
        std::cout << "| total | " << h.total << " |\n";
        break;
    }
    return kOk;
  }

  struct Row {
    int length;
    std::string element, word;
  };
  std::vector<Row> rows;
  for (LengthTable::Id id = 0; id < table.size(); ++id) {
    if (!verdicts[id]) continue;
    if (only_length && table.length(id) != *only_length) continue;
    rows.push_back({table.length(id), format_element(table.element(id)), format_word(spec, fc.some_reduced_word(id))});
  }
  std::sort(rows.begin(), rows.end(),
            [](const Row& a, const Row& b) { return std::tie(a.length, a.element) < std::tie(b.length, b.element); });

  switch (o.fmt()) {
    case Format::csv:
      std::cout << "length,element,word\n";
      for (const auto& r : rows) std::cout << r.length << ',' << csv_field(r.element) << ',' << csv_field(r.word) << '\n';
      break;
    case Format::json: {
      auto j = envelope("list");
      j["group"] = group_json(spec);
      j["elements"] = json::array();
      for (const auto& r : rows) j["elements"].push_back({{"length", r.length}, {"element", r.element}, {"word", r.word}});
      std::cout << j.dump(2) << '\n';
      break;
    }
    case Format::md:
      std::cout << rows.size() << " f.c. elements of " << spec.name() << "\n\n| length | element | word |\n|---:|---|---|\n";
      for (const auto& r : rows) std::cout << "| " << r.length << " | " << r.element << " | " << (r.word.empty() ? "e" : r.word) << " |\n";
      break;
  }
  return kOk;
}

// ---- check

std::string columns_text(const std::vector<int>& cols) {
  std::string s;
  for (std::size_t i = 0; i < cols.size(); ++i) s += (i ? "," : "") + std::to_string(cols[i] + 1);
  return s;
}

int run_check(const Options& o, const GroupArgs& ga, const std::string& text, const std::string& method) {
  const auto spec = parse_group(ga);
  const auto c = check_element(spec, text, parse_method(method), o.caps());
  const auto verdict = [](const std::optional<bool>& v) { return !v ? "skipped" : *v ? "f.c." : "not f.c."; };

  if (o.fmt() == Format::json) {
    auto j = envelope("check");
    j["group"] = group_json(spec);
    j["element"] = format_element(c.element);
    j["fully_commutative"] = c.fc();
    j["consistent"] = c.consistent();
    j["methods"] = json::object();
    if (c.brute) j["methods"]["brute"] = *c.brute;
    if (c.criterion) j["methods"]["criterion"] = *c.criterion;
    if (c.patterns) j["methods"]["patterns"] = *c.patterns;
    if (c.length) j["length"] = *c.length;
    if (c.re_count) j["reduced_expressions"] = to_string(*c.re_count);
    if (c.canonical) j["canonical_word"] = format_canonical(*c.canonical);
    if (c.witness)
      j["witness"] = {{"pattern", c.witness->pattern.name},
                      {"columns", [&] {
                         std::vector<int> one_based;
                         for (int col : c.witness->columns) one_based.push_back(col + 1);
                         return one_based;
                       }()}};
    j["sample_words"] = json::array();
    for (const auto& w : c.sample_words) j["sample_words"].push_back(format_word(spec, w));
    std::cout << j.dump(2) << '\n';
  } else if (o.fmt() == Format::csv) {
    std::cout << "element,method,verdict\n";
    if (c.brute) std::cout << csv_field(format_element(c.element)) << ",brute," << verdict(c.brute) << '\n';
    if (c.criterion) std::cout << csv_field(format_element(c.element)) << ",criterion," << verdict(c.criterion) << '\n';
    if (c.patterns) std::cout << csv_field(format_element(c.element)) << ",patterns," << verdict(c.patterns) << '\n';
  } else {
    std::cout << format_element(c.element) << " in " << spec.name() << ": " << (c.fc() ? "f.c." : "not f.c.") << '\n';
    if (c.brute)
      std::cout << "  brute force: " << verdict(c.brute) << " (length " << *c.length << ", " << to_string(*c.re_count)
                << (*c.re_count == 1 ? " reduced expression)\n" : " reduced expressions)\n");
    if (c.criterion) std::cout << "  canonical criterion: " << verdict(c.criterion) << '\n';
    if (c.patterns) std::cout << "  pattern avoidance: " << verdict(c.patterns) << '\n';
    if (o.explain) {
      if (c.canonical) std::cout << "  canonical word: " << format_canonical(*c.canonical) << '\n';
      if (c.witness)
        std::cout << "  contains " << c.witness->pattern.name << " at columns " << columns_text(c.witness->columns)
                  << " -> " << format_element(submatrix(c.element, c.witness->columns)) << '\n';
      else if (c.patterns)
        std::cout << "  avoids every listed pattern\n";
      for (const auto& w : c.sample_words) std::cout << "  reduced: " << (w.empty() ? "e" : format_word(spec, w)) << '\n';
      if (c.re_count && *c.re_count > c.sample_words.size())
        std::cout << "  ... " << to_string(*c.re_count - c.sample_words.size()) << " more\n";
    }
    if (!c.consistent()) std::cout << "  deciders disagree\n";
  }
  return c.consistent() ? kOk : kMismatch;
}

// ---- canonical

int run_canonical(const Options& o, const GroupArgs& ga, const std::string& text) {
  const auto spec = parse_group(ga);
  const auto g = parse_element(text, spec);
  const auto cw = canonical_word(spec, g);
  const auto word = word_from_canonical(cw);
  const bool fc = is_fc_by_criterion(cw);
  switch (o.fmt()) {
    case Format::json: {
      auto j = envelope("canonical");
      j["group"] = group_json(spec);
      j["element"] = format_element(g);
      j["canonical_word"] = format_canonical(cw);
      j["word"] = format_word(spec, word);
      j["length"] = word.size();
      j["fully_commutative"] = fc;
      std::cout << j.dump(2) << '\n';
      break;
    }
    case Format::csv:
      std::cout << "element,canonical,length,fc\n"
                << csv_field(format_element(g)) << ',' << format_canonical(cw) << ',' << word.size() << ','
                << (fc ? "true" : "false") << '\n';
      break;
    case Format::md:
      std::cout << format_canonical(cw) << '\n';
      if (o.explain) {
        std::cout << "  word: " << (word.empty() ? "e" : format_word(spec, word)) << "\n  length: " << word.size()
                  << "\n  criterion: " << (fc ? "f.c." : "not f.c.") << '\n';
        for (const Block& b : cw.blocks) {
          std::cout << "  block " << format_canonical(CanonicalWord{{b}, cw.m}) << ": ";
          std::cout << format_word(spec, block_word(b)) << '\n';
        }
      }
      break;
  }
  return kOk;
}

// ---- count

int run_count(const Options& o, const std::string& formula, std::optional<long long> m, std::optional<long long> n,
              std::optional<long long> k) {
  const auto need = [&](const std::optional<long long>& v, const char* flag) {
    if (!v) throw InvalidSpec("--formula " + formula + " needs " + flag);
    return *v;
  };
  BigInt v;
  if (formula == "b") v = fc_count_B(need(n, "--n"));
  else if (formula == "d") v = fc_count_D(need(n, "--n"));
  else if (formula == "fklo") v = fc_count_fklo(need(m, "--m"), need(n, "--n"));
  else if (formula == "formula1") v = fc_count_formula1(need(m, "--m"), need(n, "--n"));
  else if (formula == "h") v = fc_count_H(need(n, "--n"));
  else if (formula == "f") v = fc_count_F(need(n, "--n"));
  else if (formula == "star-sym") v = fc_count_star_sym(need(n, "--n"));
  else if (formula == "mm2") v = fc_count_mm2(need(m, "--m"));
  else if (formula == "alpha") v = alpha(need(n, "--n"), need(k, "--k"));
  else throw InvalidSpec("unknown formula '" + formula + "'");

  if (o.fmt() == Format::json) {
    auto j = envelope("count");
    j["formula"] = formula;
    if (m) j["m"] = *m;
    if (n) j["n"] = *n;
    if (k) j["k"] = *k;
    j["value"] = to_string(v);
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << to_string(v) << '\n';
  }
  return kOk;
}

// ---- table

int run_table(const Options& o, const std::string& id, std::optional<int> lo, std::optional<int> hi) {
  const auto& fx = table_fixture(id);
  TableOptions opts;
  if (lo) opts.min_param = *lo;
  if (hi) opts.max_param = *hi;
  opts.big = o.big;
  opts.caps = o.caps();

  for (const auto& col : fx.columns) {
    if (col.param < opts.min_param || col.param > opts.max_param || !col.big) continue;
    if (o.big)
      std::cerr << "note: computing " << col.spec().name() << "; large columns can take a while\n";
    else
      std::cerr << "note: skipping " << fx.param_name << "=" << col.param << " (pass --big to compute it)\n";
  }
  const auto report = reproduce_table(id, opts);

  std::vector<const ColumnResult*> cols;
  for (const auto& c : report.columns)
    if (c.computed) cols.push_back(&c);
  int top = -1;
  for (const auto* c : cols)
    if (!c->histogram.counts.empty()) top = std::max(top, c->histogram.counts.rbegin()->first);
  const auto cell = [](const ColumnResult& c, int len) -> std::uint64_t {
    const auto it = c.histogram.counts.find(len);
    return it == c.histogram.counts.end() ? 0 : it->second;
  };

  switch (o.fmt()) {
    case Format::csv:
      std::cout << report.param_name << ",length,count\n";
      for (const auto* c : cols)
        for (auto [len, count] : c->histogram.counts) std::cout << c->fixture.param << ',' << len << ',' << count << '\n';
      break;
    case Format::json: {
      auto j = envelope("table");
      j["table"] = report.id;
      j["caption"] = report.caption;
      j["param"] = report.param_name;
      j["match"] = report.ok();
      j["columns"] = json::array();
      for (const auto* c : cols) {
        json counts = json::array();
        for (auto [len, count] : c->histogram.counts) counts.push_back({{"length", len}, {"count", count}});
        json diffs = json::array();
        for (const auto& d : c->diffs)
          diffs.push_back({{"length", d.length < 0 ? json("total") : json(d.length)}, {"expected", d.expected}, {"actual", d.actual}});
        j["columns"].push_back({{report.param_name, c->fixture.param},
                                {"group", group_json(c->histogram.spec)},
                                {"counts", counts},
                                {"total", c->histogram.total},
                                {"seconds", c->seconds},
                                {"diffs", diffs}});
      }
      std::cout << j.dump(2) << '\n';
      break;
    }
    case Format::md: {
      std::cout << "Table " << report.id << ": " << report.caption << "\n\n| length |";
      for (const auto* c : cols) std::cout << ' ' << report.param_name << '=' << c->fixture.param << " |";
      std::cout << "\n|---:|";
      for (std::size_t i = 0; i < cols.size(); ++i) std::cout << "---:|";
      std::cout << '\n';
      for (int len = 0; len <= top; ++len) {
        std::cout << "| " << len << " |";
        for (const auto* c : cols) {
          const auto v = cell(*c, len);
          if (v) std::cout << ' ' << v << " |";
          else std::cout << "  |";
        }
        std::cout << '\n';
      }
      std::cout << "| total |";
      for (const auto* c : cols) std::cout << ' ' << c->histogram.total << " |";
      std::cout << "\n\n";
      for (const auto* c : cols)
        for (const auto& d : c->diffs)
          std::cout << "mismatch " << report.param_name << '=' << d.param << ' '
                    << (d.length < 0 ? std::string("total") : "length " + std::to_string(d.length)) << ": expected "
                    << d.expected << ", computed " << d.actual << '\n';
      std::cout << (report.ok() ? "all computed cells match\n" : "MISMATCH\n");
      break;
    }
  }
  return report.ok() ? kOk : kMismatch;
}

// ---- verify

const std::vector<std::string> kChecks = {"pi", "deciders", "counts", "count-d", "mm2", "star", "unique-re", "strange", "all"};

struct StrangeRun {
  int m, n;
  std::vector<StrangeFc> found;
  std::optional<bool> matches_list;
};

StrangeRun run_strange(int m, int n, const Caps& caps) {
  StrangeRun r{m, n, find_strange_fc(m, n, caps), std::nullopt};
  if (n == 4 && (m == 3 || m == 4)) {
    const auto spec = make_group(m, m, n, GenSet::classical);
    std::set<Element> expected, got;
    for (const auto& fx : strange_fixtures())
      if (fx.m == m) expected.insert(parse_element(fx.element, spec));
    for (const auto& s : r.found) got.insert(s.element);
    r.matches_list = expected == got;
  }
  return r;
}

int run_verify(const Options& o, const std::string& check, std::optional<int> m, std::optional<int> n,
               const GroupArgs& ga) {
  const auto caps = o.caps();
  std::vector<VerificationReport> reports;
  std::vector<StrangeRun> strange;

  const auto mn_list = [&](std::vector<std::pair<int, int>> defaults) {
    if (m || n) {
      if (!m || !n) throw InvalidSpec("verify " + check + " needs both --m and --n");
      return std::vector<std::pair<int, int>>{{*m, *n}};
    }
    return defaults;
  };
  const bool all = check == "all";
  if (all || check == "pi")
    for (auto [a, b] : mn_list({{3, 3}, {4, 3}, {3, 4}})) reports.push_back(verify_pi_theorem(a, b, caps));
  if (all || check == "deciders") {
    if (!ga.group.empty())
      reports.push_back(verify_decider_agreement(parse_group(ga), caps));
    else
      for (const auto& s : {make_group(2, 1, 4, GenSet::coxeterB), make_group(3, 1, 3, GenSet::gm1n)})
        reports.push_back(verify_decider_agreement(s, caps));
  }
  if (all || check == "counts")
    for (auto [a, b] : mn_list({{2, 2}, {2, 3}, {2, 4}, {3, 3}, {4, 3}, {3, 4}})) reports.push_back(verify_counts(a, b, caps));
  if (all || check == "count-d") {
    std::vector<int> ns = n ? std::vector<int>{*n} : std::vector<int>{3, 4};
    for (int k : ns) reports.push_back(verify_count_D(k, caps));
  }
  if (all || check == "mm2") {
    std::vector<int> ms;
    if (m) ms = {*m};
    else for (int k = 2; k <= 7; ++k) ms.push_back(k);
    for (int k : ms) reports.push_back(verify_count_mm2(k, caps));
  }
  if (all || check == "star") {
    std::vector<int> ns = n ? std::vector<int>{*n} : std::vector<int>{4, 5};
    for (int k : ns) reports.push_back(verify_star_factorizations(k, caps));
  }
  if (all || check == "unique-re") {
    if (!ga.group.empty()) {
      reports.push_back(verify_unique_re(parse_group(ga), caps));
    } else {
      std::vector<int> ms = m ? std::vector<int>{*m} : std::vector<int>{3, 4, 5};
      for (int k : ms) reports.push_back(verify_unique_re(make_group(k, k, 3, GenSet::classical), caps));
    }
  }
  if (all || check == "strange")
    for (auto [a, b] : mn_list({{3, 4}, {4, 4}, {2, 4}})) strange.push_back(run_strange(a, b, caps));
  if (reports.empty() && strange.empty())
    throw InvalidSpec("unknown check '" + check + "'");

  bool ok = true;
  for (const auto& r : reports) ok = ok && r.pass();
  for (const auto& s : strange) ok = ok && s.matches_list.value_or(true);

  const auto strange_spec = [](const StrangeRun& s) { return make_group(s.m, s.m, s.n, GenSet::classical); };
  const char* interpretation = "containment uses exact-weight submatrices on n-1 columns";

  if (o.fmt() == Format::json) {
    auto j = envelope("verify");
    j["pass"] = ok;
    j["reports"] = json::array();
    for (const auto& r : reports)
      j["reports"].push_back({{"check", r.check},
                              {"universe", r.universe},
                              {"pass", r.pass()},
                              {"checked", r.checked},
                              {"failures", r.failures},
                              {"counterexamples", r.counterexamples},
                              {"notes", r.notes},
                              {"seconds", r.seconds}});
    j["strange"] = json::array();
    for (const auto& s : strange) {
      json found = json::array();
      for (const auto& f : s.found)
        found.push_back({{"element", format_element(f.element)},
                         {"length", f.length},
                         {"columns", columns_text(f.columns)},
                         {"submatrix", format_element(f.witness)}});
      j["strange"].push_back({{"group", group_json(strange_spec(s))},
                              {"found", found},
                              {"matches_list", s.matches_list ? json(*s.matches_list) : json(nullptr)},
                              {"interpretation", interpretation}});
    }
    std::cout << j.dump(2) << '\n';
  } else if (o.fmt() == Format::csv) {
    std::cout << "check,universe,pass,checked,failures,seconds\n";
    for (const auto& r : reports)
      std::cout << r.check << ',' << csv_field(r.universe) << ',' << (r.pass() ? "true" : "false") << ',' << r.checked
                << ',' << r.failures << ',' << r.seconds << '\n';
    for (const auto& s : strange)
      std::cout << "strange," << csv_field(strange_spec(s).name()) << ','
                << (s.matches_list.value_or(true) ? "true" : "false") << ',' << s.found.size() << ",0,\n";
  } else {
    for (const auto& r : reports) {
      std::printf("%s %-20s %-40s %8zu checked %8.3fs\n", r.pass() ? "PASS" : "FAIL", r.check.c_str(), r.universe.c_str(),
                  r.checked, r.seconds);
      if (o.explain)
        for (const auto& note : r.notes) std::cout << "       " << note << '\n';
      for (const auto& ce : r.counterexamples) std::cout << "       counterexample: " << ce << '\n';
      if (r.failures > r.counterexamples.size())
        std::cout << "       ... " << r.failures - r.counterexamples.size() << " more\n";
    }
    for (const auto& s : strange) {
      const auto spec = strange_spec(s);
      std::cout << (s.matches_list.value_or(true) ? "PASS" : "FAIL") << " strange-fc           " << spec.name() << ": "
                << s.found.size() << " f.c. elements with a non-f.c. submatrix"
                << (s.matches_list ? (*s.matches_list ? " (matches the reference list)" : " (differs from the reference list)") : "")
                << '\n';
      if (o.explain) std::cout << "       " << interpretation << '\n';
      for (const auto& f : s.found)
        std::cout << "       " << format_element(f.element) << "  length " << f.length << "  columns "
                  << columns_text(f.columns) << " -> " << format_element(f.witness) << '\n';
    }
  }
  return ok ? kOk : kMismatch;
}

// ---- conjectures

int run_conjectures(const Options& o, const std::string& family, int n, int from, int to) {
  ConjectureFamily fam;
  if (family == "affine") fam = ConjectureFamily::affine;
  else if (family == "star") fam = ConjectureFamily::star;
  else if (family == "classical") fam = ConjectureFamily::classical;
  else throw InvalidSpec("unknown family '" + family + "' (affine, star, classical)");
  if (from > to) throw InvalidSpec("--from must not exceed --to");
  const auto rows = conjecture_data(fam, n, from, to, o.caps());

  switch (o.fmt()) {
    case Format::csv:
      std::cout << "m,length,count\n";
      for (const auto& r : rows)
        for (auto [len, c] : r.histogram.counts) std::cout << r.m << ',' << len << ',' << c << '\n';
      break;
    case Format::json: {
      auto j = envelope("conjectures");
      j["family"] = family;
      j["n"] = n;
      j["rows"] = json::array();
      for (const auto& r : rows) {
        json counts = json::array();
        for (auto [len, c] : r.histogram.counts) counts.push_back({{"length", len}, {"count", c}});
        j["rows"].push_back({{"m", r.m},
                             {"total", r.histogram.total},
                             {"difference", r.difference ? json(*r.difference) : json(nullptr)},
                             {"counts", counts}});
      }
      std::cout << j.dump(2) << '\n';
      break;
    }
    case Format::md:
      std::cout << "f.c. elements of G(m,m," << n << ") with " << family << " generators\n\n"
                << "| m | total | difference | counts by length |\n|---:|---:|---:|---|\n";
      for (const auto& r : rows) {
        std::cout << "| " << r.m << " | " << r.histogram.total << " | "
                  << (r.difference ? std::to_string(*r.difference) : "") << " | ";
        bool first = true;
        for (auto [len, c] : r.histogram.counts) {
          std::cout << (first ? "" : " ") << c;
          first = false;
        }
        std::cout << " |\n";
      }
      break;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fully commutative elements of the complex reflection groups G(m,p,n)", "fc"};
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"md", "csv", "json"}));
  app.add_option("--cap", o.cap, "Largest group order to enumerate")->check(CLI::PositiveNumber);
  app.add_option("--word-cap", o.word_cap, "Most reduced expressions to materialize")->check(CLI::PositiveNumber);
  app.add_option("--jobs", o.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  app.add_flag("--big", o.big, "Compute the large table columns");
  app.add_flag("--explain", o.explain, "Print supporting evidence");

  const auto add_group = [](CLI::App* sub, GroupArgs& ga, bool required) {
    auto* opt = sub->add_option("--group", ga.group, "Group parameters m,p,n");
    if (required) opt->required();
    sub->add_option("--gens", ga.gens, "Generating set: coxeterB, gm1n, classical, affine, star, symAdjacent, symStar");
  };

  GroupArgs list_group, check_group, canon_group, verify_group;
  bool histogram = false;
  std::optional<int> list_length;
  auto* list = app.add_subcommand("list", "List the f.c. elements of a group");
  add_group(list, list_group, true);
  list->add_flag("--histogram", histogram, "Only count them by length");
  list->add_option("--length", list_length, "Only elements of this length");
  list->add_option("--cache-dir", o.cache_dir, "Directory for cached length tables");

  std::string check_text, method = "all";
  auto* check = app.add_subcommand("check", "Decide whether one element is f.c.");
  add_group(check, check_group, true);
  check->add_option("element", check_text, "Element, e.g. '(13);(1,1,1)'")->required();
  check->add_option("--method", method, "brute, criterion, patterns or all")
      ->check(CLI::IsMember({"brute", "criterion", "patterns", "all"}));

  std::string canon_text;
  auto* canon = app.add_subcommand("canonical", "Canonical word of an element of G(m,1,n)");
  add_group(canon, canon_group, true);
  canon->add_option("element", canon_text, "Element")->required();

  std::string formula;
  std::optional<long long> cm, cn, ck;
  auto* count = app.add_subcommand("count", "Evaluate a closed-form count");
  count->add_option("--formula", formula, "b, d, fklo, formula1, h, f, star-sym, mm2 or alpha")
      ->required()
      ->check(CLI::IsMember({"b", "d", "fklo", "formula1", "h", "f", "star-sym", "mm2", "alpha"}));
  count->add_option("--m", cm, "m");
  count->add_option("--n", cn, "n");
  count->add_option("--k", ck, "k (alpha only)");

  std::string table_id;
  std::optional<int> tmin, tmax;
  auto* table = app.add_subcommand("table", "Reproduce a reference table and diff it cell by cell");
  table->add_option("id", table_id, "Table: 2, 4, 4b, 5 or 6")->required()->check(CLI::IsMember({"2", "4", "4b", "5", "6"}));
  table->add_option("--min", tmin, "Smallest column parameter");
  table->add_option("--max", tmax, "Largest column parameter");

  std::string check_name;
  std::optional<int> vm, vn;
  auto* verify = app.add_subcommand("verify", "Run exhaustive checks");
  verify->add_option("check", check_name, "pi, deciders, counts, count-d, mm2, star, unique-re, strange or all")
      ->required()
      ->check(CLI::IsMember(kChecks));
  verify->add_option("--m", vm, "m");
  verify->add_option("--n", vn, "n");
  add_group(verify, verify_group, false);

  std::string family = "affine";
  int cj_n = 3, from = 2, to = 6;
  auto* conj = app.add_subcommand("conjectures", "Totals and differences along a family G(m,m,n)");
  conj->add_option("--family", family, "affine, star or classical")->check(CLI::IsMember({"affine", "star", "classical"}));
  conj->add_option("--n", cj_n, "Rank")->check(CLI::Range(2, 8));
  conj->add_option("--from", from, "Smallest m")->check(CLI::Range(2, 1000));
  conj->add_option("--to", to, "Largest m")->check(CLI::Range(2, 1000));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*list) return run_list(o, list_group, histogram, list_length);
    if (*check) return run_check(o, check_group, check_text, method);
    if (*canon) return run_canonical(o, canon_group, canon_text);
    if (*count) return run_count(o, formula, cm, cn, ck);
    if (*table) return run_table(o, table_id, tmin, tmax);
    if (*verify) return run_verify(o, check_name, vm, vn, verify_group);
    if (*conj) return run_conjectures(o, family, cj_n, from, to);
  } catch (const CapExceeded& e) {
    std::cerr << "fc: " << e.what() << " (raise --cap)\n";
    return kCap;
  } catch (const WordCapExceeded& e) {
    std::cerr << "fc: " << e.what() << " (raise --word-cap)\n";
    return kCap;
  } catch (const InexactDivision& e) {
    std::cerr << "fc: " << e.what() << '\n';
    return kMismatch;
  } catch (const Error& e) {
    std::cerr << "fc: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
