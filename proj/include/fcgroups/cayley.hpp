#pragma once

// Word length, reduced expressions and commutation classes over a GroupSpec,
// and the brute-force full-commutativity decider built from them.
//
// Lengths come from a breadth-first search of the right Cayley graph. Each
// generator is a directed step, so a generator of order k > 2 has its inverse
// written as k - 1 letters.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <set>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "fcgroups/bigint.hpp"
#include "fcgroups/group.hpp"
#include "fcgroups/parallel.hpp"

namespace fcg {

struct Caps {
  std::size_t element_cap = 2'000'000;
  std::size_t word_cap = 1'000'000;
  unsigned jobs = 1;
};

/// Unordered pairs {a, b} of distinct generator ids, stored with a < b.
using CommutingPairs = std::set<std::pair<GeneratorId, GeneratorId>>;

/// Pairs of distinct generators whose products agree in the group.
inline CommutingPairs commuting_pairs(const GroupSpec& spec) {
  CommutingPairs out;
  const auto& ids = spec.ids();
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      const Element& s = spec.generators()[i];
      const Element& t = spec.generators()[j];
      if (multiply(spec.m(), s, t) == multiply(spec.m(), t, s))
        out.emplace(std::min(ids[i], ids[j]), std::max(ids[i], ids[j]));
    }
  return out;
}

/// Dense lookup over generator ids. A letter never commutes with itself here:
/// equal adjacent letters are not a move.
class Commutation {
 public:
  Commutation() = default;
  Commutation(int n, const CommutingPairs& pairs) : n_(n), table_(static_cast<std::size_t>(n * n), 0) {
    for (auto [a, b] : pairs) {
      table_[static_cast<std::size_t>(a * n + b)] = 1;
      table_[static_cast<std::size_t>(b * n + a)] = 1;
    }
  }
  bool commute(GeneratorId a, GeneratorId b) const { return table_[static_cast<std::size_t>(a * n_ + b)] != 0; }

 private:
  int n_ = 0;
  std::vector<char> table_;
};

class LengthTable {
 public:
  using Id = std::uint32_t;

  const GroupSpec& spec() const { return spec_; }
  std::size_t size() const { return elements_.size(); }
  bool complete() const { return complete_; }

  const Element& element(Id id) const { return elements_[id]; }
  const std::vector<Element>& elements() const { return elements_; }
  int length(Id id) const { return lengths_[id]; }
  const std::vector<int>& lengths() const { return lengths_; }
  int max_length() const { return lengths_.empty() ? 0 : lengths_.back(); }

  std::optional<Id> find(const Element& g) const {
    auto it = index_.find(g);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  Id id_of(const Element& g) const {
    auto id = find(g);
    if (!id) throw NotMember(format_element(g) + " is not in the length table of " + spec_.name());
    return *id;
  }
  int length_of(const Element& g) const { return lengths_[id_of(g)]; }

  /// Id of element(id) * generator at position `pos`.
  Id right(Id id, std::size_t pos) const { return right_[id * gens_ + pos]; }
  /// Id of element(id) * (generator at position `pos`)^-1.
  Id right_inverse(Id id, std::size_t pos) const { return right_inv_[id * gens_ + pos]; }

  /// Builds a table from elements listed in nondecreasing length order; used by the
  /// BFS and by the on-disk cache.
  static LengthTable assemble(GroupSpec spec, std::vector<Element> elements, std::vector<int> lengths) {
    LengthTable t;
    t.spec_ = std::move(spec);
    t.elements_ = std::move(elements);
    t.lengths_ = std::move(lengths);
    t.gens_ = t.spec_.generator_count();
    if (t.elements_.size() >= std::numeric_limits<Id>::max()) throw CapExceeded("length table too large for 32-bit ids");
    t.index_.reserve(t.elements_.size());
    for (std::size_t i = 0; i < t.elements_.size(); ++i) t.index_.emplace(t.elements_[i], static_cast<Id>(i));
    if (t.index_.size() != t.elements_.size()) throw Error("duplicate element in length table");
    t.right_.resize(t.elements_.size() * t.gens_);
    t.right_inv_.resize(t.elements_.size() * t.gens_);
    for (std::size_t i = 0; i < t.elements_.size(); ++i)
      for (std::size_t pos = 0; pos < t.gens_; ++pos) {
        const Id j = t.id_of(multiply(t.spec_.m(), t.elements_[i], t.spec_.generators()[pos]));
        t.right_[i * t.gens_ + pos] = j;
        t.right_inv_[j * t.gens_ + pos] = static_cast<Id>(i);
      }
    return t;
  }

  friend bool operator==(const LengthTable& a, const LengthTable& b) {
    return a.spec_ == b.spec_ && a.elements_ == b.elements_ && a.lengths_ == b.lengths_ && a.right_ == b.right_;
  }

 private:
  GroupSpec spec_;
  std::vector<Element> elements_;
  std::vector<int> lengths_;
  std::unordered_map<Element, Id, ElementHash> index_;
  std::size_t gens_ = 0;
  std::vector<Id> right_;
  std::vector<Id> right_inv_;
  bool complete_ = true;
};

/// BFS over the right Cayley graph from the identity. Throws CapExceeded when the
/// group has more than `element_cap` elements.
inline LengthTable build_length_table(const GroupSpec& spec, std::size_t element_cap = Caps{}.element_cap) {
  if (auto order = spec.order(); !order || *order > element_cap)
    throw CapExceeded(spec.name() + " has more than " + std::to_string(element_cap) + " elements");
  std::vector<Element> elements{identity(spec)};
  std::vector<int> lengths{0};
  std::unordered_set<Element, ElementHash> seen{elements.front()};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const Element& s : spec.generators()) {
      Element next = multiply(spec.m(), elements[head], s);
      if (seen.insert(next).second) {
        if (elements.size() >= element_cap)
          throw CapExceeded(spec.name() + " has more than " + std::to_string(element_cap) + " elements");
        const int len = lengths[head] + 1;
        elements.push_back(std::move(next));
        lengths.push_back(len);
      }
    }
  }
  return LengthTable::assemble(spec, std::move(elements), std::move(lengths));
}

namespace detail {

inline void require_same_spec(const GroupSpec& spec, const LengthTable& table) {
  if (!(spec == table.spec())) throw InvalidSpec("length table belongs to " + table.spec().name() + ", not " + spec.name());
}

// |RE(id)| by memoized descent recursion.
inline const BigInt& count_descents(const LengthTable& t, LengthTable::Id id,
                                    std::unordered_map<LengthTable::Id, BigInt>& memo) {
  if (auto it = memo.find(id); it != memo.end()) return it->second;
  BigInt total = 0;
  if (t.length(id) == 0) {
    total = 1;
  } else {
    for (std::size_t pos = 0; pos < t.spec().generator_count(); ++pos) {
      const auto prev = t.right_inverse(id, pos);
      if (t.length(prev) == t.length(id) - 1) total += count_descents(t, prev, memo);
    }
  }
  return memo.emplace(id, std::move(total)).first->second;
}

}  // namespace detail

/// |RE(g)| for every element of the table, indexed by id.
inline std::vector<BigInt> reduced_expression_counts(const LengthTable& t) {
  std::vector<BigInt> counts(t.size());
  for (LengthTable::Id id = 0; id < t.size(); ++id) {
    if (t.length(id) == 0) {
      counts[id] = 1;
      continue;
    }
    for (std::size_t pos = 0; pos < t.spec().generator_count(); ++pos) {
      const auto prev = t.right_inverse(id, pos);
      if (t.length(prev) == t.length(id) - 1) counts[id] += counts[prev];
    }
  }
  return counts;
}

inline BigInt count_reduced_expressions(const GroupSpec& spec, const Element& g, const LengthTable& table) {
  detail::require_same_spec(spec, table);
  std::unordered_map<LengthTable::Id, BigInt> memo;
  return detail::count_descents(table, table.id_of(g), memo);
}

/// All geodesic words for g, sorted lexicographically by generator id.
inline std::vector<Word> reduced_expressions(const GroupSpec& spec, const Element& g, const LengthTable& table,
                                             std::size_t word_cap = Caps{}.word_cap) {
  detail::require_same_spec(spec, table);
  const auto root = table.id_of(g);
  std::unordered_map<LengthTable::Id, BigInt> memo;
  if (detail::count_descents(table, root, memo) > word_cap)
    throw WordCapExceeded(format_element(g) + " has more than " + std::to_string(word_cap) + " reduced expressions");

  std::vector<Word> out;
  Word suffix;  // letters collected right to left
  auto recurse = [&](auto&& self, LengthTable::Id id) -> void {
    if (table.length(id) == 0) {
      out.emplace_back(suffix.rbegin(), suffix.rend());
      return;
    }
    for (std::size_t pos = 0; pos < spec.generator_count(); ++pos) {
      const auto prev = table.right_inverse(id, pos);
      if (table.length(prev) != table.length(id) - 1) continue;
      suffix.push_back(spec.id_at(pos));
      self(self, prev);
      suffix.pop_back();
    }
  };
  recurse(recurse, root);
  std::sort(out.begin(), out.end());
  return out;
}

/// Closure of {word} under swapping adjacent commuting letters, sorted.
inline std::vector<Word> commutation_class(const Word& word, const CommutingPairs& pairs,
                                           std::size_t class_cap = Caps{}.word_cap) {
  int n = 1;
  for (GeneratorId id : word) n = std::max(n, id + 1);
  for (auto [a, b] : pairs) n = std::max(n, b + 1);
  const Commutation comm(n, pairs);

  std::set<Word> seen{word};
  std::deque<Word> queue{word};
  while (!queue.empty()) {
    Word w = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] == w[i + 1] || !comm.commute(w[i], w[i + 1])) continue;
      std::swap(w[i], w[i + 1]);
      if (seen.insert(w).second) {
        if (seen.size() > class_cap)
          throw WordCapExceeded("commutation class exceeds " + std::to_string(class_cap) + " words");
        queue.push_back(w);
      }
      std::swap(w[i], w[i + 1]);
    }
  }
  return {seen.begin(), seen.end()};
}

/// Size of the commutation class of `word` without materializing it: the number of
/// linear extensions of the word's heap (positions ordered when their letters do
/// not commute), counted over order ideals.
inline BigInt commutation_class_size(const Word& word, const Commutation& comm) {
  const std::size_t len = word.size();
  if (len > 64) throw WordCapExceeded("heap counting supports words of at most 64 letters");
  std::vector<std::uint64_t> pred(len, 0);
  for (std::size_t j = 0; j < len; ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (word[i] == word[j] || !comm.commute(word[i], word[j])) pred[j] |= std::uint64_t{1} << i;
  const std::uint64_t full = len == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << len) - 1;
  std::unordered_map<std::uint64_t, BigInt> memo;
  auto count = [&](auto&& self, std::uint64_t placed) -> BigInt {
    if (placed == full) return 1;
    if (auto it = memo.find(placed); it != memo.end()) return it->second;
    BigInt total = 0;
    for (std::size_t j = 0; j < len; ++j) {
      const std::uint64_t bit = std::uint64_t{1} << j;
      if (!(placed & bit) && (pred[j] & ~placed) == 0) total += self(self, placed | bit);
    }
    memo.emplace(placed, total);
    return total;
  };
  return count(count, 0);
}

/// One reduced word for element(id): peel the smallest right descent repeatedly.
inline Word some_reduced_word(const LengthTable& t, LengthTable::Id id) {
  Word rev;
  while (t.length(id) > 0) {
    for (std::size_t pos = 0; pos < t.spec().generator_count(); ++pos) {
      const auto prev = t.right_inverse(id, pos);
      if (t.length(prev) == t.length(id) - 1) {
        rev.push_back(t.spec().id_at(pos));
        id = prev;
        break;
      }
    }
  }
  return {rev.rbegin(), rev.rend()};
}

/// Per-table full-commutativity analysis. Reduced-expression counts are computed
/// once; each verdict compares |RE(g)| with the commutation class of one of g's
/// reduced words.
class FcAnalyzer {
 public:
  explicit FcAnalyzer(const LengthTable& table) : FcAnalyzer(table, commuting_pairs(table.spec())) {}
  FcAnalyzer(const LengthTable& table, CommutingPairs pairs)
      : table_(&table),
        pairs_(std::move(pairs)),
        comm_(table.spec().n(), pairs_),
        counts_(reduced_expression_counts(table)) {}

  const LengthTable& table() const { return *table_; }
  const CommutingPairs& pairs() const { return pairs_; }
  const Commutation& commutation() const { return comm_; }
  const BigInt& re_count(LengthTable::Id id) const { return counts_[id]; }

  Word some_reduced_word(LengthTable::Id id) const { return fcg::some_reduced_word(*table_, id); }

  bool is_fc(LengthTable::Id id) const { return commutation_class_size(some_reduced_word(id), comm_) == counts_[id]; }
  bool has_unique_reduced_expression(LengthTable::Id id) const { return counts_[id] == 1; }

  /// Verdict per id; `jobs` workers over disjoint id ranges.
  std::vector<char> classify_all(unsigned jobs = 1) const {
    std::vector<char> out(table_->size(), 0);
    detail::parallel_for(out.size(), jobs, [&](std::size_t i) { out[i] = is_fc(static_cast<LengthTable::Id>(i)) ? 1 : 0; });
    return out;
  }

 private:
  const LengthTable* table_;
  CommutingPairs pairs_;
  Commutation comm_;
  std::vector<BigInt> counts_;
};

inline bool is_fully_commutative_bruteforce(const GroupSpec& spec, const Element& g, const LengthTable& table) {
  detail::require_same_spec(spec, table);
  const auto id = table.id_of(g);
  std::unordered_map<LengthTable::Id, BigInt> memo;
  const BigInt& total = detail::count_descents(table, id, memo);
  const Commutation comm(spec.n(), commuting_pairs(spec));
  return commutation_class_size(some_reduced_word(table, id), comm) == total;
}

inline bool has_unique_reduced_expression(const GroupSpec& spec, const Element& g, const LengthTable& table) {
  return count_reduced_expressions(spec, g, table) == 1;
}

/// Orders elements by (length, shorthand text).
inline void sort_by_length(std::vector<Element>& elems, const LengthTable& table) {
  std::vector<std::pair<std::pair<int, std::string>, Element>> keyed;
  keyed.reserve(elems.size());
  for (auto& g : elems) keyed.push_back({{table.length_of(g), format_element(g)}, std::move(g)});
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  elems.clear();
  for (auto& [key, g] : keyed) elems.push_back(std::move(g));
}

inline std::vector<Element> all_fc_elements(const LengthTable& table, unsigned jobs = 1) {
  const FcAnalyzer fc(table);
  const auto verdicts = fc.classify_all(jobs);
  std::vector<Element> out;
  for (std::size_t i = 0; i < verdicts.size(); ++i)
    if (verdicts[i]) out.push_back(table.element(static_cast<LengthTable::Id>(i)));
  sort_by_length(out, table);
  return out;
}

inline std::vector<Element> all_fc_elements(const GroupSpec& spec, const Caps& caps = {}) {
  return all_fc_elements(build_length_table(spec, caps.element_cap), caps.jobs);
}

}  // namespace fcg
