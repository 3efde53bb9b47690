#pragma once

// G(m,p,n) and the generating sets used for it.
//
// Generators are addressed by GeneratorId. Id 0 is the distinguished generator
// (s_0 for G(m,1,n), s1bar for the classical and star sets of G(m,m,n), the
// affine reflection s~_n), ids 1..n-1 are s_1..s_{n-1}. For the star sets, id i
// is the transposition (1, i+1). The symmetric-group sets have no id 0.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fcgroups/element.hpp"

namespace fcg {

enum class GenSet { coxeterB, gm1n, classical, affine, star, symAdjacent, symStar };

using GeneratorId = int;
using Word = std::vector<GeneratorId>;

inline std::string_view to_string(GenSet g) {
  switch (g) {
    case GenSet::coxeterB: return "coxeterB";
    case GenSet::gm1n: return "gm1n";
    case GenSet::classical: return "classical";
    case GenSet::affine: return "affine";
    case GenSet::star: return "star";
    case GenSet::symAdjacent: return "symAdjacent";
    case GenSet::symStar: return "symStar";
  }
  return "?";
}

inline GenSet parse_genset(std::string_view s) {
  for (GenSet g : {GenSet::coxeterB, GenSet::gm1n, GenSet::classical, GenSet::affine, GenSet::star,
                   GenSet::symAdjacent, GenSet::symStar})
    if (s == to_string(g)) return g;
  if (s == "B" || s == "coxeter-b") return GenSet::coxeterB;
  if (s == "sym" || s == "sym-adjacent") return GenSet::symAdjacent;
  if (s == "sym-star") return GenSet::symStar;
  throw InvalidSpec("unknown generating set '" + std::string(s) + "'");
}

class GroupSpec {
 public:
  int m() const { return m_; }
  int p() const { return p_; }
  int n() const { return n_; }
  GenSet genset() const { return genset_; }

  /// Generators in position order; `id_at(pos)` gives the GeneratorId of each.
  const std::vector<Element>& generators() const { return gens_; }
  std::size_t generator_count() const { return gens_.size(); }
  GeneratorId id_at(std::size_t pos) const { return ids_[pos]; }
  const std::vector<GeneratorId>& ids() const { return ids_; }

  bool valid_id(GeneratorId id) const {
    return id >= 0 && id < n_ && pos_of_[static_cast<std::size_t>(id)] >= 0;
  }
  std::size_t position(GeneratorId id) const {
    if (!valid_id(id)) throw InvalidSpec("generator id " + std::to_string(id) + " invalid for " + name());
    return static_cast<std::size_t>(pos_of_[static_cast<std::size_t>(id)]);
  }
  const Element& generator(GeneratorId id) const { return gens_[position(id)]; }

  /// m^n n! / p, or nullopt when it does not fit in 64 bits.
  std::optional<std::uint64_t> order() const {
    unsigned __int128 v = 1;
    for (int i = 0; i < n_; ++i) {
      v *= static_cast<unsigned>(m_);
      v *= static_cast<unsigned>(i + 1);
      if (v > (static_cast<unsigned __int128>(1) << 100)) return std::nullopt;
    }
    v /= static_cast<unsigned>(p_);
    if (v > UINT64_MAX) return std::nullopt;
    return static_cast<std::uint64_t>(v);
  }

  std::string name() const {
    return "G(" + std::to_string(m_) + "," + std::to_string(p_) + "," + std::to_string(n_) + ")[" +
           std::string(to_string(genset_)) + "]";
  }

  std::string generator_name(GeneratorId id) const {
    if (id == 0) {
      switch (genset_) {
        case GenSet::coxeterB:
        case GenSet::gm1n: return "s0";
        case GenSet::classical:
        case GenSet::star: return "s1bar";
        case GenSet::affine: return "s" + std::to_string(n_) + "tilde";
        default: break;
      }
    }
    return "s" + std::to_string(id);
  }

  friend bool operator==(const GroupSpec& a, const GroupSpec& b) {
    return a.m_ == b.m_ && a.p_ == b.p_ && a.n_ == b.n_ && a.genset_ == b.genset_;
  }

  friend GroupSpec make_group(int m, int p, int n, GenSet genset);

 private:
  int m_ = 1, p_ = 1, n_ = 1;
  GenSet genset_ = GenSet::symAdjacent;
  std::vector<Element> gens_;
  std::vector<GeneratorId> ids_;
  std::vector<int> pos_of_;
};

namespace detail {

inline Element transposition(int n, int a, int b) {
  Element e = identity_element(static_cast<std::size_t>(n));
  std::swap(e.perm[a], e.perm[b]);
  return e;
}

}  // namespace detail

inline GroupSpec make_group(int m, int p, int n, GenSet genset) {
  const std::string where = "G(" + std::to_string(m) + "," + std::to_string(p) + "," + std::to_string(n) + ")";
  if (m < 1 || p < 1 || n < 1) throw InvalidSpec(where + ": m, p, n must be positive");
  if (m % p != 0) throw InvalidSpec(where + ": p must divide m");
  auto require = [&](bool ok, const char* what) {
    if (!ok) throw InvalidSpec(where + " with " + std::string(to_string(genset)) + ": " + what);
  };
  switch (genset) {
    case GenSet::coxeterB: require(m == 2 && p == 1, "requires m = 2, p = 1"); break;
    case GenSet::gm1n: require(p == 1 && m >= 2, "requires p = 1 and m >= 2"); break;
    case GenSet::classical: require(p == m && m >= 2 && n >= 2, "requires p = m >= 2 and n >= 2"); break;
    case GenSet::affine: require(p == m && m >= 2 && n >= 3, "requires p = m >= 2 and n >= 3"); break;
    case GenSet::star: require(p == m && m >= 2 && n >= 2, "requires p = m >= 2 and n >= 2"); break;
    case GenSet::symAdjacent:
    case GenSet::symStar: require(m == 1 && p == 1 && n >= 2, "requires m = p = 1 and n >= 2"); break;
  }

  GroupSpec g;
  g.m_ = m;
  g.p_ = p;
  g.n_ = n;
  g.genset_ = genset;
  auto add = [&g](GeneratorId id, Element e) {
    g.ids_.push_back(id);
    g.gens_.push_back(std::move(e));
  };

  switch (genset) {
    case GenSet::coxeterB:
    case GenSet::gm1n: {
      Element s0 = identity_element(static_cast<std::size_t>(n));
      s0.weights[0] = 1 % m;
      add(0, std::move(s0));
      for (int i = 1; i < n; ++i) add(i, detail::transposition(n, i - 1, i));
      break;
    }
    case GenSet::classical:
    case GenSet::star: {
      Element bar = detail::transposition(n, 0, 1);
      bar.weights[0] = mod(-1, m);
      bar.weights[1] = 1 % m;
      add(0, std::move(bar));
      for (int i = 1; i < n; ++i)
        add(i, genset == GenSet::classical ? detail::transposition(n, i - 1, i) : detail::transposition(n, 0, i));
      break;
    }
    case GenSet::affine: {
      Element t = detail::transposition(n, 0, n - 1);
      t.weights[0] = mod(-1, m);
      t.weights[static_cast<std::size_t>(n - 1)] = 1 % m;
      add(0, std::move(t));
      for (int i = 1; i < n; ++i) add(i, detail::transposition(n, i - 1, i));
      break;
    }
    case GenSet::symAdjacent:
      for (int i = 1; i < n; ++i) add(i, detail::transposition(n, i - 1, i));
      break;
    case GenSet::symStar:
      for (int i = 1; i < n; ++i) add(i, detail::transposition(n, 0, i));
      break;
  }
  g.pos_of_.assign(static_cast<std::size_t>(n), -1);
  for (std::size_t pos = 0; pos < g.ids_.size(); ++pos) g.pos_of_[static_cast<std::size_t>(g.ids_[pos])] = static_cast<int>(pos);
  return g;
}

inline Element identity(const GroupSpec& spec) { return identity_element(static_cast<std::size_t>(spec.n())); }

inline bool is_member(const GroupSpec& spec, const Element& g) {
  return g.rank() == static_cast<std::size_t>(spec.n()) && is_well_formed(g, spec.m()) &&
         weight_sum(g, spec.m()) % spec.p() == 0;
}

inline void require_member(const GroupSpec& spec, const Element& g) {
  if (!is_member(spec, g)) throw NotMember(format_element(g) + " is not a member of " + spec.name());
}

inline Element multiply(const GroupSpec& spec, const Element& g, const Element& h) {
  if (g.rank() != static_cast<std::size_t>(spec.n()) || h.rank() != g.rank())
    throw InvalidSpec("rank mismatch in multiply for " + spec.name());
  return multiply(spec.m(), g, h);
}

inline Element inverse(const GroupSpec& spec, const Element& g) { return inverse(spec.m(), g); }

/// Product of the generators named by `w`, left to right.
inline Element evaluate(const GroupSpec& spec, const Word& w) {
  Element r = identity(spec);
  for (GeneratorId id : w) r = multiply(spec.m(), r, spec.generator(id));
  return r;
}

/// Parses the shorthand and checks membership in `spec`.
inline Element parse_element(std::string_view text, const GroupSpec& spec) {
  Element g = parse_element(text, spec.m());
  if (g.rank() != static_cast<std::size_t>(spec.n()))
    throw ParseError("element '" + std::string(text) + "' has rank " + std::to_string(g.rank()) + ", expected " +
                     std::to_string(spec.n()));
  if (!is_member(spec, g)) throw NotMember("element '" + std::string(text) + "' is not a member of " + spec.name());
  return g;
}

inline std::string format_word(const GroupSpec& spec, const Word& w) {
  if (w.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += spec.generator_name(w[i]);
  }
  return out;
}

/// Inverse of format_word. Accepts `s0`, `s3`, `s1bar`, `s<n>tilde`, or `e` for the empty word.
inline Word parse_word(const GroupSpec& spec, std::string_view text) {
  Word w;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '*' || text[pos] == '.')) ++pos;
    if (pos >= text.size()) break;
    auto end = text.find_first_of(" *.", pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view tok = text.substr(pos, end - pos);
    pos = end;
    if (tok == "e") continue;
    bool found = false;
    for (GeneratorId id : spec.ids())
      if (spec.generator_name(id) == tok) {
        w.push_back(id);
        found = true;
        break;
      }
    if (!found) throw ParseError("unknown generator '" + std::string(tok) + "' for " + spec.name());
  }
  return w;
}

}  // namespace fcg
