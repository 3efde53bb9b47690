#pragma once

// Canonical reduced words for G(m,1,n) from shortest left coset representatives
// of the tower G(m,1,n) > G(m,1,n-1) > ... > G(m,1,0).
//
// A block [m_i^{a_i}, n_i] expands to
//   m_i > 0 :  s_{m_i} s_{m_i+1} ... s_{n_i}
//   m_i <= 0:  s_{|m_i|} ... s_1 s_0^{a_i} s_1 ... s_{n_i}
// and a canonical word is a product of blocks with strictly decreasing n_i.

#include <cstdlib>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fcgroups/group.hpp"

namespace fcg {

struct Block {
  int m = 0;  ///< start index; sign selects the family
  int a = 1;  ///< exponent of s_0, pinned to 1 when m > 0
  int n = 0;  ///< end index

  std::size_t letters() const {
    return m > 0 ? static_cast<std::size_t>(n - m + 1) : static_cast<std::size_t>(std::abs(m) + a + n);
  }

  friend bool operator==(const Block&, const Block&) = default;
};

struct CanonicalWord {
  std::vector<Block> blocks;
  int m = 2;  ///< order of the roots of unity the exponents refer to

  std::size_t letters() const {
    std::size_t total = 0;
    for (const Block& b : blocks) total += b.letters();
    return total;
  }

  friend bool operator==(const CanonicalWord&, const CanonicalWord&) = default;
};

inline Word block_word(const Block& b) {
  Word w;
  if (b.m > 0) {
    for (int i = b.m; i <= b.n; ++i) w.push_back(i);
    return w;
  }
  for (int i = -b.m; i >= 1; --i) w.push_back(i);
  for (int e = 0; e < b.a; ++e) w.push_back(0);
  for (int i = 1; i <= b.n; ++i) w.push_back(i);
  return w;
}

inline Word word_from_canonical(const CanonicalWord& cw) {
  Word w;
  for (const Block& b : cw.blocks) {
    const Word part = block_word(b);
    w.insert(w.end(), part.begin(), part.end());
  }
  return w;
}

/// Bracket syntax, e.g. `[-4^6,5][2,2][0,0]`; the exponent is omitted when it is 1.
inline std::string format_canonical(const CanonicalWord& cw) {
  if (cw.blocks.empty()) return "e";
  std::string out;
  for (const Block& b : cw.blocks) {
    out += '[' + std::to_string(b.m);
    if (b.a != 1) out += '^' + std::to_string(b.a);
    out += ',' + std::to_string(b.n) + ']';
  }
  return out;
}

inline CanonicalWord parse_canonical(std::string_view text, int m) {
  CanonicalWord cw;
  cw.m = m;
  const std::string s = detail::strip_spaces(text);
  if (s == "e" || s.empty()) return cw;
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] != '[') throw ParseError("expected '[' in canonical word '" + s + "'");
    const auto close = s.find(']', pos);
    const auto comma = s.find(',', pos);
    if (close == std::string::npos || comma == std::string::npos || comma > close)
      throw ParseError("malformed block in canonical word '" + s + "'");
    const std::string head = s.substr(pos + 1, comma - pos - 1);
    Block b;
    if (const auto caret = head.find('^'); caret != std::string::npos) {
      b.m = static_cast<int>(detail::parse_int(head.substr(0, caret), s));
      b.a = static_cast<int>(detail::parse_int(head.substr(caret + 1), s));
    } else {
      b.m = static_cast<int>(detail::parse_int(head, s));
    }
    b.n = static_cast<int>(detail::parse_int(s.substr(comma + 1, close - comma - 1), s));
    cw.blocks.push_back(b);
    pos = close + 1;
  }
  return cw;
}

namespace detail {

inline void require_tower_spec(const GroupSpec& spec) {
  if (spec.genset() != GenSet::gm1n && spec.genset() != GenSet::coxeterB)
    throw Unsupported("canonical words exist only for G(m,1,n) with its standard generators, not " + spec.name());
}

}  // namespace detail

/// A shortest left coset representative of G(m,1,level) / G(m,1,level-1).
struct CosetRep {
  std::optional<Block> block;  ///< nullopt for the identity coset
  Element element;
};

/// The m * level representatives at `level`: the identity, [i, level-1] for
/// 1 <= i < level, and [(-i)^e, level-1] for 0 <= i < level, 1 <= e < m.
inline std::vector<CosetRep> coset_representatives(const GroupSpec& spec, int level) {
  detail::require_tower_spec(spec);
  if (level < 1 || level > spec.n())
    throw InvalidSpec("coset level " + std::to_string(level) + " outside [1, " + std::to_string(spec.n()) + "]");
  std::vector<CosetRep> reps;
  reps.push_back({std::nullopt, identity(spec)});
  const int top = level - 1;
  for (int i = top; i >= 1; --i) {
    const Block b{i, 1, top};
    reps.push_back({b, evaluate(spec, block_word(b))});
  }
  for (int i = 0; i <= top; ++i)
    for (int e = 1; e < spec.m(); ++e) {
      const Block b{-i, e, top};
      reps.push_back({b, evaluate(spec, block_word(b))});
    }
  return reps;
}

/// Peels g level by level: at level l the unique representative u with u^-1 g
/// fixing coordinate l with weight 0 contributes its block.
inline CanonicalWord canonical_word(const GroupSpec& spec, const Element& g) {
  detail::require_tower_spec(spec);
  require_member(spec, g);
  CanonicalWord cw;
  cw.m = spec.m();
  Element current = g;
  for (int level = spec.n(); level >= 1; --level) {
    const auto col = static_cast<std::size_t>(level - 1);
    const auto reps = coset_representatives(spec, level);
    const CosetRep* chosen = nullptr;
    Element next;
    for (const CosetRep& rep : reps) {
      Element rest = multiply(spec.m(), inverse(spec.m(), rep.element), current);
      if (rest.perm[col] == level - 1 && rest.weights[col] == 0) {
        if (chosen) throw Error("two coset representatives fit " + format_element(g) + " at level " + std::to_string(level));
        chosen = &rep;
        next = std::move(rest);
      }
    }
    if (!chosen) throw Error("no coset representative fits " + format_element(g) + " at level " + std::to_string(level));
    if (chosen->block) cw.blocks.push_back(*chosen->block);
    current = std::move(next);
  }
  return cw;
}

inline std::size_t length_via_canonical(const GroupSpec& spec, const Element& g) {
  return canonical_word(spec, g).letters();
}

/// Full-commutativity criterion on the block starts m_1, ..., m_r. Accepts either
///   - m_1 > ... > m_{r-1} > -m_r > 0 (one negative block, last), or
///   - m_1 > ... > m_s > 0 = m_{s+1} = ... = m_r (a zero tail, possibly empty).
/// The two orderings of these case labels in the literature describe the same set.
inline bool is_fc_by_criterion(const CanonicalWord& cw) {
  const auto& b = cw.blocks;
  const std::size_t r = b.size();
  if (r == 0) return true;

  if (b[r - 1].m < 0) {
    for (std::size_t i = 0; i + 2 < r; ++i)
      if (!(b[i].m > b[i + 1].m)) return false;
    return r == 1 || b[r - 2].m > -b[r - 1].m;
  }

  std::size_t i = 0;
  while (i < r && b[i].m > 0) {
    if (i > 0 && !(b[i - 1].m > b[i].m)) return false;
    ++i;
  }
  for (; i < r; ++i)
    if (b[i].m != 0) return false;
  return true;
}

/// Image under the -1 replacement: same (m_i, n_i), exponents collapsed to 1.
inline CanonicalWord project_canonical(const CanonicalWord& cw) {
  CanonicalWord out;
  out.m = 2;
  for (Block b : cw.blocks) {
    b.a = 1;
    out.blocks.push_back(b);
  }
  return out;
}

}  // namespace fcg
