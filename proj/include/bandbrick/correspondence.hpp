#pragma once

// Dictionaries between strings/bands and zigzags/crowns over the traced
// poset of the algebra, and the decision procedures built on them: the
// brick test for band modules, the semibrick test, and brick-infiniteness.
//
// For a positive-length string with standard partition x_k ... x_1 the word
// W_St(x) = n_1 ... n_{k+1} lists the covering-quiver nodes at the sign
// changes; a zero-length string maps to its own node. For a special cyclic
// permutation b of a band (power), the first and last letters of W_St(b)
// agree and W_Ba(b) drops the last one. The inverses concatenate the unique
// one-sign connector strings recorded in the poset's traces.

#include "morphisms.hpp"
#include "traced_poset.hpp"

namespace bandbrick {

inline std::vector<int> w_st(const Presentation& p, const AlgString& x) {
  if (x.is_trivial()) return {cover_node(x.trivial_vertex(), x.trivial_sign())};
  std::vector<int> letters;
  for (const auto& part : standard_partition(p, x))
    letters.push_back(node_source(p, part.syllables().front()));
  letters.push_back(node_target(p, x.syllables().back()));
  return letters;
}

// b must be a special cyclic permutation of a band or of a power of one:
// cyclic with first and last syllables of opposite signs.
inline PosetCrown w_ba(const Presentation& p, const AlgString& b) {
  if (b.length() == 0 || b.source(p) != b.target(p) ||
      b.syllables().front().inv == b.syllables().back().inv)
    throw error("w_ba: input is not a special cyclic permutation");
  auto letters = w_st(p, b);
  if (letters.front() != letters.back())
    throw error("w_ba: W_St does not close up; input is not cyclic");
  letters.pop_back();
  return PosetCrown{std::move(letters)};
}

inline PosetCrown w_ba(const Presentation& p, const Band& b) { return w_ba(p, b.str); }

inline AlgString w_st_inverse(const Presentation& p, const TracedPoset& t,
                              const std::vector<int>& letters) {
  if (letters.empty()) throw error("w_st_inverse: empty word");
  if (letters.size() == 1)
    return AlgString::trivial(cover_node_vertex(letters[0]),
                              cover_node_sign(letters[0]));
  std::vector<Syllable> walk;
  for (size_t i = 0; i + 1 < letters.size(); ++i) {
    const Trace* tr = t.trace(letters[i], letters[i + 1]);
    if (!tr || tr->witness.empty())
      throw error("w_st_inverse: no connector between " + t.elems[letters[i]] +
                  " and " + t.elems[letters[i + 1]] + " (word is not a valid zigzag)");
    walk.insert(walk.end(), tr->witness.begin(), tr->witness.end());
  }
  return make_string(p, AlgString::of(std::move(walk)));
}

inline AlgString w_ba_inverse(const Presentation& p, const TracedPoset& t,
                              const PosetCrown& w) {
  auto letters = w.letters;
  if (letters.empty()) throw error("w_ba_inverse: empty crown");
  letters.push_back(letters.front());
  return w_st_inverse(p, t, letters);
}

// ---------------------------------------------------------------------------
// Band-module decisions
// ---------------------------------------------------------------------------

struct BandModuleSpec {
  Band band;
  int l = 1;
  std::string lambda = "l";  // opaque nonzero scalar tag, display only
};

// B(b, l, lambda) is a brick iff l = 1 and both (W(b), W(b)) and
// (W(b), W(b^-1)) are weakly perfectly clustering. lambda plays no role.
inline bool is_brick(const Presentation& p, const TracedPoset& t, const Band& b,
                     int l) {
  if (l < 1) throw error("is_brick: l must be >= 1");
  if (!p.quiver.is_acyclic())
    throw error("is_brick: the underlying quiver must be acyclic");
  if (l >= 2) return false;
  PosetCrown w = w_ba(p, b);
  PosetCrown winv = w_ba(p, band_inverse(p, b));
  return wpc_pair(t, w, w) && wpc_pair(t, w, winv);
}

inline bool is_brick(const Presentation& p, const Band& b, int l) {
  return is_brick(p, build_traced_poset(p), b, l);
}

inline bool is_brick(const Presentation& p, const TracedPoset& t,
                     const BandModuleSpec& spec) {
  return is_brick(p, t, spec.band, spec.l);
}

// Direct sum of pairwise non-isomorphic band modules; band semibrick iff all
// l_i = 1 and every ordered pair of crowns (including i = j) is weakly
// perfectly clustering together with the inverted partner.
inline bool is_semibrick(const Presentation& p, const TracedPoset& t,
                         const std::vector<BandModuleSpec>& specs) {
  if (specs.empty()) throw error("is_semibrick: empty summand list");
  for (size_t i = 0; i < specs.size(); ++i)
    for (size_t j = i + 1; j < specs.size(); ++j)
      if (specs[i].band.canonical == specs[j].band.canonical &&
          specs[i].l == specs[j].l && specs[i].lambda == specs[j].lambda)
        throw error("is_semibrick: summands " + std::to_string(i + 1) + " and " +
                    std::to_string(j + 1) + " are isomorphic band modules");
  for (const auto& s : specs)
    if (s.l != 1) return false;
  std::vector<PosetCrown> w, winv;
  for (const auto& s : specs) {
    w.push_back(w_ba(p, s.band));
    winv.push_back(w_ba(p, band_inverse(p, s.band)));
  }
  for (size_t i = 0; i < specs.size(); ++i)
    for (size_t j = 0; j < specs.size(); ++j)
      if (!wpc_pair(t, w[i], w[j]) || !wpc_pair(t, w[i], winv[j])) return false;
  return true;
}

inline bool is_semibrick(const Presentation& p, const std::vector<BandModuleSpec>& specs) {
  return is_semibrick(p, build_traced_poset(p), specs);
}

// Brick-infiniteness: the algebra admits infinitely many bricks iff some
// band of length at most 2|Q0| yields a band brick. Returns the first
// witness in the deterministic enumeration order.
inline std::pair<bool, std::optional<Band>> is_brick_infinite(const Presentation& pin) {
  Presentation p = ensure_signs(pin);
  if (!p.quiver.is_acyclic())
    throw error("is_brick_infinite: the underlying quiver must be acyclic");
  TracedPoset t = build_traced_poset(p);
  const int bound = 2 * (int)p.quiver.vertices.size();
  for (const auto& b : enumerate_bands(p, bound))
    if (is_brick(p, t, b, 1)) return {true, b};
  return {false, std::nullopt};
}

}  // namespace bandbrick
