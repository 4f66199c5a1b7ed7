#pragma once

// Combinatorics of words over a linearly ordered alphabet, and the
// dictionaries between words and bands of the special family Lambda_N
// (N vertices in a row, double arrows a_i, b_i : v_{i+1} -> v_i, relations
// a_i b_{i+1} and b_i a_{i+1}).
//
// Words are read left to right; letters are integers compared with the
// natural order. For Lambda_N dictionaries the letters are 1..N and letter n
// stands for the vertex v_n.

#include "strings.hpp"

namespace bandbrick {

using Word = std::vector<int>;

inline Word bw_transform(const Word& w) {
  if (w.empty()) throw error("bw_transform: empty word");
  const int k = (int)w.size();
  std::vector<Word> rots;
  for (int i = 0; i < k; ++i) {
    Word r;
    for (int q = 0; q < k; ++q) r.push_back(w[(i + q) % k]);
    rots.push_back(std::move(r));
  }
  std::sort(rots.begin(), rots.end());
  Word out;
  for (const auto& r : rots) out.push_back(r.back());
  return out;
}

inline bool is_primitive_word(const Word& w) {
  if (w.empty()) throw error("is_primitive_word: empty word");
  return is_primitive_sequence(w);
}

// Rotation-pair criterion: w is perfectly clustering iff there are no cyclic
// permutations n'z m'z' and n''z m''z'' with n' < n'' and m' < m''  (z may be
// empty).
inline bool is_pcw(const Word& w) {
  if (!is_primitive_word(w)) throw error("is_pcw: input word is not primitive");
  const int k = (int)w.size();
  auto at = [&](int i, int q) { return w[(i + q) % k]; };
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (!(w[i] < w[j])) continue;
      for (int L = 0; L <= k - 2; ++L) {
        if (L > 0 && at(i, L) != at(j, L)) break;
        if (at(i, L + 1) < at(j, L + 1)) return false;
      }
    }
  return true;
}

// The defining route (weakly decreasing Burrows-Wheeler transform); kept as
// an independent cross-check of is_pcw.
inline bool is_pcw_via_bw(const Word& w) {
  if (!is_primitive_word(w)) throw error("is_pcw_via_bw: input word is not primitive");
  Word b = bw_transform(w);
  for (size_t i = 0; i + 1 < b.size(); ++i)
    if (b[i] < b[i + 1]) return false;
  return true;
}

inline bool is_zigzag(const Word& w) {
  if (w.empty()) throw error("is_zigzag: empty word");
  for (size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] == w[i + 1]) return false;
    if (i > 0 && (w[i - 1] < w[i]) == (w[i] < w[i + 1])) return false;
  }
  return true;
}

inline bool is_crown(const Word& w) {
  if ((int)w.size() < 2) return false;
  const int k = (int)w.size();
  for (int i = 0; i < k; ++i) {
    Word r;
    for (int q = 0; q < k; ++q) r.push_back(w[(i + q) % k]);
    if (!is_zigzag(r)) return false;
  }
  return true;
}

// Weakly perfectly clustering crown over a plain linear alphabet: the trace
// of an adjacent pair is the closed interval between its letters, and both
// obstruction patterns range over cyclic permutations of w itself.
inline bool is_wpc_crown(const Word& w) {
  if (!is_primitive_word(w)) throw error("is_wpc_crown: input word is not primitive");
  if (!is_crown(w)) throw error("is_wpc_crown: input word is not a crown");
  const int k = (int)w.size();
  auto at = [&](int i, int q) { return w[(i + q) % k]; };
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      // condition (1): shared factor z with |z| >= 1
      if (w[i] < w[j]) {
        for (int L = 1; L <= k - 2; ++L) {
          if (at(i, L) != at(j, L)) break;
          if (at(i, L + 1) < at(j, L + 1)) return false;
        }
      }
      // condition (2): adjacent pairs with overlapping intervals
      int n1 = w[i], m1 = at(i, 1), n2 = w[j], m2 = at(j, 1);
      if (n1 < n2 && m1 < m2 && ((n1 < m1) == (n2 < m2))) {
        int lo1 = std::min(n1, m1), hi1 = std::max(n1, m1);
        int lo2 = std::min(n2, m2), hi2 = std::max(n2, m2);
        if (lo1 <= hi2 && lo2 <= hi1) return false;
      }
    }
  return true;
}

// w over {2..N} -> 1 n_1 1 n_2 ... 1 n_k over {1..N}; equals
// phi_tilde_inverse(phi(w)).
inline Word lift_word(const Word& w) {
  Word out;
  for (int n : w) {
    out.push_back(1);
    out.push_back(n);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Lambda_N
// ---------------------------------------------------------------------------

// Arrows are declared a1..a_{N-1} then b1..b_{N-1}; the sign choice makes
// every 1_(v_{n+1},+1) b_n^-1 1_(v_n,+1) a string, so the letter n
// corresponds to the covering-quiver node (v_n, +1).
inline Presentation make_lambda(int N) {
  if (N < 2) throw error("make_lambda: N must be >= 2");
  Presentation p;
  for (int i = 1; i <= N; ++i) p.quiver.vertices.push_back("v" + std::to_string(i));
  for (int i = 1; i < N; ++i)
    p.quiver.arrows.push_back({"a" + std::to_string(i), i, i - 1});
  for (int i = 1; i < N; ++i)
    p.quiver.arrows.push_back({"b" + std::to_string(i), i, i - 1});
  auto a = [&](int i) { return i - 1; };
  auto b = [&](int i) { return N - 1 + i - 1; };
  for (int i = 1; i <= N - 2; ++i) {
    p.relations.push_back({b(i + 1), a(i)});  // a_i b_{i+1}
    p.relations.push_back({a(i + 1), b(i)});  // b_i a_{i+1}
  }
  SignMaps sm;
  sm.sigma.assign(p.quiver.arrows.size(), 0);
  sm.eps.assign(p.quiver.arrows.size(), 0);
  for (int i = 1; i < N; ++i) {
    sm.sigma[a(i)] = -1;
    sm.eps[a(i)] = +1;
    sm.sigma[b(i)] = +1;
    sm.eps[b(i)] = -1;
  }
  p.signs = std::move(sm);
  if (auto msg = check_sign_axioms(p); !msg.empty())
    throw error("make_lambda: " + msg);
  return p;
}

namespace detail {

inline int lambda_rank(const Presentation& lambda_n) {
  return (int)lambda_n.quiver.vertices.size();
}
inline Syllable lambda_a(const Presentation& lambda_n, int i, bool inv = false) {
  (void)lambda_n;
  return {i - 1, inv};
}
inline Syllable lambda_b(const Presentation& lambda_n, int i, bool inv = false) {
  return {lambda_rank(lambda_n) - 1 + i - 1, inv};
}

// Unique one-sign connector x with 1_(v_to,+1) x 1_(v_from,+1) a string:
// a descending a-chain or an ascending chain of inverse b's.
inline void append_lambda_connector(const Presentation& lambda_n,
                                    std::vector<Syllable>& walk, int from, int to) {
  if (from < to)
    for (int i = from; i < to; ++i) walk.push_back(lambda_b(lambda_n, i, true));
  else if (from > to)
    for (int i = from - 1; i >= to; --i) walk.push_back(lambda_a(lambda_n, i, false));
  else
    throw error("lambda connector: letters must differ");
}

}  // namespace detail

// phi: a primitive word n_1...n_k over {2..N} to the band
// b_{n_k} ... b_{n_1} with b_n = a_1...a_{n-1} b_{n-1}^-1 ... b_1^-1.
inline Band phi(const Presentation& lambda_n, const Word& w) {
  const int N = detail::lambda_rank(lambda_n);
  if (w.empty()) throw error("phi: empty word");
  for (int n : w)
    if (n < 2 || n > N) throw error("phi: letter out of range 2..N");
  if (!is_primitive_word(w)) throw error("phi: input word is not primitive");
  std::vector<Syllable> walk;
  for (int n : w) {
    detail::append_lambda_connector(lambda_n, walk, 1, n);
    detail::append_lambda_connector(lambda_n, walk, n, 1);
  }
  return make_band(lambda_n, AlgString::of(std::move(walk)));
}

// phi~: a primitive crown over {1..N} to a band, concatenating the unique
// connectors between consecutive letters (cyclically). A special crown
// (first letter below the second) maps directly to a band; otherwise the
// cyclic string is an anti-band rotation and gets rotated into band form,
// which does not change the band module.
inline Band phi_tilde(const Presentation& lambda_n, const Word& w) {
  const int N = detail::lambda_rank(lambda_n);
  for (int n : w)
    if (n < 1 || n > N) throw error("phi_tilde: letter out of range 1..N");
  if (!is_crown(w)) throw error("phi_tilde: input word is not a crown");
  if (!is_primitive_word(w)) throw error("phi_tilde: input word is not primitive");
  const int k = (int)w.size();
  std::vector<Syllable> walk;
  for (int i = 0; i < k; ++i)
    detail::append_lambda_connector(lambda_n, walk, w[i], w[(i + 1) % k]);
  if (!walk.front().inv) {
    const int m = (int)walk.size();
    for (int i = 1; i <= m; ++i)
      if (walk[(i - 1) % m].inv && !walk[(i - 2 + m) % m].inv) {
        walk = rotate_walk(walk, i);
        break;
      }
  }
  return make_band(lambda_n, AlgString::of(std::move(walk)));
}

// phi~^-1: read off the source vertices across the standard partition.
inline Word phi_tilde_inverse(const Presentation& lambda_n, const AlgString& x) {
  if (x.length() == 0 || x.source(lambda_n) != x.target(lambda_n))
    throw error("phi_tilde_inverse: input must be a cyclic positive-length string");
  Word out;
  for (const auto& part : standard_partition(lambda_n, x))
    out.push_back(part.source(lambda_n) + 1);
  return out;
}

inline Word phi_tilde_inverse(const Presentation& lambda_n, const Band& b) {
  return phi_tilde_inverse(lambda_n, b.str);
}

}  // namespace bandbrick
