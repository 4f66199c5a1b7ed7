#pragma once

// The brute-force morphism oracle for band modules.
//
// Occurrences of finite substrings inside the periodic infinite word
// ^inf b ^inf are classified through the boundary maps theta_l / theta_r of
// marked strings: an interior occurrence is a factor occurrence when its
// left neighbor syllable is direct and its right neighbor is inverse,
// and an image occurrence in the opposite case. Occurrence classes are taken
// up to the translation action, i.e. keyed by (substring, phase mod |b|).
//
// Existence of a non-trivial morphism B(b1,1,l1) -> B(b2,1,l2) is equivalent
// to a common string that is a factor substring of ^inf b1 ^inf and an image
// substring of ^inf b2 ^inf or ^inf b2^-1 ^inf; a band module B(b,l,lambda)
// is a brick iff l = 1 and no such common string exists for b1 = b2 = b.
// The search length max(|b1|,|b2|) is exact: a longer common substring would
// contain a full rotation of each band, and the period-gcd argument then
// contradicts primitivity.

#include "strings.hpp"

namespace bandbrick {

enum class SubstringKind { factor, image };

struct MarkedOccurrence {
  AlgString window;  // typically a power b^w of a band
  int k1 = 0, k2 = 0;
};

// theta_l from the syllable alpha_{k2+1}, theta_r from alpha_{k1}; 0 when the
// neighbor does not exist (window boundary).
inline std::pair<int, int> theta(const MarkedOccurrence& m) {
  const auto& seq = m.window.syllables();
  const int n = (int)seq.size();
  if (!(0 <= m.k1 && m.k1 <= m.k2 && m.k2 <= n))
    throw error("theta: marks out of range");
  int tl = 0, tr = 0;
  if (m.k2 + 1 <= n) tl = seq[m.k2].inv ? +1 : -1;
  if (m.k1 >= 1) tr = seq[m.k1 - 1].inv ? -1 : +1;
  return {tl, tr};
}

struct OccurrenceClass {
  AlgString substring;
  SubstringKind kind;
  int phase = 0;  // k1 mod |b|
};

// All occurrence classes of substrings of ^inf b ^inf with length <= max_len
// and the requested kind. The window b^w with w = ceil((max_len+2)/|b|) + 1
// keeps every inspected occurrence interior; window_mult is a test hook that
// enlarges the window (the result must not change).
inline std::vector<OccurrenceClass> occurrences(const Presentation& p, const Band& b,
                                                SubstringKind kind, int max_len,
                                                int window_mult = 1) {
  if (max_len < 0) throw error("occurrences: max_len must be >= 0");
  const auto& base = b.str.syllables();
  const int n = (int)base.size();
  const int w = ((max_len + 2 + n - 1) / n + 1) * std::max(1, window_mult);
  std::vector<Syllable> win;
  win.reserve((size_t)w * n);
  for (int i = 0; i < w; ++i) win.insert(win.end(), base.begin(), base.end());

  std::vector<OccurrenceClass> out;
  for (int len = 0; len <= max_len; ++len)
    for (int ph = 0; ph < n; ++ph) {
      const int k1 = 1 + ph, k2 = k1 + len;  // k1 >= 1 and k2 + 1 <= w*n
      if (k2 + 1 > w * n) throw error("occurrences: window too small");
      const Syllable left = win[k2];       // alpha_{k2+1}
      const Syllable right = win[k1 - 1];  // alpha_{k1}
      SubstringKind got;
      if (!left.inv && right.inv)
        got = SubstringKind::factor;
      else if (left.inv && !right.inv)
        got = SubstringKind::image;
      else
        continue;
      if (got != kind) continue;
      AlgString sub =
          len == 0 ? AlgString::trivial(syll_target(p, right), syll_eps(p, right))
                   : AlgString::of({win.begin() + k1, win.begin() + k2});
      out.push_back({std::move(sub), kind, k1 % n});
    }
  return out;
}

namespace detail {

inline std::set<AlgString> occurrence_substrings(const Presentation& p, const Band& b,
                                                 SubstringKind kind, int max_len,
                                                 int window_mult = 1) {
  std::set<AlgString> out;
  for (auto& oc : occurrences(p, b, kind, max_len, window_mult))
    out.insert(oc.substring);
  return out;
}

}  // namespace detail

// Existence criterion: some finite string is a factor substring of
// ^inf b1 ^inf and an image substring of ^inf b2 ^inf or ^inf b2^-1 ^inf.
// bound_override (>0) widens the search length for audits.
inline bool morphism_exists(const Presentation& p, const Band& b1, const Band& b2,
                            int bound_override = 0, int window_mult = 1) {
  const int L =
      bound_override > 0 ? bound_override : std::max(b1.length(), b2.length());
  auto fac = detail::occurrence_substrings(p, b1, SubstringKind::factor, L, window_mult);
  auto im = detail::occurrence_substrings(p, b2, SubstringKind::image, L, window_mult);
  for (const auto& x : fac)
    if (im.count(x)) return true;
  auto im2 = detail::occurrence_substrings(p, band_inverse(p, b2), SubstringKind::image,
                                           L, window_mult);
  for (const auto& x : fac)
    if (im2.count(x)) return true;
  return false;
}

inline bool oracle_is_brick(const Presentation& p, const Band& b, int l,
                            int bound_override = 0, int window_mult = 1) {
  if (l < 1) throw error("oracle_is_brick: l must be >= 1");
  if (l >= 2) return false;
  return !morphism_exists(p, b, b, bound_override, window_mult);
}

// dim Hom(B(b1,1,l), B(b2,1,l')) per the graph-map basis: matched pairs of a
// factor class of b1 with an image class of b2 or of b2^-1 (classes carry
// their phase), plus 1 for the K[x]-summand when the band modules are
// isomorphic. lambda is not modeled, so the +1 applies exactly when the
// canonical forms agree; for b1 = b2 this is the endomorphism count.
inline int hom_dimension(const Presentation& p, const Band& b1, const Band& b2) {
  const int L = std::max(b1.length(), b2.length());
  auto fac = occurrences(p, b1, SubstringKind::factor, L);
  auto im = occurrences(p, b2, SubstringKind::image, L);
  auto im2 = occurrences(p, band_inverse(p, b2), SubstringKind::image, L);

  std::map<AlgString, int> fac_count;
  for (auto& oc : fac) fac_count[oc.substring]++;
  int pairs = 0;
  for (auto& oc : im)
    if (auto it = fac_count.find(oc.substring); it != fac_count.end())
      pairs += it->second;
  for (auto& oc : im2)
    if (auto it = fac_count.find(oc.substring); it != fac_count.end())
      pairs += it->second;

  return pairs + (b1.canonical == b2.canonical ? 1 : 0);
}

}  // namespace bandbrick
