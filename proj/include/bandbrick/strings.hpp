#pragma once

// Strings and bands over a string algebra.
//
// A syllable is an arrow or a formal inverse of an arrow. Sequences are kept
// in walk order: seq[0] is the first (rightmost) syllable, seq.back() is the
// last (leftmost). All printing uses the written order, leftmost = last, so
// "b e c d^-1 e a^-1" parses with a^-1 as the first syllable.
//
// delta of a positive-length string is -1 when every syllable is direct, +1
// when every syllable is inverse, 0 otherwise.

#include <cassert>
#include <cstdint>
#include <numeric>
#include <set>

#include "presentation.hpp"

namespace bandbrick {

struct Syllable {
  int arrow = -1;
  bool inv = false;
  friend auto operator<=>(const Syllable&, const Syllable&) = default;
  Syllable inverse() const { return {arrow, !inv}; }
};

inline int syll_delta(Syllable s) { return s.inv ? +1 : -1; }
inline int syll_source(const Presentation& p, Syllable s) {
  return s.inv ? p.quiver.arrows[s.arrow].tgt : p.quiver.arrows[s.arrow].src;
}
inline int syll_target(const Presentation& p, Syllable s) {
  return s.inv ? p.quiver.arrows[s.arrow].src : p.quiver.arrows[s.arrow].tgt;
}
inline int syll_sigma(const Presentation& p, Syllable s) {
  return s.inv ? p.eps(s.arrow) : p.sigma(s.arrow);
}
inline int syll_eps(const Presentation& p, Syllable s) {
  return s.inv ? p.sigma(s.arrow) : p.eps(s.arrow);
}

class AlgString {
public:
  AlgString() = default;

  static AlgString trivial(int vertex, int sign) {
    AlgString x;
    x.triv_ = true;
    x.vertex_ = vertex;
    x.sign_ = sign;
    return x;
  }
  static AlgString of(std::vector<Syllable> seq) {
    AlgString x;
    x.seq_ = std::move(seq);
    return x;
  }

  bool is_trivial() const { return triv_; }
  int length() const { return triv_ ? 0 : (int)seq_.size(); }
  const std::vector<Syllable>& syllables() const { return seq_; }
  int trivial_vertex() const { return vertex_; }
  int trivial_sign() const { return sign_; }

  int source(const Presentation& p) const {
    return triv_ ? vertex_ : syll_source(p, seq_.front());
  }
  int target(const Presentation& p) const {
    return triv_ ? vertex_ : syll_target(p, seq_.back());
  }
  int sigma(const Presentation& p) const {
    return triv_ ? -sign_ : syll_sigma(p, seq_.front());
  }
  int eps(const Presentation& p) const {
    return triv_ ? sign_ : syll_eps(p, seq_.back());
  }
  int delta() const {
    if (triv_) throw error("delta is undefined for zero-length strings");
    bool all_dir = true, all_inv = true;
    for (auto s : seq_) (s.inv ? all_dir : all_inv) = false;
    return all_dir ? -1 : (all_inv ? +1 : 0);
  }

  AlgString inverse() const {
    if (triv_) return trivial(vertex_, -sign_);
    std::vector<Syllable> seq(seq_.rbegin(), seq_.rend());
    for (auto& s : seq) s.inv = !s.inv;
    return of(std::move(seq));
  }

  friend auto operator<=>(const AlgString&, const AlgString&) = default;

private:
  bool triv_ = false;
  int vertex_ = -1;
  int sign_ = 0;
  std::vector<Syllable> seq_;
};

// ---------------------------------------------------------------------------
// Validity of syllable sequences (Definition of a string): composability,
// no immediate backtrack, and no contiguous same-sign run whose arrow path
// (or the path of its inverse) lies in rho.
// ---------------------------------------------------------------------------

struct SequenceCheck {
  bool ok = true;
  int index = -1;  // 1-based syllable index where the problem was detected
  std::string reason;
};

inline SequenceCheck check_sequence(const Presentation& p,
                                    const std::vector<Syllable>& seq) {
  for (int i = 0; i < (int)seq.size(); ++i)
    if (seq[i].arrow < 0 || seq[i].arrow >= (int)p.quiver.arrows.size())
      return {false, i + 1, "unknown arrow"};
  for (int i = 0; i + 1 < (int)seq.size(); ++i) {
    if (syll_target(p, seq[i]) != syll_source(p, seq[i + 1]))
      return {false, i + 2, "non-composable syllables"};
    if (seq[i + 1] == seq[i].inverse())
      return {false, i + 2, "immediate backtrack"};
  }
  // Same-sign runs against rho. A run of direct syllables is the arrow path
  // in walk order; a run of inverse syllables inverts to the reversed path.
  int i = 0;
  while (i < (int)seq.size()) {
    int j = i;
    while (j + 1 < (int)seq.size() && seq[j + 1].inv == seq[i].inv) ++j;
    std::vector<int> walk;
    for (int k = i; k <= j; ++k) walk.push_back(seq[k].arrow);
    if (seq[i].inv) std::reverse(walk.begin(), walk.end());
    if (p.has_forbidden_subpath(walk))
      return {false, i + 1, "contains a relation (or an inverse of one)"};
    i = j + 1;
  }
  return {};
}

inline AlgString make_string(const Presentation& p, const AlgString& candidate) {
  if (candidate.is_trivial()) {
    int v = candidate.trivial_vertex();
    if (v < 0 || v >= (int)p.quiver.vertices.size())
      throw error("make_string: unknown vertex in trivial string");
    if (candidate.trivial_sign() != 1 && candidate.trivial_sign() != -1)
      throw error("make_string: trivial-string sign must be -1 or +1");
    return candidate;
  }
  auto chk = check_sequence(p, candidate.syllables());
  if (!chk.ok)
    throw error("make_string: " + chk.reason + " at syllable " +
                std::to_string(chk.index));
  return candidate;
}

// Token syntax: whitespace-separated syllables in written order (leftmost =
// last applied); inverses as "<arrow>^-1"; trivial strings as
// "1(<vertex>,<+1|-1>)".
inline AlgString parse_string_tokens(const Presentation& p, const std::string& text) {
  auto toks = detail::split_ws(text);
  if (toks.empty()) throw error("parse_string_tokens: empty token list");
  if (toks.size() == 1 && toks[0].rfind("1(", 0) == 0) {
    const std::string& t = toks[0];
    auto comma = t.find(',');
    if (comma == std::string::npos || t.back() != ')')
      throw error("parse_string_tokens: malformed trivial string " + t);
    std::string vname = t.substr(2, comma - 2);
    std::string stok = t.substr(comma + 1, t.size() - comma - 2);
    int v = p.quiver.vertex_index(vname);
    if (v < 0) throw error("parse_string_tokens: unknown vertex " + vname);
    int sign = detail::parse_sign_token(stok);
    if (sign == 0) throw error("parse_string_tokens: bad sign in " + t);
    return AlgString::trivial(v, sign);
  }
  std::vector<Syllable> seq;
  for (auto it = toks.rbegin(); it != toks.rend(); ++it) {
    std::string name = *it;
    bool inv = false;
    if (auto pos = name.find("^-1"); pos != std::string::npos && pos + 3 == name.size()) {
      inv = true;
      name.erase(pos);
    }
    int a = p.quiver.arrow_index(name);
    if (a < 0) throw error("parse_string_tokens: unknown arrow " + name);
    seq.push_back({a, inv});
  }
  return make_string(p, AlgString::of(std::move(seq)));
}

inline std::string print_string(const Presentation& p, const AlgString& x) {
  if (x.is_trivial())
    return "1(" + p.quiver.vertices[x.trivial_vertex()] + "," +
           (x.trivial_sign() > 0 ? "+1" : "-1") + ")";
  std::string out;
  const auto& seq = x.syllables();
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
    if (!out.empty()) out += ' ';
    out += p.quiver.arrows[it->arrow].name;
    if (it->inv) out += "^-1";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Concatenation y*x ("y after x"), including the trivial-string rules:
// 1_(v,i) x = x iff t(x)=v and eps(x)=i; x 1_(v,i) = x iff s(x)=v and
// sigma(x)=-i.
// ---------------------------------------------------------------------------

inline AlgString concat(const Presentation& p, const AlgString& y, const AlgString& x) {
  if (y.is_trivial()) {
    if (x.target(p) == y.trivial_vertex() && x.eps(p) == y.trivial_sign()) return x;
    throw error("concat: trivial left factor does not absorb");
  }
  if (x.is_trivial()) {
    if (y.source(p) == x.trivial_vertex() && y.sigma(p) == -x.trivial_sign()) return y;
    throw error("concat: trivial right factor does not absorb");
  }
  if (x.target(p) != y.source(p)) throw error("concat: not composable");
  if (y.sigma(p) != -x.eps(p)) throw error("concat: sign clash, sigma(y) != -eps(x)");
  std::vector<Syllable> seq = x.syllables();
  seq.insert(seq.end(), y.syllables().begin(), y.syllables().end());
  auto chk = check_sequence(p, seq);
  if (!chk.ok)
    throw error("concat: " + chk.reason + " at syllable " + std::to_string(chk.index));
  return AlgString::of(std::move(seq));
}

// Maximal runs of constant delta, rightmost part first; concatenating the
// parts (left to right over the returned list) restores the input.
inline std::vector<AlgString> standard_partition(const Presentation& p,
                                                 const AlgString& x) {
  (void)p;
  if (x.length() == 0) throw error("standard_partition: zero-length input");
  std::vector<AlgString> parts;
  const auto& seq = x.syllables();
  int i = 0;
  while (i < (int)seq.size()) {
    int j = i;
    while (j + 1 < (int)seq.size() && seq[j + 1].inv == seq[i].inv) ++j;
    parts.push_back(AlgString::of({seq.begin() + i, seq.begin() + j + 1}));
    i = j + 1;
  }
  return parts;
}

// ---------------------------------------------------------------------------
// Periods. Shared engine with the words module: works on any sequence with
// equality-comparable entries.
// ---------------------------------------------------------------------------

template <class T>
inline std::set<int> periods(const std::vector<T>& s) {
  const int n = (int)s.size();
  if (n == 0) throw error("periods: empty sequence");
  std::set<int> out;
  for (int p = 1; p <= n; ++p) {
    bool ok = true;
    for (int i = 0; i + p < n; ++i)
      if (!(s[i] == s[i + p])) {
        ok = false;
        break;
      }
    if (ok) out.insert(p);
  }
  return out;
}

// Primitive = not a proper power, i.e. no period that properly divides the
// length. (A non-divisor period does not make a power: "aba" is primitive.)
template <class T>
inline bool is_primitive_sequence(const std::vector<T>& s) {
  const int n = (int)s.size();
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool ok = true;
    for (int i = 0; i + d < n; ++i)
      if (!(s[i] == s[i + d])) {
        ok = false;
        break;
      }
    if (ok) return false;
  }
  return true;
}

inline bool is_primitive(const Presentation& p, const AlgString& x) {
  if (x.length() == 0 || x.source(p) != x.target(p))
    throw error("is_primitive: input must be a cyclic positive-length string");
  return is_primitive_sequence(x.syllables());
}

// ---------------------------------------------------------------------------
// Bands. The canonical form is the lexicographically least special cyclic
// permutation among those of the band and of its inverse; it is the dedup
// key for enumeration and the band-module isomorphism test.
// ---------------------------------------------------------------------------

struct Band {
  AlgString str;                    // the rotation the band was built from
  std::vector<Syllable> canonical;  // walk order

  int length() const { return str.length(); }
};

inline std::vector<Syllable> rotate_walk(const std::vector<Syllable>& seq, int i) {
  // sigma_i: new walk order starts at alpha_i (1-based), i.e. seq[i-1].
  std::vector<Syllable> out;
  const int k = (int)seq.size();
  for (int j = 0; j < k; ++j) out.push_back(seq[(i - 1 + j) % k]);
  return out;
}

// sigma_i is special iff delta(alpha_i) != delta(alpha_{i-1}) (indices mod k).
inline bool rotation_is_special(const std::vector<Syllable>& seq, int i) {
  const int k = (int)seq.size();
  return seq[(i - 1) % k].inv != seq[(i - 2 + k) % k].inv;
}

// Least rotation, over the band and its inverse, that is again in band form
// (first syllable inverse, last direct). Such rotations are special cyclic
// permutations, and the minimum is invariant under rotating or inverting the
// input, so it serves as the dedup key.
inline std::vector<Syllable> canonical_band_form(const AlgString& x) {
  const auto& seq = x.syllables();
  const auto inv = x.inverse().syllables();
  std::vector<Syllable> best;
  auto consider = [&](const std::vector<Syllable>& s) {
    const int k = (int)s.size();
    for (int i = 1; i <= k; ++i) {
      if (!s[(i - 1) % k].inv || s[(i - 2 + k) % k].inv) continue;
      auto rot = rotate_walk(s, i);
      if (best.empty() || rot < best) best = std::move(rot);
    }
  };
  consider(seq);
  consider(inv);
  return best;
}

// Checks the four band axioms. Power-closure is verified on x^m where m is
// large enough that every length-<=max|r| window of the infinite word, and
// every wrap junction, lies inside x^m; audit_power can force a deeper check.
inline Band make_band(const Presentation& p, const AlgString& x, int audit_power = 0) {
  if (x.length() == 0) throw error("band: zero-length string is not a band");
  make_string(p, x);
  if (x.source(p) != x.target(p)) throw error("band: not cyclic (source != target)");
  if (!x.syllables().front().inv) throw error("band: first syllable must be inverse");
  if (x.syllables().back().inv) throw error("band: last syllable must be direct");
  if (!is_primitive_sequence(x.syllables())) throw error("band: not primitive");

  const int L = p.max_relation_length();
  int m = std::max(2, L <= 1 ? 2 : 1 + (L - 1 + x.length() - 1) / x.length());
  m = std::max(m, audit_power);
  std::vector<Syllable> power;
  for (int i = 0; i < m; ++i)
    power.insert(power.end(), x.syllables().begin(), x.syllables().end());
  auto chk = check_sequence(p, power);
  if (!chk.ok)
    throw error("band: power " + std::to_string(m) + " is not a string (" + chk.reason +
                " at syllable " + std::to_string(chk.index) + ")");

  return Band{x, canonical_band_form(x)};
}

inline Band band_inverse(const Presentation& p, const Band& b) {
  return make_band(p, b.str.inverse());
}

struct CyclicPermutation {
  int index;  // i of sigma_i, 1-based as in the source indexing
  AlgString str;
  bool special;
};

inline std::vector<CyclicPermutation> cyclic_permutations(const Presentation& p,
                                                          const Band& b) {
  (void)p;
  std::vector<CyclicPermutation> out;
  const auto& seq = b.str.syllables();
  for (int i = 1; i <= (int)seq.size(); ++i)
    out.push_back({i, AlgString::of(rotate_walk(seq, i)), rotation_is_special(seq, i)});
  return out;
}

// ---------------------------------------------------------------------------
// Bounded enumeration.
// ---------------------------------------------------------------------------

namespace detail {

// Candidate continuations of a walk: composable syllables that avoid the
// immediate backtrack and keep every same-sign run relation-free.
inline std::vector<Syllable> extensions(const Presentation& p,
                                        const std::vector<Syllable>& seq) {
  std::vector<Syllable> out;
  const int v = syll_target(p, seq.back());
  auto try_syll = [&](Syllable s) {
    if (syll_source(p, s) != v) return;
    if (s == seq.back().inverse()) return;
    if (s.inv == seq.back().inv) {
      // extend the current run and re-test it
      std::vector<int> walk;
      int i = (int)seq.size() - 1;
      while (i >= 0 && seq[i].inv == s.inv) --i;
      for (int k = i + 1; k < (int)seq.size(); ++k) walk.push_back(seq[k].arrow);
      walk.push_back(s.arrow);
      if (s.inv) std::reverse(walk.begin(), walk.end());
      if (p.has_forbidden_subpath(walk)) return;
    }
    out.push_back(s);
  };
  for (int a = 0; a < (int)p.quiver.arrows.size(); ++a) {
    try_syll({a, false});
    try_syll({a, true});
  }
  return out;
}

}  // namespace detail

// All bands of length <= max_len, deduplicated up to cyclic permutation and
// inversion via the canonical form, in deterministic (length, canonical
// form) order. Each returned band is given by its canonical rotation.
inline std::vector<Band> enumerate_bands(const Presentation& p, int max_len,
                                         int audit_power = 0) {
  std::set<std::vector<Syllable>> canon_seen;
  std::vector<Syllable> seq;

  auto is_band_candidate = [&](const std::vector<Syllable>& s) {
    if ((int)s.size() < 2) return false;
    if (!s.front().inv || s.back().inv) return false;
    if (syll_source(p, s.front()) != syll_target(p, s.back())) return false;
    return is_primitive_sequence(s);
  };

  std::vector<Band> out;
  auto dfs = [&](auto&& self) -> void {
    if (is_band_candidate(seq)) {
      AlgString x = AlgString::of(seq);
      try {
        Band b = make_band(p, x, audit_power);
        if (canon_seen.insert(b.canonical).second)
          out.push_back(make_band(p, AlgString::of(b.canonical), audit_power));
      } catch (const error&) {
        // power-closure failed; not a band
      }
    }
    if ((int)seq.size() >= max_len) return;
    for (auto s : detail::extensions(p, seq)) {
      seq.push_back(s);
      self(self);
      seq.pop_back();
    }
  };

  for (int a = 0; a < (int)p.quiver.arrows.size(); ++a) {
    seq.assign(1, Syllable{a, true});  // bands start with an inverse syllable
    if (max_len >= 1) dfs(dfs);
  }
  seq.clear();

  std::sort(out.begin(), out.end(), [](const Band& a, const Band& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.canonical < b.canonical;
  });
  return out;
}

// All positive-length strings up to max_len (no quotient taken), plus the
// trivial strings when include_trivial is set. Deterministic order.
inline std::vector<AlgString> enumerate_strings(const Presentation& p, int max_len,
                                                bool include_trivial = false) {
  std::vector<AlgString> out;
  if (include_trivial)
    for (int v = 0; v < (int)p.quiver.vertices.size(); ++v)
      for (int s : {-1, +1}) out.push_back(AlgString::trivial(v, s));
  std::vector<Syllable> seq;
  auto dfs = [&](auto&& self) -> void {
    out.push_back(AlgString::of(seq));
    if ((int)seq.size() >= max_len) return;
    for (auto s : detail::extensions(p, seq)) {
      seq.push_back(s);
      self(self);
      seq.pop_back();
    }
  };
  for (int a = 0; a < (int)p.quiver.arrows.size(); ++a)
    for (bool inv : {false, true}) {
      seq.assign(1, Syllable{a, inv});
      if (max_len >= 1) dfs(dfs);
    }
  return out;
}

// ---------------------------------------------------------------------------
// Band lift along the trisection: each direct syllable a becomes
// a_3 a_2^-1 a_1 and each inverse syllable a^-1 becomes a_1^-1 a_2 a_3^-1.
// `tri` must be trisect(p); arrows of `tri` are indexed 3a, 3a+1, 3a+2.
// ---------------------------------------------------------------------------

inline Band lift_band(const Presentation& p, const Presentation& tri, const Band& b) {
  if (tri.quiver.arrows.size() != 3 * p.quiver.arrows.size())
    throw error("lift_band: second presentation is not the trisection of the first");
  std::vector<Syllable> seq;
  for (auto s : b.str.syllables()) {
    if (!s.inv) {
      seq.push_back({3 * s.arrow, false});      // a_1
      seq.push_back({3 * s.arrow + 1, true});   // a_2^-1
      seq.push_back({3 * s.arrow + 2, false});  // a_3
    } else {
      seq.push_back({3 * s.arrow + 2, true});   // a_3^-1
      seq.push_back({3 * s.arrow + 1, false});  // a_2
      seq.push_back({3 * s.arrow, true});       // a_1^-1
    }
  }
  return make_band(tri, AlgString::of(std::move(seq)));
}

}  // namespace bandbrick
