#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "bandbrick/correspondence.hpp"
#include "bandbrick/words.hpp"

namespace bbtest {

inline std::string data_file(const std::string& rel) {
  return std::string(BB_DATA_DIR) + "/" + rel;
}

inline bandbrick::Presentation load_presentation(const std::string& name) {
  std::ifstream in(data_file("presentations/" + name + ".pres"));
  if (!in) throw bandbrick::error("cannot open test presentation " + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return bandbrick::parse_presentation(ss.str());
}

inline bandbrick::Band band_of(const bandbrick::Presentation& p, const std::string& toks) {
  return bandbrick::make_band(p, bandbrick::parse_string_tokens(p, toks));
}

// Independent oracle for weakly perfectly clustering pairs: materializes the
// powers w1^(2|w2|), w2^(2|w1|) and scans their rotations literally, with no
// modular index tricks. Kept apart from the library implementation on
// purpose.
inline bool wpc_pair_literal(const bandbrick::TracedPoset& t,
                             const bandbrick::PosetCrown& w1,
                             const bandbrick::PosetCrown& w2) {
  auto power = [](const std::vector<int>& w, int copies) {
    std::vector<int> u;
    for (int c = 0; c < copies; ++c) u.insert(u.end(), w.begin(), w.end());
    return u;
  };
  auto rotate = [](const std::vector<int>& w, int i) {
    std::vector<int> r(w.begin() + i, w.end());
    r.insert(r.end(), w.begin(), w.begin() + i);
    return r;
  };
  auto u0 = power(w1.letters, 2 * w2.length());
  auto v0 = power(w2.letters, 2 * w1.length());
  const int nu = (int)u0.size(), nv = (int)v0.size();
  for (int i = 0; i < nu; ++i) {
    auto u = rotate(u0, i);
    for (int j = 0; j < nv; ++j) {
      auto v = rotate(v0, j);
      // condition (1): u = n' z m' z', v = n'' z m'' z'', |z| >= 1
      if (t.less(u[0], v[0])) {
        for (int L = 1; L + 1 < nu && L + 1 < nv; ++L) {
          if (u[L] != v[L]) break;
          if (t.less(u[L + 1], v[L + 1])) return false;
        }
      }
      // condition (2): u = n'm'z', v = n''m''z''
      if (t.less(u[0], v[0]) && t.less(u[1], v[1]) &&
          (t.less(u[0], u[1]) == t.less(v[0], v[1]))) {
        const auto* t1 = t.trace(u[0], u[1]);
        const auto* t2 = t.trace(v[0], v[1]);
        if (t1 && t2) {
          for (int x : t1->nodes)
            for (int y : t2->nodes)
              if (x == y) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace bbtest
