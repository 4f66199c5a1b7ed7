// Acceptance suite: every release-gating check, one pass/fail line each.
// Exit status is the number of failing criteria.
//
// The suite is exact: every comparison is an equality of combinatorial
// values, with hard wall-clock budgets where stated.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "bandbrick/correspondence.hpp"
#include "bandbrick/words.hpp"

using namespace bandbrick;
using clock_type = std::chrono::steady_clock;

namespace {

int failures = 0;

struct Criterion {
  std::string label;
  clock_type::time_point start = clock_type::now();
  bool ok = true;
  std::string detail;

  explicit Criterion(std::string l) : label(std::move(l)) {}

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }

  double elapsed() const {
    return std::chrono::duration<double>(clock_type::now() - start).count();
  }

  void finish(double budget_seconds = 0.0) {
    double t = elapsed();
    if (budget_seconds > 0 && t > budget_seconds)
      require(false, "time budget exceeded: " + std::to_string(t) + "s > " +
                         std::to_string(budget_seconds) + "s");
    std::printf("[%s] %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", label.c_str(), t,
                ok ? "" : " -- ", ok ? "" : detail.c_str());
    if (!ok) ++failures;
  }
};

Presentation load(const std::string& name) {
  std::ifstream in(std::string(BB_DATA_DIR) + "/presentations/" + name + ".pres");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_presentation(ss.str());
}

Band band_of(const Presentation& p, const std::string& toks) {
  return make_band(p, parse_string_tokens(p, toks));
}

const char* kLongBand =
    "b a1^-1 a2 a3^-1 b^-1 c3 c2^-1 c1 b a1^-1 a2 a3^-1 b^-1 c1^-1 c2 c3^-1";

void for_each_word(int lo, int hi, int max_len,
                   const std::function<void(const Word&)>& f) {
  Word w;
  std::function<void()> rec = [&] {
    if (!w.empty()) f(w);
    if ((int)w.size() >= max_len) return;
    for (int a = lo; a <= hi; ++a) {
      w.push_back(a);
      rec();
      w.pop_back();
    }
  };
  rec();
}

}  // namespace

// 1. Band-brick decision: the wpc-pair criterion agrees with the morphism
//    oracle on every band of length <= 12 over the five reference algebras.
static void criterion_1() {
  Criterion c("1 wpc-pair brick criterion == morphism oracle (5 algebras, |b| <= 12)");
  long bands = 0;
  for (std::string name : {"gamma", "gamma-prime", "gamma-dprime", "lambda2",
                           "lambda3"}) {
    auto p = ensure_signs(load(name));
    auto t = build_traced_poset(p);
    for (const auto& b : enumerate_bands(p, 12)) {
      ++bands;
      if (is_brick(p, t, b, 1) != oracle_is_brick(p, b, 1))
        c.require(false, name + ": disagreement on " + print_string(p, b.str));
    }
  }
  c.require(bands > 0, "no bands enumerated");
  c.detail += " [" + std::to_string(bands) + " bands]";
  c.finish(60.0);
}

// 2. Morphism existence between band modules matches the failure of the two
//    wpc pairs, for all ordered band pairs of length <= 8.
static void criterion_2() {
  Criterion c("2 morphism existence == failed wpc pairs (ordered pairs, |b| <= 8)");
  long pairs = 0;
  for (std::string name : {"gamma", "gamma-dprime"}) {
    auto p = ensure_signs(load(name));
    auto t = build_traced_poset(p);
    auto bands = enumerate_bands(p, 8);
    for (const auto& b1 : bands)
      for (const auto& b2 : bands) {
        ++pairs;
        bool none = wpc_pair(t, w_ba(p, b1), w_ba(p, b2)) &&
                    wpc_pair(t, w_ba(p, b1), w_ba(p, band_inverse(p, b2)));
        if (morphism_exists(p, b1, b2) != !none)
          c.require(false, name + ": pair " + print_string(p, b1.str) + " / " +
                               print_string(p, b2.str));
      }
  }
  c.require(pairs > 0, "no pairs");
  c.finish(120.0);
}

// 3. Perfectly clustering words over {2,3} of length <= 6 are exactly the
//    words whose associated lambda_3 band module is a brick.
static void criterion_3() {
  Criterion c("3 pcw over {2,3} (<= 6) == band brick over lambda_3");
  auto l3 = make_lambda(3);
  long n = 0;
  for_each_word(2, 3, 6, [&](const Word& w) {
    if (!is_primitive_word(w)) return;
    ++n;
    if (is_pcw(w) != oracle_is_brick(l3, phi(l3, w), 1))
      c.require(false, "mismatch on a word of length " + std::to_string(w.size()));
  });
  c.require(n == 106, "expected 106 primitive words, saw " + std::to_string(n));
  c.finish(30.0);
}

// 4. The 1-interleaving lift preserves and reflects perfect clustering for
//    every {2,3}-word of length <= 6.
static void criterion_4() {
  Criterion c("4 pcw(w) == pcw(lift_word(w)) for all {2,3}-words (<= 6)");
  for_each_word(2, 3, 6, [&](const Word& w) {
    if (!is_primitive_word(w)) {
      if (is_primitive_word(lift_word(w)))
        c.require(false, "lift of an imprimitive word became primitive");
      return;
    }
    if (is_pcw(w) != is_pcw(lift_word(w))) c.require(false, "mismatch");
  });
  c.finish();
}

// 5. Golden examples, exact values.
static void criterion_5() {
  Criterion c("5 golden examples (bands, crowns, words, covers, traces)");
  {
    auto g = ensure_signs(load("gamma"));
    auto t = build_traced_poset(g);
    auto b = band_of(g, "b e c d^-1 e a^-1");
    c.require(is_brick(g, t, b, 1), "triangle band should be a brick");
  }
  {
    auto p = load("gamma-dprime-loose");
    auto t = build_traced_poset(p);
    auto b = band_of(p, kLongBand);
    c.require(!is_brick(p, t, b, 1), "sixteen-syllable band should not be a brick");
    std::vector<std::string> names;
    for (int x : w_ba(p, b).letters) names.push_back(t.elems[x]);
    std::vector<std::string> expect = {"(v4,+1)", "(v6,-1)", "(v5,-1)", "(v3,-1)",
                                       "(v2,-1)", "(v1,+1)", "(v5,+1)", "(v6,+1)",
                                       "(v4,-1)", "(v3,-1)", "(v2,-1)", "(v1,+1)"};
    c.require(names == expect, "twelve-letter crown differs");
  }
  c.require(!is_pcw({1, 2, 1, 4, 3, 4}), "121434 must not be perfectly clustering");
  {
    auto l4 = make_lambda(4);
    auto b = phi_tilde(l4, {1, 3, 2, 4});
    c.require(print_string(l4, b.str) == "a1 a2 a3 b3^-1 b2^-1 a2 b2^-1 b1^-1",
              "phi_tilde(1324) differs");
    c.require(phi_tilde_inverse(l4, b) == Word{1, 3, 2, 4},
              "phi_tilde_inverse round trip differs");
  }
  {
    auto g2 = load("gamma-dprime");
    auto t = build_traced_poset(g2);
    auto node = [&](const std::string& n) {
      for (int i = 0; i < t.size(); ++i)
        if (t.elems[i] == n) return i;
      return -1;
    };
    std::vector<std::pair<std::string, std::string>> covers = {
        {"(v2,-1)", "(v1,-1)"}, {"(v2,+1)", "(v1,+1)"}, {"(v2,+1)", "(v3,-1)"},
        {"(v2,-1)", "(v3,+1)"}, {"(v1,+1)", "(v3,+1)"}, {"(v1,-1)", "(v3,-1)"},
        {"(v4,+1)", "(v1,+1)"}, {"(v4,-1)", "(v1,-1)"}, {"(v5,+1)", "(v4,+1)"},
        {"(v5,-1)", "(v4,-1)"}, {"(v5,-1)", "(v6,-1)"}, {"(v5,+1)", "(v6,+1)"},
        {"(v4,-1)", "(v6,+1)"}, {"(v4,+1)", "(v6,-1)"}};
    c.require(t.cover_pairs().size() == covers.size(), "cover count differs");
    for (const auto& [lo, hi] : covers)
      c.require(t.is_cover(node(lo), node(hi)), "missing cover " + lo + " < " + hi);
    std::vector<std::vector<std::string>> maximal = {
        {"(v1,-1)", "(v2,-1)"},
        {"(v2,-1)", "(v3,+1)"},
        {"(v3,+1)", "(v1,+1)", "(v4,+1)"},
        {"(v1,+1)", "(v4,+1)", "(v5,+1)"},
        {"(v5,+1)", "(v6,+1)"},
        {"(v6,+1)", "(v4,-1)"},
        {"(v4,-1)", "(v1,-1)", "(v3,-1)"},
        {"(v3,-1)", "(v2,+1)"},
        {"(v2,+1)", "(v1,+1)"}};
    auto maxi = t.maximal_traces();
    for (const auto& m : maximal) {
      std::vector<int> want;
      for (const auto& n : m) want.push_back(node(n));
      c.require(std::count(maxi.begin(), maxi.end(), want) == 1,
                "maximal trace missing: " + m.front() + " ... " + m.back());
    }
  }
  c.finish();
}

// 6. Round trips.
static void criterion_6() {
  Criterion c("6 round trips: recover.build, zigzag dictionaries, canonical dedup");
  for (std::string name : {"gamma", "gamma-prime", "gamma-dprime", "lambda2",
                           "lambda3", "lambda4"}) {
    auto p = ensure_signs(load(name));
    if (!presentations_isomorphic(recover_presentation(build_traced_poset(p)), p))
      c.require(false, "recover.build differs on " + name);
  }
  {
    auto g2 = load("gamma-dprime");
    auto t = build_traced_poset(g2);
    for (const auto& x : enumerate_strings(g2, 8, true))
      if (w_st_inverse(g2, t, w_st(g2, x)) != x) {
        c.require(false, "w_st round trip differs on " + print_string(g2, x));
        break;
      }
  }
  for (std::string name : {"gamma", "lambda3"}) {
    auto p = ensure_signs(load(name));
    for (const auto& b : enumerate_bands(p, 10)) {
      if (canonical_band_form(AlgString::of(b.canonical)) != b.canonical)
        c.require(false, "canonical form not idempotent");
      if (canonical_band_form(b.str.inverse()) != b.canonical)
        c.require(false, "canonical form not inversion-invariant");
    }
  }
  c.finish();
}

// 7. Trisection: the two-loop algebra trisects onto the double-triangle
//    presentation, and lifting bands preserves brickness over lambda_2/3.
static void criterion_7() {
  Criterion c("7 trisection: gp23 lands on gamma-prime; lifts preserve bricks");
  c.require(presentations_isomorphic(trisect(load("gp23")), load("gamma-prime")),
            "trisect(gp23) not isomorphic to gamma-prime");
  for (std::string name : {"lambda2", "lambda3"}) {
    auto p = ensure_signs(load(name));
    auto tri = ensure_signs(trisect(p));
    for (const auto& b : enumerate_bands(p, 8))
      if (oracle_is_brick(p, b, 1) != oracle_is_brick(tri, lift_band(p, tri, b), 1))
        c.require(false, name + ": lift changed brick status");
  }
  c.finish();
}

// 8. Endomorphism dimension one exactly characterises bricks.
static void criterion_8() {
  Criterion c("8 hom_dimension(b,b) == 1 iff brick (|b| <= 10)");
  for (std::string name : {"gamma", "gamma-dprime"}) {
    auto p = ensure_signs(load(name));
    auto t = build_traced_poset(p);
    for (const auto& b : enumerate_bands(p, 10))
      if ((hom_dimension(p, b, b) == 1) != is_brick(p, t, b, 1))
        c.require(false, name + ": " + print_string(p, b.str));
  }
  c.finish();
}

// 9. Brick-infiniteness of the three reference algebras.
static void criterion_9() {
  Criterion c("9 brick-infiniteness: lambda_2 yes, A2 no, gamma yes");
  {
    Criterion t1("9a lambda_2");
    auto [inf, wit] = is_brick_infinite(load("lambda2"));
    t1.require(inf && wit.has_value(), "lambda_2 must be brick-infinite");
    if (wit) {
      auto l2 = make_lambda(2);
      t1.require(wit->canonical == band_of(l2, "a1 b1^-1").canonical,
                 "witness should be the alternating double-arrow band");
    }
    t1.finish(10.0);
    if (!t1.ok) c.require(false, "lambda_2 case failed");
  }
  {
    Criterion t2("9b A2");
    auto [inf, wit] = is_brick_infinite(load("a2"));
    t2.require(!inf && !wit.has_value(), "A2 has no bands");
    t2.finish(10.0);
    if (!t2.ok) c.require(false, "A2 case failed");
  }
  {
    Criterion t3("9c gamma");
    auto [inf, wit] = is_brick_infinite(load("gamma"));
    t3.require(inf, "gamma must be brick-infinite");
    t3.finish(10.0);
    if (!t3.ok) c.require(false, "gamma case failed");
  }
  c.finish();
}

// 10. Property suites.
static void criterion_10() {
  Criterion c("10 property suites (periods, bw, crowns, axioms, windows)");

  // period-gcd closure under the Fine-Wilf length hypothesis, on random
  // strings from three algebras (1000 sequences)
  {
    std::mt19937 rng(123457);
    std::vector<Presentation> ps = {ensure_signs(load("gamma")),
                                    ensure_signs(load("gamma-dprime")), make_lambda(3)};
    std::vector<std::vector<AlgString>> pools;
    for (auto& p : ps) pools.push_back(enumerate_strings(p, 12));
    long tested = 0;
    for (int it = 0; it < 1000; ++it) {
      size_t which = rng() % ps.size();
      const auto& pool = pools[which];
      const auto& x = pool[rng() % pool.size()];
      auto ps2 = periods(x.syllables());
      for (int p1 : ps2)
        for (int p2 : ps2) {
          int g = std::gcd(p1, p2);
          if (p1 + p2 - g <= x.length() && !ps2.count(g))
            c.require(false, "period gcd closure failed");
          ++tested;
        }
    }
    c.require(tested > 0, "no period pairs tested");
  }

  // bw multiset preservation + pcw cyclic invariance, exhaustive (<= 8, 3 letters)
  for_each_word(1, 3, 8, [&](const Word& w) {
    Word a = bw_transform(w), b = w;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) c.require(false, "bw multiset broken");
    if (is_primitive_word(w)) {
      Word r = w;
      std::rotate(r.begin(), r.begin() + 1, r.end());
      if (is_pcw(w) != is_pcw(r)) c.require(false, "pcw not rotation-invariant");
    }
  });

  // crowns have even length, exhaustive (<= 8, 3 letters)
  for_each_word(1, 3, 8, [&](const Word& w) {
    if (is_crown(w) && w.size() % 2 != 0) c.require(false, "odd crown");
  });

  // traced-poset axioms on every built poset
  for (std::string name : {"gamma", "gamma-prime", "gamma-prime-loose",
                           "gamma-dprime", "gamma-dprime-loose", "lambda2", "lambda3",
                           "lambda4"}) {
    auto p = ensure_signs(load(name));
    if (!validate_traced_poset(build_traced_poset(p)).ok)
      c.require(false, "axioms fail on " + name);
  }
  for (std::string name : {"gp23", "lambda2", "lambda3"}) {
    auto tri = ensure_signs(trisect(load(name)));
    if (!validate_traced_poset(build_traced_poset(tri)).ok)
      c.require(false, "axioms fail on trisection of " + name);
  }

  // window-doubling stability of the morphism oracle on 200 sampled bands
  {
    std::mt19937 rng(99991);
    std::vector<std::pair<const char*, int>> names = {
        {"gamma", 10}, {"gamma-prime", 10}, {"gamma-dprime", 12}, {"lambda3", 10}};
    std::vector<Presentation> ps;
    std::vector<std::vector<Band>> pools;
    for (auto [n, len] : names) {
      ps.push_back(ensure_signs(load(n)));
      pools.push_back(enumerate_bands(ps.back(), len));
    }
    for (int it = 0; it < 200; ++it) {
      size_t which = rng() % ps.size();
      if (pools[which].empty()) continue;
      const auto& p = ps[which];
      const auto& b = pools[which][rng() % pools[which].size()];
      if (oracle_is_brick(p, b, 1) != oracle_is_brick(p, b, 1, 0, 2))
        c.require(false, "window doubling changed the oracle");
      if (morphism_exists(p, b, b) != morphism_exists(p, b, b, 2 * b.length()))
        c.require(false, "bound doubling changed the oracle");
    }
  }

  c.finish();
}

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  std::printf("%s: %d criterion(s) failed\n", failures == 0 ? "OK" : "NOT OK",
              failures);
  return failures;
}
