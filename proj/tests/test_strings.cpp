#include <random>

#include "doctest.h"
#include "test_helpers.hpp"

using namespace bandbrick;
using bbtest::band_of;
using bbtest::load_presentation;

TEST_CASE("make_string accepts the running band and rejects bad input") {
  auto g = ensure_signs(load_presentation("gamma"));
  auto x = parse_string_tokens(g, "b e c d^-1 e a^-1");
  CHECK(x.length() == 6);
  CHECK(x.source(g) == g.quiver.vertex_index("v1"));
  CHECK(x.target(g) == g.quiver.vertex_index("v1"));

  CHECK_THROWS_WITH_AS(parse_string_tokens(g, "a c"), doctest::Contains("relation"),
                       error);
  CHECK_THROWS_WITH_AS(parse_string_tokens(g, "a^-1 a"),
                       doctest::Contains("backtrack"), error);
  CHECK_THROWS_WITH_AS(parse_string_tokens(g, "a b"),
                       doctest::Contains("non-composable"), error);

  auto t = parse_string_tokens(g, "1(v1,+1)");
  CHECK(t.is_trivial());
  CHECK(t.sigma(g) == -1);
  CHECK(t.eps(g) == +1);
}

TEST_CASE("concat rules, including trivial absorption") {
  auto g = ensure_signs(load_presentation("gamma"));
  auto x = parse_string_tokens(g, "e a^-1");
  auto left_unit = AlgString::trivial(x.target(g), x.eps(g));
  CHECK(concat(g, left_unit, x) == x);
  auto right_unit = AlgString::trivial(x.source(g), -x.sigma(g));
  CHECK(concat(g, x, right_unit) == x);

  auto e = parse_string_tokens(g, "e");
  auto ainv = parse_string_tokens(g, "a^-1");
  CHECK(concat(g, e, ainv) == x);
  auto a = parse_string_tokens(g, "a");
  CHECK_THROWS_AS(concat(g, ainv, a), error);
  CHECK_THROWS_AS(concat(g, AlgString::trivial(x.target(g), -x.eps(g)), x), error);
}

TEST_CASE("standard partition of the pinned examples") {
  auto l3 = make_lambda(3);
  auto b = parse_string_tokens(l3, "a1 a2 b2^-1 a2 b2^-1 b1^-1");
  auto parts = standard_partition(l3, b);
  REQUIRE(parts.size() == 4);
  CHECK(print_string(l3, parts[0]) == "b2^-1 b1^-1");
  CHECK(print_string(l3, parts[1]) == "a2");
  CHECK(print_string(l3, parts[2]) == "b2^-1");
  CHECK(print_string(l3, parts[3]) == "a1 a2");

  auto g = ensure_signs(load_presentation("gamma"));
  auto gb = parse_string_tokens(g, "b e c d^-1 e a^-1");
  auto gparts = standard_partition(g, gb);
  REQUIRE(gparts.size() == 4);
  CHECK(print_string(g, gparts[0]) == "a^-1");
  CHECK(print_string(g, gparts[1]) == "e");
  CHECK(print_string(g, gparts[2]) == "d^-1");
  CHECK(print_string(g, gparts[3]) == "b e c");

  auto single = parse_string_tokens(g, "e");
  CHECK(standard_partition(g, single).size() == 1);
  CHECK_THROWS_AS(standard_partition(g, AlgString::trivial(0, 1)), error);
}

TEST_CASE("standard partition alternates and concatenates back") {
  auto g2 = load_presentation("gamma-dprime");
  for (const auto& x : enumerate_strings(g2, 6)) {
    auto parts = standard_partition(g2, x);
    AlgString glued = parts[0];
    for (size_t i = 1; i < parts.size(); ++i) {
      CHECK(parts[i].delta() == -parts[i - 1].delta());
      CHECK(parts[i].delta() != 0);
      glued = concat(g2, parts[i], glued);
    }
    CHECK(glued == x);
  }
}

TEST_CASE("periods: pinned values and the conditioned gcd lemma") {
  auto l2 = make_lambda(2);
  auto x3 = parse_string_tokens(l2, "a1 b1^-1 a1 b1^-1 a1 b1^-1");
  auto per = periods(x3.syllables());
  CHECK(per.count(2));
  CHECK(per.count(4));
  CHECK(per.count(6));
  CHECK(per.count((int)x3.length()));

  // aba-shaped string: periods {2,3} but 1 = gcd(2,3) is not a period; the
  // gcd lemma needs p1 + p2 - gcd <= |x|.
  auto aba = parse_string_tokens(l2, "a1 b1^-1 a1");
  auto pa = periods(aba.syllables());
  CHECK(pa == std::set<int>{2, 3});

  std::mt19937 rng(20240811);
  auto g2 = load_presentation("gamma-dprime");
  auto pool = enumerate_strings(g2, 10);
  int checked = 0;
  for (int it = 0; it < 400; ++it) {
    const auto& x = pool[rng() % pool.size()];
    auto ps = periods(x.syllables());
    for (int p1 : ps)
      for (int p2 : ps) {
        int gg = std::gcd(p1, p2);
        if (p1 + p2 - gg <= x.length()) {
          CHECK(ps.count(gg));
          ++checked;
        }
      }
  }
  CHECK(checked > 0);
}

TEST_CASE("primitivity of cyclic strings") {
  auto l2 = make_lambda(2);
  auto sq = parse_string_tokens(l2, "a1 b1^-1 a1 b1^-1");
  CHECK_FALSE(is_primitive(l2, sq));
  auto g = ensure_signs(load_presentation("gamma"));
  CHECK(is_primitive(g, parse_string_tokens(g, "b e c d^-1 e a^-1")));
  auto gp = solve_signs(load_presentation("gp23"));
  CHECK(is_primitive(gp, parse_string_tokens(gp, "a")));  // length-1 cyclic
  CHECK_THROWS_AS(is_primitive(g, parse_string_tokens(g, "e")), error);  // not cyclic
}

TEST_CASE("make_band: the four axioms are reported separately") {
  auto g = ensure_signs(load_presentation("gamma"));
  CHECK_NOTHROW(band_of(g, "b e c d^-1 e a^-1"));
  auto l2 = make_lambda(2);
  CHECK_NOTHROW(band_of(l2, "a1 b1^-1"));

  CHECK_THROWS_WITH_AS(band_of(g, "c d^-1"), doctest::Contains("not cyclic"), error);
  CHECK_THROWS_WITH_AS(band_of(g, "b e a^-1 b e a^-1"),
                       doctest::Contains("primitive"), error);
  auto g1 = ensure_signs(load_presentation("gamma-prime"));
  CHECK_THROWS_WITH_AS(band_of(g1, "a1^-1 a2 a3^-1"),  // cyclic but ends inverse
                       doctest::Contains("last syllable"), error);
  CHECK_THROWS_WITH_AS(band_of(g1, "a3 a2^-1 a1"), doctest::Contains("first syllable"),
                       error);
  CHECK_THROWS_AS(make_band(g, AlgString::trivial(0, 1)), error);
}

TEST_CASE("make_band validates powers of the candidate") {
  auto gp = solve_signs(load_presentation("gp23"));
  CHECK_NOTHROW(parse_string_tokens(gp, "b b"));  // bb is a string, b^3 is not
  CHECK_THROWS_WITH_AS(band_of(gp, "a b^-1 a b^-1 a b^-1"),
                       doctest::Contains("primitive"), error);
  CHECK_NOTHROW(band_of(gp, "a b^-1"));
  // deeper audit powers do not change the verdict
  CHECK_NOTHROW(make_band(gp, parse_string_tokens(gp, "a b^-1"), 6));
}

TEST_CASE("cyclic permutations carry one-based indices and speciality") {
  auto l2 = make_lambda(2);
  auto b = band_of(l2, "a1 b1^-1");
  auto rots = cyclic_permutations(l2, b);
  REQUIRE(rots.size() == 2);
  CHECK(rots[0].index == 1);
  CHECK(rots[0].str == b.str);
  for (const auto& r : rots) CHECK(r.special);  // both positions are sign changes

  auto g = ensure_signs(load_presentation("gamma"));
  auto gb = band_of(g, "b e c d^-1 e a^-1");
  auto grots = cyclic_permutations(g, gb);
  REQUIRE(grots.size() == 6);
  int special = 0;
  for (const auto& r : grots) special += r.special;
  CHECK(special == (int)standard_partition(g, gb.str).size());
}

TEST_CASE("inverse is an involution that flips delta") {
  auto g2 = load_presentation("gamma-dprime");
  for (const auto& x : enumerate_strings(g2, 5)) {
    CHECK(x.inverse().inverse() == x);
    CHECK(x.inverse().length() == x.length());
    if (x.delta() != 0) CHECK(x.inverse().delta() == -x.delta());
  }
}

TEST_CASE("enumerate_bands: pinned counts, dedup, deterministic order") {
  auto a2 = solve_signs(load_presentation("a2"));
  CHECK(enumerate_bands(a2, 8).empty());

  auto l2 = make_lambda(2);
  auto bl2 = enumerate_bands(l2, 2);
  REQUIRE(bl2.size() == 1);
  CHECK(bl2[0].canonical == band_of(l2, "a1 b1^-1").canonical);
  CHECK(enumerate_bands(l2, 12).size() == 1);  // nothing longer is primitive

  auto g = ensure_signs(load_presentation("gamma"));
  auto bands = enumerate_bands(g, 6);
  bool found = false;
  auto target = band_of(g, "b e c d^-1 e a^-1");
  for (const auto& b : bands) found = found || b.canonical == target.canonical;
  CHECK(found);

  std::set<std::vector<Syllable>> canon;
  for (const auto& b : bands) {
    CHECK_NOTHROW(make_band(g, b.str));
    CHECK(canon.insert(b.canonical).second);  // no two share a canonical form
    // canonical form is a special cyclic permutation of b or b^-1, in band form
    CHECK(b.canonical.front().inv);
    CHECK_FALSE(b.canonical.back().inv);
    bool is_rot = false;
    for (int i = 1; i <= b.length(); ++i) {
      is_rot = is_rot || rotate_walk(b.str.syllables(), i) == b.canonical;
      is_rot = is_rot || rotate_walk(b.str.inverse().syllables(), i) == b.canonical;
    }
    CHECK(is_rot);
  }

  // dedup is idempotent: canonicalizing a rotation lands on the same key
  for (const auto& b : bands)
    for (const auto& rot : cyclic_permutations(g, b)) {
      if (!rot.special) continue;
      CHECK(canonical_band_form(rot.str) == b.canonical);
      CHECK(canonical_band_form(rot.str.inverse()) == b.canonical);
    }

  for (size_t i = 0; i + 1 < bands.size(); ++i) {
    CHECK(bands[i].length() <= bands[i + 1].length());
    if (bands[i].length() == bands[i + 1].length())
      CHECK(bands[i].canonical < bands[i + 1].canonical);
  }
}
