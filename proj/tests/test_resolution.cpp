#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "assoc/resolution.hpp"

using namespace assoc;

TEST_CASE("verify_supports_resolution: small n") {
  const auto r5 = verify_supports_resolution(5, Field::GF2);
  CHECK(r5.passed());
  CHECK(r5.checked == 32);
  const auto r6 = verify_supports_resolution(6, Field::Rational, {.threads = 2});
  CHECK(r6.passed());
  CHECK(r6.checked == 64);
  CHECK(r6.empty + r6.acyclic == r6.checked);
}

TEST_CASE("verify_supports_resolution: range") {
  CHECK_THROWS_AS(verify_supports_resolution(3, Field::GF2), std::invalid_argument);
  CHECK_THROWS_AS(verify_supports_resolution(9, Field::GF2), std::invalid_argument);
  CHECK_THROWS_AS(verify_supports_resolution(13, Field::GF2, {.max_n = 20}),
                  std::invalid_argument);
}

TEST_CASE("sigma = {1,2} gives an empty restriction") {
  const auto X = build(6);
  const auto v = is_acyclic(restrict(X, MonomialLabel::of({1, 2})), Field::GF2);
  CHECK(v.empty);
}

TEST_CASE("cone_witness") {
  CHECK(cone_witness(6, MonomialLabel::of({1, 2, 3, 4})) == Diagonal{1, 4});
  CHECK(cone_witness(6, MonomialLabel::of({1, 3})) == Diagonal{1, 3});
  CHECK_FALSE(cone_witness(6, MonomialLabel::of({2, 3})));
  CHECK_THROWS_AS(cone_witness(6, MonomialLabel::of({2})), std::invalid_argument);
  CHECK_THROWS_AS(cone_witness(6, MonomialLabel::full(6)), std::invalid_argument);

  const auto X = build(6);
  const auto R = restrict(X, MonomialLabel::of({1, 2, 3, 4}));
  CHECK(is_cone_apex(R, {1, 4}));
  CHECK_FALSE(is_cone_apex(R, {1, 3}));
  const auto single = restrict(X, MonomialLabel::of({1, 3}));
  CHECK(single.size() == 2);
  CHECK(is_cone_apex(single, {1, 3}));
}

TEST_CASE("cone apex lies in every facet of every restriction") {
  for (int n = 4; n <= 8; ++n) {
    const auto X = build(n);
    for (std::uint32_t m = 0; m < (1u << n); ++m) {
      const MonomialLabel sigma(m << 1);
      if (sigma.size() < 2 || sigma.size() == n) continue;
      const auto R = restrict(X, sigma);
      const auto apex = cone_witness(n, sigma);
      CHECK(apex.has_value() == R.has_nonempty_face());
      if (apex) CHECK(is_cone_apex(R, *apex));
    }
  }
}

TEST_CASE("minimality_witnesses") {
  CHECK(minimality_witnesses(build(4)).empty());
  CHECK(minimality_witnesses(build(5)).empty());

  const auto X = build(6);
  const auto w = minimality_witnesses(X);
  CHECK_FALSE(w.empty());
  const auto lo = X.find(Dissection(6, {{1, 3}, {4, 6}}));
  const auto hi = X.find(Dissection(6, {{1, 3}, {3, 6}, {4, 6}}));
  REQUIRE(lo);
  REQUIRE(hi);
  CHECK(std::find(w.begin(), w.end(), Cover{*lo, *hi}) != w.end());
  for (const auto& [a, b] : w) CHECK(X.face(a).label == X.face(b).label);

  for (int n = 7; n <= 9; ++n) CHECK_FALSE(minimality_witnesses(build(n)).empty());
}

TEST_CASE("equal labels on a non-cover pair imply an equal-label cover") {
  const auto X = build(7);
  const auto w = minimality_witnesses(X);
  std::vector<char> lower_end(X.size(), 0), upper_end(X.size(), 0);
  for (const auto& [a, b] : w) lower_end[a] = upper_end[b] = 1;
  for (const auto& f : X.faces()) {
    if (f.dim < 0 || f.interior) continue;
    for (const auto& g : X.faces()) {
      if (g.dim <= f.dim || g.interior || g.label != f.label) continue;
      bool subset = true;
      for (const auto& d : f.dissection.diagonals()) subset = subset && g.dissection.contains(d);
      if (subset) CHECK((lower_end[f.id] && upper_end[g.id]));
    }
  }
}
