#include <doctest.h>

#include <stdexcept>

#include "assoc/homology.hpp"

using namespace assoc;

namespace {

// Dense product of two boundary matrices with integer entries.
std::vector<std::vector<long>> multiply(const BoundaryMatrix& lower, const BoundaryMatrix& upper) {
  const auto a = lower.dense_rows();
  const auto b = upper.dense_rows();
  std::vector<std::vector<long>> out(lower.rows, std::vector<long>(upper.cols, 0));
  for (int i = 0; i < lower.rows; ++i)
    for (int k = 0; k < lower.cols; ++k)
      for (int j = 0; j < upper.cols; ++j) out[i][j] += static_cast<long>(a[i][k]) * b[k][j];
  return out;
}

SimplicialComplex cycle_graph(int n) {
  std::vector<std::vector<int>> edges;
  for (int v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
  return SimplicialComplex::from_faces(edges);
}

}  // namespace

TEST_CASE("field names") {
  CHECK(parse_field("gf2") == Field::GF2);
  CHECK(parse_field("rational") == Field::Rational);
  CHECK_THROWS_AS(parse_field("gf3"), std::invalid_argument);
}

TEST_CASE("pentagon: rank of the edge boundary over Q") {
  const auto X = boundary_complex(build(5));
  const auto C = chain_complex(X, Field::Rational);
  CHECK(eliminate(C.boundary(1), Field::Rational).rank == 4);
  CHECK(reduced_betti_numbers(C).at(1) == 1);
}

TEST_CASE("interior cell row over GF(2) is all ones") {
  for (int n = 4; n <= 8; ++n) {
    const auto X = build(n);
    const auto C = chain_complex(X, Field::GF2);
    const auto& top = C.boundary(n - 3);
    REQUIRE(top.cols == 1);
    CHECK(top.columns[0].size() == f_formula(n, n - 3));
    for (auto [r, v] : top.columns[0]) CHECK(v == 1);
  }
}

TEST_CASE("interior orientation is coherent: entries are +-1") {
  for (int n = 4; n <= 9; ++n) {
    const auto coeff = interior_orientation(build(n));
    CHECK(coeff.size() == f_formula(n, n - 3));
    for (int c : coeff) CHECK((c == 1 || c == -1));
  }
}

TEST_CASE("boundary of boundary vanishes by direct multiplication, n = 6") {
  const auto X = build(6);
  for (Field field : {Field::GF2, Field::Rational}) {
    const auto C = chain_complex(X, field);
    for (int k = 1; k <= C.max_dim(); ++k) {
      const auto prod = multiply(C.boundary(k - 1), C.boundary(k));
      for (const auto& row : prod)
        for (long v : row) CHECK((field == Field::GF2 ? v % 2 : v) == 0);
    }
  }
}

TEST_CASE("ChainComplex rejects a non-complex") {
  BoundaryMatrix d0{1, 2, {{{0, 1}}, {{0, 1}}}};
  BoundaryMatrix d1{2, 1, {{{0, 1}, {1, 1}}}};  // d0 d1 = 2 over Q, 0 over GF(2)
  CHECK_THROWS_AS(ChainComplex(Field::Rational, {d0, d1}), std::logic_error);
  CHECK_NOTHROW(ChainComplex(Field::GF2, {d0, d1}));
  BoundaryMatrix bad{3, 1, {{{0, 1}}}};
  CHECK_THROWS_AS(ChainComplex(Field::GF2, {d0, bad}), std::logic_error);
}

TEST_CASE("reduced homology of basic spaces") {
  for (Field field : {Field::GF2, Field::Rational}) {
    const auto sphere = reduced_betti_numbers(boundary_complex(build(6)), field);
    CHECK(sphere.at(-1) == 0);
    CHECK(sphere.at(0) == 0);
    CHECK(sphere.at(1) == 0);
    CHECK(sphere.at(2) == 1);

    const auto point = reduced_betti_numbers(SimplicialComplex::from_faces({{7}}), field);
    CHECK(point.all_zero());

    const auto circle = reduced_betti_numbers(cycle_graph(6), field);
    CHECK(circle.at(0) == 0);
    CHECK(circle.at(1) == 1);

    const auto empty = reduced_betti_numbers(SimplicialComplex{}, field);
    CHECK(empty.at(-1) == 1);

    const auto two_points = reduced_betti_numbers(SimplicialComplex::from_faces({{0}, {1}}), field);
    CHECK(two_points.at(0) == 1);
  }
}

TEST_CASE("boundary spheres of A_n are (n-4)-spheres") {
  for (int n = 4; n <= 9; ++n)
    for (Field field : {Field::GF2, Field::Rational}) {
      const auto h = reduced_betti_numbers(boundary_complex(build(n)), field);
      for (int k = -1; k <= n - 4; ++k) CHECK(h.at(k) == (k == n - 4 ? 1u : 0u));
    }
}

TEST_CASE("torsion is visible over GF(2) but not over Q") {
  // Minimal triangulation of the real projective plane.
  const std::vector<std::vector<int>> rp2 = {{1, 2, 4}, {2, 3, 4}, {3, 1, 5}, {1, 4, 5}, {4, 6, 5},
                                             {4, 3, 6}, {3, 2, 5}, {2, 6, 5}, {2, 1, 6}, {1, 3, 6}};
  const auto X = SimplicialComplex::from_faces(rp2);
  const auto q = reduced_betti_numbers(X, Field::Rational);
  const auto f2 = reduced_betti_numbers(X, Field::GF2);
  CHECK(q.all_zero());
  CHECK(f2.at(1) == 1);
  CHECK(f2.at(2) == 1);
}

TEST_CASE("is_acyclic") {
  const auto A6 = build(6);
  for (Field field : {Field::GF2, Field::Rational}) {
    const auto full = is_acyclic(A6, field);
    CHECK(full.acyclic);
    CHECK_FALSE(full.empty);

    const auto path = is_acyclic(restrict(A6, MonomialLabel::of({1, 2, 3, 4})), field);
    CHECK(path.acyclic);

    const auto sphere = is_acyclic(boundary_complex(A6), field);
    CHECK_FALSE(sphere.acyclic);
    CHECK_FALSE(sphere.empty);

    const auto nothing = is_acyclic(restrict(A6, MonomialLabel::of({1, 2})), field);
    CHECK_FALSE(nothing.acyclic);
    CHECK(nothing.empty);
  }
}

TEST_CASE("elimination: rank + nullity = columns") {
  const auto X = build(7);
  for (Field field : {Field::GF2, Field::Rational}) {
    const auto C = chain_complex(X, field);
    for (int k = 0; k <= C.max_dim(); ++k) {
      const auto info = eliminate(C.boundary(k), field);
      CHECK(info.rank + info.nullity == C.boundary(k).cols);
    }
  }
}

TEST_CASE("dense export") {
  BoundaryMatrix m{2, 2, {{{1, -1}}, {{0, 1}}}};
  CHECK(m.dense_rows() == std::vector<std::vector<int>>{{0, 1}, {-1, 0}});
}
