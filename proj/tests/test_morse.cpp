#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "assoc/betti.hpp"
#include "assoc/morse.hpp"

using namespace assoc;

using Counts = std::vector<std::uint64_t>;

namespace {

int id_of(const LabeledComplex& X, std::vector<Diagonal> diagonals) {
  const auto id = X.find(Dissection(X.n(), std::move(diagonals)));
  REQUIRE(id);
  return *id;
}

bool has_pair(const MorseMatching& m, int lower, int upper) {
  return std::find(m.pairs.begin(), m.pairs.end(), Cover{lower, upper}) != m.pairs.end();
}

}  // namespace

TEST_CASE("d2_matching: worked partners at n = 6") {
  const auto X = build(6);
  const auto m = d2_matching(X);
  CHECK(has_pair(m, id_of(X, {{1, 3}, {4, 6}}), id_of(X, {{1, 3}, {3, 6}, {4, 6}})));
  CHECK(has_pair(m, id_of(X, {{1, 5}, {2, 4}}), id_of(X, {{1, 4}, {1, 5}, {2, 4}})));
  CHECK(has_pair(m, id_of(X, {{1, 3}, {3, 5}}), id_of(X, {{1, 3}, {1, 5}, {3, 5}})));
  CHECK(m.pairs.size() == 5);
  CHECK(std::is_sorted(m.pairs.begin(), m.pairs.end()));
}

TEST_CASE("d2_matching is empty below n = 6") {
  CHECK(d2_matching(build(4)).pairs.empty());
  CHECK(d2_matching(build(5)).pairs.empty());
}

TEST_CASE("d2_matching is a valid acyclic matching") {
  for (int n = 6; n <= 10; ++n) {
    CAPTURE(n);
    const auto X = build(n);
    const auto m = d2_matching(X);
    for (auto check : {AcyclicityCheck::Alternating, AcyclicityCheck::FullGraph}) {
      const auto v = validate(m, X, check);
      CHECK(v.valid);
      CHECK(v.cycle.empty());
    }
    for (const auto& [lo, hi] : m.pairs) CHECK(X.face(lo).label == X.face(hi).label);
  }
}

TEST_CASE("validate: negative controls") {
  const auto X = build(6);
  const auto good = d2_matching(X);

  // Pairing a face with a cover of a different label.
  MorseMatching wrong_label = good;
  const int lo = id_of(X, {{1, 3}});
  const int hi = id_of(X, {{1, 3}, {1, 4}});
  wrong_label.pairs.push_back({lo, hi});
  std::sort(wrong_label.pairs.begin(), wrong_label.pairs.end());
  CHECK_FALSE(validate(wrong_label, X).valid);

  // A face matched twice.
  MorseMatching twice = good;
  const int tri = id_of(X, {{1, 3}, {1, 5}, {3, 5}});
  twice.pairs.push_back({id_of(X, {{1, 5}, {3, 5}}), tri});
  std::sort(twice.pairs.begin(), twice.pairs.end());
  CHECK_FALSE(validate(twice, X).valid);

  // Not a cover relation.
  MorseMatching skip{{{id_of(X, {{1, 3}}), id_of(X, {{1, 3}, {3, 6}, {4, 6}})}}};
  CHECK_FALSE(validate(skip, X).valid);
}

TEST_CASE("validate: both acyclicity checks agree on every one-pair extension") {
  // Adds each remaining equal-label cover to the rank-two matching on A_7 and
  // compares the pair-graph search with the full oriented Hasse diagram.
  const auto X = build(7);
  const auto base = d2_matching(X);
  std::vector<char> matched(X.size(), 0);
  for (const auto& [lo, hi] : base.pairs) matched[lo] = matched[hi] = 1;
  int tried = 0, cyclic = 0;
  for (const auto& [lo, hi] : X.covers()) {
    if (X.face(lo).dim < 0 || matched[lo] || matched[hi]) continue;
    if (X.face(lo).label != X.face(hi).label) continue;
    MorseMatching m = base;
    m.pairs.push_back({lo, hi});
    std::sort(m.pairs.begin(), m.pairs.end());
    const auto a = validate(m, X, AcyclicityCheck::Alternating);
    const auto f = validate(m, X, AcyclicityCheck::FullGraph);
    CHECK(a.valid == f.valid);
    CHECK(a.cycle.empty() == f.cycle.empty());
    ++tried;
    if (!f.valid) ++cyclic;
  }
  CHECK(tried > 0);
  CHECK(cyclic == 0);
}

TEST_CASE("validate: a gradient cycle on four equal-label pairs at n = 8") {
  // All faces carry the label {1,3,5,7}; the pairs rotate around the square
  // formed by the diagonals 13, 35, 57, 17 together with 15.
  const auto X = build(8);
  MorseMatching m{{{id_of(X, {{1, 3}, {1, 5}, {1, 7}}), id_of(X, {{1, 3}, {1, 5}, {1, 7}, {5, 7}})},
                   {id_of(X, {{1, 3}, {1, 7}, {5, 7}}), id_of(X, {{1, 3}, {1, 7}, {3, 5}, {5, 7}})},
                   {id_of(X, {{1, 7}, {3, 5}, {5, 7}}), id_of(X, {{1, 5}, {1, 7}, {3, 5}, {5, 7}})},
                   {id_of(X, {{1, 5}, {1, 7}, {3, 5}}), id_of(X, {{1, 3}, {1, 5}, {1, 7}, {3, 5}})}}};
  std::sort(m.pairs.begin(), m.pairs.end());
  for (auto check : {AcyclicityCheck::Alternating, AcyclicityCheck::FullGraph}) {
    const auto v = validate(m, X, check);
    CHECK_FALSE(v.valid);
    CHECK(v.cycle.size() == 8);
  }
  m.pairs.pop_back();
  CHECK(validate(m, X).valid);
  CHECK(validate(m, X, AcyclicityCheck::FullGraph).valid);
}

TEST_CASE("validate: empty matching") {
  for (int n = 4; n <= 7; ++n) {
    const auto X = build(n);
    CHECK(validate(MorseMatching{}, X).valid);
    CHECK(validate(MorseMatching{}, X, AcyclicityCheck::FullGraph).valid);
    auto cc = critical_cells(MorseMatching{}, X);
    auto fv = X.f_vector();
    CHECK(cc == Counts(fv.begin() + 1, fv.end()));
  }
}

TEST_CASE("critical cells of the rank-two matching") {
  CHECK(critical_cells(d2_matching(build(6)), build(6)) == Counts{9, 16, 9, 1});
  const auto X7 = build(7);
  const auto c7 = critical_cells(d2_matching(X7), X7);
  CHECK(c7[0] == 14);
  CHECK(c7[1] == 35);
  for (int n = 6; n <= 9; ++n) {
    const auto X = build(n);
    const auto c = critical_cells(d2_matching(X), X);
    CHECK(c[0] == betti_closed_form(n, 1));
    CHECK(c[1] == betti_closed_form(n, 2));
  }
}

TEST_CASE("count formulas against enumeration") {
  const auto c6 = count_formulas(6);
  CHECK(c6.proper_d2 == 18);
  CHECK(c6.inscribed_triangles == 2);
  CHECK(c6.critical_edges == 16);
  const auto c7 = count_formulas(7);
  CHECK(c7.proper_d2 == 42);
  CHECK(c7.inscribed_triangles == 7);
  CHECK(c7.critical_edges == 35);
  CHECK(count_formulas(8).critical_edges == 64);
  for (int n = 6; n <= 12; ++n) {
    CAPTURE(n);
    const auto f = count_formulas(n);
    const auto e = count_by_enumeration(n);
    CHECK(f.proper_d2 == e.proper_d2);
    CHECK(f.inscribed_triangles == e.inscribed_triangles);
    CHECK(f.critical_edges == e.critical_edges);
    CHECK(f.critical_edges == betti_closed_form(n, 2));
  }
  CHECK_THROWS_AS(count_formulas(5), std::invalid_argument);
}

TEST_CASE("n = 7 extension counts") {
  const auto c = n7_extension_counts();
  CHECK(c.superproper_d2 == 14);
  CHECK(c.subproper_d3 == 7);
  CHECK(c.superproper_d3 == 14);
  CHECK(c.subproper_d4 == 14);
  CHECK(c.edges_after == 35);
  CHECK(c.two_faces_after == 35);
  CHECK(c.three_faces_after == 14);
}

TEST_CASE("greedy_extend") {
  const auto X5 = build(5);
  CHECK(greedy_extend(MorseMatching{}, X5).pairs.empty());

  const auto X6 = build(6);
  const auto base = d2_matching(X6);
  const auto ext = greedy_extend(base, X6);
  CHECK(ext.pairs == base.pairs);
  CHECK(critical_cells(ext, X6) == Counts{9, 16, 9, 1});

  for (int n = 7; n <= 8; ++n) {
    const auto X = build(n);
    const auto m = greedy_extend(d2_matching(X), X);
    CHECK(validate(m, X).valid);
    CHECK(validate(m, X, AcyclicityCheck::FullGraph).valid);
    for (const auto& [lo, hi] : m.pairs) CHECK(X.face(lo).dim >= 0);
  }

  MorseMatching broken{{{1, 1}}};
  CHECK_THROWS_AS(greedy_extend(broken, X6), std::invalid_argument);
}
