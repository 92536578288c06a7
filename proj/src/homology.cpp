#include "assoc/homology.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <stdexcept>

namespace assoc {

const char* to_string(Field field) {
  return field == Field::GF2 ? "gf2" : "rational";
}

Field parse_field(const std::string& name) {
  if (name == "gf2" || name == "GF2") return Field::GF2;
  if (name == "rational" || name == "Q" || name == "q") return Field::Rational;
  throw std::invalid_argument("unknown field '" + name + "' (expected gf2 or rational)");
}

std::vector<std::vector<int>> BoundaryMatrix::dense_rows() const {
  std::vector<std::vector<int>> out(rows, std::vector<int>(cols, 0));
  for (int c = 0; c < cols; ++c)
    for (auto [r, v] : columns[c]) out[r][c] = v;
  return out;
}

SimplicialComplex SimplicialComplex::from_faces(const std::vector<std::vector<int>>& faces) {
  std::vector<std::vector<int>> all;
  for (auto face : faces) {
    std::sort(face.begin(), face.end());
    face.erase(std::unique(face.begin(), face.end()), face.end());
    const int k = static_cast<int>(face.size());
    if (k > 20) throw std::invalid_argument("simplex too large");
    for (std::uint32_t sub = 0; sub < (1u << k); ++sub) {
      std::vector<int> s;
      for (int i = 0; i < k; ++i)
        if (sub >> i & 1u) s.push_back(face[i]);
      all.push_back(std::move(s));
    }
  }
  all.emplace_back();
  std::sort(all.begin(), all.end(), [](const auto& x, const auto& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  all.erase(std::unique(all.begin(), all.end()), all.end());
  SimplicialComplex out;
  out.simplices_ = std::move(all);
  return out;
}

namespace {

int reduce(int value, Field field) {
  if (field == Field::GF2) return ((value % 2) + 2) % 2;
  return value;
}

// Drops zero entries and reduces coefficients into the field.
void normalize(BoundaryMatrix& m, Field field) {
  for (auto& col : m.columns) {
    std::sort(col.begin(), col.end());
    for (auto& e : col) e.second = reduce(e.second, field);
    std::erase_if(col, [](const auto& e) { return e.second == 0; });
  }
}

void check_composition(const BoundaryMatrix& lower, const BoundaryMatrix& upper, Field field,
                       int dim) {
  for (int j = 0; j < upper.cols; ++j) {
    std::map<int, long> acc;
    for (auto [i, c] : upper.columns[j])
      for (auto [r, v] : lower.columns[i]) acc[r] += static_cast<long>(c) * v;
    for (auto [r, v] : acc) {
      const long residue = field == Field::GF2 ? v % 2 : v;
      if (residue != 0)
        throw std::logic_error("boundary of boundary is nonzero in dimension " +
                               std::to_string(dim));
    }
  }
}

RankInfo eliminate_gf2(const BoundaryMatrix& matrix) {
  std::vector<int> pivot(matrix.rows, -1);
  std::vector<std::vector<int>> reduced(matrix.cols);
  RankInfo info;
  std::vector<int> scratch;
  for (int c = 0; c < matrix.cols; ++c) {
    std::vector<int> col;
    for (auto [r, v] : matrix.columns[c])
      if (v % 2 != 0) col.push_back(r);
    while (!col.empty()) {
      const int p = pivot[col.back()];
      if (p < 0) break;
      scratch.clear();
      std::set_symmetric_difference(col.begin(), col.end(), reduced[p].begin(),
                                    reduced[p].end(), std::back_inserter(scratch));
      col.swap(scratch);
    }
    if (col.empty()) {
      ++info.nullity;
    } else {
      pivot[col.back()] = c;
      reduced[c] = std::move(col);
      ++info.rank;
    }
  }
  return info;
}

using RationalColumn = std::vector<std::pair<int, mpq_class>>;

RankInfo eliminate_rational(const BoundaryMatrix& matrix) {
  std::vector<int> pivot(matrix.rows, -1);
  std::vector<RationalColumn> reduced(matrix.cols);
  RankInfo info;
  RationalColumn scratch;
  for (int c = 0; c < matrix.cols; ++c) {
    RationalColumn col;
    for (auto [r, v] : matrix.columns[c])
      if (v != 0) col.emplace_back(r, mpq_class(v));
    while (!col.empty()) {
      const int p = pivot[col.back().first];
      if (p < 0) break;
      // Stored pivot columns have leading coefficient 1.
      const mpq_class factor = col.back().second;
      const auto& piv = reduced[p];
      scratch.clear();
      std::size_t a = 0, b = 0;
      while (a < col.size() || b < piv.size()) {
        if (b == piv.size() || (a < col.size() && col[a].first < piv[b].first)) {
          scratch.push_back(std::move(col[a++]));
        } else if (a == col.size() || piv[b].first < col[a].first) {
          scratch.emplace_back(piv[b].first, -factor * piv[b].second);
          ++b;
        } else {
          mpq_class v = col[a].second - factor * piv[b].second;
          if (sgn(v) != 0) scratch.emplace_back(col[a].first, std::move(v));
          ++a;
          ++b;
        }
      }
      col.swap(scratch);
    }
    if (col.empty()) {
      ++info.nullity;
    } else {
      const mpq_class lead = col.back().second;
      for (auto& e : col) e.second /= lead;
      pivot[col.back().first] = c;
      reduced[c] = std::move(col);
      ++info.rank;
    }
  }
  return info;
}

}  // namespace

ChainComplex::ChainComplex(Field field, std::vector<BoundaryMatrix> boundaries)
    : field_(field), boundaries_(std::move(boundaries)) {
  if (boundaries_.empty()) throw std::logic_error("chain complex needs at least d_0");
  for (std::size_t k = 0; k < boundaries_.size(); ++k) {
    auto& m = boundaries_[k];
    if (static_cast<int>(m.columns.size()) != m.cols)
      throw std::logic_error("boundary matrix column count mismatch");
    if (k > 0 && m.rows != boundaries_[k - 1].cols)
      throw std::logic_error("boundary matrix shapes do not compose");
    for (const auto& col : m.columns)
      for (auto [r, v] : col)
        if (r < 0 || r >= m.rows) throw std::logic_error("boundary entry out of range");
    normalize(m, field_);
  }
  for (std::size_t k = 1; k < boundaries_.size(); ++k)
    check_composition(boundaries_[k - 1], boundaries_[k], field_, static_cast<int>(k));
}

int ChainComplex::cells(int dim) const {
  if (dim == -1) return boundaries_.front().rows;
  if (dim < -1 || dim > max_dim()) return 0;
  return boundaries_[dim].cols;
}

RankInfo eliminate(const BoundaryMatrix& matrix, Field field) {
  RankInfo info =
      field == Field::GF2 ? eliminate_gf2(matrix) : eliminate_rational(matrix);
  if (info.rank + info.nullity != matrix.cols)
    throw std::logic_error("elimination lost columns");
  if (info.rank > matrix.rows) throw std::logic_error("rank exceeds row count");
  return info;
}

std::vector<int> interior_orientation(const LabeledComplex& complex) {
  const auto interior = complex.interior_id();
  if (!interior) throw std::logic_error("complex has no interior cell");
  const auto facets = complex.lower_covers(*interior);
  const int count = static_cast<int>(facets.size());
  if (count == 0) throw std::logic_error("interior cell has an empty boundary");

  std::map<int, int> local;
  for (int i = 0; i < count; ++i) local[facets[i]] = i;

  // ridge id -> [(facet index, sign of the ridge in the facet boundary)]
  std::map<int, std::vector<std::pair<int, int>>> ridges;
  for (int i = 0; i < count; ++i) {
    const int f = facets[i];
    const std::uint64_t mask = complex.diagonal_mask(f);
    for (int r : complex.lower_covers(f)) {
      const std::uint64_t removed = mask & ~complex.diagonal_mask(r);
      const int position = std::popcount(mask & (removed - 1));
      ridges[r].emplace_back(i, position % 2 == 0 ? 1 : -1);
    }
  }

  std::vector<std::vector<std::pair<int, int>>> adjacency(count);  // (neighbor, factor)
  for (const auto& [ridge, incident] : ridges) {
    if (incident.size() != 2)
      throw std::logic_error("ridge " + std::to_string(ridge) + " lies in " +
                             std::to_string(incident.size()) +
                             " facets; boundary is not a pseudomanifold");
    const auto [t, st] = incident[0];
    const auto [u, su] = incident[1];
    // c_t * st + c_u * su = 0  =>  c_u = -c_t * st * su
    adjacency[t].emplace_back(u, -st * su);
    adjacency[u].emplace_back(t, -st * su);
  }

  std::vector<int> coeff(count, 0);
  coeff[0] = 1;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    const int t = queue.front();
    queue.pop_front();
    for (auto [u, factor] : adjacency[t]) {
      const int want = coeff[t] * factor;
      if (coeff[u] == 0) {
        coeff[u] = want;
        queue.push_back(u);
      } else if (coeff[u] != want) {
        throw std::logic_error("boundary sphere is not orientable");
      }
    }
  }
  if (std::find(coeff.begin(), coeff.end(), 0) != coeff.end())
    throw std::logic_error("facet adjacency graph is disconnected");
  return coeff;
}

ChainComplex chain_complex(const LabeledComplex& complex, Field field) {
  const int top = std::max(complex.top_dimension(), 0);
  std::vector<int> position(complex.size());
  std::vector<int> count(top + 2, 0);
  for (const auto& f : complex.faces()) position[f.id] = count[f.dim + 1]++;

  std::vector<BoundaryMatrix> boundaries(top + 1);
  for (int k = 0; k <= top; ++k) {
    boundaries[k].rows = count[k];
    boundaries[k].cols = count[k + 1];
    boundaries[k].columns.resize(count[k + 1]);
  }

  for (const auto& f : complex.faces()) {
    if (f.dim < 0 || f.interior) continue;
    auto& col = boundaries[f.dim].columns[position[f.id]];
    const std::uint64_t mask = complex.diagonal_mask(f.id);
    for (int g : complex.lower_covers(f.id)) {
      const std::uint64_t removed = mask & ~complex.diagonal_mask(g);
      const int i = std::popcount(mask & (removed - 1));
      col.emplace_back(position[g], i % 2 == 0 ? 1 : -1);
    }
  }
  if (const auto interior = complex.interior_id()) {
    const auto& face = complex.face(*interior);
    const auto coeff = interior_orientation(complex);
    const auto facets = complex.lower_covers(*interior);
    auto& col = boundaries[face.dim].columns[position[*interior]];
    for (std::size_t i = 0; i < facets.size(); ++i) col.emplace_back(position[facets[i]], coeff[i]);
  }
  return ChainComplex(field, std::move(boundaries));
}

ChainComplex chain_complex(const SimplicialComplex& complex, Field field) {
  const auto& simplices = complex.simplices();
  int top = 0;
  for (const auto& s : simplices) top = std::max(top, static_cast<int>(s.size()) - 1);

  std::map<std::vector<int>, int> position;
  std::vector<int> count(top + 2, 0);
  for (const auto& s : simplices) position[s] = count[s.size()]++;

  std::vector<BoundaryMatrix> boundaries(top + 1);
  for (int k = 0; k <= top; ++k) {
    boundaries[k].rows = count[k];
    boundaries[k].cols = count[k + 1];
    boundaries[k].columns.resize(count[k + 1]);
  }
  for (const auto& s : simplices) {
    if (s.empty()) continue;
    const int dim = static_cast<int>(s.size()) - 1;
    auto& col = boundaries[dim].columns[position.at(s)];
    for (std::size_t i = 0; i < s.size(); ++i) {
      std::vector<int> face = s;
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
      col.emplace_back(position.at(face), i % 2 == 0 ? 1 : -1);
    }
  }
  return ChainComplex(field, std::move(boundaries));
}

std::uint64_t ReducedBetti::at(int dim) const {
  const int idx = dim + 1;
  if (idx < 0 || idx >= static_cast<int>(values.size())) return 0;
  return values[idx];
}

bool ReducedBetti::all_zero() const {
  return std::all_of(values.begin(), values.end(), [](auto v) { return v == 0; });
}

ReducedBetti reduced_betti_numbers(const ChainComplex& chains) {
  const int top = chains.max_dim();
  // rank_of[k] = rank of d_k, with d_{-1} = 0 and d_{top+1} = 0.
  std::vector<int> rank_of(top + 3, 0);
  for (int k = 0; k <= top; ++k) rank_of[k + 1] = eliminate(chains.boundary(k), chains.field()).rank;
  ReducedBetti out;
  out.values.resize(top + 2);
  for (int k = -1; k <= top; ++k) {
    const int nullity = chains.cells(k) - rank_of[k + 1];
    const int value = nullity - rank_of[k + 2];
    if (value < 0) throw std::logic_error("negative homology dimension");
    out.values[k + 1] = static_cast<std::uint64_t>(value);
  }
  return out;
}

ReducedBetti reduced_betti_numbers(const LabeledComplex& complex, Field field) {
  return reduced_betti_numbers(chain_complex(complex, field));
}

ReducedBetti reduced_betti_numbers(const SimplicialComplex& complex, Field field) {
  return reduced_betti_numbers(chain_complex(complex, field));
}

AcyclicityVerdict is_acyclic(const LabeledComplex& complex, Field field) {
  AcyclicityVerdict verdict;
  verdict.empty = !complex.has_nonempty_face();
  verdict.acyclic = !verdict.empty && reduced_betti_numbers(complex, field).all_zero();
  return verdict;
}

}  // namespace assoc
