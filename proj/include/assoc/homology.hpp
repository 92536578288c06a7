// Exact reduced cellular homology over GF(2) and Q.
//
// Chain complexes are augmented: dimension -1 holds the empty face, so the
// homology computed here is reduced homology. Boundary matrices are sparse
// with integer entries already reduced into the chosen field (all entries are
// +-1 over Q and 1 over GF(2)).

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "assoc/complex.hpp"

namespace assoc {

enum class Field { GF2, Rational };

const char* to_string(Field field);
Field parse_field(const std::string& name);

/// Sparse matrix stored by columns; each column is sorted by row index.
struct BoundaryMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<std::pair<int, int>>> columns;

  std::vector<std::vector<int>> dense_rows() const;
};

/// Abstract simplicial complex on integer vertices, closed under subsets and
/// always containing the empty simplex.
class SimplicialComplex {
 public:
  SimplicialComplex() : simplices_{{}} {}
  /// Closes the given faces downward.
  static SimplicialComplex from_faces(const std::vector<std::vector<int>>& faces);

  /// Sorted simplices, ordered by dimension then lexicographically.
  const std::vector<std::vector<int>>& simplices() const { return simplices_; }

 private:
  std::vector<std::vector<int>> simplices_;
};

class ChainComplex {
 public:
  /// Takes ownership of boundary matrices d_k : C_k -> C_{k-1} for
  /// k = 0..max_dim (index k in `boundaries`). Dimension -1 has
  /// boundaries[0].rows cells. Verifies the shapes and that every
  /// composition d_{k-1} d_k vanishes in the field; throws std::logic_error
  /// otherwise.
  ChainComplex(Field field, std::vector<BoundaryMatrix> boundaries);

  Field field() const { return field_; }
  int max_dim() const { return static_cast<int>(boundaries_.size()) - 1; }
  /// Number of cells in dimension k >= -1.
  int cells(int dim) const;
  /// d_k for 0 <= k <= max_dim().
  const BoundaryMatrix& boundary(int dim) const { return boundaries_.at(dim); }

 private:
  Field field_;
  std::vector<BoundaryMatrix> boundaries_;
};

/// Result of exact elimination of one matrix.
struct RankInfo {
  int rank = 0;
  int nullity = 0;
};

/// Column reduction in the given field. Asserts rank + nullity = cols.
RankInfo eliminate(const BoundaryMatrix& matrix, Field field);

/// Chain complex of a labeled complex. Simplicial faces are oriented by the
/// order of their sorted diagonals; the interior cell's boundary gets
/// coefficients found by propagating a coherent orientation across ridges.
ChainComplex chain_complex(const LabeledComplex& complex, Field field);
ChainComplex chain_complex(const SimplicialComplex& complex, Field field);

/// Coefficients of the interior cell on the facets (in face id order) of a
/// complex whose facets form a pseudomanifold. Throws std::logic_error if no
/// coherent orientation exists.
std::vector<int> interior_orientation(const LabeledComplex& complex);

/// Dimensions of reduced homology groups, indexed from dimension -1.
struct ReducedBetti {
  std::vector<std::uint64_t> values;  // values[k + 1] = dim H~_k

  std::uint64_t at(int dim) const;
  int max_dim() const { return static_cast<int>(values.size()) - 2; }
  bool all_zero() const;
};

ReducedBetti reduced_betti_numbers(const ChainComplex& chains);
ReducedBetti reduced_betti_numbers(const LabeledComplex& complex, Field field);
ReducedBetti reduced_betti_numbers(const SimplicialComplex& complex, Field field);

struct AcyclicityVerdict {
  bool acyclic = false;
  bool empty = false;  // no face besides the empty face
};

/// Acyclic means every reduced Betti number vanishes. The empty complex has
/// H~_{-1} = K and is reported as empty, not acyclic.
AcyclicityVerdict is_acyclic(const LabeledComplex& complex, Field field);

}  // namespace assoc
