// The monomial-labeled associahedron A_n.
//
// Faces are the non-crossing diagonal sets of the n-gon (including the empty
// face) plus one interior cell whose boundary is the set of triangulations.
// Each face is labeled by the squarefree monomial on the union of the
// endpoints of its diagonals; the interior cell carries x_1 x_2 ... x_n.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "assoc/polygon.hpp"

namespace assoc {

/// Squarefree monomial, as the set of variables that divide it.
using MonomialLabel = VertexSet;

/// Largest n for which A_n is materialized (diagonal sets fit in 64 bits).
inline constexpr int kMaxComplexPolygon = 12;

struct Face {
  int id = 0;
  int dim = -1;
  bool interior = false;
  Dissection dissection;  // empty for the interior cell
  MonomialLabel label;
};

using Cover = std::pair<int, int>;  // (lower id, upper id)

class LabeledComplex {
 public:
  int n() const { return n_; }
  int size() const { return static_cast<int>(faces_.size()); }
  std::span<const Face> faces() const { return faces_; }
  const Face& face(int id) const { return faces_.at(id); }

  /// Cover relations (F, G) with F a codimension-one face of G, ordered by
  /// upper id and then lower id. Includes covers of the empty face.
  std::span<const Cover> covers() const { return covers_; }
  std::span<const int> lower_covers(int id) const { return lower_[id]; }
  std::span<const int> upper_covers(int id) const { return upper_[id]; }
  bool is_cover(int lower, int upper) const;

  std::optional<int> find(const Dissection& dissection) const;
  std::optional<int> interior_id() const { return interior_id_; }

  /// Bitmask over the indices of all_diagonals(n) for a simplicial face.
  std::uint64_t diagonal_mask(int id) const { return masks_[id]; }
  /// Index of a diagonal in all_diagonals(n).
  int diagonal_index(Diagonal d) const;

  /// Whether the complex has any face besides the empty face.
  bool has_nonempty_face() const { return faces_.size() > 1; }
  int top_dimension() const;

  /// Face counts by dimension -1, 0, ..., top_dimension().
  std::vector<std::uint64_t> f_vector() const;

  /// Ids of maximal faces (faces with no upper cover).
  std::vector<int> maximal_faces() const;

  friend LabeledComplex build(int n);
  friend LabeledComplex restrict(const LabeledComplex& complex, MonomialLabel sigma);
  friend LabeledComplex boundary_complex(const LabeledComplex& complex);

 private:
  LabeledComplex() = default;
  void add_face(Face face, std::uint64_t mask);
  void link_covers();

  int n_ = 0;
  std::vector<Face> faces_;
  std::vector<std::uint64_t> masks_;
  std::vector<Cover> covers_;
  std::vector<std::vector<int>> lower_;
  std::vector<std::vector<int>> upper_;
  std::unordered_map<std::uint64_t, int> by_mask_;
  std::vector<int> diagonal_index_;  // (a * (n + 1) + b) -> index, or -1
  std::optional<int> interior_id_;
};

/// Builds A_n with its empty face, simplicial faces and interior cell, in
/// canonical order (dimension, then lexicographic dissection).
LabeledComplex build(int n);

/// Subcomplex of faces whose label divides sigma. The interior cell is kept
/// only when sigma is the full vertex set.
LabeledComplex restrict(const LabeledComplex& complex, MonomialLabel sigma);

/// The same complex with the interior cell removed (the boundary sphere).
LabeledComplex boundary_complex(const LabeledComplex& complex);

/// The cover relations of the face poset.
std::vector<Cover> hasse(const LabeledComplex& complex);

/// Number of non-crossing d-subsets of diagonals of the n-gon:
/// C(n+d, d+1) C(n-3, d) / (n+d).
std::uint64_t f_formula(int n, int d);

/// Exact binomial coefficient; throws std::overflow_error past 64 bits.
std::uint64_t binomial(int n, int k);

}  // namespace assoc
