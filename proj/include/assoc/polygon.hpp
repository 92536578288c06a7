// Diagonals and non-crossing dissections of the labeled n-gon.
//
// Vertices are numbered 1..n around the polygon. All predicates are
// decided combinatorially from the cyclic order of the labels.

#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <vector>

namespace assoc {

/// Largest polygon size representable by VertexSet.
inline constexpr int kMaxPolygon = 31;

/// Subset of {1..n} stored as a bitmask (bit i set <=> vertex i present).
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint32_t bits) : bits_(bits) {}

  static VertexSet full(int n);
  static VertexSet of(std::initializer_list<int> vertices);

  constexpr bool contains(int v) const { return (bits_ >> v) & 1u; }
  constexpr void insert(int v) { bits_ |= (1u << v); }
  constexpr void erase(int v) { bits_ &= ~(1u << v); }
  constexpr bool empty() const { return bits_ == 0; }
  int size() const;
  constexpr bool is_subset_of(VertexSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr std::uint32_t bits() const { return bits_; }

  /// Members in increasing order.
  std::vector<int> elements() const;

  friend constexpr bool operator==(VertexSet, VertexSet) = default;
  friend constexpr auto operator<=>(VertexSet, VertexSet) = default;

 private:
  std::uint32_t bits_ = 0;
};

/// A chord {a,b} of the n-gon with a < b that is not a boundary edge.
struct Diagonal {
  int a = 0;
  int b = 0;

  friend constexpr bool operator==(const Diagonal&, const Diagonal&) = default;
  friend constexpr auto operator<=>(const Diagonal&, const Diagonal&) = default;
};

/// Throws std::invalid_argument unless {a,b} is a diagonal of the n-gon.
Diagonal make_diagonal(int n, int a, int b);

bool is_diagonal(int n, int a, int b);

/// Interior intersection of two diagonals of the same polygon.
constexpr bool crosses(Diagonal d1, Diagonal d2) {
  // With a < b, interleaving in the linear order 1..n is the same as
  // interleaving in the cyclic order.
  const bool c_inside = d1.a < d2.a && d2.a < d1.b;
  const bool d_inside = d1.a < d2.b && d2.b < d1.b;
  const bool c_outside = d2.a < d1.a || d2.a > d1.b;
  const bool d_outside = d2.b < d1.a || d2.b > d1.b;
  return (c_inside && d_outside) || (d_inside && c_outside);
}

/// Every diagonal of the n-gon in lexicographic order. Requires n >= 4.
std::vector<Diagonal> all_diagonals(int n);

/// Set of pairwise non-crossing diagonals, kept sorted and duplicate-free.
class Dissection {
 public:
  Dissection() = default;
  /// Validates the diagonals; throws std::invalid_argument on a crossing,
  /// duplicate or non-diagonal.
  Dissection(int n, std::vector<Diagonal> diagonals);

  int n() const { return n_; }
  std::span<const Diagonal> diagonals() const { return diagonals_; }
  int size() const { return static_cast<int>(diagonals_.size()); }
  bool empty() const { return diagonals_.empty(); }
  bool contains(Diagonal d) const;

  friend bool operator==(const Dissection&, const Dissection&) = default;
  friend auto operator<=>(const Dissection&, const Dissection&) = default;

 private:
  int n_ = 0;
  std::vector<Diagonal> diagonals_;
};

enum class SupportClass { Proper, Superproper, Subproper };

const char* to_string(SupportClass c);

/// Union of the endpoints of the diagonals.
VertexSet support(const Dissection& dissection);

/// Compares |support| with |diagonals| + 1. Throws on the empty dissection.
SupportClass classify(const Dissection& dissection);

/// Whether the graph on support(D) with edge set D is connected and acyclic.
bool is_tree(const Dissection& dissection);

/// Calls `visit` on every non-crossing set of exactly `d` diagonals, in
/// lexicographic order of the sorted diagonal lists.
void for_each_dissection(int n, int d,
                         const std::function<void(const Dissection&)>& visit);

/// f(n,d,j): number of d-dissections with j support vertices, keyed by j.
std::map<int, std::uint64_t> count_by_support(int n, int d);

/// Number of d-dissections whose diagonals form a tree.
std::uint64_t count_trees(int n, int d);

}  // namespace assoc
