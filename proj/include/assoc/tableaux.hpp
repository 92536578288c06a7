// Partitions, standard Young tableaux and the two shape families that count
// faces of A_n and Betti numbers of R/J_n:
//
//   associahedron tableaux  (d+1, d+1, 1^{n-d-3})   n+d-1 cells
//   syzygy tableaux         (d+1, 2,   1^{n-d-3})   n cells

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace assoc {

/// Default cell limit for explicit enumeration.
inline constexpr int kDefaultSytCap = 14;

/// Integer partition with weakly decreasing positive parts.
class Shape {
 public:
  Shape() = default;
  explicit Shape(std::vector<int> parts);

  std::span<const int> parts() const { return parts_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  int cells() const;
  std::string to_string() const;

  friend bool operator==(const Shape&, const Shape&) = default;
  friend auto operator<=>(const Shape&, const Shape&) = default;

 private:
  std::vector<int> parts_;
};

/// Transpose of the Young diagram.
Shape conjugate(const Shape& shape);

Shape associahedron_shape(int n, int d);
Shape syzygy_shape(int n, int d);

struct FamilyIndex {
  int n = 0;
  int d = 0;
  friend bool operator==(const FamilyIndex&, const FamilyIndex&) = default;
};

/// (n, d) when shape = (d+1, d+1, 1^{n-d-3}) with n >= 4 and 1 <= d <= n-3.
std::optional<FamilyIndex> associahedron_family(const Shape& shape);

/// A standard Young tableau, stored row by row.
class Tableau {
 public:
  /// Throws std::invalid_argument unless rows form a standard filling of a
  /// partition with 1..N.
  explicit Tableau(std::vector<std::vector<int>> rows);

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  Shape shape() const;
  int size() const;
  /// Rows concatenated top to bottom.
  std::vector<int> reading_word() const;

  friend bool operator==(const Tableau&, const Tableau&) = default;
  /// Orders by reading word, then by shape.
  friend std::strong_ordering operator<=>(const Tableau& x, const Tableau& y);

 private:
  std::vector<std::vector<int>> rows_;
};

/// N! / (product of hook lengths). Throws std::overflow_error past 64 bits.
std::uint64_t hook_count(const Shape& shape);

/// All standard Young tableaux of the shape, sorted by reading word.
/// Throws std::length_error when the shape has more than `cap` cells.
std::vector<Tableau> enumerate_syt(const Shape& shape, int cap = kDefaultSytCap);

/// Number of syzygy tableaux; requires n >= 4 and 1 <= d <= n-3.
std::uint64_t syzygy_count(int n, int d);

/// Whether n+1, ..., n+d-1 fill positions 3..d+1 of the second row.
/// Throws std::invalid_argument for tableaux outside the associahedron family.
bool restricts_to_syzygy(const Tableau& tableau);

/// The box-moving involution on associahedron tableaux. Fixed points are the
/// tableaux that restrict to syzygy tableaux; otherwise the result lies in
/// the family with d+1 or d-1. Throws std::invalid_argument outside the
/// family and std::logic_error if a structural claim of the move fails.
Tableau involution(const Tableau& tableau);

/// ASCII Young diagram with one box per entry.
std::string render(const Tableau& tableau);

}  // namespace assoc
