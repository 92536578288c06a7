// Graded Betti numbers of R/J_n, where J_n is the Stanley-Reisner ideal of
// the n-cycle, computed three independent ways: Hochster's formula over the
// induced subgraphs of the cycle, the closed form, and the recursion
//   F(n, d) = F(n-1, d-1) + F(n-1, d) + C(n-2, d).

#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "assoc/homology.hpp"

namespace assoc {

inline constexpr int kDefaultHochsterMax = 16;

class BettiTable {
 public:
  BettiTable() = default;
  explicit BettiTable(int n) : n_(n) {}

  int n() const { return n_; }
  std::uint64_t at(int d, int j) const;
  void add(int d, int j, std::uint64_t value);

  /// Nonzero entries keyed by (d, j).
  const std::map<std::pair<int, int>, std::uint64_t>& entries() const { return entries_; }

  /// Total Betti number beta_d (sum over j).
  std::uint64_t total(int d) const;
  /// beta_0, ..., beta_{n-2}.
  std::vector<std::uint64_t> totals() const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  int n_ = 0;
  std::map<std::pair<int, int>, std::uint64_t> entries_;
};

enum class BettiMethod { Hochster, ClosedForm, Recursion, All };

const char* to_string(BettiMethod method);
BettiMethod parse_betti_method(const std::string& name);

/// Hochster's formula with the cycle specialization: an induced subgraph on
/// W != [n] is a disjoint union of paths, so it only contributes
/// (#components - 1) to beta_{|W|-1, |W|}; W = [n] contributes beta_{n-2,n}.
BettiTable hochster_betti(int n, int max_n = kDefaultHochsterMax);

/// Hochster's formula evaluated with the generic homology engine on every
/// induced subcomplex. Slow; used as an oracle for small n.
BettiTable hochster_betti_homology(int n, Field field);

/// C(n, d+1) d (n-d-2) / (n-1) for 1 <= d <= n-3.
std::uint64_t betti_closed_form(int n, int d);

/// The recursion seeded at d = 1, d = n-3 (both C(n,2) - n) and n = 5.
std::uint64_t betti_recursion(int n, int d);

struct BettiCellMismatch {
  int d = 0;
  int j = 0;
  std::string method_a;
  std::uint64_t value_a = 0;
  std::string method_b;
  std::uint64_t value_b = 0;
};

class BettiMismatch : public std::runtime_error {
 public:
  explicit BettiMismatch(std::vector<BettiCellMismatch> cells);
  const std::vector<BettiCellMismatch>& cells() const { return cells_; }

 private:
  std::vector<BettiCellMismatch> cells_;
};

/// Full table by one method. With BettiMethod::All, computes all three and
/// throws BettiMismatch listing the differing cells if they disagree.
BettiTable betti_table(int n, BettiMethod method);

/// Violations of almost-linearity, beta_{0,0} = beta_{n-2,n} = 1 and
/// palindromy. Empty when the table is consistent.
std::vector<std::string> table_invariant_violations(const BettiTable& table);

}  // namespace assoc
