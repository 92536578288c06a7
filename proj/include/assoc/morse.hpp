// Algebraic discrete Morse matchings on the labeled face poset of A_n.
//
// A matching pairs cover relations (F, G) with equal labels. Orienting matched
// covers upward and every other cover downward must give an acyclic digraph.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "assoc/complex.hpp"

namespace assoc {

struct MorseMatching {
  std::vector<Cover> pairs;  // (lower id, upper id), sorted
};

/// The rank-two matching on A_n, n >= 6 (empty for smaller n):
///   * a pair of disjoint diagonals {ij, kl} (i<j, k<l, i<k) is matched up
///     with {ij, kl, jl} when j < k and with {ij, kl, il} otherwise;
///   * an inscribed triangle {ij, ik, jk} (i<j<k) is matched down with
///     {ij, jk}.
MorseMatching d2_matching(const LabeledComplex& complex);

struct MatchingValidation {
  bool valid = true;
  std::vector<std::string> diagnostics;
  std::vector<int> cycle;  // face ids along a directed cycle, if one exists
};

enum class AcyclicityCheck {
  Alternating,  // reachability between matched pairs only
  FullGraph,    // cycle search on the whole oriented Hasse diagram
};

/// Checks that faces are matched at most once, pairs are covers with equal
/// labels, and the oriented Hasse diagram has no directed cycle.
MatchingValidation validate(const MorseMatching& matching, const LabeledComplex& complex,
                            AcyclicityCheck check = AcyclicityCheck::Alternating);

/// Unmatched nonempty faces counted by dimension 0..top.
std::vector<std::uint64_t> critical_cells(const MorseMatching& matching,
                                          const LabeledComplex& complex);

struct D2Counts {
  std::uint64_t proper_d2 = 0;            // n(n-3)(n-4)/2
  std::uint64_t inscribed_triangles = 0;  // n(n-4)(n-5)/6
  std::uint64_t critical_edges = 0;       // difference of the two
};

/// Closed forms; requires n >= 6.
D2Counts count_formulas(int n);
/// The same counts by classifying every 2- and 3-dissection.
D2Counts count_by_enumeration(int n);

struct N7ExtensionCounts {
  std::uint64_t superproper_d2 = 0;
  std::uint64_t subproper_d3 = 0;
  std::uint64_t superproper_d3 = 0;
  std::uint64_t subproper_d4 = 0;
  std::uint64_t edges_after = 0;
  std::uint64_t two_faces_after = 0;
  std::uint64_t three_faces_after = 0;
};

/// Classification counts over the faces of A_7 and the face counts left
/// after matching every improper face of dimensions 1 to 3.
N7ExtensionCounts n7_extension_counts();

/// Greedily adds equal-label cover pairs in canonical face order while the
/// matching stays valid. Never touches the empty face.
MorseMatching greedy_extend(const MorseMatching& matching, const LabeledComplex& complex);

}  // namespace assoc
