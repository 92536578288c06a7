// Exhaustive check that the labeled associahedron supports a cellular
// resolution of the Stanley-Reisner ideal of the n-cycle: every restriction
// to a squarefree degree sigma must be acyclic or empty. Also reports the
// equal-label cover pairs that obstruct minimality.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "assoc/complex.hpp"
#include "assoc/homology.hpp"

namespace assoc {

/// Default upper bound on n for the 2^n restriction sweep.
inline constexpr int kDefaultResolutionMax = 8;

struct SigmaFailure {
  MonomialLabel sigma;
  std::string reason;
};

struct ResolutionReport {
  int n = 0;
  Field field = Field::GF2;
  std::uint64_t checked = 0;
  std::uint64_t empty = 0;
  std::uint64_t acyclic = 0;
  std::uint64_t cone_checked = 0;  // restrictions where a cone apex was verified
  std::vector<SigmaFailure> failures;

  bool passed() const { return failures.empty(); }
};

struct ResolutionOptions {
  int max_n = kDefaultResolutionMax;
  unsigned threads = 0;  // 0: hardware concurrency
};

/// Restricts A_n to every subset sigma of [n] and requires each restriction
/// to be acyclic or empty. For every nonempty proper restriction, the cone
/// apex from cone_witness must exist, lie in every facet, and the homology
/// verdict must be acyclic.
ResolutionReport verify_supports_resolution(int n, Field field,
                                            const ResolutionOptions& options = {});

/// Apex of the cone structure of the restriction of A_n to sigma.
///
/// sigma is rotated cyclically so that it contains 1 and omits n (the
/// rotation maps the smallest element p of sigma whose predecessor is absent
/// to 1). With j the largest element of the rotated set exceeding 2, the
/// diagonal (1, j) crosses no diagonal spanned by sigma. Returns it in the
/// original labeling, or nullopt when no such j exists (the restriction is
/// then empty). Requires 2 <= |sigma| < n.
std::optional<Diagonal> cone_witness(int n, MonomialLabel sigma);

/// Whether the apex is a vertex of every maximal face of the complex.
bool is_cone_apex(const LabeledComplex& complex, Diagonal apex);

/// Cover pairs (F, G) with equal labels, excluding covers of the empty face.
/// Empty iff the supported resolution is minimal.
std::vector<Cover> minimality_witnesses(const LabeledComplex& complex);

}  // namespace assoc
