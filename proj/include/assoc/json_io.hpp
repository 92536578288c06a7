// JSON encodings of the library's values (nlohmann::json).

#pragma once

#include <json.hpp>

#include "assoc/betti.hpp"
#include "assoc/complex.hpp"
#include "assoc/homology.hpp"
#include "assoc/morse.hpp"
#include "assoc/polygon.hpp"
#include "assoc/resolution.hpp"
#include "assoc/tableaux.hpp"

namespace assoc {

using json = nlohmann::json;

/// [[a,b], ...]
json to_json(const Dissection& dissection);
/// Parses [[a,b], ...] into a validated dissection of the n-gon.
Dissection dissection_from_json(int n, const json& value);

/// Sorted vertex list.
json to_json(MonomialLabel label);

/// {"3": 2, "4": 12}
json support_counts_to_json(const std::map<int, std::uint64_t>& counts);

/// {"n", "faces": [{"id","dim","diagonals","label"[,"interior"]}], "covers"}
json to_json(const LabeledComplex& complex);

/// Boundary matrix as a list of dense rows.
json to_json(const BoundaryMatrix& matrix);

/// {"n", "entries": [{"d","j","value"}], "totals": [...]}
json to_json(const BettiTable& table);

/// [[1,2],[3,4],[5]]
json to_json(const Tableau& tableau);
Tableau tableau_from_json(const json& value);

/// [[lower, upper], ...]
json to_json(const MorseMatching& matching);

/// {"n","field","checked","empty","acyclic","cone_checked","failures"}
json to_json(const ResolutionReport& report);

}  // namespace assoc
