#include "assoc/json_io.hpp"

namespace assoc {

json to_json(const Dissection& dissection) {
  json out = json::array();
  for (const auto& d : dissection.diagonals()) out.push_back({d.a, d.b});
  return out;
}

Dissection dissection_from_json(int n, const json& value) {
  if (!value.is_array()) throw std::invalid_argument("dissection must be a JSON array");
  std::vector<Diagonal> diagonals;
  for (const auto& pair : value) {
    if (!pair.is_array() || pair.size() != 2)
      throw std::invalid_argument("each diagonal must be a pair [a,b]");
    diagonals.push_back({pair[0].get<int>(), pair[1].get<int>()});
  }
  return Dissection(n, std::move(diagonals));
}

json to_json(MonomialLabel label) { return label.elements(); }

json support_counts_to_json(const std::map<int, std::uint64_t>& counts) {
  json out = json::object();
  for (const auto& [j, c] : counts) out[std::to_string(j)] = c;
  return out;
}

json to_json(const LabeledComplex& complex) {
  json faces = json::array();
  for (const auto& f : complex.faces()) {
    json face = {{"id", f.id},
                 {"dim", f.dim},
                 {"diagonals", to_json(f.dissection)},
                 {"label", to_json(f.label)}};
    if (f.interior) face["interior"] = true;
    faces.push_back(std::move(face));
  }
  json covers = json::array();
  for (const auto& [lower, upper] : complex.covers()) covers.push_back({lower, upper});
  return {{"n", complex.n()}, {"faces", std::move(faces)}, {"covers", std::move(covers)}};
}

json to_json(const BoundaryMatrix& matrix) { return matrix.dense_rows(); }

json to_json(const BettiTable& table) {
  json entries = json::array();
  for (const auto& [k, v] : table.entries())
    entries.push_back({{"d", k.first}, {"j", k.second}, {"value", v}});
  return {{"n", table.n()}, {"entries", std::move(entries)}, {"totals", table.totals()}};
}

json to_json(const Tableau& tableau) { return tableau.rows(); }

Tableau tableau_from_json(const json& value) {
  return Tableau(value.get<std::vector<std::vector<int>>>());
}

json to_json(const MorseMatching& matching) {
  json out = json::array();
  for (const auto& [lower, upper] : matching.pairs) out.push_back({lower, upper});
  return out;
}

json to_json(const ResolutionReport& report) {
  json failures = json::array();
  for (const auto& f : report.failures)
    failures.push_back({{"sigma", to_json(f.sigma)}, {"reason", f.reason}});
  return {{"n", report.n},
          {"field", to_string(report.field)},
          {"checked", report.checked},
          {"empty", report.empty},
          {"acyclic", report.acyclic},
          {"cone_checked", report.cone_checked},
          {"failures", std::move(failures)}};
}

}  // namespace assoc
