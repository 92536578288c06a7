// Command-line front end: face counts, Betti tables, resolution checks,
// Morse matchings and tableau statistics for the labeled associahedron.
//
// Exit codes: 0 success, 1 a check failed, 2 usage error.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "assoc/betti.hpp"
#include "assoc/complex.hpp"
#include "assoc/json_io.hpp"
#include "assoc/morse.hpp"
#include "assoc/polygon.hpp"
#include "assoc/resolution.hpp"
#include "assoc/tableaux.hpp"

namespace {

using namespace assoc;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct Globals {
  bool json = false;
  unsigned threads = 0;
};

template <typename Range>
std::string join(const Range& values, const char* sep = " ") {
  std::ostringstream out;
  bool first = true;
  for (const auto& v : values) {
    if (!first) out << sep;
    first = false;
    out << v;
  }
  return out.str();
}

std::string describe(const Dissection& d) {
  std::vector<std::string> parts;
  for (const auto& g : d.diagonals()) parts.push_back(std::to_string(g.a) + "-" + std::to_string(g.b));
  return "{" + join(parts, ",") + "}";
}

std::string describe(const Face& f) { return f.interior ? std::string("interior") : describe(f.dissection); }

std::string describe(MonomialLabel label) { return "{" + join(label.elements(), ",") + "}"; }

void emit(const Globals& g, const json& payload, const std::string& text) {
  if (g.json)
    std::cout << payload.dump(2) << '\n';
  else
    std::cout << text;
}

int run_fvector(const Globals& g, int n) {
  const auto enumerated = build(n).f_vector();
  std::vector<std::uint64_t> formula;
  for (int d = 0; d <= n - 3; ++d) formula.push_back(f_formula(n, d));
  formula.push_back(1);  // interior cell
  const bool agree = enumerated == formula;
  std::ostringstream text;
  text << "f(" << n << ",d-1): " << join(enumerated) << '\n'
       << "formula: " << join(formula) << '\n'
       << "agree: " << (agree ? "yes" : "no") << '\n';
  emit(g, {{"n", n}, {"enumerated", enumerated}, {"formula", formula}, {"agree", agree}}, text.str());
  return agree ? kOk : kCheckFailed;
}

int run_betti(const Globals& g, int n, const std::string& method_name) {
  const BettiMethod method = parse_betti_method(method_name);
  BettiTable table;
  try {
    table = betti_table(n, method);
  } catch (const BettiMismatch& e) {
    std::cerr << e.what() << '\n';
    return kCheckFailed;
  }
  const auto violations = table_invariant_violations(table);
  std::ostringstream text;
  text << "β^" << n << "_d: " << join(table.totals()) << '\n';
  for (const auto& [k, v] : table.entries())
    text << "  β_{" << k.first << "," << k.second << "} = " << v << '\n';
  if (method == BettiMethod::All) text << "methods agree: hochster closed recursion\n";
  for (const auto& v : violations) text << "invariant violated: " << v << '\n';
  json payload = to_json(table);
  payload["method"] = to_string(method);
  payload["violations"] = violations;
  emit(g, payload, text.str());
  return violations.empty() ? kOk : kCheckFailed;
}

int run_verify(const Globals& g, int n, const std::string& field_name, int max_n) {
  const Field field = parse_field(field_name);
  if (n >= 8) std::cerr << "checking 2^" << n << " restrictions over " << to_string(field) << "...\n";
  const auto report = verify_supports_resolution(n, field, {.max_n = max_n, .threads = g.threads});
  std::ostringstream text;
  text << "n=" << n << " field=" << to_string(field) << " checked=" << report.checked
       << " empty=" << report.empty << " acyclic=" << report.acyclic
       << " cone_checked=" << report.cone_checked << " failures=" << report.failures.size() << '\n';
  for (const auto& f : report.failures) text << "  " << describe(f.sigma) << ": " << f.reason << '\n';
  text << (report.passed() ? "supports a resolution: yes\n" : "supports a resolution: no\n");
  emit(g, to_json(report), text.str());
  return report.passed() ? kOk : kCheckFailed;
}

int run_minimality(const Globals& g, int n) {
  const auto X = build(n);
  const auto witnesses = minimality_witnesses(X);
  std::ostringstream text;
  json list = json::array();
  for (const auto& [lo, hi] : witnesses) {
    text << describe(X.face(lo)) << " < " << describe(X.face(hi)) << " label "
         << describe(X.face(lo).label) << '\n';
    list.push_back({{"lower", to_json(X.face(lo).dissection)},
                    {"upper", to_json(X.face(hi).dissection)},
                    {"label", to_json(X.face(lo).label)}});
  }
  text << "witnesses: " << witnesses.size() << (witnesses.empty() ? " (minimal)\n" : " (not minimal)\n");
  emit(g, {{"n", n}, {"minimal", witnesses.empty()}, {"witnesses", list}}, text.str());
  return kOk;
}

int run_morse(const Globals& g, int n, bool extend) {
  const auto X = build(n);
  auto matching = d2_matching(X);
  int status = kOk;
  auto check = [&](const MorseMatching& m, json& out, std::ostringstream& text) {
    const auto v = validate(m, X);
    out["pairs"] = m.pairs.size();
    out["valid"] = v.valid;
    out["diagnostics"] = v.diagnostics;
    text << "pairs: " << m.pairs.size() << " valid: " << (v.valid ? "yes" : "no") << '\n';
    for (const auto& d : v.diagnostics) text << "  " << d << '\n';
    if (n <= 8) {
      const bool full = validate(m, X, AcyclicityCheck::FullGraph).valid;
      out["full_graph_valid"] = full;
      if (full != v.valid) {
        text << "  acyclicity checks disagree\n";
        status = kCheckFailed;
      }
    }
    if (!v.valid) status = kCheckFailed;
    const auto critical = critical_cells(m, X);
    out["critical"] = critical;
    text << "critical cells by dimension: " << join(critical) << '\n';
    return critical;
  };

  std::vector<std::uint64_t> betti;
  for (int d = 1; d <= n - 3; ++d) betti.push_back(betti_closed_form(n, d));
  betti.push_back(1);

  std::ostringstream text;
  json payload{{"n", n}, {"betti", betti}, {"matching", to_json(matching)}};
  text << "rank-two matching on A_" << n << '\n';
  json base;
  const auto critical = check(matching, base, text);
  payload["rank_two"] = base;
  text << "betti numbers β_1..β_" << n - 2 << ": " << join(betti) << '\n';

  if (n >= 6) {
    const auto f = count_formulas(n);
    const auto e = count_by_enumeration(n);
    const bool agree = f.proper_d2 == e.proper_d2 && f.inscribed_triangles == e.inscribed_triangles &&
                       f.critical_edges == e.critical_edges;
    const bool edges = critical[1] == f.critical_edges && f.critical_edges == betti[1];
    payload["counts"] = {{"proper_d2", f.proper_d2},
                         {"inscribed_triangles", f.inscribed_triangles},
                         {"critical_edges", f.critical_edges},
                         {"enumeration_agrees", agree},
                         {"critical_edges_equal_beta2", edges}};
    text << "proper d=2: " << f.proper_d2 << " inscribed triangles: " << f.inscribed_triangles
         << " critical edges: " << f.critical_edges
         << (agree ? " (enumeration agrees)" : " (enumeration disagrees)") << '\n';
    text << "critical edges = β_2: " << (edges ? "yes" : "no") << '\n';
    if (!agree || !edges) status = kCheckFailed;
  }

  if (extend) {
    const auto ext = greedy_extend(matching, X);
    json out;
    text << "greedy extension\n";
    const auto c = check(ext, out, text);
    const bool minimal = c == betti;
    out["matches_betti"] = minimal;
    out["pairs_list"] = to_json(ext);
    text << "critical cells equal Betti numbers: " << (minimal ? "yes" : "no") << '\n';
    payload["extended"] = out;
  }
  emit(g, payload, text.str());
  return status;
}

int run_syt(const Globals& g, const std::string& shape_text, const std::string& family, int n, int d,
            bool enumerate) {
  Shape shape;
  if (!shape_text.empty()) {
    std::vector<int> parts;
    std::stringstream in(shape_text);
    for (std::string item; std::getline(in, item, ',');) parts.push_back(std::stoi(item));
    shape = Shape(parts);
  } else if (family == "assoc") {
    shape = associahedron_shape(n, d);
  } else if (family == "syzygy") {
    shape = syzygy_shape(n, d);
  } else {
    throw std::invalid_argument("give --shape or --family assoc|syzygy with --n and --d");
  }
  const auto count = hook_count(shape);
  const Shape transpose = conjugate(shape);
  auto parts = [](const Shape& s) { return std::vector<int>(s.parts().begin(), s.parts().end()); };
  json payload{{"shape", parts(shape)}, {"conjugate", parts(transpose)}, {"hook_count", count}};
  std::ostringstream text;
  text << "shape " << shape.to_string() << " conjugate " << transpose.to_string() << '\n'
       << "standard Young tableaux: " << count << '\n';
  int status = kOk;
  if (enumerate) {
    const auto all = enumerate_syt(shape, std::max(kDefaultSytCap, shape.cells()));
    json list = json::array();
    for (const auto& t : all) {
      list.push_back(to_json(t));
      text << render(t) << '\n';
    }
    payload["tableaux"] = list;
    if (all.size() != count) {
      text << "enumeration found " << all.size() << " tableaux\n";
      status = kCheckFailed;
    }
  }
  emit(g, payload, text.str());
  return status;
}

int run_involution(const Globals& g, int n, int d, bool verify) {
  const auto all = enumerate_syt(associahedron_shape(n, d));
  std::uint64_t fixed = 0, up = 0, down = 0, bad = 0;
  for (const auto& t : all) {
    const auto s = involution(t);
    if (s == t) {
      ++fixed;
      continue;
    }
    (s.size() > t.size() ? up : down)++;
    if (verify && (!(involution(s) == t) || std::abs(s.size() - t.size()) != 1)) ++bad;
  }
  const auto beta = syzygy_count(n, d);
  const bool ok = fixed == beta && bad == 0;
  std::ostringstream text;
  text << "associahedron tableaux (" << n << "," << d << "): " << all.size() << '\n'
       << "fixed points: " << fixed << " (β_" << d << " = " << beta << ")\n"
       << "moved to d+1: " << up << " moved to d-1: " << down << '\n';
  if (verify) text << "involution verified: " << (bad == 0 ? "yes" : "no") << '\n';
  json payload{{"n", n},     {"d", d},       {"tableaux", all.size()}, {"fixed", fixed},
               {"beta", beta}, {"to_d_plus_1", up}, {"to_d_minus_1", down}};
  if (verify) payload["verified"] = bad == 0;
  emit(g, payload, text.str());
  return ok ? kOk : kCheckFailed;
}

int run_dissections(const Globals& g, int n, int d, bool by_support, bool trees) {
  std::uint64_t total = 0;
  for_each_dissection(n, d, [&](const Dissection&) { ++total; });
  const auto formula = f_formula(n, d);
  json payload{{"n", n}, {"d", d}, {"count", total}, {"formula", formula}};
  std::ostringstream text;
  text << "dissections(" << n << "," << d << "): " << total << " formula: " << formula << '\n';
  if (by_support) {
    const auto counts = count_by_support(n, d);
    std::vector<std::string> cells;
    for (const auto& [j, c] : counts) cells.push_back(std::to_string(j) + ":" + std::to_string(c));
    text << join(cells) << '\n';
    payload["by_support"] = support_counts_to_json(counts);
  }
  if (trees) {
    const auto t = count_trees(n, d);
    text << "trees: " << t << '\n';
    payload["trees"] = t;
  }
  emit(g, payload, text.str());
  return total == formula ? kOk : kCheckFailed;
}

int run_tables(const Globals& g) {
  int status = kOk;
  json payload = json::array();
  std::ostringstream text;
  for (int n = 6; n <= 9; ++n) {
    std::vector<std::uint64_t> betti;
    try {
      betti = betti_table(n, BettiMethod::All).totals();
    } catch (const BettiMismatch& e) {
      std::cerr << e.what() << '\n';
      return kCheckFailed;
    }
    const auto faces = build(n).f_vector();
    std::vector<int> header;
    for (int d = 0; d <= n - 2; ++d) header.push_back(d);
    for (int d = 0; d <= n - 3; ++d)
      if (faces[d] != f_formula(n, d)) status = kCheckFailed;
    if (n > 6) text << '\n';
    text << "d: " << join(header) << '\n'
         << "β^" << n << "_d: " << join(betti) << '\n'
         << "f(" << n << ",d-1): " << join(faces) << '\n';
    payload.push_back({{"n", n}, {"betti", betti}, {"faces", faces}});
  }
  emit(g, payload, text.str());
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monomial-labeled associahedron and the Stanley-Reisner ideal of the n-cycle"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "Print machine-readable JSON");
  app.add_option("--threads", g.threads, "Worker threads for sweeps (0: all cores)");

  int n = 0, d = 0, max_n = kDefaultResolutionMax;
  std::string method = "hochster", field = "gf2", shape, family;
  bool flag_a = false, flag_b = false;
  const auto polygon = CLI::Range(4, kMaxPolygon);
  const auto complex_range = CLI::Range(4, kMaxComplexPolygon);

  auto* fvector = app.add_subcommand("fvector", "Face counts of A_n by enumeration and formula");
  fvector->add_option("n", n)->required()->check(complex_range);

  auto* betti = app.add_subcommand("betti", "Graded Betti numbers of R/J_n");
  betti->add_option("n", n)->required()->check(CLI::Range(4, 30));
  betti->add_option("--method", method, "hochster|closed|recursion|all")
      ->check(CLI::IsMember({"hochster", "closed", "recursion", "all"}));

  auto* verify = app.add_subcommand("verify-resolution", "Check every restriction of A_n");
  verify->add_option("n", n)->required()->check(complex_range);
  verify->add_option("--field", field, "gf2|rational")->check(CLI::IsMember({"gf2", "rational"}));
  verify->add_option("--max-n", max_n, "Raise the size guard")->check(complex_range);

  auto* minimality = app.add_subcommand("minimality", "Equal-label cover pairs of A_n");
  minimality->add_option("n", n)->required()->check(complex_range);

  auto* morse = app.add_subcommand("morse", "Rank-two Morse matching report");
  morse->add_option("n", n)->required()->check(complex_range);
  morse->add_flag("--extend", flag_a, "Greedily extend the matching");

  auto* syt = app.add_subcommand("syt", "Standard Young tableaux of a shape");
  auto* shape_opt = syt->add_option("--shape", shape, "Parts, e.g. 2,2,1");
  auto* family_opt =
      syt->add_option("--family", family, "assoc|syzygy")->check(CLI::IsMember({"assoc", "syzygy"}));
  shape_opt->excludes(family_opt);
  syt->add_option("--n", n)->needs(family_opt);
  syt->add_option("--d", d)->needs(family_opt);
  syt->add_flag("--enumerate", flag_a, "List every tableau");

  auto* invol = app.add_subcommand("involution", "Box-moving involution on associahedron tableaux");
  invol->add_option("n", n)->required()->check(polygon);
  invol->add_option("d", d)->required();
  invol->add_flag("--verify", flag_a, "Check that it is an involution");

  auto* dissections = app.add_subcommand("dissections", "Count dissections of the n-gon");
  dissections->add_option("n", n)->required()->check(polygon);
  dissections->add_option("d", d)->required();
  dissections->add_flag("--by-support", flag_a, "Split by number of endpoints");
  dissections->add_flag("--trees", flag_b, "Count dissections whose diagonals form a tree");

  auto* tables = app.add_subcommand("tables", "Betti numbers against face counts for n = 6..9");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*fvector) return run_fvector(g, n);
    if (*betti) return run_betti(g, n, method);
    if (*verify) return run_verify(g, n, field, max_n);
    if (*minimality) return run_minimality(g, n);
    if (*morse) return run_morse(g, n, flag_a);
    if (*syt) return run_syt(g, shape, family, n, d, flag_a);
    if (*invol) return run_involution(g, n, d, flag_a);
    if (*dissections) return run_dissections(g, n, d, flag_a, flag_b);
    if (*tables) return run_tables(g);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCheckFailed;
  }
  return kUsage;
}
