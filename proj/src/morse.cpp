#include "assoc/morse.hpp"

#include <algorithm>
#include <stdexcept>

namespace assoc {

namespace {

constexpr int kNone = -1;

struct Partners {
  std::vector<int> up;    // up[f]: upper partner of a lower face, or kNone
  std::vector<int> down;  // down[g]: lower partner of an upper face, or kNone

  explicit Partners(int size) : up(size, kNone), down(size, kNone) {}
  bool matched(int f) const { return up[f] != kNone || down[f] != kNone; }
};

std::string describe(const LabeledComplex& complex, int id) {
  const Face& f = complex.face(id);
  if (f.interior) return "interior";
  std::string out = "{";
  bool first = true;
  for (const auto& d : f.dissection.diagonals()) {
    if (!first) out += ",";
    first = false;
    out += std::to_string(d.a) + "-" + std::to_string(d.b);
  }
  return out + "}";
}

// Three-color DFS over successors given by `next`; returns the node ids of
// a directed cycle, or an empty vector.
template <typename Successors>
std::vector<int> find_cycle(int nodes, Successors next) {
  enum : char { White, Grey, Black };
  std::vector<char> color(nodes, White);
  std::vector<int> parent(nodes, kNone);
  std::vector<std::pair<int, std::size_t>> stack;
  std::vector<int> succ;
  for (int root = 0; root < nodes; ++root) {
    if (color[root] != White) continue;
    stack.emplace_back(root, 0);
    color[root] = Grey;
    while (!stack.empty()) {
      auto& [v, idx] = stack.back();
      succ.clear();
      next(v, succ);
      if (idx < succ.size()) {
        const int w = succ[idx++];
        if (color[w] == White) {
          color[w] = Grey;
          parent[w] = v;
          stack.emplace_back(w, 0);
        } else if (color[w] == Grey) {
          std::vector<int> cycle{w};
          for (int u = v; u != w; u = parent[u]) cycle.push_back(u);
          std::reverse(cycle.begin() + 1, cycle.end());
          return cycle;
        }
      } else {
        color[v] = Black;
        stack.pop_back();
      }
    }
  }
  return {};
}

std::vector<int> alternating_cycle(const MorseMatching& matching, const LabeledComplex& complex,
                                   const Partners& partners) {
  const auto& pairs = matching.pairs;
  std::vector<int> pair_of_lower(complex.size(), kNone);
  for (std::size_t p = 0; p < pairs.size(); ++p) pair_of_lower[pairs[p].first] = static_cast<int>(p);

  auto cycle = find_cycle(static_cast<int>(pairs.size()), [&](int p, std::vector<int>& out) {
    const auto [lower, upper] = pairs[p];
    for (int c : complex.lower_covers(upper)) {
      if (c == lower) continue;
      if (const int q = pair_of_lower[c]; q != kNone && partners.up[c] != kNone) out.push_back(q);
    }
  });
  std::vector<int> faces;
  for (int p : cycle) {
    faces.push_back(pairs[p].first);
    faces.push_back(pairs[p].second);
  }
  return faces;
}

std::vector<int> full_graph_cycle(const LabeledComplex& complex, const Partners& partners) {
  return find_cycle(complex.size(), [&](int v, std::vector<int>& out) {
    if (partners.up[v] != kNone) out.push_back(partners.up[v]);
    for (int c : complex.lower_covers(v))
      if (partners.up[c] != v) out.push_back(c);
  });
}

// Whether some directed path leads from `upper` to `lower` without the
// cover edge upper -> lower itself, using only the two dimensions involved.
bool reaches(const LabeledComplex& complex, const Partners& partners, int upper, int lower) {
  const int top = complex.face(upper).dim;
  std::vector<char> seen(complex.size(), 0);
  std::vector<int> stack{upper};
  seen[upper] = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    if (complex.face(v).dim == top) {
      for (int c : complex.lower_covers(v)) {
        if (v == upper && c == lower) continue;
        if (partners.up[c] == v || seen[c]) continue;
        if (c == lower) return true;
        seen[c] = 1;
        stack.push_back(c);
      }
    } else if (const int w = partners.up[v]; w != kNone && !seen[w]) {
      seen[w] = 1;
      stack.push_back(w);
    }
  }
  return false;
}

}  // namespace

MorseMatching d2_matching(const LabeledComplex& complex) {
  MorseMatching m;
  const int n = complex.n();
  if (n < 6) return m;
  auto id_of = [&](std::vector<Diagonal> diagonals) {
    const auto id = complex.find(Dissection(n, std::move(diagonals)));
    if (!id) throw std::logic_error("matching partner is not a face of the complex");
    return *id;
  };
  for (const auto& f : complex.faces()) {
    if (f.interior) continue;
    const auto diags = f.dissection.diagonals();
    if (f.dim == 1 && classify(f.dissection) == SupportClass::Superproper) {
      const auto [i, j] = diags[0];
      const auto [k, l] = diags[1];
      const Diagonal third = j < k ? make_diagonal(n, j, l) : make_diagonal(n, i, l);
      m.pairs.emplace_back(f.id, id_of({diags[0], diags[1], third}));
    } else if (f.dim == 2 && classify(f.dissection) == SupportClass::Subproper) {
      // Sorted diagonals of the triangle i<j<k are ij, ik, jk.
      m.pairs.emplace_back(id_of({diags[0], diags[2]}), f.id);
    }
  }
  std::sort(m.pairs.begin(), m.pairs.end());
  return m;
}

MatchingValidation validate(const MorseMatching& matching, const LabeledComplex& complex,
                            AcyclicityCheck check) {
  MatchingValidation out;
  auto fail = [&](std::string message) {
    out.valid = false;
    out.diagnostics.push_back(std::move(message));
  };

  Partners partners(complex.size());
  for (const auto& [lower, upper] : matching.pairs) {
    const std::string label = "(" + std::to_string(lower) + "," + std::to_string(upper) + ")";
    if (lower < 0 || upper < 0 || lower >= complex.size() || upper >= complex.size()) {
      fail("pair " + label + " refers to a face outside the complex");
      continue;
    }
    if (!complex.is_cover(lower, upper))
      fail("pair " + label + " " + describe(complex, lower) + " < " + describe(complex, upper) +
           " is not a cover relation");
    if (complex.face(lower).label != complex.face(upper).label)
      fail("pair " + label + " joins faces with different labels");
    if (complex.face(lower).dim < 0) fail("pair " + label + " matches the empty face");
    if (partners.matched(lower) || partners.matched(upper))
      fail("pair " + label + " reuses an already matched face");
    partners.up[lower] = upper;
    partners.down[upper] = lower;
  }
  if (!out.valid) return out;

  out.cycle = check == AcyclicityCheck::Alternating
                  ? alternating_cycle(matching, complex, partners)
                  : full_graph_cycle(complex, partners);
  if (!out.cycle.empty()) {
    std::string path;
    for (int id : out.cycle) path += " " + describe(complex, id);
    fail("oriented Hasse diagram has a directed cycle:" + path);
  }
  return out;
}

std::vector<std::uint64_t> critical_cells(const MorseMatching& matching,
                                          const LabeledComplex& complex) {
  std::vector<char> matched(complex.size(), 0);
  for (const auto& [lower, upper] : matching.pairs) matched[lower] = matched[upper] = 1;
  std::vector<std::uint64_t> counts(std::max(complex.top_dimension() + 1, 0), 0);
  for (const auto& f : complex.faces())
    if (f.dim >= 0 && !matched[f.id]) ++counts[f.dim];
  return counts;
}

D2Counts count_formulas(int n) {
  if (n < 6) throw std::invalid_argument("rank-two counts need n >= 6");
  const auto un = static_cast<std::uint64_t>(n);
  D2Counts c;
  c.proper_d2 = un * (un - 3) * (un - 4) / 2;
  c.inscribed_triangles = un * (un - 4) * (un - 5) / 6;
  c.critical_edges = c.proper_d2 - c.inscribed_triangles;
  return c;
}

D2Counts count_by_enumeration(int n) {
  if (n < 6) throw std::invalid_argument("rank-two counts need n >= 6");
  D2Counts c;
  for_each_dissection(n, 2, [&](const Dissection& D) {
    if (classify(D) == SupportClass::Proper) ++c.proper_d2;
  });
  for_each_dissection(n, 3, [&](const Dissection& D) {
    if (classify(D) == SupportClass::Subproper) ++c.inscribed_triangles;
  });
  c.critical_edges = c.proper_d2 - c.inscribed_triangles;
  return c;
}

N7ExtensionCounts n7_extension_counts() {
  constexpr int n = 7;
  std::uint64_t faces[5] = {};
  N7ExtensionCounts c;
  for (int d = 2; d <= 4; ++d) {
    for_each_dissection(n, d, [&](const Dissection& D) {
      ++faces[d];
      const SupportClass k = classify(D);
      if (d == 2 && k == SupportClass::Superproper) ++c.superproper_d2;
      if (d == 3 && k == SupportClass::Subproper) ++c.subproper_d3;
      if (d == 3 && k == SupportClass::Superproper) ++c.superproper_d3;
      if (d == 4 && k == SupportClass::Subproper) ++c.subproper_d4;
    });
  }
  c.edges_after = faces[2] - c.superproper_d2 - c.subproper_d3;
  c.two_faces_after =
      faces[3] - c.superproper_d2 - c.subproper_d3 - c.superproper_d3 - c.subproper_d4;
  c.three_faces_after = faces[4] - c.superproper_d3 - c.subproper_d4;
  return c;
}

MorseMatching greedy_extend(const MorseMatching& matching, const LabeledComplex& complex) {
  const auto check = validate(matching, complex);
  if (!check.valid) throw std::invalid_argument("greedy_extend needs a valid starting matching");

  Partners partners(complex.size());
  for (const auto& [lower, upper] : matching.pairs) {
    partners.up[lower] = upper;
    partners.down[upper] = lower;
  }
  MorseMatching out = matching;
  for (const auto& f : complex.faces()) {
    if (f.dim < 0 || partners.matched(f.id)) continue;
    for (int g : complex.upper_covers(f.id)) {
      if (partners.matched(g) || complex.face(g).label != f.label) continue;
      if (reaches(complex, partners, g, f.id)) continue;
      partners.up[f.id] = g;
      partners.down[g] = f.id;
      out.pairs.emplace_back(f.id, g);
      break;
    }
  }
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

}  // namespace assoc
