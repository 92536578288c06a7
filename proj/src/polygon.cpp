#include "assoc/polygon.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

namespace assoc {

namespace {

void require_polygon(int n) {
  if (n < 4 || n > kMaxPolygon) {
    throw std::invalid_argument("polygon size must lie in [4, " +
                                std::to_string(kMaxPolygon) + "], got " +
                                std::to_string(n));
  }
}

void require_dissection_size(int n, int d) {
  require_polygon(n);
  if (d < 0 || d > n - 3) {
    throw std::invalid_argument("number of diagonals must lie in [0, n-3], got " +
                                std::to_string(d));
  }
}

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int size) : parent(size) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent[x] = y;
    return true;
  }
};

}  // namespace

VertexSet VertexSet::full(int n) {
  if (n < 0 || n > kMaxPolygon) throw std::invalid_argument("vertex set too large");
  return VertexSet(static_cast<std::uint32_t>(((std::uint64_t{1} << (n + 1)) - 1) & ~1ull));
}

VertexSet VertexSet::of(std::initializer_list<int> vertices) {
  VertexSet s;
  for (int v : vertices) {
    if (v < 1 || v > kMaxPolygon) throw std::invalid_argument("vertex out of range");
    s.insert(v);
  }
  return s;
}

int VertexSet::size() const { return std::popcount(bits_); }

std::vector<int> VertexSet::elements() const {
  std::vector<int> out;
  for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

bool is_diagonal(int n, int a, int b) {
  if (a > b) std::swap(a, b);
  return a >= 1 && b <= n && b - a >= 2 && !(a == 1 && b == n);
}

Diagonal make_diagonal(int n, int a, int b) {
  if (!is_diagonal(n, a, b)) {
    throw std::invalid_argument("{" + std::to_string(a) + "," + std::to_string(b) +
                                "} is not a diagonal of the " + std::to_string(n) +
                                "-gon");
  }
  return a < b ? Diagonal{a, b} : Diagonal{b, a};
}

std::vector<Diagonal> all_diagonals(int n) {
  require_polygon(n);
  std::vector<Diagonal> out;
  out.reserve(n * (n - 3) / 2);
  for (int a = 1; a <= n; ++a)
    for (int b = a + 2; b <= n; ++b)
      if (!(a == 1 && b == n)) out.push_back({a, b});
  return out;
}

Dissection::Dissection(int n, std::vector<Diagonal> diagonals)
    : n_(n), diagonals_(std::move(diagonals)) {
  require_polygon(n);
  for (auto& d : diagonals_) d = make_diagonal(n, d.a, d.b);
  std::sort(diagonals_.begin(), diagonals_.end());
  if (std::adjacent_find(diagonals_.begin(), diagonals_.end()) != diagonals_.end())
    throw std::invalid_argument("dissection contains a repeated diagonal");
  for (std::size_t i = 0; i < diagonals_.size(); ++i)
    for (std::size_t j = i + 1; j < diagonals_.size(); ++j)
      if (crosses(diagonals_[i], diagonals_[j]))
        throw std::invalid_argument("diagonals {" + std::to_string(diagonals_[i].a) + "," +
                                    std::to_string(diagonals_[i].b) + "} and {" +
                                    std::to_string(diagonals_[j].a) + "," +
                                    std::to_string(diagonals_[j].b) + "} cross");
}

bool Dissection::contains(Diagonal d) const {
  return std::binary_search(diagonals_.begin(), diagonals_.end(), d);
}

const char* to_string(SupportClass c) {
  switch (c) {
    case SupportClass::Proper: return "proper";
    case SupportClass::Superproper: return "superproper";
    case SupportClass::Subproper: return "subproper";
  }
  return "?";
}

VertexSet support(const Dissection& dissection) {
  VertexSet s;
  for (const auto& d : dissection.diagonals()) {
    s.insert(d.a);
    s.insert(d.b);
  }
  return s;
}

SupportClass classify(const Dissection& dissection) {
  if (dissection.empty())
    throw std::invalid_argument("classification is undefined for the empty dissection");
  const int s = support(dissection).size();
  const int target = dissection.size() + 1;
  if (s == target) return SupportClass::Proper;
  return s > target ? SupportClass::Superproper : SupportClass::Subproper;
}

bool is_tree(const Dissection& dissection) {
  if (dissection.empty()) return false;
  const VertexSet s = support(dissection);
  // A graph with |E| = |V| - 1 is a tree iff it has no cycle.
  if (dissection.size() != s.size() - 1) return false;
  DisjointSets sets(dissection.n() + 1);
  for (const auto& d : dissection.diagonals())
    if (!sets.unite(d.a, d.b)) return false;
  return true;
}

void for_each_dissection(int n, int d,
                         const std::function<void(const Dissection&)>& visit) {
  require_dissection_size(n, d);
  const auto diagonals = all_diagonals(n);
  const int m = static_cast<int>(diagonals.size());
  std::vector<Diagonal> chosen;
  chosen.reserve(d);

  auto extend = [&](auto&& self, int start) -> void {
    if (static_cast<int>(chosen.size()) == d) {
      visit(Dissection(n, chosen));
      return;
    }
    const int remaining = d - static_cast<int>(chosen.size());
    for (int i = start; i <= m - remaining; ++i) {
      const Diagonal cand = diagonals[i];
      bool ok = true;
      for (const auto& c : chosen)
        if (crosses(c, cand)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chosen.push_back(cand);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  extend(extend, 0);
}

std::map<int, std::uint64_t> count_by_support(int n, int d) {
  std::map<int, std::uint64_t> counts;
  for_each_dissection(n, d, [&](const Dissection& D) { ++counts[support(D).size()]; });
  return counts;
}

std::uint64_t count_trees(int n, int d) {
  std::uint64_t count = 0;
  for_each_dissection(n, d, [&](const Dissection& D) {
    if (is_tree(D)) ++count;
  });
  return count;
}

}  // namespace assoc
