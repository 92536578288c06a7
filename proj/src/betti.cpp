#include "assoc/betti.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "assoc/complex.hpp"

namespace assoc {

namespace {

void require_cycle(int n, int max_n) {
  if (n < 4 || n > max_n)
    throw std::invalid_argument("cycle size must lie in [4, " + std::to_string(max_n) +
                                "], got " + std::to_string(n));
}

void require_interior_degree(int n, int d) {
  if (n < 4 || n > 60) throw std::invalid_argument("cycle size out of range");
  if (d < 1 || d > n - 3)
    throw std::invalid_argument("homological degree must lie in [1, n-3], got " +
                                std::to_string(d));
}

std::string cell_list(const std::vector<BettiCellMismatch>& cells) {
  std::string out = "Betti methods disagree at";
  for (const auto& c : cells)
    out += " (" + std::to_string(c.d) + "," + std::to_string(c.j) + "): " + c.method_a + "=" +
           std::to_string(c.value_a) + " " + c.method_b + "=" + std::to_string(c.value_b) + ";";
  return out;
}

BettiTable table_from_degrees(int n, std::uint64_t (*value)(int, int)) {
  BettiTable t(n);
  t.add(0, 0, 1);
  for (int d = 1; d <= n - 3; ++d) t.add(d, d + 1, value(n, d));
  t.add(n - 2, n, 1);
  return t;
}

void compare(const BettiTable& a, const char* name_a, const BettiTable& b, const char* name_b,
             std::vector<BettiCellMismatch>& out) {
  std::map<std::pair<int, int>, int> keys;
  for (const auto& [k, v] : a.entries()) keys[k];
  for (const auto& [k, v] : b.entries()) keys[k];
  for (const auto& [k, unused] : keys) {
    const auto va = a.at(k.first, k.second);
    const auto vb = b.at(k.first, k.second);
    if (va != vb) out.push_back({k.first, k.second, name_a, va, name_b, vb});
  }
}

}  // namespace

std::uint64_t BettiTable::at(int d, int j) const {
  auto it = entries_.find({d, j});
  return it == entries_.end() ? 0 : it->second;
}

void BettiTable::add(int d, int j, std::uint64_t value) {
  if (value == 0) return;
  entries_[{d, j}] += value;
}

std::uint64_t BettiTable::total(int d) const {
  std::uint64_t sum = 0;
  for (const auto& [k, v] : entries_)
    if (k.first == d) sum += v;
  return sum;
}

std::vector<std::uint64_t> BettiTable::totals() const {
  std::vector<std::uint64_t> out;
  for (int d = 0; d <= n_ - 2; ++d) out.push_back(total(d));
  return out;
}

const char* to_string(BettiMethod method) {
  switch (method) {
    case BettiMethod::Hochster: return "hochster";
    case BettiMethod::ClosedForm: return "closed";
    case BettiMethod::Recursion: return "recursion";
    case BettiMethod::All: return "all";
  }
  return "?";
}

BettiMethod parse_betti_method(const std::string& name) {
  if (name == "hochster") return BettiMethod::Hochster;
  if (name == "closed") return BettiMethod::ClosedForm;
  if (name == "recursion") return BettiMethod::Recursion;
  if (name == "all") return BettiMethod::All;
  throw std::invalid_argument("unknown method '" + name + "'");
}

BettiTable hochster_betti(int n, int max_n) {
  require_cycle(n, std::min(max_n, 30));
  const std::uint32_t full = (1u << n) - 1;
  BettiTable table(n);
  for (std::uint32_t w = 0; w <= full; ++w) {
    const int size = std::popcount(w);
    if (w == 0) {
      table.add(0, 0, 1);  // H~_{-1} of the empty complex
    } else if (w == full) {
      table.add(n - 2, n, 1);  // H~_1 of the whole cycle
    } else {
      // Path components = vertices of W whose cyclic successor is not in W.
      const std::uint32_t succ = ((w >> 1) | (w << (n - 1))) & full;
      const int components = std::popcount(w & ~succ);
      table.add(size - 1, size, static_cast<std::uint64_t>(components - 1));
    }
  }
  return table;
}

BettiTable hochster_betti_homology(int n, Field field) {
  require_cycle(n, 12);
  BettiTable table(n);
  for (std::uint32_t w = 0; w < (1u << n); ++w) {
    std::vector<std::vector<int>> faces;
    for (int v = 0; v < n; ++v) {
      if (!(w >> v & 1u)) continue;
      faces.push_back({v});
      const int next = (v + 1) % n;
      if (w >> next & 1u) faces.push_back({v, next});
    }
    const int size = std::popcount(w);
    const auto homology = reduced_betti_numbers(SimplicialComplex::from_faces(faces), field);
    for (int k = -1; k <= homology.max_dim(); ++k)
      table.add(size - k - 1, size, homology.at(k));
  }
  return table;
}

std::uint64_t betti_closed_form(int n, int d) {
  require_interior_degree(n, d);
  using u128 = unsigned __int128;
  const u128 num = static_cast<u128>(binomial(n, d + 1)) * static_cast<u128>(d) *
                   static_cast<u128>(n - d - 2);
  if (num % static_cast<u128>(n - 1) != 0) throw std::logic_error("closed form: inexact division");
  return static_cast<std::uint64_t>(num / static_cast<u128>(n - 1));
}

std::uint64_t betti_recursion(int n, int d) {
  require_interior_degree(n, d);
  // memo[m][e] for 4 <= m <= n, 1 <= e <= m-3
  std::vector<std::vector<std::uint64_t>> memo(n + 1);
  for (int m = 4; m <= n; ++m) {
    memo[m].assign(m - 2, 0);
    for (int e = 1; e <= m - 3; ++e) {
      if (m == 5) {
        memo[m][e] = 5;
      } else if (e == 1 || e == m - 3) {
        memo[m][e] = binomial(m, 2) - static_cast<std::uint64_t>(m);
      } else {
        memo[m][e] = memo[m - 1][e - 1] + memo[m - 1][e] + binomial(m - 2, e);
      }
    }
  }
  return memo[n][d];
}

BettiMismatch::BettiMismatch(std::vector<BettiCellMismatch> cells)
    : std::runtime_error(cell_list(cells)), cells_(std::move(cells)) {}

BettiTable betti_table(int n, BettiMethod method) {
  switch (method) {
    case BettiMethod::Hochster: return hochster_betti(n);
    case BettiMethod::ClosedForm:
      require_cycle(n, 60);
      return table_from_degrees(n, betti_closed_form);
    case BettiMethod::Recursion:
      require_cycle(n, 60);
      return table_from_degrees(n, betti_recursion);
    case BettiMethod::All: {
      const BettiTable h = betti_table(n, BettiMethod::Hochster);
      const BettiTable c = betti_table(n, BettiMethod::ClosedForm);
      const BettiTable r = betti_table(n, BettiMethod::Recursion);
      std::vector<BettiCellMismatch> cells;
      compare(h, "hochster", c, "closed", cells);
      compare(h, "hochster", r, "recursion", cells);
      if (!cells.empty()) throw BettiMismatch(std::move(cells));
      return h;
    }
  }
  throw std::invalid_argument("unknown Betti method");
}

std::vector<std::string> table_invariant_violations(const BettiTable& table) {
  std::vector<std::string> out;
  const int n = table.n();
  if (table.at(0, 0) != 1) out.push_back("beta_{0,0} != 1");
  if (table.at(n - 2, n) != 1) out.push_back("beta_{n-2,n} != 1");
  for (const auto& [k, v] : table.entries()) {
    const auto [d, j] = k;
    const bool linear = d >= 1 && d < n - 2 && j == d + 1;
    const bool corner = (d == 0 && j == 0) || (d == n - 2 && j == n);
    if (!linear && !corner)
      out.push_back("nonzero beta_{" + std::to_string(d) + "," + std::to_string(j) +
                    "} off the almost-linear strand");
  }
  for (int d = 1; d <= n - 3; ++d)
    if (table.total(d) != table.total(n - d - 2))
      out.push_back("palindromy fails at d=" + std::to_string(d));
  return out;
}

}  // namespace assoc
