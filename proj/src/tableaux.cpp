#include "assoc/tableaux.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace assoc {

namespace {

void require_family_range(int n, int d) {
  if (n < 4 || d < 1 || d > n - 3)
    throw std::invalid_argument("shape family needs n >= 4 and 1 <= d <= n-3, got n=" +
                                std::to_string(n) + " d=" + std::to_string(d));
}

}  // namespace

Shape::Shape(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

int Shape::cells() const {
  int total = 0;
  for (int p : parts_) total += p;
  return total;
}

std::string Shape::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

Shape conjugate(const Shape& shape) {
  std::vector<int> out;
  const auto parts = shape.parts();
  if (parts.empty()) return Shape{};
  for (int c = 0; c < parts[0]; ++c) {
    int height = 0;
    while (height < static_cast<int>(parts.size()) && parts[height] > c) ++height;
    out.push_back(height);
  }
  return Shape(std::move(out));
}

Shape associahedron_shape(int n, int d) {
  require_family_range(n, d);
  std::vector<int> parts{d + 1, d + 1};
  parts.insert(parts.end(), n - d - 3, 1);
  return Shape(std::move(parts));
}

Shape syzygy_shape(int n, int d) {
  require_family_range(n, d);
  std::vector<int> parts{d + 1, 2};
  parts.insert(parts.end(), n - d - 3, 1);
  return Shape(std::move(parts));
}

std::optional<FamilyIndex> associahedron_family(const Shape& shape) {
  const auto parts = shape.parts();
  if (parts.size() < 2 || parts[0] != parts[1] || parts[0] < 2) return std::nullopt;
  for (std::size_t i = 2; i < parts.size(); ++i)
    if (parts[i] != 1) return std::nullopt;
  const int d = parts[0] - 1;
  const int n = static_cast<int>(parts.size()) - 2 + d + 3;
  return FamilyIndex{n, d};
}

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  std::vector<int> parts;
  for (const auto& r : rows_) parts.push_back(static_cast<int>(r.size()));
  const Shape s(parts);  // validates the shape
  const int total = s.cells();
  std::vector<bool> seen(total + 1, false);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (std::size_t j = 0; j < rows_[i].size(); ++j) {
      const int v = rows_[i][j];
      if (v < 1 || v > total || seen[v])
        throw std::invalid_argument("tableau entries must be 1..N, each used once");
      seen[v] = true;
      if (j > 0 && rows_[i][j - 1] >= v)
        throw std::invalid_argument("tableau rows must increase");
      if (i > 0 && rows_[i - 1][j] >= v)
        throw std::invalid_argument("tableau columns must increase");
    }
  }
}

Shape Tableau::shape() const {
  std::vector<int> parts;
  for (const auto& r : rows_) parts.push_back(static_cast<int>(r.size()));
  return Shape(std::move(parts));
}

int Tableau::size() const { return shape().cells(); }

std::vector<int> Tableau::reading_word() const {
  std::vector<int> word;
  for (const auto& r : rows_) word.insert(word.end(), r.begin(), r.end());
  return word;
}

std::strong_ordering operator<=>(const Tableau& x, const Tableau& y) {
  if (auto c = x.reading_word() <=> y.reading_word(); c != 0) return c;
  return x.shape() <=> y.shape();
}

std::uint64_t hook_count(const Shape& shape) {
  const Shape conj = conjugate(shape);
  const auto parts = shape.parts();
  const auto cols = conj.parts();
  mpz_class numerator = 1;
  for (int k = 2; k <= shape.cells(); ++k) numerator *= k;
  mpz_class hooks = 1;
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (int j = 0; j < parts[i]; ++j) {
      const int arm = parts[i] - j - 1;
      const int leg = cols[j] - static_cast<int>(i) - 1;
      hooks *= arm + leg + 1;
    }
  if (!mpz_divisible_p(numerator.get_mpz_t(), hooks.get_mpz_t()))
    throw std::logic_error("hook length product does not divide N!");
  const mpz_class count = numerator / hooks;
  if (!count.fits_ulong_p()) throw std::overflow_error("tableau count exceeds 64 bits");
  return count.get_ui();
}

std::vector<Tableau> enumerate_syt(const Shape& shape, int cap) {
  if (shape.cells() > cap)
    throw std::length_error("shape " + shape.to_string() + " has " +
                            std::to_string(shape.cells()) + " cells, enumeration cap is " +
                            std::to_string(cap));
  const auto parts = shape.parts();
  const int total = shape.cells();
  std::vector<std::vector<int>> rows(parts.size());
  std::vector<Tableau> out;

  // Place 1, 2, ..., N in turn at an addable cell of the partial shape.
  auto place = [&](auto&& self, int next) -> void {
    if (next > total) {
      out.emplace_back(rows);
      return;
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const std::size_t len = rows[r].size();
      if (static_cast<int>(len) == parts[r]) continue;
      if (r > 0 && rows[r - 1].size() <= len) continue;
      rows[r].push_back(next);
      self(self, next + 1);
      rows[r].pop_back();
    }
  };
  place(place, 1);
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t syzygy_count(int n, int d) { return hook_count(syzygy_shape(n, d)); }

bool restricts_to_syzygy(const Tableau& tableau) {
  const auto family = associahedron_family(tableau.shape());
  if (!family) throw std::invalid_argument("tableau is not an associahedron tableau");
  const auto& second = tableau.rows()[1];
  for (int k = 0; k < family->d - 1; ++k)
    if (second[2 + k] != family->n + 1 + k) return false;
  return true;
}

Tableau involution(const Tableau& tableau) {
  const auto family = associahedron_family(tableau.shape());
  if (!family) throw std::invalid_argument("tableau is not an associahedron tableau");
  if (restricts_to_syzygy(tableau)) return tableau;

  const int n = family->n;
  const int d = family->d;
  auto rows = tableau.rows();
  const auto& second = rows[1];

  int moved = 0;
  for (int v = n + d - 1; v >= n + 1; --v) {
    if (std::find(second.begin(), second.end(), v) == second.end()) {
      moved = v;
      break;
    }
  }
  if (moved == 0) throw std::logic_error("no displaced large entry in a non-fixed tableau");

  const bool at_column_bottom = rows.size() > 2 && rows.back().front() == moved;
  const bool at_row_end = rows.front().back() == moved;
  FamilyIndex target;
  if (at_column_bottom) {
    rows.pop_back();
    rows[0].push_back(moved);
    rows[1].push_back(n + d);
    target = {n, d + 1};
  } else if (at_row_end) {
    if (rows[1].back() != n + d - 1)
      throw std::logic_error("last entry of the second row is " + std::to_string(rows[1].back()) +
                             ", expected " + std::to_string(n + d - 1));
    rows[0].pop_back();
    rows[1].pop_back();
    rows.push_back({moved});
    target = {n, d - 1};
  } else {
    throw std::logic_error("entry " + std::to_string(moved) +
                           " is neither last in the first row nor bottom of the first column");
  }

  std::optional<Tableau> result;
  try {
    result.emplace(std::move(rows));
  } catch (const std::invalid_argument& e) {
    throw std::logic_error(std::string("involution produced a non-standard filling: ") + e.what());
  }
  if (associahedron_family(result->shape()) != std::optional<FamilyIndex>(target))
    throw std::logic_error("involution left the associahedron family");
  return *result;
}

std::string render(const Tableau& tableau) {
  int width = 1;
  for (const auto& r : tableau.rows())
    for (int v : r) width = std::max(width, static_cast<int>(std::to_string(v).size()));
  std::ostringstream out;
  auto rule = [&](std::size_t boxes) {
    out << '+';
    for (std::size_t i = 0; i < boxes; ++i) out << std::string(width + 2, '-') << '+';
    out << '\n';
  };
  const auto& rows = tableau.rows();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    rule(i == 0 ? rows[0].size() : rows[i - 1].size());
    out << '|';
    for (int v : rows[i]) {
      const std::string s = std::to_string(v);
      out << ' ' << std::string(width - s.size(), ' ') << s << " |";
    }
    out << '\n';
  }
  if (!rows.empty()) rule(rows.back().size());
  return out.str();
}

}  // namespace assoc
