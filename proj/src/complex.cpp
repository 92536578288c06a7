#include "assoc/complex.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>
#include <string>

namespace assoc {

namespace {

using u128 = unsigned __int128;

std::uint64_t narrow(u128 v) {
  if (v > std::numeric_limits<std::uint64_t>::max())
    throw std::overflow_error("value exceeds 64 bits");
  return static_cast<std::uint64_t>(v);
}

}  // namespace

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  u128 r = 1;
  for (int i = 1; i <= k; ++i) {
    // r * (n - k + i) is divisible by i since r = C(n-k+i-1, i-1).
    r = r * static_cast<u128>(n - k + i) / static_cast<u128>(i);
    narrow(r);
  }
  return static_cast<std::uint64_t>(r);
}

std::uint64_t f_formula(int n, int d) {
  if (n < 3 || d < 0 || d > n - 3)
    throw std::invalid_argument("f(n,d) requires 0 <= d <= n-3");
  const u128 num = static_cast<u128>(binomial(n + d, d + 1)) * binomial(n - 3, d);
  if (num % static_cast<u128>(n + d) != 0)
    throw std::logic_error("f(n,d): inexact division");
  return narrow(num / static_cast<u128>(n + d));
}

bool LabeledComplex::is_cover(int lower, int upper) const {
  const auto& l = lower_.at(upper);
  return std::binary_search(l.begin(), l.end(), lower);
}

std::optional<int> LabeledComplex::find(const Dissection& dissection) const {
  if (dissection.n() != n_ && !dissection.empty()) return std::nullopt;
  std::uint64_t mask = 0;
  for (const auto& d : dissection.diagonals()) mask |= std::uint64_t{1} << diagonal_index(d);
  auto it = by_mask_.find(mask);
  if (it == by_mask_.end()) return std::nullopt;
  return it->second;
}

int LabeledComplex::diagonal_index(Diagonal d) const {
  const int idx = diagonal_index_.at(d.a * (n_ + 1) + d.b);
  if (idx < 0) throw std::invalid_argument("not a diagonal of this polygon");
  return idx;
}

int LabeledComplex::top_dimension() const {
  int top = -1;
  for (const auto& f : faces_) top = std::max(top, f.dim);
  return top;
}

std::vector<std::uint64_t> LabeledComplex::f_vector() const {
  std::vector<std::uint64_t> counts(top_dimension() + 2, 0);
  for (const auto& f : faces_) ++counts[f.dim + 1];
  return counts;
}

std::vector<int> LabeledComplex::maximal_faces() const {
  std::vector<int> out;
  for (const auto& f : faces_)
    if (upper_[f.id].empty()) out.push_back(f.id);
  return out;
}

void LabeledComplex::add_face(Face face, std::uint64_t mask) {
  face.id = static_cast<int>(faces_.size());
  if (face.interior)
    interior_id_ = face.id;
  else
    by_mask_.emplace(mask, face.id);
  faces_.push_back(std::move(face));
  masks_.push_back(mask);
}

void LabeledComplex::link_covers() {
  const int count = size();
  lower_.assign(count, {});
  upper_.assign(count, {});
  covers_.clear();
  for (const auto& f : faces_) {
    if (f.interior) {
      for (const auto& g : faces_)
        if (!g.interior && g.dim == f.dim - 1) lower_[f.id].push_back(g.id);
    } else {
      for (std::uint64_t m = masks_[f.id]; m != 0; m &= m - 1) {
        const std::uint64_t below = masks_[f.id] & ~(m & -m);
        auto it = by_mask_.find(below);
        if (it != by_mask_.end()) lower_[f.id].push_back(it->second);
      }
      std::sort(lower_[f.id].begin(), lower_[f.id].end());
    }
    for (int g : lower_[f.id]) {
      upper_[g].push_back(f.id);
      covers_.emplace_back(g, f.id);
    }
  }
}

LabeledComplex build(int n) {
  if (n < 4 || n > kMaxComplexPolygon)
    throw std::invalid_argument("A_n is built for 4 <= n <= " +
                                std::to_string(kMaxComplexPolygon) + ", got " +
                                std::to_string(n));
  LabeledComplex X;
  X.n_ = n;
  const auto diagonals = all_diagonals(n);
  X.diagonal_index_.assign((n + 1) * (n + 1), -1);
  for (std::size_t i = 0; i < diagonals.size(); ++i)
    X.diagonal_index_[diagonals[i].a * (n + 1) + diagonals[i].b] = static_cast<int>(i);

  for (int d = 0; d <= n - 3; ++d) {
    for_each_dissection(n, d, [&](const Dissection& D) {
      std::uint64_t mask = 0;
      for (const auto& diag : D.diagonals())
        mask |= std::uint64_t{1} << X.diagonal_index(diag);
      X.add_face(Face{0, d - 1, false, D, support(D)}, mask);
    });
  }
  X.add_face(Face{0, n - 3, true, Dissection{}, MonomialLabel::full(n)}, 0);
  X.link_covers();
  return X;
}

LabeledComplex restrict(const LabeledComplex& complex, MonomialLabel sigma) {
  LabeledComplex X;
  X.n_ = complex.n_;
  X.diagonal_index_ = complex.diagonal_index_;
  const bool keep_interior = MonomialLabel::full(complex.n_).is_subset_of(sigma);
  for (const auto& f : complex.faces_) {
    if (f.interior ? keep_interior : f.label.is_subset_of(sigma))
      X.add_face(f, complex.masks_[f.id]);
  }
  X.link_covers();
  return X;
}

LabeledComplex boundary_complex(const LabeledComplex& complex) {
  LabeledComplex X;
  X.n_ = complex.n_;
  X.diagonal_index_ = complex.diagonal_index_;
  for (const auto& f : complex.faces_)
    if (!f.interior) X.add_face(f, complex.masks_[f.id]);
  X.link_covers();
  return X;
}

std::vector<Cover> hasse(const LabeledComplex& complex) {
  return {complex.covers().begin(), complex.covers().end()};
}

}  // namespace assoc
