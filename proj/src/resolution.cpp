#include "assoc/resolution.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <thread>

namespace assoc {

namespace {

int rotate_vertex(int v, int shift, int n) { return ((v - 1 + shift) % n + n) % n + 1; }

void check_sigma(const LabeledComplex& full, MonomialLabel sigma, Field field,
                 ResolutionReport& report) {
  const int n = full.n();
  const LabeledComplex sub = restrict(full, sigma);
  const AcyclicityVerdict verdict = is_acyclic(sub, field);
  ++report.checked;
  if (verdict.empty)
    ++report.empty;
  else if (verdict.acyclic)
    ++report.acyclic;
  else
    report.failures.push_back({sigma, "restriction has nonzero reduced homology"});

  const int s = sigma.size();
  if (s < 2 || s == n) return;
  const auto apex = cone_witness(n, sigma);
  if (verdict.empty) {
    if (apex) report.failures.push_back({sigma, "cone apex found for an empty restriction"});
    return;
  }
  if (!apex) {
    report.failures.push_back({sigma, "nonempty restriction without a cone apex"});
  } else if (!is_cone_apex(sub, *apex)) {
    report.failures.push_back({sigma, "cone apex misses a facet of the restriction"});
  } else {
    ++report.cone_checked;
    if (!verdict.acyclic)
      report.failures.push_back({sigma, "cone restriction reported non-acyclic"});
  }
}

}  // namespace

std::optional<Diagonal> cone_witness(int n, MonomialLabel sigma) {
  if (n < 4 || n > kMaxPolygon) throw std::invalid_argument("polygon size out of range");
  if (!sigma.is_subset_of(MonomialLabel::full(n)))
    throw std::invalid_argument("sigma is not a subset of [n]");
  const int s = sigma.size();
  if (s < 2 || s == n) throw std::invalid_argument("cone_witness needs 2 <= |sigma| < n");

  int p = 0;
  for (int v : sigma.elements()) {
    if (!sigma.contains(rotate_vertex(v, -1, n))) {
      p = v;
      break;
    }
  }
  // Relabel v -> v - p + 1 (mod n), so p -> 1 and its absent predecessor -> n.
  const int shift = 1 - p;
  MonomialLabel rotated;
  for (int v : sigma.elements()) rotated.insert(rotate_vertex(v, shift, n));

  int j = 0;
  for (int v : rotated.elements())
    if (v > 2) j = v;
  if (j == 0) return std::nullopt;
  const int a = rotate_vertex(1, -shift, n);
  const int b = rotate_vertex(j, -shift, n);
  return make_diagonal(n, a, b);
}

bool is_cone_apex(const LabeledComplex& complex, Diagonal apex) {
  for (int id : complex.maximal_faces()) {
    const Face& f = complex.face(id);
    if (f.interior || !f.dissection.contains(apex)) return false;
  }
  return true;
}

std::vector<Cover> minimality_witnesses(const LabeledComplex& complex) {
  std::vector<Cover> out;
  for (const auto& [lower, upper] : complex.covers()) {
    if (complex.face(lower).dim < 0) continue;
    if (complex.face(lower).label == complex.face(upper).label) out.emplace_back(lower, upper);
  }
  return out;
}

ResolutionReport verify_supports_resolution(int n, Field field, const ResolutionOptions& options) {
  if (n < 4 || n > options.max_n || n > kMaxComplexPolygon)
    throw std::invalid_argument("verification range is 4 <= n <= " +
                                std::to_string(std::min(options.max_n, kMaxComplexPolygon)) +
                                ", got " + std::to_string(n));
  const LabeledComplex full = build(n);
  const std::uint32_t total = 1u << n;

  unsigned workers = options.threads ? options.threads : std::thread::hardware_concurrency();
  workers = std::clamp(workers, 1u, total);

  std::vector<ResolutionReport> partial(workers);
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::uint32_t m = w; m < total; m += workers)
          check_sigma(full, MonomialLabel(m << 1), field, partial[w]);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  ResolutionReport report;
  report.n = n;
  report.field = field;
  for (auto& p : partial) {
    report.checked += p.checked;
    report.empty += p.empty;
    report.acyclic += p.acyclic;
    report.cone_checked += p.cone_checked;
    std::move(p.failures.begin(), p.failures.end(), std::back_inserter(report.failures));
  }
  std::sort(report.failures.begin(), report.failures.end(),
            [](const auto& x, const auto& y) { return x.sigma < y.sigma; });
  return report;
}

}  // namespace assoc
