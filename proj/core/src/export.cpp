#include "qsimplex/export.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <sstream>
#include <thread>

#include "qsimplex/bell.hpp"
#include "qsimplex/errors.hpp"
#include "qsimplex/measure.hpp"

namespace qsimplex {

namespace {

constexpr double kEnvelopeSlack = 1e-9;

double x_factor(int n) { return n == 2 ? 2.0 : 1.0; }

void require_curve_args(int n, int samples) {
  if (n < 2 || n % 2 != 0) throw DomainError("curve: qubit count must be even");
  if (samples < 2) throw DomainError("curve: at least two samples are needed");
}

CurvePoint curve_point(double parameter, const CVec& c, int n) {
  const SimplexState s(n, c);
  const double e = entanglement_closed(c, n);
  return {parameter, c, mixedness(s), e, e / x_factor(n)};
}

}  // namespace

ClassifiedPoint classify_point(const CVec& c, int n, Convention convention) {
  ClassifiedPoint p;
  p.c = to_canonical(c, n, convention);
  p.n = n;
  p.label = classify(p.c, n);
  p.physical = p.label != Classification::Unphysical;
  p.separable = p.label == Classification::Separable;
  p.entangled = p.label == Classification::Entangled || p.label == Classification::BoundEntangled;
  p.bound_entangled = p.label == Classification::BoundEntangled;
  const SimplexState s(n, p.c);
  p.purity = purity(s);
  p.mixedness = mixedness(s);
  if (p.physical) {
    p.entanglement = entanglement_closed(p.c, n);
    p.bell_violating = max_violation(p.c, n).violates;
  }
  return p;
}

std::vector<ClassifiedPoint> sample_grid(int n, int resolution) {
  if (resolution < 2) throw DomainError("sample_grid: resolution must be >= 2");
  if (n < 2 || n % 2 != 0) throw DomainError("sample_grid: qubit count must be even");
  const auto r = static_cast<std::size_t>(resolution);
  auto coord = [&](std::size_t k) {
    return -1.0 + 2.0 * static_cast<double>(k) / static_cast<double>(resolution - 1);
  };
  std::vector<ClassifiedPoint> points(r * r * r);
  // Workers take interleaved c1 slabs and write disjoint, precomputed slots,
  // so the output order does not depend on scheduling.
  const std::size_t workers = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, r);
  std::vector<std::future<void>> jobs;
  for (std::size_t w = 0; w < workers; ++w) {
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < r; i += workers)
        for (std::size_t j = 0; j < r; ++j)
          for (std::size_t k = 0; k < r; ++k)
            points[(i * r + j) * r + k] = classify_point({coord(i), coord(j), coord(k)}, n);
    }));
  }
  for (auto& job : jobs) job.get();
  return points;
}

std::vector<CurvePoint> smolin_curve(int n, int samples) {
  require_curve_args(n, samples);
  std::vector<CurvePoint> out;
  for (int k = 0; k < samples; ++k) {
    const double c = static_cast<double>(k) / (samples - 1);
    out.push_back(curve_point(c, {c, -c, c}, n));
  }
  return out;
}

std::vector<CurvePoint> edge_curve(int n, int samples) {
  require_curve_args(n, samples);
  std::vector<CurvePoint> out;
  for (int k = 0; k < samples; ++k) {
    const double t = static_cast<double>(k) / (samples - 1);
    out.push_back(curve_point(t, {1.0, -1.0 + 2.0 * t, 1.0 - 2.0 * t}, n));
  }
  return out;
}

double smolin_envelope(double norm_squared, int n) {
  const double h = std::max(0.0, 0.5 * (std::sqrt(3.0 * std::max(0.0, norm_squared)) - 1.0));
  return x_factor(n) * h * h;
}

double edge_envelope(double norm_squared, int n) {
  return x_factor(n) * std::max(0.0, 0.5 * (norm_squared - 1.0));
}

EnvelopeReport envelope_check(std::span<const ClassifiedPoint> points, int n) {
  EnvelopeReport report;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const ClassifiedPoint& p = points[i];
    if (!p.physical || p.n != n) continue;
    ++report.checked;
    // Mixedness is a decreasing function of |c|^2, so both curves can be
    // compared at the same |c|^2 instead of the same mixedness.
    const double q = norm2(p.c);
    const double over = p.entanglement - smolin_envelope(q, n);
    const double under = edge_envelope(q, n) - p.entanglement;
    const double excess = std::max({0.0, over, under});
    if (excess > report.worst_excess) {
      report.worst_excess = excess;
      report.worst_index = i;
    }
  }
  report.ok = report.worst_excess <= kEnvelopeSlack;
  std::ostringstream os;
  if (report.ok) {
    os << report.checked << " physical points inside the envelope";
  } else {
    const ClassifiedPoint& w = points[report.worst_index];
    os << "point (" << w.c.c1 << ", " << w.c.c2 << ", " << w.c.c3 << ") with mixedness "
       << w.mixedness << " and E " << w.entanglement << " lies " << report.worst_excess
       << " outside the envelope";
  }
  report.message = os.str();
  return report;
}

}  // namespace qsimplex
