#include "qsimplex/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include "qsimplex/bell.hpp"
#include "qsimplex/errors.hpp"
#include "qsimplex/export.hpp"
#include "qsimplex/measure.hpp"
#include "qsimplex/protocol.hpp"
#include "qsimplex/separability.hpp"
#include "qsimplex/simplex.hpp"

namespace qsimplex {

namespace {

using Rng = std::mt19937_64;

Rng make_rng(std::uint64_t seed, int id) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(id)};
  return Rng(seq);
}

CVec uniform_cube(Rng& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const double a = u(rng);
  const double b = u(rng);
  return {a, b, u(rng)};
}

CVec random_physical(Rng& rng, int n) {
  for (;;) {
    const CVec c = uniform_cube(rng);
    if (is_physical(c, n)) return c;
  }
}

CVec random_octahedron(Rng& rng) {
  for (;;) {
    const CVec c = uniform_cube(rng);
    if (l1_norm(c) <= 1.0) return c;
  }
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

std::string point(const CVec& c) {
  std::ostringstream os;
  os.precision(6);
  os << "(" << c.c1 << ", " << c.c2 << ", " << c.c3 << ")";
  return os.str();
}

CVec nearest_vertex(const CVec& c, int n) {
  const auto vs = vertices(n);
  return *std::min_element(vs.begin(), vs.end(), [&](const CVec& a, const CVec& b) {
    return distance(a, c) < distance(b, c);
  });
}

// 1. n = 2: closed form against twice the squared Wootters concurrence.
CriterionResult bell_state_geometry(std::uint64_t seed) {
  CriterionResult r{1, "n=2 closed form vs Wootters concurrence", false, {}};
  Rng rng = make_rng(seed, 1);
  double worst = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const CVec c = random_physical(rng, 2);
    const double conc = wootters_concurrence(density(SimplexState(2, c)));
    worst = std::max(worst, std::abs(entanglement_closed(c, 2) - 2.0 * conc * conc));
  }
  bool vertices_exact = true;
  double vertex_worst = 0.0;
  for (const CVec& v : vertices(2)) {
    vertices_exact = vertices_exact && entanglement_closed(v, 2) == 2.0;
    const double conc = wootters_concurrence(density(SimplexState(2, v)));
    vertex_worst = std::max(vertex_worst, std::abs(2.0 - 2.0 * conc * conc));
  }
  r.passed = worst <= 1e-10 && vertices_exact && vertex_worst <= 1e-10;
  r.detail = "max |E - 2C^2| = " + fmt(worst) + " over 1000 states; vertices E = 2 " +
             (vertices_exact ? "exactly" : "NOT exactly") + ", Wootters deviation " +
             fmt(vertex_worst);
  return r;
}

// 2. n = 4: B^2 over the sixteen 4-flip operators against the closed form.
CriterionResult measure_consistency(std::uint64_t seed) {
  CriterionResult r{2, "n=4 bound B^2 vs closed form", false, {}};
  const auto& ops = four_flip_operators();
  auto b2 = [&](const CVec& c) {
    const double b = bound_B(density(SimplexState(4, c)), ops);
    return b * b;
  };
  double calibration_worst = 0.0;
  double calibration = 0.0;
  for (const CVec& v : vertices(4)) {
    calibration = b2(v) / entanglement_closed(v, 4);
    calibration_worst = std::max(calibration_worst, std::abs(calibration - 1.0));
  }
  Rng rng = make_rng(seed, 2);
  double worst = 0.0;
  for (int k = 0; k < 200; ++k) {
    const CVec c = random_physical(rng, 4);
    worst = std::max(worst, std::abs(b2(c) - entanglement_closed(c, 4)));
  }
  double oct_worst = 0.0;
  for (int k = 0; k < 200; ++k) {
    const CVec c = random_octahedron(rng);
    oct_worst = std::max({oct_worst, b2(c), entanglement_closed(c, 4)});
  }
  r.passed = calibration_worst <= 1e-8 && worst <= 1e-8 && oct_worst <= 1e-8;
  r.detail = "vertex calibration deviation " + fmt(calibration_worst) + "; max |B^2 - E| = " +
             fmt(worst) + " over 200 states; max octahedron value " + fmt(oct_worst);
  return r;
}

// 3. Closed-form spectrum against the dense eigensolver; mirrored region at n = 4.
CriterionResult spectrum_oracle(std::uint64_t seed) {
  CriterionResult r{3, "closed-form spectrum vs dense eigenvalues", false, {}};
  Rng rng = make_rng(seed, 3);
  double worst = 0.0;
  for (int n : {2, 4, 6}) {
    for (int k = 0; k < 200; ++k) {
      const SimplexState s(n, uniform_cube(rng));
      std::vector<double> closed;
      for (const auto& e : closed_eigenvalues(s))
        closed.insert(closed.end(), e.multiplicity, e.value);
      std::sort(closed.begin(), closed.end());
      const std::vector<double> dense = hermitian_eigenvalues(density(s));
      for (std::size_t i = 0; i < dense.size(); ++i)
        worst = std::max(worst, std::abs(dense[i] - closed[i]));
    }
  }
  // At n = 4 the raw coordinates fill the mirrored tetrahedron.
  int mismatches = 0;
  for (int k = 0; k < 200; ++k) {
    const CVec raw = uniform_cube(rng);
    const double min_eig = hermitian_eigenvalues(density(SimplexState(4, raw, Convention::Raw)))[0];
    bool in_mirror = true;
    for (const auto& normal : kTetrahedronNormals)
      in_mirror = in_mirror && 1.0 - dot(raw, normal) >= -1e-12;
    if ((min_eig >= kPsdTolerance) != in_mirror) ++mismatches;
  }
  const bool corners = is_physical({1, 1, 1}, 4, Convention::Raw) &&
                       !is_physical({-1, -1, -1}, 4, Convention::Raw) &&
                       !is_physical({1, 1, 1}, 2, Convention::Raw);
  r.passed = worst <= 1e-10 && mismatches == 0 && corners;
  r.detail = "max eigenvalue deviation " + fmt(worst) + " (n = 2, 4, 6; 200 each); " +
             std::to_string(mismatches) + " mirrored-region mismatches at n = 4; raw (1,1,1) " +
             (corners ? "physical at n = 4 only" : "has the wrong status");
  return r;
}

// 4. Separable ensembles reproduce the density matrix.
CriterionResult separability_certificates(std::uint64_t seed) {
  CriterionResult r{4, "separable decompositions reconstruct rho", false, {}};
  Rng rng = make_rng(seed, 4);
  double worst = 0.0;
  double weight_defect = 0.0;
  bool nonnegative = true;
  double longest = 0.0;
  for (int n : {2, 4}) {
    for (int k = 0; k < 200; ++k) {
      const CVec c = random_octahedron(rng);
      const Ensemble e = separable_decomposition(c, n);
      double total = 0.0;
      for (const ProductTerm& t : e.terms) {
        nonnegative = nonnegative && t.weight >= 0.0;
        total += t.weight;
        for (const Vec3& b : t.bloch)
          longest = std::max(longest, std::sqrt(b[0] * b[0] + b[1] * b[1] + b[2] * b[2]));
      }
      weight_defect = std::max(weight_defect, std::abs(total - 1.0));
      worst = std::max(worst, max_abs_diff(ensemble_density(e), density(SimplexState(n, c))));
    }
  }
  r.passed = worst <= 1e-12 && nonnegative && weight_defect <= 1e-12 && longest <= 1.0;
  r.detail = "max residual " + fmt(worst) + "; weight sum defect " + fmt(weight_defect) +
             "; weights " + (nonnegative ? "nonnegative" : "NEGATIVE") +
             "; longest Bloch vector " + fmt(longest);
  return r;
}

// 5. Two-copy simulation against the pinned c-map.
CriterionResult protocol_oracle(std::uint64_t seed) {
  CriterionResult r{5, "two-copy simulation vs c-map", false, {}};
  Rng rng = make_rng(seed, 5);
  double worst = 0.0;
  double worst_prob = 0.0;
  for (int n : {2, 4}) {
    for (int k = 0; k < 100; ++k) {
      const CVec c = random_physical(rng, n);
      const StepResult step = simulate_step(SimplexState(n, c));
      worst = std::max(worst, distance(step.state.c(), protocol_map(c, n)));
      worst_prob = std::max(worst_prob, std::abs(step.probability - success_probability(c, n)));
    }
  }
  bool exact = true;
  for (int n : {2, 4})
    exact = exact && simulate_step(SimplexState(n, {0, 0, 0})).probability == std::ldexp(1.0, -n);
  r.passed = worst <= 1e-10 && exact;
  r.detail = "max |simulated - cmap| = " + fmt(worst) + " with the map acting on " +
             std::string(to_string(kMapConvention)) + " coordinates; p(c=0) = 2^-n " +
             (exact ? "exactly" : "NOT exactly") + "; max |p - (1+c3^2)/2^n| = " + fmt(worst_prob);
  return r;
}

// 6. Smolin-line dynamics.
CriterionResult smolin_dynamics(std::uint64_t) {
  CriterionResult r{6, "Smolin-line dynamics", false, {}};
  int not_increasing = 0;
  for (int n : {2, 4}) {
    for (int k = 0; k < 100; ++k) {
      const double c = 1.0 / 3.0 + (k + 0.5) / 100.0 * (2.0 / 3.0);
      const CVec in{c, -c, c};
      if (!(entanglement_closed(protocol_map(in, n), n) > entanglement_closed(in, n)))
        ++not_increasing;
    }
  }

  const ProtocolTrace trace = iterate({0.5, -0.5, 0.5}, 4, 60, kDefaultEpsilon);
  const CVec end = trace.fixed_point;
  const double to_vertex = distance(end, nearest_vertex(end, 4));
  const bool reaches_vertex = to_vertex <= 1e-6;

  double zero_worst = 0.0;
  const double lo = -1.0 / std::sqrt(3.0);
  const double hi = 1.0 / 3.0;
  for (int n : {2, 4}) {
    for (int k = 0; k <= 100; ++k) {
      const double c = lo + (hi - lo) * k / 100.0;
      const CVec in{c, -c, c};
      const CVec out = protocol_map(in, n);
      zero_worst = std::max({zero_worst, entanglement_formula(in, n), entanglement_formula(out, n)});
    }
  }

  r.passed = not_increasing == 0 && reaches_vertex && zero_worst == 0.0;
  std::ostringstream os;
  os << "E increases on " << (200 - not_increasing) << "/200 points; iteration from c=0.5 (n=4) "
     << "ends after " << trace.steps.size() << " steps at " << point(end) << ", "
     << fmt(to_vertex) << " from the nearest vertex (limit 1e-6), E = "
     << fmt(trace.steps.back().e_out) << "; max E on [-1/sqrt3, 1/3] before/after = "
     << fmt(zero_worst);
  r.detail = os.str();
  return r;
}

// 7. Bell criterion.
CriterionResult bell_criterion(std::uint64_t seed) {
  CriterionResult r{7, "CHSH maximum 2 sqrt(M)", false, {}};
  Rng rng = make_rng(seed, 7);
  double worst = 0.0;
  double overshoot = 0.0;
  for (int k = 0; k < 50; ++k) {
    const int n = k % 2 == 0 ? 2 : 4;
    const CVec c = random_physical(rng, n);
    const double target = max_violation(c, n).value;
    const double got = optimize_settings(SimplexState(n, c), kDefaultRestarts, seed + k).value;
    worst = std::max(worst, std::abs(got - target));
    overshoot = std::max(overshoot, got - target);
  }
  const double tsirelson = 2.0 * std::numbers::sqrt2;
  const double vertex = optimize_settings(SimplexState(2, {1, 1, -1}), kDefaultRestarts, seed).value;
  const bool vertex_ok = std::abs(vertex - tsirelson) <= 1e-6 &&
                         std::abs(max_violation({1, 1, -1}, 2).value - tsirelson) <= 1e-12;

  // Bisection on the Werner line (c, -c, c), n = 2.
  double lo = 0.0;
  double hi = 1.0;
  for (int it = 0; it < 60; ++it) {
    const double mid = 0.5 * (lo + hi);
    (max_violation({mid, -mid, mid}, 2).violates ? hi : lo) = mid;
  }
  const double threshold_error = std::abs(hi - 1.0 / std::numbers::sqrt2);

  int violating_separable = 0;
  int violating = 0;
  for (int n : {2, 4}) {
    for (const ClassifiedPoint& p : sample_grid(n, 21)) {
      if (!p.bell_violating) continue;
      ++violating;
      if (!p.entangled) ++violating_separable;
    }
  }
  r.passed = worst <= 1e-6 && overshoot <= 1e-9 && vertex_ok && threshold_error <= 1e-6 &&
             violating_separable == 0;
  r.detail = "max |optimum - 2sqrt(M)| = " + fmt(worst) + " over 50 states; vertex optimum " +
             fmt(vertex) + "; Werner threshold off by " + fmt(threshold_error) + "; " +
             std::to_string(violating_separable) + " of " + std::to_string(violating) +
             " violating grid points not entangled";
  return r;
}

// 8. Flip-operator form of the one-party linear entropy.
CriterionResult flip_identity(std::uint64_t seed) {
  CriterionResult r{8, "flip-operator linear entropy identity", false, {}};
  Rng rng = make_rng(seed, 8);
  std::normal_distribution<double> g;
  double worst = 0.0;
  double split_worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    std::vector<Complex> psi(16);
    double norm = 0.0;
    for (Complex& a : psi) {
      const double re = g(rng);
      a = {re, g(rng)};
      norm += std::norm(a);
    }
    for (Complex& a : psi) a /= std::sqrt(norm);
    double total = 0.0;
    for (int s = 1; s <= 4; ++s) {
      const double direct = pure_linear_entropy_direct(psi, s);
      worst = std::max(worst, std::abs(pure_linear_entropy_flip(psi, s) - direct));
      total += direct;
    }
    double split = 0.0;
    for (int m = 2; m <= 4; ++m) split += std::pow(m_concurrence_pure(psi, m), 2);
    split_worst = std::max(split_worst, std::abs(split - total));
  }
  std::vector<Complex> ghz(16, 0.0);
  ghz[0] = ghz[15] = 1.0 / std::sqrt(2.0);
  const double c2 = std::pow(m_concurrence_pure(ghz, 2), 2);
  const double c3 = std::pow(m_concurrence_pure(ghz, 3), 2);
  const double c4 = std::pow(m_concurrence_pure(ghz, 4), 2);
  const bool ghz_ok = c2 <= 1e-12 && c3 <= 1e-12 && std::abs(c2 + c3 + c4 - 4.0) <= 1e-9;
  r.passed = worst <= 1e-9 && split_worst <= 1e-9 && ghz_ok;
  r.detail = "max |flip sum - 2(1 - Tr rho_s^2)| = " + fmt(worst) + "; max |sum_m C_m^2 - sum_s M^2| = " +
             fmt(split_worst) + "; GHZ4 (C2^2, C3^2, C4^2) = (" + fmt(c2) + ", " + fmt(c3) + ", " +
             fmt(c4) + ")";
  return r;
}

// 9. I + E + R = n.
CriterionResult information_accounting(std::uint64_t) {
  CriterionResult r{9, "information accounting I + E + R = n", false, {}};
  int checked = 0;
  int inexact = 0;
  double dense_local = 0.0;
  for (int n : {2, 4, 6, 8}) {
    for (const ClassifiedPoint& p : sample_grid(n, 11)) {
      if (!p.physical) continue;
      const InfoContent ic = info_content(p.c, n);
      ++checked;
      if (ic.I + ic.E + ic.R != static_cast<double>(n)) ++inexact;
    }
  }
  for (const ClassifiedPoint& p : sample_grid(4, 5))
    if (p.physical)
      dense_local = std::max(dense_local, std::abs(local_information(density(SimplexState(4, p.c)), 4)));
  const InfoContent v = info_content({1, 1, -1}, 4);
  const bool vertex_ok = v.I == 0.0 && v.E == 1.0 && v.R == 3.0;
  r.passed = inexact == 0 && vertex_ok && dense_local <= 1e-12;
  r.detail = std::to_string(checked - inexact) + "/" + std::to_string(checked) +
             " states sum to n exactly; n=4 vertex (I, E, R) = (" + fmt(v.I) + ", " + fmt(v.E) +
             ", " + fmt(v.R) + "); max dense local information " + fmt(dense_local);
  return r;
}

// 10. Mixedness-entanglement envelope.
CriterionResult figure_envelope(std::uint64_t seed) {
  CriterionResult r{10, "mixedness-entanglement envelope", false, {}};
  Rng rng = make_rng(seed, 10);
  std::vector<ClassifiedPoint> points;
  points.reserve(10000);
  for (int k = 0; k < 10000; ++k) points.push_back(classify_point(random_physical(rng, 4), 4));
  for (const CVec& v : vertices(4)) points.push_back(classify_point(v, 4));
  const EnvelopeReport rep = envelope_check(points, 4);
  r.passed = rep.ok && rep.checked == points.size();
  r.detail = rep.message;
  return r;
}

// 11. Every bound-entangled grid point reaches a Bell violation under the map.
CriterionResult hidden_nonlocality(std::uint64_t) {
  CriterionResult r{11, "hidden nonlocality within 200 iterations", false, {}};
  int candidates = 0;
  int reached = 0;
  CVec example{};
  bool have_example = false;
  for (const ClassifiedPoint& p : sample_grid(4, 20)) {
    if (!p.bound_entangled) continue;
    ++candidates;
    CVec c = p.c;
    bool hit = m_value(c) > 1.0 + 1e-12;
    for (int k = 0; k < kDefaultMaxSteps && !hit; ++k) {
      c = protocol_map(c, 4);
      hit = m_value(c) > 1.0 + 1e-12;
    }
    if (hit) {
      ++reached;
    } else if (!have_example) {
      example = p.c;
      have_example = true;
    }
  }
  r.passed = candidates > 0 && reached == candidates;
  r.detail = std::to_string(reached) + "/" + std::to_string(candidates) +
             " bound-entangled grid points reach M > 1";
  if (have_example) {
    CVec c = example;
    for (int k = 0; k < kDefaultMaxSteps; ++k) c = protocol_map(c, 4);
    r.detail += "; e.g. " + point(example) + " flows to " + point(c) + " with M = " + fmt(m_value(c));
  }
  return r;
}

}  // namespace

CriterionResult run_criterion(int id, std::uint64_t seed) {
  static const std::function<CriterionResult(std::uint64_t)> table[kCriterionCount] = {
      bell_state_geometry,  measure_consistency,    spectrum_oracle, separability_certificates,
      protocol_oracle,      smolin_dynamics,        bell_criterion,  flip_identity,
      information_accounting, figure_envelope,      hidden_nonlocality};
  if (id < 1 || id > kCriterionCount) throw DomainError("criterion id must be in 1..11");
  try {
    return table[id - 1](seed);
  } catch (const std::exception& e) {
    return {id, "criterion " + std::to_string(id), false, std::string("error: ") + e.what()};
  }
}

std::vector<CriterionResult> run_acceptance(std::uint64_t seed) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id, seed));
  return out;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.passed ? "PASS" : "FAIL") << " [" << (r.id < 10 ? " " : "") << r.id << "] " << r.title
     << ": " << r.detail;
  return os.str();
}

}  // namespace qsimplex
