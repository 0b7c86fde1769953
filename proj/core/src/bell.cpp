#include "qsimplex/bell.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <future>
#include <numbers>
#include <random>
#include <sstream>

#include "qsimplex/errors.hpp"
#include "qsimplex/pauli.hpp"

namespace qsimplex {

namespace {

constexpr double kUnitTolerance = 1e-12;
constexpr double kViolationSlack = 1e-12;
constexpr double kInitialStep = 0.5;
constexpr double kFinalStep = 1e-8;

DenseMatrix direction_operator(const Vec3& v) {
  const Complex i{0.0, 1.0};
  return DenseMatrix{{v[2], v[0] - i * v[1]}, {v[0] + i * v[1], -v[2]}};
}

Vec3 add(const Vec3& x, const Vec3& y) { return {x[0] + y[0], x[1] + y[1], x[2] + y[2]}; }
Vec3 sub(const Vec3& x, const Vec3& y) { return {x[0] - y[0], x[1] - y[1], x[2] - y[2]}; }

double fast_value(const CVec& raw, int n, const BellSetting& s) {
  const Vec3 plus = add(s.b, s.b_prime);
  const Vec3 minus = sub(s.b, s.b_prime);
  double v = 0.0;
  for (int i = 0; i < 3; ++i) {
    const auto k = static_cast<std::size_t>(i);
    v += raw[i] * (std::pow(s.a[k], n - 1) * plus[k] + std::pow(s.a_prime[k], n - 1) * minus[k]);
  }
  return v;
}

Vec3 unit(double theta, double phi) {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

BellSetting from_angles(const std::array<double, 8>& t) {
  return {unit(t[0], t[1]), unit(t[2], t[3]), unit(t[4], t[5]), unit(t[6], t[7])};
}

OptimizedSetting ascend(const CVec& raw, int n, std::uint64_t seed, int restart) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(restart)};
  std::mt19937_64 rng(seq);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::array<double, 8> t{};
  for (double& x : t) x = angle(rng);

  double best = fast_value(raw, n, from_angles(t));
  for (double step = kInitialStep; step >= kFinalStep;) {
    bool improved = false;
    for (std::size_t p = 0; p < t.size(); ++p) {
      for (double dir : {1.0, -1.0}) {
        const double saved = t[p];
        t[p] = saved + dir * step;
        const double v = fast_value(raw, n, from_angles(t));
        if (v > best) {
          best = v;
          improved = true;
          break;
        }
        t[p] = saved;
      }
    }
    if (!improved) step *= 0.5;
  }
  return {from_angles(t), best};
}

}  // namespace

void validate(const BellSetting& s) {
  for (const Vec3* v : {&s.a, &s.a_prime, &s.b, &s.b_prime}) {
    const double len = std::sqrt((*v)[0] * (*v)[0] + (*v)[1] * (*v)[1] + (*v)[2] * (*v)[2]);
    if (!(std::abs(len - 1.0) <= kUnitTolerance)) {
      std::ostringstream os;
      os << "Bell setting direction has norm " << len << ", expected 1";
      throw DomainError(os.str());
    }
  }
}

DenseMatrix bell_operator(const BellSetting& s, int n) {
  validate(s);
  if (n < 2 || n % 2 != 0 || n > kDenseQubitCap)
    throw DomainError("bell_operator: n must be even and at most 8");
  const DenseMatrix a = direction_operator(s.a);
  const DenseMatrix ap = direction_operator(s.a_prime);
  DenseMatrix first = a;
  DenseMatrix second = ap;
  for (int k = 2; k < n; ++k) {
    first = kron(first, a);
    second = kron(second, ap);
  }
  return kron(first, direction_operator(add(s.b, s.b_prime))) +
         kron(second, direction_operator(sub(s.b, s.b_prime)));
}

double bell_value(const SimplexState& state, const BellSetting& s) {
  const DenseMatrix b = bell_operator(s, state.n());
  const Complex v = trace_product(b, density(state));
  if (std::abs(v.imag()) > 1e-10) throw DomainError("bell_value: expectation is not real");
  return v.real();
}

double bell_value_fast(const SimplexState& state, const BellSetting& s) {
  validate(s);
  return fast_value(state.raw(), state.n(), s);
}

double m_value(const CVec& c) {
  std::array<double, 3> sq{c.c1 * c.c1, c.c2 * c.c2, c.c3 * c.c3};
  std::sort(sq.begin(), sq.end());
  return sq[1] + sq[2];
}

Violation max_violation(const CVec& c, int n, Convention convention) {
  if (!is_physical(c, n, convention)) throw DomainError("max_violation: state is unphysical");
  const double m = m_value(c);
  return {2.0 * std::sqrt(m), m > 1.0 + kViolationSlack};
}

bool cylinder_classify(const CVec& c) {
  const double s12 = c.c1 * c.c1 + c.c2 * c.c2;
  const double s13 = c.c1 * c.c1 + c.c3 * c.c3;
  const double s23 = c.c2 * c.c2 + c.c3 * c.c3;
  return std::max({s12, s13, s23}) > 1.0 + kViolationSlack;
}

OptimizedSetting optimize_settings(const SimplexState& state, int restarts, std::uint64_t seed) {
  if (restarts < 1) throw DomainError("optimize_settings: restarts must be >= 1");
  const CVec raw = state.raw();
  const int n = state.n();
  std::vector<std::future<OptimizedSetting>> jobs;
  jobs.reserve(static_cast<std::size_t>(restarts));
  for (int r = 0; r < restarts; ++r)
    jobs.push_back(std::async(std::launch::async, ascend, raw, n, seed, r));

  OptimizedSetting best = jobs.front().get();
  for (std::size_t r = 1; r < jobs.size(); ++r) {
    OptimizedSetting candidate = jobs[r].get();
    if (candidate.value > best.value) best = candidate;
  }
  return best;
}

}  // namespace qsimplex
