#include "qsimplex/separability.hpp"

#include <bit>
#include <cmath>
#include <sstream>

#include "qsimplex/errors.hpp"
#include "qsimplex/pauli.hpp"

namespace qsimplex {

namespace {

constexpr double kOctahedronSlack = 1e-12;
constexpr double kWeightTolerance = 1e-12;

DenseMatrix qubit_state(const Vec3& r) {
  const Complex i{0.0, 1.0};
  return DenseMatrix{{0.5 * (1.0 + r[2]), 0.5 * (r[0] - i * r[1])},
                     {0.5 * (r[0] + i * r[1]), 0.5 * (1.0 - r[2])}};
}

}  // namespace

bool in_octahedron(const CVec& c) { return l1_norm(c) <= 1.0 + kOctahedronSlack; }

Ensemble separable_decomposition(const CVec& c, int n, Convention convention) {
  if (n < 2 || n % 2 != 0 || n > kDenseQubitCap) {
    std::ostringstream os;
    os << "separable_decomposition: n must be even in 2.." << kDenseQubitCap << ", got " << n;
    throw DomainError(os.str());
  }
  if (!all_finite(c) || !in_octahedron(c)) {
    std::ostringstream os;
    os << "separable_decomposition: point (" << c.c1 << ", " << c.c2 << ", " << c.c3
       << ") lies outside the octahedron";
    throw DomainError(os.str());
  }
  const CVec raw = to_raw(c, n, convention);
  const std::size_t patterns = std::size_t{1} << n;
  const double spread = std::ldexp(1.0, -(n - 1));

  Ensemble e;
  e.n = n;
  for (int axis = 0; axis < 3; ++axis) {
    if (raw[axis] == 0.0) continue;
    const bool want_odd = raw[axis] < 0.0;
    const double w = std::abs(raw[axis]) * spread;
    for (std::size_t mask = 0; mask < patterns; ++mask) {
      // Bit j set means party j points along -e_axis.
      const bool odd = (std::popcount(mask) % 2) == 1;
      if (odd != want_odd) continue;
      ProductTerm t;
      t.weight = w;
      t.bloch.assign(static_cast<std::size_t>(n), Vec3{0.0, 0.0, 0.0});
      for (int j = 0; j < n; ++j)
        t.bloch[static_cast<std::size_t>(j)][static_cast<std::size_t>(axis)] =
            (mask >> j) & 1U ? -1.0 : 1.0;
      e.terms.push_back(std::move(t));
    }
  }
  const double remainder = 1.0 - l1_norm(raw);
  if (remainder > 0.0) {
    ProductTerm t;
    t.weight = remainder;
    t.bloch.assign(static_cast<std::size_t>(n), Vec3{0.0, 0.0, 0.0});
    e.terms.push_back(std::move(t));
  }
  return e;
}

DenseMatrix ensemble_density(const Ensemble& e) {
  if (e.n < 1 || e.n > kDenseQubitCap) throw DomainError("ensemble_density: invalid qubit count");
  if (e.terms.empty()) throw DomainError("ensemble_density: empty ensemble");
  double total = 0.0;
  for (const ProductTerm& t : e.terms) {
    if (!(t.weight >= 0.0)) throw DomainError("ensemble_density: negative weight");
    if (t.bloch.size() != static_cast<std::size_t>(e.n))
      throw DomainError("ensemble_density: term does not cover every party");
    for (const Vec3& r : t.bloch) {
      const double len = std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2]);
      if (!(len <= 1.0 + kWeightTolerance))
        throw DomainError("ensemble_density: Bloch vector longer than 1");
    }
    total += t.weight;
  }
  if (std::abs(total - 1.0) > kWeightTolerance) {
    std::ostringstream os;
    os << "ensemble_density: weights sum to " << total;
    throw DomainError(os.str());
  }

  DenseMatrix rho(std::size_t{1} << e.n);
  for (const ProductTerm& t : e.terms) {
    DenseMatrix product = qubit_state(t.bloch[0]);
    for (std::size_t j = 1; j < t.bloch.size(); ++j) product = kron(product, qubit_state(t.bloch[j]));
    rho += t.weight * product;
  }
  return rho;
}

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::Unphysical: return "unphysical";
    case Classification::Separable: return "separable";
    case Classification::Entangled: return "entangled";
    case Classification::BoundEntangled: return "bound_entangled";
  }
  return "unknown";
}

Classification classify(const CVec& c, int n, Convention convention) {
  if (n < 2 || n % 2 != 0) throw DomainError("classify: qubit count must be even and >= 2");
  if (!is_physical(c, n, convention)) return Classification::Unphysical;
  if (in_octahedron(c)) return Classification::Separable;
  return n == 2 ? Classification::Entangled : Classification::BoundEntangled;
}

}  // namespace qsimplex
