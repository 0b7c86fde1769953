#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "qsimplex/linalg.hpp"
#include "qsimplex/simplex.hpp"

namespace qsimplex::testing {

using Rng = std::mt19937_64;

inline CVec uniform_cube(Rng& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const double a = u(rng);
  const double b = u(rng);
  return {a, b, u(rng)};
}

inline CVec random_physical(Rng& rng, int n) {
  for (;;) {
    const CVec c = uniform_cube(rng);
    if (is_physical(c, n)) return c;
  }
}

inline CVec random_octahedron(Rng& rng) {
  for (;;) {
    const CVec c = uniform_cube(rng);
    if (std::abs(c.c1) + std::abs(c.c2) + std::abs(c.c3) <= 1.0) return c;
  }
}

inline DenseMatrix random_matrix(Rng& rng, std::size_t dim) {
  std::normal_distribution<double> g;
  DenseMatrix m(dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) {
      const double re = g(rng);
      m(r, c) = {re, g(rng)};
    }
  return m;
}

inline DenseMatrix random_hermitian(Rng& rng, std::size_t dim) {
  const DenseMatrix g = random_matrix(rng, dim);
  return 0.5 * (g + g.adjoint());
}

/// G G^dagger normalized to unit trace; full rank with probability one.
inline DenseMatrix random_density(Rng& rng, std::size_t dim) {
  const DenseMatrix g = random_matrix(rng, dim);
  DenseMatrix rho = g * g.adjoint();
  rho *= 1.0 / rho.trace().real();
  return rho;
}

inline std::vector<Complex> random_ket(Rng& rng, std::size_t dim) {
  std::normal_distribution<double> g;
  std::vector<Complex> psi(dim);
  double norm = 0.0;
  for (Complex& a : psi) {
    const double re = g(rng);
    a = {re, g(rng)};
    norm += std::norm(a);
  }
  for (Complex& a : psi) a /= std::sqrt(norm);
  return psi;
}

/// Characteristic polynomial coefficients by Faddeev-LeVerrier:
/// det(x - A) = x^d + c[d-1] x^(d-1) + ... + c[0].
inline std::vector<Complex> characteristic_polynomial(const DenseMatrix& a) {
  const std::size_t d = a.dim();
  std::vector<Complex> c(d + 1, 0.0);
  c[d] = 1.0;
  DenseMatrix m(d);  // M_0 = 0
  for (std::size_t k = 1; k <= d; ++k) {
    DenseMatrix next = a * m;
    for (std::size_t i = 0; i < d; ++i) next(i, i) += c[d - k + 1];
    m = next;
    c[d - k] = -(a * m).trace() / static_cast<double>(k);
  }
  return c;
}

/// All roots of a monic polynomial by Durand-Kerner iteration.
inline std::vector<Complex> polynomial_roots(const std::vector<Complex>& coeffs) {
  const std::size_t d = coeffs.size() - 1;
  auto eval = [&](Complex x) {
    Complex v = 1.0;
    for (std::size_t k = d; k-- > 0;) v = v * x + coeffs[k];
    return v;
  };
  std::vector<Complex> z(d);
  const Complex seed{0.4, 0.9};
  for (std::size_t i = 0; i < d; ++i) z[i] = std::pow(seed, static_cast<double>(i));
  for (int it = 0; it < 2000; ++it) {
    double move = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
      Complex den = 1.0;
      for (std::size_t j = 0; j < d; ++j)
        if (j != i) den *= z[i] - z[j];
      const Complex step = eval(z[i]) / den;
      z[i] -= step;
      move = std::max(move, std::abs(step));
    }
    if (move < 1e-18) break;
  }
  return z;
}

/// Square roots of the eigenvalues of the (non-Hermitian) product a, descending.
inline std::vector<double> sqrt_spectrum_oracle(const DenseMatrix& a) {
  std::vector<double> out;
  for (const Complex& z : polynomial_roots(characteristic_polynomial(a)))
    out.push_back(std::sqrt(std::max(0.0, z.real())));
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace qsimplex::testing
