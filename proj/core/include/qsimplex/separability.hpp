#pragma once

#include <string_view>
#include <vector>

#include "qsimplex/linalg.hpp"
#include "qsimplex/simplex.hpp"

namespace qsimplex {

/// weight * (x)_j (1/2)(1 + bloch[j] . sigma)
struct ProductTerm {
  double weight = 0.0;
  std::vector<Vec3> bloch;
};

struct Ensemble {
  int n = 0;
  std::vector<ProductTerm> terms;
};

/// |c1| + |c2| + |c3| <= 1 + 1e-12. The same set in either convention.
bool in_octahedron(const CVec& c);

/// Explicit product-state ensemble for an octahedron point.
///
/// Each axis i with c_i != 0 contributes weight |c_i| spread uniformly over
/// the 2^(n-1) product states with Bloch vectors s_j e_i whose sign product
/// equals the sign of the raw c_i; the remainder 1 - sum|c_i| is the
/// maximally mixed product term. Zero-weight terms are omitted.
/// Throws DomainError outside the octahedron or for odd n or n > 8.
Ensemble separable_decomposition(const CVec& c, int n,
                                 Convention convention = Convention::Canonical);

/// sum_k w_k (x)_j (1/2)(1 + r_kj . sigma). Validates weights (nonnegative,
/// summing to 1 within 1e-12) and Bloch norms (<= 1 + 1e-12).
DenseMatrix ensemble_density(const Ensemble& e);

enum class Classification { Unphysical, Separable, Entangled, BoundEntangled };

std::string_view to_string(Classification c);

/// Unphysical, Separable (octahedron), or entangled. Entangled states are
/// BoundEntangled for n >= 4; for n = 2 they are distillable and reported as
/// Entangled.
Classification classify(const CVec& c, int n, Convention convention = Convention::Canonical);

}  // namespace qsimplex
