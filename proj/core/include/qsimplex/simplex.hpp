#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string_view>
#include <vector>

#include "qsimplex/linalg.hpp"

namespace qsimplex {

using Vec3 = std::array<double, 3>;

/// Correlation coefficients (c1, c2, c3) of a simplex state.
struct CVec {
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;

  double operator[](int i) const { return i == 0 ? c1 : (i == 1 ? c2 : c3); }
  double& operator[](int i) { return i == 0 ? c1 : (i == 1 ? c2 : c3); }

  friend CVec operator-(const CVec& c) { return {-c.c1, -c.c2, -c.c3}; }
  friend bool operator==(const CVec&, const CVec&) = default;
};

double dot(const CVec& c, const std::array<int, 3>& v);
double norm2(const CVec& c);
double l1_norm(const CVec& c);
double distance(const CVec& a, const CVec& b);
bool all_finite(const CVec& c);

/// Raw coordinates are the coefficients of sigma_i^{(x)n} in the density
/// matrix. Canonical coordinates mirror them for n = 0 (mod 4) so that one
/// set of geometric formulas holds for every even n.
enum class Convention { Raw, Canonical };

std::string_view to_string(Convention c);

/// c unchanged for n = 2 (mod 4), -c for n = 0 (mod 4). An involution.
CVec canonicalize(const CVec& c, int n);
CVec to_raw(const CVec& c, int n, Convention from);
CVec to_canonical(const CVec& c, int n, Convention from);

class SimplexState {
 public:
  /// Throws DomainError unless n is even and >= 2 and c is finite.
  SimplexState(int n, CVec c, Convention convention = Convention::Canonical);

  int n() const noexcept { return n_; }
  const CVec& c() const noexcept { return c_; }
  Convention convention() const noexcept { return convention_; }
  CVec raw() const { return to_raw(c_, n_, convention_); }
  CVec canonical() const { return to_canonical(c_, n_, convention_); }

 private:
  int n_;
  CVec c_;
  Convention convention_;
};

/// Normals of the four positivity planes, in canonical coordinates.
inline constexpr std::array<std::array<int, 3>, 4> kTetrahedronNormals{{
    {-1, 1, 1},
    {1, -1, 1},
    {1, 1, -1},
    {-1, -1, -1},
}};

inline constexpr int kDenseQubitCap = 8;

/// (1/2^n)(1 + sum_i c_i sigma_i^{(x)n}) for even n <= 8.
DenseMatrix density(const SimplexState& state);

struct EigenvalueMultiplicity {
  double value;
  std::uint64_t multiplicity;
};

/// (1 + c.v)/2^n with multiplicity 2^n/4 for each plane normal v, in the
/// order of kTetrahedronNormals. Valid for even n up to 62.
std::array<EigenvalueMultiplicity, 4> closed_eigenvalues(const SimplexState& state);

/// Even n: every closed-form eigenvalue >= -1e-12. Odd n: |c|^2 <= 1 + 1e-12
/// (the convention flag has no meaning there).
bool is_physical(const CVec& c, int n, Convention convention = Convention::Canonical);

/// Tr(rho^2) = (1 + |c|^2)/2^n.
double purity(const SimplexState& state);

/// (2^n/(2^n - 1)) (1 - purity), 1 for the maximally mixed state.
double mixedness(const SimplexState& state);

/// The four |c|^2 = 3 corners in canonical coordinates:
/// (1,1,-1), (1,-1,1), (-1,1,1), (-1,-1,-1).
std::array<CVec, 4> vertices(int n);

/// Four orthogonal GHZ-type kets whose equal mixture is the given vertex
/// (index into vertices(4)) at n = 4.
std::vector<std::vector<Complex>> vertex_ghz_decomposition(int vertex_index, int n = 4);

/// One-qubit Peres test: true iff partial transposition of one qubit (which
/// flips the raw c2) produces an eigenvalue below -1e-12.
/// Throws DomainError for unphysical input.
bool ppt_entangled(const CVec& c, int n, Convention convention = Convention::Canonical);

}  // namespace qsimplex
