#pragma once

#include <cstdint>

#include "qsimplex/linalg.hpp"
#include "qsimplex/simplex.hpp"

namespace qsimplex {

/// Measurement directions: a, a' for the first n-1 parties, b, b' for the last.
struct BellSetting {
  Vec3 a{};
  Vec3 a_prime{};
  Vec3 b{};
  Vec3 b_prime{};
};

/// Throws DomainError unless all four vectors have unit norm within 1e-12.
void validate(const BellSetting& s);

/// (a.sigma)^{(x)n-1} (x) ((b+b').sigma) + (a'.sigma)^{(x)n-1} (x) ((b-b').sigma)
/// for even n <= 8.
DenseMatrix bell_operator(const BellSetting& s, int n);

/// Tr(B rho) from the dense operator and density matrix.
double bell_value(const SimplexState& state, const BellSetting& s);

/// Tr(B rho) without dense matrices:
/// sum_i raw_i [a_i^{n-1} (b+b')_i + a'_i^{n-1} (b-b')_i].
double bell_value_fast(const SimplexState& state, const BellSetting& s);

/// Sum of the two largest squared components.
double m_value(const CVec& c);

struct Violation {
  double value;     // 2 sqrt(M), the largest attainable Tr(B rho)
  bool violates;    // M > 1 + 1e-12
};

/// Throws DomainError for unphysical input.
Violation max_violation(const CVec& c, int n, Convention convention = Convention::Canonical);

/// True iff some pair c_i^2 + c_j^2 exceeds 1 + 1e-12, i.e. the point lies
/// outside at least one of the three cylinders.
bool cylinder_classify(const CVec& c);

struct OptimizedSetting {
  BellSetting setting;
  double value;
};

inline constexpr int kDefaultRestarts = 20;

/// Random-restart coordinate ascent over the spherical angles of the four
/// directions, step ladder 0.5 down to 1e-8. Restarts run concurrently;
/// the result depends only on (state, restarts, seed).
OptimizedSetting optimize_settings(const SimplexState& state, int restarts = kDefaultRestarts,
                                   std::uint64_t seed = 0);

}  // namespace qsimplex
