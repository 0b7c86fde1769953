#pragma once

#include <span>
#include <vector>

#include "qsimplex/linalg.hpp"
#include "qsimplex/simplex.hpp"

namespace qsimplex {

/// ((cx^2 + cy^2), 2 cx cy, 2 cz) / (1 + cz^2).
CVec cmap(const CVec& c);

/// Coordinates in which cmap reproduces the two-copy simulation. Fixed by
/// comparison against simulate_step: the map acts on raw coordinates, so in
/// canonical coordinates for n = 0 (mod 4) one step is c -> -cmap(-c).
inline constexpr Convention kMapConvention = Convention::Raw;

/// One protocol step in the caller's convention.
CVec protocol_map(const CVec& c, int n, Convention convention = Convention::Canonical);

/// CNOT with the first (source) qubit as control.
DenseMatrix xor_unitary();

/// Permutation matrix sending qubit q (1-based) to position destination[q-1].
DenseMatrix qubit_permutation_matrix(int qubits, std::span<const int> destination);

/// Reorders (s1..sn, c1..cn) into (s1, c1, s2, c2, ..., sn, cn).
DenseMatrix party_reorder_matrix(int n);

struct StepResult {
  SimplexState state;
  double probability;
};

/// Full density-matrix simulation of one step on rho (x) rho for n in {2, 4}:
/// reorder parties, apply the XOR per party, keep the branch in which every
/// copy qubit is found in |0>, renormalize and trace out the copies.
/// The output uses the input's convention. Throws DomainError on a zero
/// projection probability.
StepResult simulate_step(const SimplexState& state);

/// sum_x <x|rho|x>^2 = (1 + c3^2)/2^n, the chance that every copy qubit
/// reads |0>.
double success_probability(const CVec& c, int n);

struct ProtocolStep {
  CVec c_in;
  CVec c_out;
  double success_probability = 0.0;
  double e_in = 0.0;
  double e_out = 0.0;
};

struct ProtocolTrace {
  int n = 0;
  Convention convention = Convention::Canonical;  // of every c in the trace
  Convention map_convention = kMapConvention;
  std::vector<ProtocolStep> steps;
  bool converged = false;
  CVec fixed_point;
};

inline constexpr int kDefaultMaxSteps = 200;
inline constexpr double kDefaultEpsilon = 1e-9;

/// Repeats protocol_map from c0 until |c_out - c_in| < epsilon or max_steps
/// are taken. Throws DomainError for unphysical c0.
ProtocolTrace iterate(const CVec& c0, int n, int max_steps = kDefaultMaxSteps,
                      double epsilon = kDefaultEpsilon,
                      Convention convention = Convention::Canonical);

}  // namespace qsimplex
