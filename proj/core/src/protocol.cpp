#include "qsimplex/protocol.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <utility>

#include "qsimplex/errors.hpp"
#include "qsimplex/measure.hpp"
#include "qsimplex/pauli.hpp"

namespace qsimplex {

namespace {

// Column-wise nonzeros of an operator that is mostly zeros.
using SparseColumns = std::vector<std::vector<std::pair<std::size_t, Complex>>>;

SparseColumns sparse_columns(const DenseMatrix& m) {
  SparseColumns cols(m.dim());
  for (std::size_t c = 0; c < m.dim(); ++c)
    for (std::size_t r = 0; r < m.dim(); ++r)
      if (m(r, c) != Complex{}) cols[c].emplace_back(r, m(r, c));
  return cols;
}

// M a M^dagger, touching only nonzeros of M.
DenseMatrix conjugate(const SparseColumns& m, const DenseMatrix& a) {
  const std::size_t d = a.dim();
  DenseMatrix out(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (m[i].empty()) continue;
    for (std::size_t j = 0; j < d; ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex{} || m[j].empty()) continue;
      for (const auto& [r, mri] : m[i])
        for (const auto& [s, msj] : m[j]) out(r, s) += mri * aij * std::conj(msj);
    }
  }
  return out;
}

// P U Pi on 2n qubits, where Pi is the party reordering, U the XOR on every
// (source, copy) pair and P the projector onto |0> of every copy.
const SparseColumns& step_operator(int n) {
  static std::mutex mutex;
  static std::map<int, SparseColumns> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  const DenseMatrix keep_zero{{1.0, 0.0}, {0.0, 0.0}};
  const DenseMatrix project_pair = kron(DenseMatrix::identity(2), keep_zero);
  DenseMatrix u = xor_unitary();
  DenseMatrix p = project_pair;
  for (int party = 1; party < n; ++party) {
    u = kron(u, xor_unitary());
    p = kron(p, project_pair);
  }
  const DenseMatrix m = p * u * party_reorder_matrix(n);
  return cache.emplace(n, sparse_columns(m)).first->second;
}

}  // namespace

CVec cmap(const CVec& c) {
  const double d = 1.0 + c.c3 * c.c3;
  return {(c.c1 * c.c1 + c.c2 * c.c2) / d, 2.0 * c.c1 * c.c2 / d, 2.0 * c.c3 / d};
}

CVec protocol_map(const CVec& c, int n, Convention convention) {
  const CVec raw = to_raw(c, n, convention);
  const CVec out = cmap(raw);
  return convention == Convention::Raw ? out : to_canonical(out, n, Convention::Raw);
}

DenseMatrix xor_unitary() {
  return DenseMatrix{{1.0, 0.0, 0.0, 0.0},
                     {0.0, 1.0, 0.0, 0.0},
                     {0.0, 0.0, 0.0, 1.0},
                     {0.0, 0.0, 1.0, 0.0}};
}

DenseMatrix qubit_permutation_matrix(int qubits, std::span<const int> destination) {
  if (qubits < 1 || qubits > 16 || destination.size() != static_cast<std::size_t>(qubits))
    throw DimensionError("qubit_permutation_matrix: destination list must name every qubit");
  std::vector<bool> used(static_cast<std::size_t>(qubits), false);
  for (int d : destination) {
    if (d < 1 || d > qubits || used[static_cast<std::size_t>(d - 1)])
      throw DimensionError("qubit_permutation_matrix: destinations must be a permutation");
    used[static_cast<std::size_t>(d - 1)] = true;
  }
  const std::size_t dim = std::size_t{1} << qubits;
  DenseMatrix m(dim);
  for (std::size_t b = 0; b < dim; ++b) {
    std::size_t image = 0;
    for (int q = 1; q <= qubits; ++q) {
      if ((b >> (qubits - q)) & 1U)
        image |= std::size_t{1} << (qubits - destination[static_cast<std::size_t>(q - 1)]);
    }
    m(image, b) = 1.0;
  }
  return m;
}

DenseMatrix party_reorder_matrix(int n) {
  std::vector<int> destination(static_cast<std::size_t>(2 * n));
  for (int j = 1; j <= n; ++j) {
    destination[static_cast<std::size_t>(j - 1)] = 2 * j - 1;
    destination[static_cast<std::size_t>(n + j - 1)] = 2 * j;
  }
  return qubit_permutation_matrix(2 * n, destination);
}

StepResult simulate_step(const SimplexState& state) {
  const int n = state.n();
  if (n != 2 && n != 4) {
    std::ostringstream os;
    os << "simulate_step: two-copy simulation supports n = 2 or 4, got " << n;
    throw DomainError(os.str());
  }
  const DenseMatrix rho = density(state);
  DenseMatrix sigma = conjugate(step_operator(n), kron(rho, rho));
  const double probability = sigma.trace().real();
  if (!(probability > 1e-15)) {
    std::ostringstream os;
    os << "simulate_step: projection probability " << probability << " is zero";
    throw DomainError(os.str());
  }
  sigma *= 1.0 / probability;

  std::vector<int> sources;
  for (int j = 1; j <= n; ++j) sources.push_back(2 * j - 1);
  const DenseMatrix out = partial_trace(sigma, 2 * n, sources);
  CVec raw{correlation(out, PauliString::uniform(Pauli::X, n)),
           correlation(out, PauliString::uniform(Pauli::Y, n)),
           correlation(out, PauliString::uniform(Pauli::Z, n))};
  const CVec c = state.convention() == Convention::Raw ? raw : to_canonical(raw, n, Convention::Raw);
  return {SimplexState(n, c, state.convention()), probability};
}

double success_probability(const CVec& c, int n) {
  if (n < 2 || n % 2 != 0) throw DomainError("success_probability: qubit count must be even");
  return std::ldexp(1.0 + c.c3 * c.c3, -n);
}

ProtocolTrace iterate(const CVec& c0, int n, int max_steps, double epsilon, Convention convention) {
  if (max_steps < 1) throw DomainError("iterate: max_steps must be positive");
  if (!(epsilon > 0.0)) throw DomainError("iterate: epsilon must be positive");
  if (!is_physical(c0, n, convention)) throw DomainError("iterate: initial state is unphysical");

  ProtocolTrace trace;
  trace.n = n;
  trace.convention = convention;
  auto energy = [&](const CVec& c) {
    return entanglement_formula(to_canonical(c, n, convention), n);
  };
  CVec c = c0;
  for (int k = 0; k < max_steps; ++k) {
    ProtocolStep step;
    step.c_in = c;
    step.c_out = protocol_map(c, n, convention);
    step.success_probability = success_probability(c, n);
    step.e_in = energy(step.c_in);
    step.e_out = energy(step.c_out);
    trace.steps.push_back(step);
    c = step.c_out;
    if (distance(step.c_in, step.c_out) < epsilon) {
      trace.converged = true;
      break;
    }
  }
  trace.fixed_point = c;
  return trace;
}

}  // namespace qsimplex
