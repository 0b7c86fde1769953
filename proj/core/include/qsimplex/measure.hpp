#pragma once

#include <span>
#include <string>
#include <vector>

#include "qsimplex/linalg.hpp"
#include "qsimplex/pauli.hpp"
#include "qsimplex/simplex.hpp"

namespace qsimplex {

struct FlipTerm {
  double coefficient;
  PauliString string;
};

/// Real linear combination of Pauli strings with its dense form.
class FlipOperator {
 public:
  FlipOperator(std::string label, int subsystem, int flips, std::vector<FlipTerm> terms);

  /// Wraps an explicit real symmetric matrix, recovering its Pauli terms.
  static FlipOperator from_dense(std::string label, int subsystem, int flips, DenseMatrix dense);

  const std::string& label() const noexcept { return label_; }
  /// 1-based subsystem the operator belongs to, 0 when not tied to one.
  int subsystem() const noexcept { return subsystem_; }
  int flips() const noexcept { return flips_; }
  int qubits() const noexcept { return qubits_; }
  const std::vector<FlipTerm>& terms() const noexcept { return terms_; }
  const DenseMatrix& dense() const noexcept { return dense_; }

 private:
  std::string label_;
  int subsystem_;
  int flips_;
  int qubits_;
  std::vector<FlipTerm> terms_;
  DenseMatrix dense_;
};

/// The sixteen tabulated 4-flip operators O1..O16 for four qubits. O1..O4 carry
/// sigma_y on qubit 1 in every term, O5..O8 on qubit 2, and so on.
const std::vector<FlipOperator>& four_flip_operators();

/// Generated m-flip operators (m in {2,3,4}) of one subsystem of four qubits:
/// X_F D + D X_F for each pair of basis states |0k>, |0l> (subsystem bit 0,
/// k < l over the other three qubits), D = |0k><0k| - |0l><0l| and F the
/// subsystem plus the qubits where k and l differ. 12, 12 and 4 operators.
const std::vector<FlipOperator>& flip_operators(int m, int subsystem);

/// flip_operators(m, s) for s = 1..4, concatenated.
std::vector<FlipOperator> flip_operators(int m);

/// The two-qubit Wootters flip sigma_y (x) sigma_y.
const FlipOperator& wootters_flip();

/// Square roots of the spectrum of (O rho* O) rho, descending.
std::vector<double> flip_lambdas(const DenseMatrix& rho, const FlipOperator& op);

/// (sum_O max(0, 2 max lambda - sum lambda)^2)^(1/2) over the operators.
double bound_B(const DenseMatrix& rho, std::span<const FlipOperator> operators);

/// X max(0, (1/2) max_i(-1 + c.n_i))^2 on canonical coordinates, X = 2 iff
/// n = 2. No physicality check; outside the tetrahedron the value is only a
/// formula.
double entanglement_formula(const CVec& canonical, int n);

/// entanglement_formula after converting to canonical coordinates.
/// Throws DomainError for unphysical input.
double entanglement_closed(const CVec& c, int n, Convention convention = Convention::Canonical);

/// Hill-Wootters concurrence of a two-qubit density matrix.
double wootters_concurrence(const DenseMatrix& rho);

/// |psi^T O psi|^2, the contribution of one flip operator for a pure state.
double flip_term(std::span<const Complex> psi, const FlipOperator& op);

/// M^2 of subsystem s as the sum of its 2-, 3- and 4-flip terms. n = 4.
double pure_linear_entropy_flip(std::span<const Complex> psi, int subsystem);

/// 2(1 - Tr rho_s^2) from the reduced density matrix. n = 4.
double pure_linear_entropy_direct(std::span<const Complex> psi, int subsystem);

/// C^(m), the square root of all m-flip terms summed over the four subsystems.
double m_concurrence_pure(std::span<const Complex> psi, int m);

struct InfoContent {
  double I = 0.0;  // locally obtainable information
  double E = 0.0;  // entanglement
  double R = 0.0;  // missing information
};

/// I = 0 since every single-party reduction is maximally mixed,
/// E = entanglement_closed, R = n - E.
InfoContent info_content(const CVec& c, int n, Convention convention = Convention::Canonical);

/// Sum over parties of |r_s|^2 = 2 Tr(rho_s^2) - 1 from dense partial traces.
double local_information(const DenseMatrix& rho, int n);

}  // namespace qsimplex
