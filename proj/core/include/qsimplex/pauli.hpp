#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qsimplex/linalg.hpp"

namespace qsimplex {

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char to_char(Pauli p);

/// Tensor product of single-qubit Paulis, qubit 1 first.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(std::vector<Pauli> labels);

  /// Parses e.g. "XYZI". Throws DomainError on other characters.
  static PauliString parse(std::string_view text);
  /// sigma_axis on every one of n qubits; axis in {X, Y, Z}.
  static PauliString uniform(Pauli axis, int n);

  int size() const noexcept { return static_cast<int>(labels_.size()); }
  Pauli operator[](int qubit_index) const { return labels_[static_cast<std::size_t>(qubit_index)]; }
  const std::vector<Pauli>& labels() const noexcept { return labels_; }
  bool is_identity() const;
  std::string str() const;

  friend auto operator<=>(const PauliString&, const PauliString&) = default;

 private:
  std::vector<Pauli> labels_;
};

const DenseMatrix& pauli_matrix(Pauli p);

/// Dense 2^n matrix of the string. Results are cached per string for the
/// lifetime of the process; the cache is safe for concurrent use.
const DenseMatrix& pauli_dense(const PauliString& s);

/// Tr(rho * dense(s)). Throws NonHermitianError-style DomainError when the
/// imaginary part exceeds 1e-10, which signals a non-Hermitian rho.
double correlation(const DenseMatrix& rho, const PauliString& s);

/// The ket P|basis>, exploiting that a Pauli string is a phased permutation.
/// Returns {phase, image basis index}.
std::pair<Complex, std::size_t> pauli_action(const PauliString& s, std::size_t basis_index);

}  // namespace qsimplex
