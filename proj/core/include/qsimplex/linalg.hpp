#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace qsimplex {

using Complex = std::complex<double>;

/// Square dense complex matrix, row-major.
///
/// Multi-qubit operators use the convention that qubit 1 is the leftmost
/// (most significant) tensor factor, so basis index bit (n - q) belongs to
/// qubit q.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t dim);
  DenseMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static DenseMatrix identity(std::size_t dim);
  static DenseMatrix diagonal(std::span<const double> values);
  static DenseMatrix outer(std::span<const Complex> ket);

  std::size_t dim() const noexcept { return dim_; }

  Complex& operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return data_[row * dim_ + col];
  }

  std::span<const Complex> data() const noexcept { return data_; }

  DenseMatrix adjoint() const;
  DenseMatrix conj() const;
  DenseMatrix transpose() const;
  Complex trace() const;

  /// Largest entry of |A - A^dagger|.
  double hermiticity_defect() const;
  bool all_finite() const;

  DenseMatrix& operator+=(const DenseMatrix& other);
  DenseMatrix& operator-=(const DenseMatrix& other);
  DenseMatrix& operator*=(Complex scalar);

  friend DenseMatrix operator+(DenseMatrix lhs, const DenseMatrix& rhs) { return lhs += rhs; }
  friend DenseMatrix operator-(DenseMatrix lhs, const DenseMatrix& rhs) { return lhs -= rhs; }
  friend DenseMatrix operator*(DenseMatrix lhs, Complex scalar) { return lhs *= scalar; }
  friend DenseMatrix operator*(Complex scalar, DenseMatrix rhs) { return rhs *= scalar; }
  friend DenseMatrix operator*(const DenseMatrix& lhs, const DenseMatrix& rhs);

  std::vector<Complex> apply(std::span<const Complex> ket) const;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

/// Largest absolute entry of a - b. Dimensions must agree.
double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);

/// Tr(a * b) without forming the product.
Complex trace_product(const DenseMatrix& a, const DenseMatrix& b);

DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b);

/// Tolerance on max |A - A^dagger| accepted as Hermitian.
inline constexpr double kHermitianTolerance = 1e-12;
/// Eigenvalues at or above this count as nonnegative.
inline constexpr double kPsdTolerance = -1e-12;

struct EigenSystem {
  std::vector<double> values;  // ascending
  DenseMatrix vectors;         // column k pairs with values[k]
};

/// Cyclic Jacobi diagonalization of a Hermitian matrix.
/// Throws NonHermitianError naming the worst entry if the input is not Hermitian.
EigenSystem hermitian_eigensystem(const DenseMatrix& a);

/// Ascending eigenvalues of a Hermitian matrix.
std::vector<double> hermitian_eigenvalues(const DenseMatrix& a);

/// Principal square root of a Hermitian PSD matrix. Eigenvalues in
/// [kPsdTolerance, 0) are clamped to zero; anything lower throws NotPsdError.
DenseMatrix hermitian_sqrt(const DenseMatrix& a);

/// Singular values, descending, by one-sided Jacobi (Hestenes) rotations.
std::vector<double> singular_values(const DenseMatrix& a);

/// Square roots of the eigenvalues of rho_tilde * rho, descending.
///
/// Both inputs must be Hermitian PSD. The values equal the square roots of
/// the spectrum of sqrt(rho) rho_tilde sqrt(rho); they are obtained as the
/// singular values of sqrt(rho_tilde) sqrt(rho), which avoids taking square
/// roots of rounding noise.
std::vector<double> product_lambda(const DenseMatrix& rho, const DenseMatrix& rho_tilde);

/// Reduced state on the qubits in `keep` (1-based labels, any order,
/// no duplicates). The result orders the kept qubits ascending.
DenseMatrix partial_trace(const DenseMatrix& rho, int n, std::span<const int> keep);

/// Transposes the tensor factors listed in `qubits` (1-based labels).
DenseMatrix partial_transpose(const DenseMatrix& rho, int n, std::span<const int> qubits);

}  // namespace qsimplex
