#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qsimplex {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dimension or index mismatch between operands.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A matrix expected to be Hermitian is not, within tolerance.
class NonHermitianError : public Error {
 public:
  NonHermitianError(std::size_t row, std::size_t col, double defect);

  std::size_t row() const noexcept { return row_; }
  std::size_t col() const noexcept { return col_; }
  double defect() const noexcept { return defect_; }

 private:
  std::size_t row_;
  std::size_t col_;
  double defect_;
};

/// A matrix expected to be positive semidefinite has a negative eigenvalue.
class NotPsdError : public Error {
 public:
  explicit NotPsdError(double min_eigenvalue);

  double min_eigenvalue() const noexcept { return min_eigenvalue_; }

 private:
  double min_eigenvalue_;
};

/// Invalid domain input, such as an odd qubit count or an unphysical state.
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace qsimplex
