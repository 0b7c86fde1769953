#include "qsimplex/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <string>

#include "qsimplex/errors.hpp"

namespace qsimplex {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxSweeps = 64;

std::string hermitian_message(std::size_t row, std::size_t col, double defect) {
  std::ostringstream os;
  os << "matrix is not Hermitian: |a(" << row << "," << col << ") - conj(a(" << col << ","
     << row << "))| = " << defect;
  return os.str();
}

void require_same_dim(const DenseMatrix& a, const DenseMatrix& b, const char* what) {
  if (a.dim() != b.dim()) {
    std::ostringstream os;
    os << what << ": dimension mismatch (" << a.dim() << " vs " << b.dim() << ")";
    throw DimensionError(os.str());
  }
}

void require_hermitian(const DenseMatrix& a) {
  const std::size_t d = a.dim();
  double worst = 0.0;
  std::size_t wr = 0;
  std::size_t wc = 0;
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = r; c < d; ++c) {
      const double defect = std::abs(a(r, c) - std::conj(a(c, r)));
      if (defect > worst) {
        worst = defect;
        wr = r;
        wc = c;
      }
    }
  }
  if (!(worst <= kHermitianTolerance)) throw NonHermitianError(wr, wc, worst);
}

double off_diagonal_norm(const DenseMatrix& a) {
  double s = 0.0;
  const std::size_t d = a.dim();
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c)
      if (r != c) s += std::norm(a(r, c));
  return std::sqrt(s);
}

double frobenius_norm(const DenseMatrix& a) {
  double s = 0.0;
  for (const Complex& z : a.data()) s += std::norm(z);
  return std::sqrt(s);
}

// Eigenvalues at or below this magnitude are indistinguishable from zero.
double noise_floor(const std::vector<double>& values, std::size_t dim) {
  double scale = 0.0;
  for (double v : values) scale = std::max(scale, std::abs(v));
  return 8.0 * static_cast<double>(dim) * kEps * scale;
}

int checked_qubit_count(const DenseMatrix& rho, int n) {
  if (n < 1 || n > 30 || rho.dim() != (std::size_t{1} << n)) {
    std::ostringstream os;
    os << "matrix of dimension " << rho.dim() << " is not a " << n << "-qubit operator";
    throw DimensionError(os.str());
  }
  return n;
}

// Bit mask over basis indices for the given 1-based qubit labels.
std::size_t qubit_mask(int n, std::span<const int> qubits, bool allow_empty) {
  if (qubits.empty() && !allow_empty) throw DimensionError("qubit set must not be empty");
  std::size_t mask = 0;
  for (int q : qubits) {
    if (q < 1 || q > n) {
      std::ostringstream os;
      os << "qubit index " << q << " outside 1.." << n;
      throw DimensionError(os.str());
    }
    const std::size_t bit = std::size_t{1} << (n - q);
    if (mask & bit) {
      std::ostringstream os;
      os << "qubit index " << q << " listed twice";
      throw DimensionError(os.str());
    }
    mask |= bit;
  }
  return mask;
}

}  // namespace

NonHermitianError::NonHermitianError(std::size_t row, std::size_t col, double defect)
    : Error(hermitian_message(row, col, defect)), row_(row), col_(col), defect_(defect) {}

NotPsdError::NotPsdError(double min_eigenvalue)
    : Error("matrix is not positive semidefinite: eigenvalue " + std::to_string(min_eigenvalue)),
      min_eigenvalue_(min_eigenvalue) {}

DenseMatrix::DenseMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

DenseMatrix::DenseMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : DenseMatrix(rows.size()) {
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != dim_) throw DimensionError("initializer rows must form a square matrix");
    std::copy(row.begin(), row.end(), data_.begin() + static_cast<std::ptrdiff_t>(r * dim_));
    ++r;
  }
}

DenseMatrix DenseMatrix::identity(std::size_t dim) {
  DenseMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::diagonal(std::span<const double> values) {
  DenseMatrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

DenseMatrix DenseMatrix::outer(std::span<const Complex> ket) {
  DenseMatrix m(ket.size());
  for (std::size_t r = 0; r < ket.size(); ++r)
    for (std::size_t c = 0; c < ket.size(); ++c) m(r, c) = ket[r] * std::conj(ket[c]);
  return m;
}

DenseMatrix DenseMatrix::adjoint() const {
  DenseMatrix m(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) m(c, r) = std::conj((*this)(r, c));
  return m;
}

DenseMatrix DenseMatrix::conj() const {
  DenseMatrix m = *this;
  for (Complex& z : m.data_) z = std::conj(z);
  return m;
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix m(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) m(c, r) = (*this)(r, c);
  return m;
}

Complex DenseMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double DenseMatrix::hermiticity_defect() const {
  double worst = 0.0;
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = r; c < dim_; ++c)
      worst = std::max(worst, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
  return worst;
}

bool DenseMatrix::all_finite() const {
  return std::all_of(data_.begin(), data_.end(), [](const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

DenseMatrix& DenseMatrix::operator+=(const DenseMatrix& other) {
  require_same_dim(*this, other, "operator+");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

DenseMatrix& DenseMatrix::operator-=(const DenseMatrix& other) {
  require_same_dim(*this, other, "operator-");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

DenseMatrix& DenseMatrix::operator*=(Complex scalar) {
  for (Complex& z : data_) z *= scalar;
  return *this;
}

DenseMatrix operator*(const DenseMatrix& lhs, const DenseMatrix& rhs) {
  require_same_dim(lhs, rhs, "operator*");
  const std::size_t d = lhs.dim();
  DenseMatrix out(d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t k = 0; k < d; ++k) {
      const Complex a = lhs(r, k);
      if (a == Complex{}) continue;
      for (std::size_t c = 0; c < d; ++c) out(r, c) += a * rhs(k, c);
    }
  }
  return out;
}

std::vector<Complex> DenseMatrix::apply(std::span<const Complex> ket) const {
  if (ket.size() != dim_) throw DimensionError("apply: vector length does not match matrix");
  std::vector<Complex> out(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    Complex s = 0.0;
    for (std::size_t c = 0; c < dim_; ++c) s += (*this)(r, c) * ket[c];
    out[r] = s;
  }
  return out;
}

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
  require_same_dim(a, b, "max_abs_diff");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i)
    worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
  return worst;
}

Complex trace_product(const DenseMatrix& a, const DenseMatrix& b) {
  require_same_dim(a, b, "trace_product");
  Complex t = 0.0;
  const std::size_t d = a.dim();
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t k = 0; k < d; ++k) t += a(r, k) * b(k, r);
  return t;
}

DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b) {
  const std::size_t da = a.dim();
  const std::size_t db = b.dim();
  DenseMatrix out(da * db);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex{}) continue;
      for (std::size_t k = 0; k < db; ++k)
        for (std::size_t l = 0; l < db; ++l) out(i * db + k, j * db + l) = aij * b(k, l);
    }
  return out;
}

EigenSystem hermitian_eigensystem(const DenseMatrix& input) {
  if (!input.all_finite()) throw DomainError("hermitian_eigensystem: non-finite entry");
  require_hermitian(input);

  const std::size_t d = input.dim();
  DenseMatrix a = input;
  // Symmetrize so rounding in the input cannot bias the rotations.
  for (std::size_t r = 0; r < d; ++r) {
    a(r, r) = a(r, r).real();
    for (std::size_t c = r + 1; c < d; ++c) {
      const Complex avg = 0.5 * (a(r, c) + std::conj(a(c, r)));
      a(r, c) = avg;
      a(c, r) = std::conj(avg);
    }
  }
  DenseMatrix v = DenseMatrix::identity(d);

  const double target = 1e-15 * frobenius_norm(a);
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) <= target) break;
    for (std::size_t p = 0; p + 1 < d; ++p) {
      for (std::size_t q = p + 1; q < d; ++q) {
        const Complex apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        // Entries already below the resolution of both diagonals are dropped.
        if (sweep > 3 && mag < kEps * 1e-2 * (std::abs(app) + std::abs(aqq))) {
          a(p, q) = 0.0;
          a(q, p) = 0.0;
          continue;
        }
        const Complex phase = apq / mag;
        const double tau = (aqq - app) / (2.0 * mag);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const Complex s_phase = s * phase;             // J(p,q)
        const Complex s_phase_conj = s * std::conj(phase);  // -J(q,p)

        // A <- A J
        for (std::size_t k = 0; k < d; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = c * akp - s_phase_conj * akq;
          a(k, q) = s_phase * akp + c * akq;
        }
        // A <- J^dagger A
        for (std::size_t k = 0; k < d; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = c * apk - s_phase * aqk;
          a(q, k) = s_phase_conj * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        // V <- V J
        for (std::size_t k = 0; k < d; ++k) {
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = c * vkp - s_phase_conj * vkq;
          v(k, q) = s_phase * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(d);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });

  EigenSystem out{std::vector<double>(d), DenseMatrix(d)};
  for (std::size_t k = 0; k < d; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < d; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const DenseMatrix& a) {
  return hermitian_eigensystem(a).values;
}

DenseMatrix hermitian_sqrt(const DenseMatrix& a) {
  EigenSystem es = hermitian_eigensystem(a);
  const std::size_t d = a.dim();
  if (d > 0 && es.values.front() < kPsdTolerance) throw NotPsdError(es.values.front());
  const double floor = noise_floor(es.values, d);
  std::vector<double> roots(d);
  for (std::size_t k = 0; k < d; ++k)
    roots[k] = es.values[k] <= floor ? 0.0 : std::sqrt(es.values[k]);

  DenseMatrix out(d);
  for (std::size_t k = 0; k < d; ++k) {
    if (roots[k] == 0.0) continue;
    for (std::size_t r = 0; r < d; ++r) {
      const Complex vr = es.vectors(r, k) * roots[k];
      for (std::size_t c = 0; c < d; ++c) out(r, c) += vr * std::conj(es.vectors(c, k));
    }
  }
  for (std::size_t r = 0; r < d; ++r) {
    out(r, r) = out(r, r).real();
    for (std::size_t c = r + 1; c < d; ++c) {
      const Complex avg = 0.5 * (out(r, c) + std::conj(out(c, r)));
      out(r, c) = avg;
      out(c, r) = std::conj(avg);
    }
  }
  return out;
}

std::vector<double> singular_values(const DenseMatrix& input) {
  const std::size_t d = input.dim();
  // Work on columns: col[j][i] = a(i, j).
  std::vector<std::vector<Complex>> col(d, std::vector<Complex>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) col[j][i] = input(i, j);

  auto column_norm2 = [&](std::size_t j) {
    double s = 0.0;
    for (const Complex& z : col[j]) s += std::norm(z);
    return s;
  };

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < d; ++p) {
      for (std::size_t q = p + 1; q < d; ++q) {
        const double alpha = column_norm2(p);
        const double beta = column_norm2(q);
        Complex gamma = 0.0;
        for (std::size_t i = 0; i < d; ++i) gamma += std::conj(col[p][i]) * col[q][i];
        const double g = std::abs(gamma);
        if (g == 0.0 || g <= kEps * std::sqrt(alpha * beta)) continue;
        rotated = true;
        const Complex phase = std::conj(gamma) / g;  // rotates column q so <p,q> is real
        const double zeta = (beta - alpha) / (2.0 * g);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (std::size_t i = 0; i < d; ++i) {
          const Complex xp = col[p][i];
          const Complex xq = col[q][i] * phase;
          col[p][i] = c * xp - s * xq;
          col[q][i] = s * xp + c * xq;
        }
      }
    }
    if (!rotated) break;
  }

  std::vector<double> sv(d);
  for (std::size_t j = 0; j < d; ++j) sv[j] = std::sqrt(column_norm2(j));
  std::sort(sv.begin(), sv.end(), std::greater<>());
  return sv;
}

std::vector<double> product_lambda(const DenseMatrix& rho, const DenseMatrix& rho_tilde) {
  require_same_dim(rho, rho_tilde, "product_lambda");
  const DenseMatrix root_rho = hermitian_sqrt(rho);
  const DenseMatrix root_tilde = hermitian_sqrt(rho_tilde);
  return singular_values(root_tilde * root_rho);
}

DenseMatrix partial_trace(const DenseMatrix& rho, int n, std::span<const int> keep) {
  checked_qubit_count(rho, n);
  const std::size_t keep_mask = qubit_mask(n, keep, false);

  // Kept bit positions, most significant first, so output qubits stay ordered.
  std::vector<int> kept_bits;
  std::vector<int> traced_bits;
  for (int b = n - 1; b >= 0; --b) {
    if (keep_mask & (std::size_t{1} << b))
      kept_bits.push_back(b);
    else
      traced_bits.push_back(b);
  }
  const std::size_t out_dim = std::size_t{1} << kept_bits.size();
  const std::size_t env_dim = std::size_t{1} << traced_bits.size();

  auto scatter = [](std::size_t value, const std::vector<int>& bits) {
    std::size_t idx = 0;
    const std::size_t m = bits.size();
    for (std::size_t k = 0; k < m; ++k)
      if (value & (std::size_t{1} << (m - 1 - k))) idx |= std::size_t{1} << bits[k];
    return idx;
  };

  std::vector<std::size_t> kept_index(out_dim);
  std::vector<std::size_t> env_index(env_dim);
  for (std::size_t i = 0; i < out_dim; ++i) kept_index[i] = scatter(i, kept_bits);
  for (std::size_t e = 0; e < env_dim; ++e) env_index[e] = scatter(e, traced_bits);

  DenseMatrix out(out_dim);
  for (std::size_t i = 0; i < out_dim; ++i)
    for (std::size_t j = 0; j < out_dim; ++j) {
      Complex s = 0.0;
      for (std::size_t e = 0; e < env_dim; ++e)
        s += rho(kept_index[i] | env_index[e], kept_index[j] | env_index[e]);
      out(i, j) = s;
    }
  return out;
}

DenseMatrix partial_transpose(const DenseMatrix& rho, int n, std::span<const int> qubits) {
  checked_qubit_count(rho, n);
  const std::size_t mask = qubit_mask(n, qubits, true);
  const std::size_t d = rho.dim();
  DenseMatrix out(d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) {
      const std::size_t r_src = (r & ~mask) | (c & mask);
      const std::size_t c_src = (c & ~mask) | (r & mask);
      out(r, c) = rho(r_src, c_src);
    }
  return out;
}

}  // namespace qsimplex
