#include "qsimplex/measure.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "qsimplex/errors.hpp"

namespace qsimplex {

namespace {

constexpr double kNormTolerance = 1e-10;
constexpr int kFourQubits = 4;

DenseMatrix dense_from_terms(const std::vector<FlipTerm>& terms) {
  if (terms.empty()) throw DomainError("flip operator needs at least one term");
  const int n = terms.front().string.size();
  DenseMatrix m(std::size_t{1} << n);
  for (const FlipTerm& t : terms) {
    if (t.string.size() != n) throw DimensionError("flip operator terms differ in length");
    m += t.coefficient * pauli_dense(t.string);
  }
  return m;
}

// Every string of n labels, in lexicographic I < X < Y < Z order.
std::vector<PauliString> all_strings(int n) {
  std::vector<PauliString> out;
  const std::size_t count = std::size_t{1} << (2 * n);
  out.reserve(count);
  for (std::size_t code = 0; code < count; ++code) {
    std::vector<Pauli> labels(static_cast<std::size_t>(n));
    for (int q = 0; q < n; ++q)
      labels[static_cast<std::size_t>(q)] = static_cast<Pauli>((code >> (2 * (n - 1 - q))) & 3U);
    out.emplace_back(std::move(labels));
  }
  return out;
}

void require_pure_four_qubit(std::span<const Complex> psi, const char* what) {
  if (psi.size() != 16) {
    std::ostringstream os;
    os << what << ": expected a 16-component state, got " << psi.size();
    throw DimensionError(os.str());
  }
  double norm = 0.0;
  for (const Complex& a : psi) norm += std::norm(a);
  if (std::abs(norm - 1.0) > kNormTolerance) {
    std::ostringstream os;
    os << what << ": state has squared norm " << norm;
    throw DomainError(os.str());
  }
}

void require_subsystem(int s) {
  if (s < 1 || s > kFourQubits) throw DomainError("subsystem index must be in 1..4");
}

std::vector<FlipOperator> build_tabulated() {
  // Strings per group, in the order the operators list them; the sign
  // patterns cycle through (+,-,-,-), (+,-,+,+), (+,+,-,+), (+,+,+,-).
  const std::array<std::array<const char*, 4>, 4> strings{{
      {"YYYY", "YYXX", "YXYX", "YXXY"},
      {"YYYY", "XYXY", "XYYX", "YYXX"},
      {"YYYY", "XXYY", "XYYX", "YXYX"},
      {"YYYY", "XXYY", "XYXY", "YXXY"},
  }};
  const std::array<std::array<int, 4>, 4> signs{{
      {1, -1, -1, -1},
      {1, -1, 1, 1},
      {1, 1, -1, 1},
      {1, 1, 1, -1},
  }};
  std::vector<FlipOperator> ops;
  for (int group = 0; group < 4; ++group) {
    for (int pattern = 0; pattern < 4; ++pattern) {
      std::vector<FlipTerm> terms;
      for (int k = 0; k < 4; ++k)
        terms.push_back({0.25 * signs[static_cast<std::size_t>(pattern)][static_cast<std::size_t>(k)],
                         PauliString::parse(strings[static_cast<std::size_t>(group)]
                                                   [static_cast<std::size_t>(k)])});
      ops.emplace_back("O" + std::to_string(4 * group + pattern + 1), group + 1, 4,
                       std::move(terms));
    }
  }
  return ops;
}

std::vector<FlipOperator> build_generated(int m, int s) {
  const int n = kFourQubits;
  const std::size_t dim = std::size_t{1} << n;
  const std::size_t sbit = std::size_t{1} << (n - s);
  // Basis indices with the subsystem bit clear, ascending.
  std::vector<std::size_t> half;
  for (std::size_t b = 0; b < dim; ++b)
    if ((b & sbit) == 0) half.push_back(b);

  std::vector<FlipOperator> ops;
  for (std::size_t i = 0; i < half.size(); ++i) {
    for (std::size_t j = i + 1; j < half.size(); ++j) {
      const std::size_t b1 = half[i];
      const std::size_t b2 = half[j];
      const std::size_t flip = (b1 ^ b2) | sbit;
      if (std::popcount(flip) != m) continue;
      // X_F D + D X_F with D = |b1><b1| - |b2><b2|.
      DenseMatrix o(dim);
      o(b1 ^ flip, b1) += 1.0;
      o(b1, b1 ^ flip) += 1.0;
      o(b2 ^ flip, b2) -= 1.0;
      o(b2, b2 ^ flip) -= 1.0;
      std::ostringstream label;
      label << "F" << m << "[s" << s << ":" << b1 << "," << b2 << "]";
      ops.push_back(FlipOperator::from_dense(label.str(), s, m, std::move(o)));
    }
  }
  return ops;
}

}  // namespace

FlipOperator::FlipOperator(std::string label, int subsystem, int flips, std::vector<FlipTerm> terms)
    : label_(std::move(label)),
      subsystem_(subsystem),
      flips_(flips),
      qubits_(terms.empty() ? 0 : terms.front().string.size()),
      terms_(std::move(terms)),
      dense_(dense_from_terms(terms_)) {}

FlipOperator FlipOperator::from_dense(std::string label, int subsystem, int flips, DenseMatrix dense) {
  const std::size_t dim = dense.dim();
  if (dim < 2 || !std::has_single_bit(dim)) throw DimensionError("flip operator dimension must be 2^n");
  const int n = std::countr_zero(dim);
  std::vector<FlipTerm> terms;
  for (const PauliString& p : all_strings(n)) {
    const Complex coeff = trace_product(pauli_dense(p), dense) / static_cast<double>(dim);
    if (std::abs(coeff.imag()) > 1e-12) throw DomainError("flip operator must be real and symmetric");
    if (std::abs(coeff.real()) > 1e-14) terms.push_back({coeff.real(), p});
  }
  return FlipOperator(std::move(label), subsystem, flips, std::move(terms));
}

const std::vector<FlipOperator>& four_flip_operators() {
  static const std::vector<FlipOperator> ops = build_tabulated();
  return ops;
}

const std::vector<FlipOperator>& flip_operators(int m, int subsystem) {
  if (m < 2 || m > 4) throw DomainError("flip count must be 2, 3 or 4");
  require_subsystem(subsystem);
  static const auto table = [] {
    std::array<std::array<std::vector<FlipOperator>, 4>, 3> t;
    for (int mm = 2; mm <= 4; ++mm)
      for (int s = 1; s <= 4; ++s)
        t[static_cast<std::size_t>(mm - 2)][static_cast<std::size_t>(s - 1)] = build_generated(mm, s);
    return t;
  }();
  return table[static_cast<std::size_t>(m - 2)][static_cast<std::size_t>(subsystem - 1)];
}

std::vector<FlipOperator> flip_operators(int m) {
  std::vector<FlipOperator> out;
  for (int s = 1; s <= 4; ++s) {
    const auto& part = flip_operators(m, s);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

const FlipOperator& wootters_flip() {
  static const FlipOperator op("YY", 0, 2, {{1.0, PauliString::parse("YY")}});
  return op;
}

std::vector<double> flip_lambdas(const DenseMatrix& rho, const FlipOperator& op) {
  if (rho.dim() != op.dense().dim()) {
    std::ostringstream os;
    os << "flip_lambdas: state dimension " << rho.dim() << " vs operator dimension "
       << op.dense().dim();
    throw DimensionError(os.str());
  }
  const DenseMatrix& o = op.dense();
  const DenseMatrix rho_tilde = o * rho.conj() * o;
  return product_lambda(rho, rho_tilde);
}

double bound_B(const DenseMatrix& rho, std::span<const FlipOperator> operators) {
  double sum = 0.0;
  for (const FlipOperator& op : operators) {
    const std::vector<double> lambda = flip_lambdas(rho, op);
    const double total = std::accumulate(lambda.begin(), lambda.end(), 0.0);
    const double bracket = std::max(0.0, 2.0 * lambda.front() - total);
    sum += bracket * bracket;
  }
  return std::sqrt(sum);
}

double entanglement_formula(const CVec& canonical, int n) {
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& normal : kTetrahedronNormals) best = std::max(best, -1.0 + dot(canonical, normal));
  // Same slack as the octahedron test, so separable points never carry E > 0.
  if (best <= 1e-12) return 0.0;
  const double half = std::max(0.0, 0.5 * best);
  return (n == 2 ? 2.0 : 1.0) * half * half;
}

double entanglement_closed(const CVec& c, int n, Convention convention) {
  if (n < 2 || n % 2 != 0) throw DomainError("entanglement_closed: qubit count must be even");
  if (!is_physical(c, n, convention)) throw DomainError("entanglement_closed: state is unphysical");
  return entanglement_formula(to_canonical(c, n, convention), n);
}

double wootters_concurrence(const DenseMatrix& rho) {
  if (rho.dim() != 4) throw DimensionError("wootters_concurrence: expected a 4x4 density matrix");
  const std::vector<double> eig = hermitian_eigenvalues(rho);
  if (eig.front() < kPsdTolerance) throw NotPsdError(eig.front());
  const Complex tr = rho.trace();
  if (std::abs(tr - 1.0) > kNormTolerance) {
    std::ostringstream os;
    os << "wootters_concurrence: trace is " << tr.real();
    throw DomainError(os.str());
  }
  const std::vector<double> lambda = flip_lambdas(rho, wootters_flip());
  return std::max(0.0, lambda[0] - lambda[1] - lambda[2] - lambda[3]);
}

double flip_term(std::span<const Complex> psi, const FlipOperator& op) {
  const DenseMatrix& o = op.dense();
  if (psi.size() != o.dim()) throw DimensionError("flip_term: state and operator dimensions differ");
  const std::vector<Complex> opsi = o.apply(psi);
  Complex z = 0.0;
  for (std::size_t i = 0; i < psi.size(); ++i) z += psi[i] * opsi[i];
  return std::norm(z);
}

double pure_linear_entropy_flip(std::span<const Complex> psi, int subsystem) {
  require_pure_four_qubit(psi, "pure_linear_entropy_flip");
  require_subsystem(subsystem);
  double sum = 0.0;
  for (int m = 2; m <= 4; ++m)
    for (const FlipOperator& op : flip_operators(m, subsystem)) sum += flip_term(psi, op);
  return sum;
}

double pure_linear_entropy_direct(std::span<const Complex> psi, int subsystem) {
  require_pure_four_qubit(psi, "pure_linear_entropy_direct");
  require_subsystem(subsystem);
  const int keep[1] = {subsystem};
  const DenseMatrix reduced = partial_trace(DenseMatrix::outer(psi), kFourQubits, keep);
  return 2.0 * (1.0 - trace_product(reduced, reduced).real());
}

double m_concurrence_pure(std::span<const Complex> psi, int m) {
  require_pure_four_qubit(psi, "m_concurrence_pure");
  double sum = 0.0;
  for (const FlipOperator& op : flip_operators(m)) sum += flip_term(psi, op);
  return std::sqrt(sum);
}

InfoContent info_content(const CVec& c, int n, Convention convention) {
  InfoContent out;
  out.I = 0.0;
  out.E = entanglement_closed(c, n, convention);
  out.R = static_cast<double>(n) - out.E;
  return out;
}

double local_information(const DenseMatrix& rho, int n) {
  double sum = 0.0;
  for (int s = 1; s <= n; ++s) {
    const int keep[1] = {s};
    const DenseMatrix reduced = partial_trace(rho, n, keep);
    sum += 2.0 * trace_product(reduced, reduced).real() - 1.0;
  }
  return sum;
}

}  // namespace qsimplex
