#include "qsimplex/pauli.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <sstream>

#include "qsimplex/errors.hpp"

namespace qsimplex {

namespace {

constexpr double kImagTolerance = 1e-10;
constexpr Complex kI{0.0, 1.0};

struct DenseCache {
  std::shared_mutex mutex;
  std::map<PauliString, std::unique_ptr<const DenseMatrix>> entries;
};

DenseCache& dense_cache() {
  static DenseCache cache;
  return cache;
}

}  // namespace

char to_char(Pauli p) {
  switch (p) {
    case Pauli::I: return 'I';
    case Pauli::X: return 'X';
    case Pauli::Y: return 'Y';
    case Pauli::Z: return 'Z';
  }
  return '?';
}

PauliString::PauliString(std::vector<Pauli> labels) : labels_(std::move(labels)) {}

PauliString PauliString::parse(std::string_view text) {
  std::vector<Pauli> labels;
  labels.reserve(text.size());
  for (char ch : text) {
    switch (ch) {
      case 'I': case 'i': case '1': labels.push_back(Pauli::I); break;
      case 'X': case 'x': labels.push_back(Pauli::X); break;
      case 'Y': case 'y': labels.push_back(Pauli::Y); break;
      case 'Z': case 'z': labels.push_back(Pauli::Z); break;
      default: throw DomainError(std::string("invalid Pauli label '") + ch + "'");
    }
  }
  if (labels.empty()) throw DomainError("empty Pauli string");
  return PauliString(std::move(labels));
}

PauliString PauliString::uniform(Pauli axis, int n) {
  if (n < 1) throw DomainError("Pauli string needs at least one qubit");
  return PauliString(std::vector<Pauli>(static_cast<std::size_t>(n), axis));
}

bool PauliString::is_identity() const {
  for (Pauli p : labels_)
    if (p != Pauli::I) return false;
  return true;
}

std::string PauliString::str() const {
  std::string out;
  for (Pauli p : labels_) out.push_back(to_char(p));
  return out;
}

const DenseMatrix& pauli_matrix(Pauli p) {
  static const DenseMatrix kId{{1.0, 0.0}, {0.0, 1.0}};
  static const DenseMatrix kX{{0.0, 1.0}, {1.0, 0.0}};
  static const DenseMatrix kY{{0.0, -kI}, {kI, 0.0}};
  static const DenseMatrix kZ{{1.0, 0.0}, {0.0, -1.0}};
  switch (p) {
    case Pauli::I: return kId;
    case Pauli::X: return kX;
    case Pauli::Y: return kY;
    case Pauli::Z: return kZ;
  }
  return kId;
}

std::pair<Complex, std::size_t> pauli_action(const PauliString& s, std::size_t basis_index) {
  const int n = s.size();
  Complex phase = 1.0;
  std::size_t image = basis_index;
  for (int q = 0; q < n; ++q) {
    const std::size_t bit = std::size_t{1} << (n - 1 - q);
    const bool one = (basis_index & bit) != 0;
    switch (s[q]) {
      case Pauli::I: break;
      case Pauli::X: image ^= bit; break;
      case Pauli::Y:
        image ^= bit;
        phase *= one ? -kI : kI;
        break;
      case Pauli::Z:
        if (one) phase = -phase;
        break;
    }
  }
  return {phase, image};
}

const DenseMatrix& pauli_dense(const PauliString& s) {
  if (s.size() < 1) throw DomainError("Pauli string needs at least one qubit");
  if (s.size() > 12) throw DomainError("Pauli string too long for dense expansion");
  DenseCache& cache = dense_cache();
  {
    std::shared_lock lock(cache.mutex);
    auto it = cache.entries.find(s);
    if (it != cache.entries.end()) return *it->second;
  }
  const std::size_t dim = std::size_t{1} << s.size();
  auto m = std::make_unique<DenseMatrix>(dim);
  for (std::size_t col = 0; col < dim; ++col) {
    const auto [phase, row] = pauli_action(s, col);
    (*m)(row, col) = phase;
  }
  std::unique_lock lock(cache.mutex);
  // A concurrent insert of the same key wins; both built identical matrices.
  auto [it, inserted] = cache.entries.try_emplace(s, std::move(m));
  return *it->second;
}

double correlation(const DenseMatrix& rho, const PauliString& s) {
  const std::size_t dim = std::size_t{1} << s.size();
  if (rho.dim() != dim) {
    std::ostringstream os;
    os << "correlation: " << s.size() << "-qubit string against matrix of dimension " << rho.dim();
    throw DimensionError(os.str());
  }
  // Tr(rho P) = sum_col rho(col, row(col)) * phase(col) where P|col> = phase |row>.
  Complex t = 0.0;
  for (std::size_t col = 0; col < dim; ++col) {
    const auto [phase, row] = pauli_action(s, col);
    t += rho(col, row) * phase;
  }
  if (std::abs(t.imag()) > kImagTolerance) {
    std::ostringstream os;
    os << "correlation with " << s.str() << " has imaginary part " << t.imag()
       << "; input is not Hermitian";
    throw DomainError(os.str());
  }
  return t.real();
}

}  // namespace qsimplex
