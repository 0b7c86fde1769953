#include "qsimplex/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qsimplex/errors.hpp"
#include "qsimplex/pauli.hpp"

namespace qsimplex {

namespace {

constexpr double kPositivityTolerance = 1e-12;

void require_even(int n, const char* what) {
  if (n < 2 || n % 2 != 0) {
    std::ostringstream os;
    os << what << ": qubit count must be even and >= 2, got " << n;
    throw DomainError(os.str());
  }
}

bool mirrored(int n) { return n % 4 == 0; }

}  // namespace

double dot(const CVec& c, const std::array<int, 3>& v) {
  return c.c1 * v[0] + c.c2 * v[1] + c.c3 * v[2];
}

double norm2(const CVec& c) { return c.c1 * c.c1 + c.c2 * c.c2 + c.c3 * c.c3; }

double l1_norm(const CVec& c) { return std::abs(c.c1) + std::abs(c.c2) + std::abs(c.c3); }

double distance(const CVec& a, const CVec& b) {
  return std::sqrt(norm2({a.c1 - b.c1, a.c2 - b.c2, a.c3 - b.c3}));
}

bool all_finite(const CVec& c) {
  return std::isfinite(c.c1) && std::isfinite(c.c2) && std::isfinite(c.c3);
}

std::string_view to_string(Convention c) { return c == Convention::Raw ? "raw" : "canonical"; }

CVec canonicalize(const CVec& c, int n) {
  require_even(n, "canonicalize");
  return mirrored(n) ? -c : c;
}

CVec to_raw(const CVec& c, int n, Convention from) {
  return from == Convention::Raw ? c : canonicalize(c, n);
}

CVec to_canonical(const CVec& c, int n, Convention from) {
  return from == Convention::Canonical ? c : canonicalize(c, n);
}

SimplexState::SimplexState(int n, CVec c, Convention convention)
    : n_(n), c_(c), convention_(convention) {
  require_even(n, "SimplexState");
  if (!all_finite(c)) throw DomainError("SimplexState: coefficients must be finite");
}

DenseMatrix density(const SimplexState& state) {
  const int n = state.n();
  if (n > kDenseQubitCap) {
    std::ostringstream os;
    os << "density: n = " << n << " exceeds the dense cap of " << kDenseQubitCap;
    throw DomainError(os.str());
  }
  const CVec raw = state.raw();
  const double scale = std::ldexp(1.0, -n);
  DenseMatrix rho = DenseMatrix::identity(std::size_t{1} << n);
  const Pauli axes[3] = {Pauli::X, Pauli::Y, Pauli::Z};
  for (int i = 0; i < 3; ++i) {
    if (raw[i] == 0.0) continue;
    rho += raw[i] * pauli_dense(PauliString::uniform(axes[i], n));
  }
  rho *= scale;
  return rho;
}

std::array<EigenvalueMultiplicity, 4> closed_eigenvalues(const SimplexState& state) {
  const int n = state.n();
  if (n > 62) throw DomainError("closed_eigenvalues: n above 62 overflows the multiplicity");
  // The plane normals act on canonical coordinates; on raw ones they are
  // negated for n = 0 (mod 4). Both views give the same numbers.
  const CVec c = state.canonical();
  std::array<EigenvalueMultiplicity, 4> out{};
  for (std::size_t k = 0; k < 4; ++k) {
    out[k].value = std::ldexp(1.0 + dot(c, kTetrahedronNormals[k]), -n);
    out[k].multiplicity = std::uint64_t{1} << (n - 2);
  }
  return out;
}

bool is_physical(const CVec& c, int n, Convention convention) {
  if (n < 2) throw DomainError("is_physical: qubit count must be >= 2");
  if (!all_finite(c)) return false;
  if (n % 2 != 0) return norm2(c) <= 1.0 + kPositivityTolerance;
  const auto eig = closed_eigenvalues(SimplexState(n, c, convention));
  return std::all_of(eig.begin(), eig.end(),
                     [](const EigenvalueMultiplicity& e) { return e.value >= kPsdTolerance; });
}

double purity(const SimplexState& state) {
  return std::ldexp(1.0 + norm2(state.c()), -state.n());
}

double mixedness(const SimplexState& state) {
  const double d = std::ldexp(1.0, state.n());
  return d / (d - 1.0) * (1.0 - purity(state));
}

std::array<CVec, 4> vertices(int n) {
  require_even(n, "vertices");
  return {{{1, 1, -1}, {1, -1, 1}, {-1, 1, 1}, {-1, -1, -1}}};
}

std::vector<std::vector<Complex>> vertex_ghz_decomposition(int vertex_index, int n) {
  if (n != 4) throw DomainError("vertex_ghz_decomposition: only n = 4 is supported");
  if (vertex_index < 0 || vertex_index > 3)
    throw DomainError("vertex_ghz_decomposition: vertex index must be 0..3");

  // (|0000> + |1111>)/sqrt2 has raw c = (1,1,1), the canonical vertex 3.
  // A single Pauli on qubit 1 flips the signs of the two correlations it
  // anticommutes with and so moves the mixture to the other vertices.
  const Pauli local[4] = {Pauli::Z, Pauli::Y, Pauli::X, Pauli::I};
  std::vector<Complex> ghz(16, 0.0);
  ghz[0] = ghz[15] = 1.0 / std::sqrt(2.0);

  auto apply = [](const PauliString& s, const std::vector<Complex>& psi) {
    std::vector<Complex> out(psi.size(), 0.0);
    for (std::size_t i = 0; i < psi.size(); ++i) {
      const auto [phase, j] = pauli_action(s, i);
      out[j] += phase * psi[i];
    }
    return out;
  };

  std::vector<Pauli> first(4, Pauli::I);
  first[0] = local[vertex_index];
  std::vector<std::vector<Complex>> members;
  members.push_back(apply(PauliString(first), ghz));
  for (const char* flip : {"IIXX", "IXXI", "XXII"})
    members.push_back(apply(PauliString::parse(flip), members.back()));
  return members;
}

bool ppt_entangled(const CVec& c, int n, Convention convention) {
  require_even(n, "ppt_entangled");
  if (!is_physical(c, n, convention)) throw DomainError("ppt_entangled: state is unphysical");
  CVec raw = to_raw(c, n, convention);
  raw.c2 = -raw.c2;
  const auto eig = closed_eigenvalues(SimplexState(n, raw, Convention::Raw));
  return std::any_of(eig.begin(), eig.end(),
                     [](const EigenvalueMultiplicity& e) { return e.value < kPsdTolerance; });
}

}  // namespace qsimplex
