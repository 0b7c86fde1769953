#include <gtest/gtest.h>

#include <random>
#include <thread>

#include "qsimplex/errors.hpp"
#include "qsimplex/pauli.hpp"
#include "qsimplex/simplex.hpp"
#include "support.hpp"

namespace qsimplex {
namespace {

PauliString random_string(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> pick(0, 3);
  std::vector<Pauli> labels;
  for (int q = 0; q < n; ++q) labels.push_back(static_cast<Pauli>(pick(rng)));
  return PauliString(labels);
}

TEST(PauliString, ParseAndPrint) {
  const PauliString s = PauliString::parse("XYZI");
  EXPECT_EQ(s.size(), 4);
  EXPECT_EQ(s[1], Pauli::Y);
  EXPECT_EQ(s.str(), "XYZI");
  EXPECT_THROW(PauliString::parse("XQ"), DomainError);
  EXPECT_THROW(PauliString::parse(""), DomainError);
}

TEST(PauliString, Uniform) {
  EXPECT_EQ(PauliString::uniform(Pauli::Z, 3).str(), "ZZZ");
  EXPECT_TRUE(PauliString::parse("II").is_identity());
}

TEST(PauliDense, SingleZ) {
  const DenseMatrix& z = pauli_dense(PauliString::parse("Z"));
  EXPECT_EQ(z(0, 0), Complex(1.0));
  EXPECT_EQ(z(1, 1), Complex(-1.0));
  EXPECT_EQ(z(0, 1), Complex(0.0));
}

TEST(PauliDense, YYIsRealWithKnownEntries) {
  const DenseMatrix& yy = pauli_dense(PauliString::parse("YY"));
  EXPECT_EQ(yy(0, 3), Complex(-1.0));
  EXPECT_EQ(yy(3, 0), Complex(-1.0));
  EXPECT_EQ(yy(1, 2), Complex(1.0));
  EXPECT_EQ(yy(2, 1), Complex(1.0));
  for (const Complex& z : yy.data()) EXPECT_EQ(z.imag(), 0.0);
}

TEST(PauliDense, AllXFlipsEveryBit) {
  std::vector<Complex> ket(16, 0.0);
  ket[0] = 1.0;
  const auto out = pauli_dense(PauliString::parse("XXXX")).apply(ket);
  EXPECT_EQ(out[15], Complex(1.0));
}

TEST(PauliDense, MatchesKroneckerOfFactors) {
  const DenseMatrix expected =
      kron(kron(pauli_matrix(Pauli::X), pauli_matrix(Pauli::Y)), pauli_matrix(Pauli::Z));
  EXPECT_EQ(max_abs_diff(pauli_dense(PauliString::parse("XYZ")), expected), 0.0);
}

TEST(PauliDenseProperty, HermitianUnitaryTraceless) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const PauliString s = random_string(rng, 1 + trial % 5);
    const DenseMatrix& m = pauli_dense(s);
    EXPECT_EQ(m.hermiticity_defect(), 0.0);
    EXPECT_EQ(max_abs_diff(m * m, DenseMatrix::identity(m.dim())), 0.0);
    EXPECT_EQ(m.trace(), Complex(s.is_identity() ? static_cast<double>(m.dim()) : 0.0));
  }
}

TEST(PauliDenseProperty, Orthogonality) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 4;
    const PauliString s = random_string(rng, n);
    const PauliString t = random_string(rng, n);
    const Complex tr = trace_product(pauli_dense(s), pauli_dense(t));
    EXPECT_NEAR(std::abs(tr - Complex(s == t ? std::ldexp(1.0, n) : 0.0)), 0.0, 1e-12);
  }
}

TEST(PauliDense, ConcurrentLookupsAgree) {
  std::vector<std::thread> threads;
  std::vector<const DenseMatrix*> seen(8, nullptr);
  for (int t = 0; t < 8; ++t)
    threads.emplace_back([&, t] { seen[static_cast<std::size_t>(t)] = &pauli_dense(PauliString::parse("ZXZYXY")); });
  for (auto& th : threads) th.join();
  for (const DenseMatrix* p : seen) EXPECT_EQ(p, seen.front());
}

TEST(Correlation, SimplexStateReturnsCoefficients) {
  for (int n : {2, 4, 6}) {
    const CVec raw{0.3, -0.2, 0.1};
    const DenseMatrix rho = density(SimplexState(n, raw, Convention::Raw));
    EXPECT_NEAR(correlation(rho, PauliString::uniform(Pauli::X, n)), 0.3, 1e-12);
    EXPECT_NEAR(correlation(rho, PauliString::uniform(Pauli::Y, n)), -0.2, 1e-12);
    EXPECT_NEAR(correlation(rho, PauliString::uniform(Pauli::Z, n)), 0.1, 1e-12);
  }
}

TEST(Correlation, MixedStringsVanishOnSimplexStates) {
  const DenseMatrix rho = density(SimplexState(4, {0.4, -0.3, 0.2}, Convention::Raw));
  for (const char* s : {"XIII", "XXII", "XYZI", "IZZZ", "XXXY", "XYXY", "ZZXX"})
    EXPECT_NEAR(correlation(rho, PauliString::parse(s)), 0.0, 1e-15) << s;
}

TEST(Correlation, MaximallyMixedVanishes) {
  DenseMatrix rho = DenseMatrix::identity(8);
  rho *= 0.125;
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const PauliString s = random_string(rng, 3);
    if (!s.is_identity()) {
      EXPECT_EQ(correlation(rho, s), 0.0);
    }
  }
}

TEST(Correlation, NonHermitianInputIsRejected) {
  DenseMatrix m(2);
  m(0, 1) = 1.0;  // Tr(m X) = 1 but Tr(m Y) = i
  EXPECT_NO_THROW(correlation(m, PauliString::parse("X")));
  EXPECT_THROW(correlation(m, PauliString::parse("Y")), DomainError);
}

TEST(Correlation, DimensionMismatch) {
  EXPECT_THROW(correlation(DenseMatrix::identity(4), PauliString::parse("XXX")), DimensionError);
}

TEST(CorrelationProperty, RoundTripThroughDensity) {
  testing::Rng rng(6);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 * (1 + trial % 3);
    const CVec c = testing::uniform_cube(rng);
    const DenseMatrix rho = density(SimplexState(n, c, Convention::Raw));
    EXPECT_NEAR(correlation(rho, PauliString::uniform(Pauli::X, n)), c.c1, 1e-12);
    EXPECT_NEAR(correlation(rho, PauliString::uniform(Pauli::Y, n)), c.c2, 1e-12);
    EXPECT_NEAR(correlation(rho, PauliString::uniform(Pauli::Z, n)), c.c3, 1e-12);
  }
}

}  // namespace
}  // namespace qsimplex
