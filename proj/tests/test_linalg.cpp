#include <gtest/gtest.h>

#include <cmath>

#include "qsimplex/errors.hpp"
#include "qsimplex/linalg.hpp"
#include "support.hpp"

namespace qsimplex {
namespace {

using testing::Rng;

const Complex kI{0.0, 1.0};
const DenseMatrix kX{{0.0, 1.0}, {1.0, 0.0}};
const DenseMatrix kY{{0.0, -kI}, {kI, 0.0}};
const DenseMatrix kZ{{1.0, 0.0}, {0.0, -1.0}};

// |psi+><psi+| with psi+ = (|01> + |10>)/sqrt2, built by hand.
DenseMatrix psi_plus_projector() {
  DenseMatrix p(4);
  p(1, 1) = p(1, 2) = p(2, 1) = p(2, 2) = 0.5;
  return p;
}

TEST(Kron, IdentityTimesIdentityIsIdentity) {
  EXPECT_EQ(max_abs_diff(kron(DenseMatrix::identity(2), DenseMatrix::identity(2)),
                         DenseMatrix::identity(4)),
            0.0);
}

TEST(Kron, XXIsAntidiagonalOnes) {
  const DenseMatrix xx = kron(kX, kX);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) EXPECT_EQ(xx(r, c), Complex(r + c == 3 ? 1.0 : 0.0));
}

TEST(Kron, DimensionsMultiply) {
  EXPECT_EQ(kron(DenseMatrix(4), DenseMatrix(4)).dim(), 16u);
  EXPECT_EQ(kron(DenseMatrix(2), DenseMatrix(8)).dim(), 16u);
}

TEST(Kron, BlockStructure) {
  Rng rng(11);
  const DenseMatrix a = testing::random_matrix(rng, 2);
  const DenseMatrix b = testing::random_matrix(rng, 4);
  const DenseMatrix k = kron(a, b);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t p = 0; p < 4; ++p)
        for (std::size_t q = 0; q < 4; ++q) EXPECT_EQ(k(i * 4 + p, j * 4 + q), a(i, j) * b(p, q));
}

TEST(KronProperty, AssociativeAndBilinear) {
  Rng rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const DenseMatrix a = testing::random_matrix(rng, 2);
    const DenseMatrix b = testing::random_matrix(rng, 2);
    const DenseMatrix c = testing::random_matrix(rng, 4);
    const DenseMatrix d = testing::random_matrix(rng, 2);
    EXPECT_LE(max_abs_diff(kron(kron(a, b), c), kron(a, kron(b, c))), 1e-12);
    const Complex s{0.3, -1.7};
    EXPECT_LE(max_abs_diff(kron(a + s * d, c), kron(a, c) + s * kron(d, c)), 1e-12);
    EXPECT_LE(max_abs_diff(kron(c, a + s * d), kron(c, a) + s * kron(c, d)), 1e-12);
  }
}

TEST(HermitianEigenvalues, PauliZ) {
  const auto w = hermitian_eigenvalues(kZ);
  ASSERT_EQ(w.size(), 2u);
  EXPECT_NEAR(w[0], -1.0, 1e-15);
  EXPECT_NEAR(w[1], 1.0, 1e-15);
}

TEST(HermitianEigenvalues, BellProjectorFromPauliSum) {
  DenseMatrix m = DenseMatrix::identity(4) + kron(kX, kX) + kron(kY, kY) - kron(kZ, kZ);
  m *= 0.25;
  EXPECT_LE(max_abs_diff(m, psi_plus_projector()), 1e-15);
  const auto w = hermitian_eigenvalues(m);
  const double expected[4] = {0.0, 0.0, 0.0, 1.0};
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(w[static_cast<std::size_t>(i)], expected[i], 1e-14);
}

TEST(HermitianEigenvalues, MaximallyMixed) {
  DenseMatrix m = DenseMatrix::identity(4);
  m *= 0.25;
  for (double v : hermitian_eigenvalues(m)) EXPECT_DOUBLE_EQ(v, 0.25);
}

TEST(HermitianEigenvalues, RejectsNonHermitianNamingEntry) {
  DenseMatrix m = DenseMatrix::identity(3);
  m(0, 2) = 1e-6;
  try {
    hermitian_eigenvalues(m);
    FAIL() << "expected NonHermitianError";
  } catch (const NonHermitianError& e) {
    EXPECT_EQ(e.row(), 0u);
    EXPECT_EQ(e.col(), 2u);
    EXPECT_NEAR(e.defect(), 1e-6, 1e-18);
  }
}

TEST(HermitianEigenvalues, AcceptsDefectWithinTolerance) {
  DenseMatrix m = DenseMatrix::identity(2);
  m(0, 1) = 5e-13;
  EXPECT_NO_THROW(hermitian_eigenvalues(m));
}

TEST(HermitianEigensystemProperty, ReconstructsAndSumsToTrace) {
  Rng rng(21);
  for (std::size_t dim : {2u, 3u, 4u, 8u, 16u, 32u}) {
    for (int trial = 0; trial < 5; ++trial) {
      const DenseMatrix a = testing::random_hermitian(rng, dim);
      const EigenSystem es = hermitian_eigensystem(a);
      EXPECT_TRUE(std::is_sorted(es.values.begin(), es.values.end()));
      double sum = 0.0;
      for (double v : es.values) sum += v;
      EXPECT_NEAR(sum, a.trace().real(), 1e-10);
      const DenseMatrix rebuilt = es.vectors * DenseMatrix::diagonal(es.values) * es.vectors.adjoint();
      EXPECT_LE(max_abs_diff(rebuilt, a), 1e-10);
      EXPECT_LE(max_abs_diff(es.vectors * es.vectors.adjoint(), DenseMatrix::identity(dim)), 1e-12);
    }
  }
}

TEST(HermitianEigenvaluesProperty, PsdSpectrumNonnegative) {
  Rng rng(22);
  for (int trial = 0; trial < 20; ++trial) {
    const DenseMatrix rho = testing::random_density(rng, 8);
    EXPECT_GE(hermitian_eigenvalues(rho).front(), kPsdTolerance);
  }
}

TEST(HermitianSqrt, Identity) {
  EXPECT_LE(max_abs_diff(hermitian_sqrt(DenseMatrix::identity(4)), DenseMatrix::identity(4)), 1e-15);
}

TEST(HermitianSqrt, Diagonal) {
  const double d[2] = {4.0, 9.0};
  const double r[2] = {2.0, 3.0};
  EXPECT_LE(max_abs_diff(hermitian_sqrt(DenseMatrix::diagonal(d)), DenseMatrix::diagonal(r)), 1e-15);
}

TEST(HermitianSqrt, ProjectorIsItsOwnRoot) {
  EXPECT_LE(max_abs_diff(hermitian_sqrt(psi_plus_projector()), psi_plus_projector()), 1e-14);
}

TEST(HermitianSqrt, RejectsNegativeEigenvalue) {
  const double d[2] = {1.0, -1e-9};
  EXPECT_THROW(hermitian_sqrt(DenseMatrix::diagonal(d)), NotPsdError);
}

TEST(HermitianSqrt, ClampsTinyNegativeEigenvalue) {
  const double d[2] = {1.0, -1e-13};
  const DenseMatrix s = hermitian_sqrt(DenseMatrix::diagonal(d));
  EXPECT_EQ(s(1, 1), Complex(0.0));
}

TEST(HermitianSqrtProperty, SquaresBack) {
  Rng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const DenseMatrix rho = testing::random_density(rng, 8);
    const DenseMatrix s = hermitian_sqrt(rho);
    EXPECT_LE(s.hermiticity_defect(), 1e-14);
    EXPECT_GE(hermitian_eigenvalues(s).front(), kPsdTolerance);
    EXPECT_LE(max_abs_diff(s * s, rho), 1e-10);
  }
}

TEST(SingularValues, DiagonalWithSigns) {
  const double d[3] = {-3.0, 1.0, 2.0};
  const auto s = singular_values(DenseMatrix::diagonal(d));
  EXPECT_NEAR(s[0], 3.0, 1e-15);
  EXPECT_NEAR(s[1], 2.0, 1e-15);
  EXPECT_NEAR(s[2], 1.0, 1e-15);
}

TEST(SingularValuesProperty, SquaresAreEigenvaluesOfGramMatrix) {
  Rng rng(32);
  for (int trial = 0; trial < 10; ++trial) {
    const DenseMatrix a = testing::random_matrix(rng, 6);
    auto s = singular_values(a);
    auto w = hermitian_eigenvalues(a.adjoint() * a);
    std::reverse(w.begin(), w.end());
    for (std::size_t i = 0; i < s.size(); ++i) EXPECT_NEAR(s[i] * s[i], w[i], 1e-10);
  }
}

TEST(ProductLambda, ProjectorSquared) {
  const auto l = product_lambda(psi_plus_projector(), psi_plus_projector());
  const double expected[4] = {1.0, 0.0, 0.0, 0.0};
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(l[static_cast<std::size_t>(i)], expected[i], 1e-14);
}

TEST(ProductLambda, MaximallyMixed) {
  DenseMatrix m = DenseMatrix::identity(4);
  m *= 0.25;
  for (double v : product_lambda(m, m)) EXPECT_NEAR(v, 0.25, 1e-15);
}

TEST(ProductLambda, WernerWithSpinFlip) {
  // c = (0.8, -0.8, 0.8): rho = (1 + 0.8 XX - 0.8 YY + 0.8 ZZ)/4.
  DenseMatrix rho = DenseMatrix::identity(4) + 0.8 * kron(kX, kX) - 0.8 * kron(kY, kY) +
                    0.8 * kron(kZ, kZ);
  rho *= 0.25;
  const DenseMatrix yy = kron(kY, kY);
  const DenseMatrix tilde = yy * rho.conj() * yy;
  const auto l = product_lambda(rho, tilde);
  const double expected[4] = {0.85, 0.05, 0.05, 0.05};
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(l[static_cast<std::size_t>(i)], expected[i], 1e-12);
}

TEST(ProductLambda, DimensionMismatch) {
  EXPECT_THROW(product_lambda(DenseMatrix::identity(2), DenseMatrix::identity(4)), DimensionError);
}

TEST(ProductLambdaProperty, MatchesCharacteristicPolynomialOracle) {
  Rng rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const DenseMatrix rho = testing::random_density(rng, 4);
    const DenseMatrix tilde = testing::random_density(rng, 4);
    const auto got = product_lambda(rho, tilde);
    const auto want = testing::sqrt_spectrum_oracle(tilde * rho);
    for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(got[i], want[i], 1e-8) << "trial " << trial;
  }
}

TEST(PartialTrace, MaximallyEntangledMarginal) {
  const int keep[1] = {1};
  DenseMatrix half = DenseMatrix::identity(2);
  half *= 0.5;
  EXPECT_LE(max_abs_diff(partial_trace(psi_plus_projector(), 2, keep), half), 1e-15);
}

TEST(PartialTrace, ProductStateMarginal) {
  Rng rng(51);
  const DenseMatrix omega = testing::random_density(rng, 2);
  const DenseMatrix other = testing::random_density(rng, 2);
  const int keep2[1] = {2};
  const int keep1[1] = {1};
  EXPECT_LE(max_abs_diff(partial_trace(kron(omega, omega), 2, keep2), omega), 1e-15);
  EXPECT_LE(max_abs_diff(partial_trace(kron(omega, other), 2, keep1), omega), 1e-15);
  EXPECT_LE(max_abs_diff(partial_trace(kron(omega, other), 2, keep2), other), 1e-15);
}

TEST(PartialTrace, KeepsQubitsInAscendingOrder) {
  Rng rng(52);
  const DenseMatrix a = testing::random_density(rng, 2);
  const DenseMatrix b = testing::random_density(rng, 2);
  const DenseMatrix c = testing::random_density(rng, 2);
  const int keep[2] = {3, 1};
  EXPECT_LE(max_abs_diff(partial_trace(kron(kron(a, b), c), 3, keep), kron(a, c)), 1e-15);
}

TEST(PartialTrace, PreservesTrace) {
  Rng rng(53);
  const DenseMatrix rho = testing::random_density(rng, 16);
  const int keep[2] = {2, 4};
  EXPECT_NEAR(partial_trace(rho, 4, keep).trace().real(), 1.0, 1e-14);
}

TEST(PartialTrace, RejectsInvalidIndices) {
  const DenseMatrix rho = DenseMatrix::identity(4);
  const int zero[1] = {0};
  const int high[1] = {3};
  const int twice[2] = {1, 1};
  EXPECT_THROW(partial_trace(rho, 2, zero), DimensionError);
  EXPECT_THROW(partial_trace(rho, 2, high), DimensionError);
  EXPECT_THROW(partial_trace(rho, 2, twice), DimensionError);
  EXPECT_THROW(partial_trace(rho, 2, std::span<const int>{}), DimensionError);
  EXPECT_THROW(partial_trace(rho, 3, zero), DimensionError);
}

TEST(PartialTranspose, AllQubitsIsFullTranspose) {
  Rng rng(61);
  const DenseMatrix rho = testing::random_density(rng, 8);
  const int all[3] = {1, 2, 3};
  const DenseMatrix pt = partial_transpose(rho, 3, all);
  EXPECT_LE(max_abs_diff(pt, rho.transpose()), 0.0);
  const auto w1 = hermitian_eigenvalues(rho);
  const auto w2 = hermitian_eigenvalues(pt);
  for (std::size_t i = 0; i < w1.size(); ++i) EXPECT_NEAR(w1[i], w2[i], 1e-12);
}

TEST(PartialTranspose, TwiceIsIdentity) {
  Rng rng(62);
  const DenseMatrix rho = testing::random_density(rng, 8);
  const int q[1] = {2};
  EXPECT_EQ(max_abs_diff(partial_transpose(partial_transpose(rho, 3, q), 3, q), rho), 0.0);
}

TEST(PartialTranspose, ProductStateTransposesOneFactor) {
  Rng rng(63);
  const DenseMatrix a = testing::random_density(rng, 2);
  const DenseMatrix b = testing::random_density(rng, 2);
  const int q[1] = {2};
  EXPECT_LE(max_abs_diff(partial_transpose(kron(a, b), 2, q), kron(a, b.transpose())), 0.0);
}

TEST(PartialTranspose, PreservesHermiticity) {
  Rng rng(64);
  const DenseMatrix rho = testing::random_density(rng, 16);
  const int q[2] = {1, 3};
  EXPECT_LE(partial_transpose(rho, 4, q).hermiticity_defect(), 1e-15);
}

TEST(PartialTranspose, RejectsInvalidIndex) {
  const int q[1] = {5};
  EXPECT_THROW(partial_transpose(DenseMatrix::identity(16), 4, q), DimensionError);
}

TEST(PartialTraceProperty, TransposeOnTracedQubitsIsInvisible) {
  Rng rng(71);
  for (int trial = 0; trial < 20; ++trial) {
    const DenseMatrix rho = testing::random_density(rng, 16);
    const int transposed[2] = {1, 3};
    const int keep[2] = {2, 4};
    EXPECT_LE(max_abs_diff(partial_trace(partial_transpose(rho, 4, transposed), 4, keep),
                           partial_trace(rho, 4, keep)),
              1e-15);
  }
}

TEST(DenseMatrix, ArithmeticDimensionChecks) {
  DenseMatrix a(2);
  const DenseMatrix b(4);
  EXPECT_THROW(a += b, DimensionError);
  EXPECT_THROW((void)(a * b), DimensionError);
  EXPECT_THROW((void)max_abs_diff(a, b), DimensionError);
  EXPECT_THROW((DenseMatrix{{1.0, 2.0}, {3.0}}), DimensionError);
}

TEST(DenseMatrix, FiniteCheck) {
  DenseMatrix a = DenseMatrix::identity(2);
  EXPECT_TRUE(a.all_finite());
  a(1, 0) = std::nan("");
  EXPECT_FALSE(a.all_finite());
}

}  // namespace
}  // namespace qsimplex
