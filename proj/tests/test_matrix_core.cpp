#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <limits>
#include <random>
#include <vector>

#include "young/calculus.hpp"
#include "young/decompositions.hpp"
#include "young/eigen.hpp"
#include "young/matrix.hpp"

using young::Complex;
using young::ComplexMatrix;
using young::Tolerance;

namespace {

ComplexMatrix random_matrix(int rows, int cols, std::uint32_t seed) {
  std::mt19937 gen(seed);
  std::normal_distribution<double> dist(0.0, 1.0);
  ComplexMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m(i, j) = Complex(dist(gen), dist(gen));
  }
  return m;
}

ComplexMatrix random_hermitian(int n, std::uint32_t seed) {
  return young::hermitian_part(random_matrix(n, n, seed));
}

ComplexMatrix random_psd(int n, std::uint32_t seed) {
  const ComplexMatrix g = random_matrix(n, n, seed);
  return young::hermitian_part(young::adjoint(g) * g);
}

double frob_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  return young::frobenius_norm(a - b);
}

}  // namespace

TEST(MatrixBasics, ConstructIndexAndValidate) {
  ComplexMatrix zero(2, 3);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 3; ++j) EXPECT_EQ(zero(i, j), Complex(0.0, 0.0));
  }
  const ComplexMatrix m(2, 2, {Complex(1, 1), Complex(2, 0), Complex(0, 0), Complex(0, 3)});
  EXPECT_EQ(m(0, 0), Complex(1, 1));
  EXPECT_EQ(m(1, 1), Complex(0, 3));
  EXPECT_THROW(ComplexMatrix(2, 2, {Complex(1, 0)}), young::DimensionMismatch);
}

TEST(MatrixBasics, AdjointProductTrace) {
  const ComplexMatrix a(2, 2, {Complex(1, 1), Complex(2, 0), Complex(0, 0), Complex(0, 3)});
  const ComplexMatrix ah = young::adjoint(a);
  EXPECT_EQ(ah(0, 0), Complex(1, -1));
  EXPECT_EQ(ah(1, 0), Complex(2, 0));
  EXPECT_EQ(ah(0, 1), Complex(0, 0));
  EXPECT_EQ(ah(1, 1), Complex(0, -3));

  // (a * ah) worked out by hand: row-by-column with conjugates.
  const ComplexMatrix prod = a * ah;
  EXPECT_NEAR(std::abs(prod(0, 0) - Complex(6, 0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(prod(0, 1) - Complex(0, -6)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(prod(1, 0) - Complex(0, 6)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(prod(1, 1) - Complex(9, 0)), 0.0, 1e-15);

  EXPECT_NEAR(young::trace(prod).real(), 15.0, 1e-12);
  EXPECT_NEAR(young::frobenius_norm(a), std::sqrt(15.0), 1e-12);
}

TEST(MatrixBasics, InnerIsConjugateLinearInFirstArgument) {
  young::ComplexVector x = {Complex(0, 1), Complex(0, 0)};
  young::ComplexVector y = {Complex(1, 0), Complex(0, 0)};
  const Complex v = young::inner(x, y);
  EXPECT_NEAR(v.real(), 0.0, 1e-15);
  EXPECT_NEAR(v.imag(), -1.0, 1e-15);
}

TEST(MatrixBasics, HermitianPartAndDefect) {
  const ComplexMatrix m(2, 2, {Complex(1, 0), Complex(2, 1), Complex(0, 0), Complex(3, 0)});
  const ComplexMatrix h = young::hermitian_part(m);
  EXPECT_NEAR(young::hermitian_defect(h), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(h(0, 1) - Complex(1.0, 0.5)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(h(1, 0) - Complex(1.0, -0.5)), 0.0, 1e-15);
  EXPECT_GT(young::hermitian_defect(m), 1.0);
}

TEST(HermitianEigen, DiagonalComesBackSorted) {
  const auto e = young::hermitian_eigen(young::diag({1.0, 5.0, 3.0}));
  ASSERT_EQ(e.values.size(), 3u);
  EXPECT_NEAR(e.values[0], 5.0, 1e-14);
  EXPECT_NEAR(e.values[1], 3.0, 1e-14);
  EXPECT_NEAR(e.values[2], 1.0, 1e-14);
}

TEST(HermitianEigen, TwoByTwoSymmetric) {
  // [[2,1],[1,2]] has eigenvalues 3 and 1 with eigenvectors (1,1)/sqrt 2
  // and (1,-1)/sqrt 2.
  const ComplexMatrix m(2, 2, {Complex(2), Complex(1), Complex(1), Complex(2)});
  const auto e = young::hermitian_eigen(m);
  EXPECT_NEAR(e.values[0], 3.0, 1e-13);
  EXPECT_NEAR(e.values[1], 1.0, 1e-13);
  const young::ComplexVector v0 = young::column(e.vectors, 0);
  EXPECT_NEAR(std::abs(v0[0]), 1.0 / std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(std::abs(v0[1]), 1.0 / std::sqrt(2.0), 1e-12);
}

TEST(HermitianEigen, ComplexOffDiagonal) {
  // [[0, i], [-i, 0]] has eigenvalues +1 and -1.
  const ComplexMatrix m(2, 2, {Complex(0), Complex(0, 1), Complex(0, -1), Complex(0)});
  const auto e = young::hermitian_eigen(m);
  EXPECT_NEAR(e.values[0], 1.0, 1e-13);
  EXPECT_NEAR(e.values[1], -1.0, 1e-13);
}

TEST(HermitianEigen, ReconstructionAndOrthonormality) {
  for (int n = 2; n <= 8; ++n) {
    const ComplexMatrix m = random_hermitian(n, 100 + n);
    const auto e = young::hermitian_eigen(m);
    std::vector<double> vals = e.values;
    const ComplexMatrix rebuilt =
        e.vectors * young::diag(vals) * young::adjoint(e.vectors);
    EXPECT_LT(frob_diff(rebuilt, m), 1e-12 * young::frobenius_norm(m)) << "n=" << n;
    EXPECT_LT(frob_diff(young::adjoint(e.vectors) * e.vectors, young::identity(n)), 1e-12)
        << "n=" << n;
    for (size_t k = 0; k + 1 < e.values.size(); ++k) {
      EXPECT_GE(e.values[k], e.values[k + 1]);
    }
  }
}

TEST(HermitianEigen, EigenvectorResidual) {
  const ComplexMatrix m = random_hermitian(6, 41);
  const auto e = young::hermitian_eigen(m);
  for (int k = 0; k < 6; ++k) {
    const young::ComplexVector v = young::column(e.vectors, k);
    const young::ComplexVector mv = young::mat_vec(m, v);
    double residual = 0.0;
    for (int i = 0; i < 6; ++i) residual += std::norm(mv[i] - e.values[k] * v[i]);
    EXPECT_LT(std::sqrt(residual), 1e-12 * young::frobenius_norm(m)) << "k=" << k;
  }
}

TEST(HermitianEigen, Throws) {
  EXPECT_THROW(young::hermitian_eigen(ComplexMatrix(2, 3)), young::NotSquare);

  const ComplexMatrix skew(2, 2, {Complex(0), Complex(1), Complex(0), Complex(0)});
  EXPECT_THROW(young::hermitian_eigen(skew), young::NotHermitian);

  // A sweep cap of zero must report the unfinished off-diagonal mass.
  const ComplexMatrix m(2, 2, {Complex(2), Complex(1), Complex(1), Complex(2)});
  try {
    young::hermitian_eigen(m, Tolerance{}, 0);
    FAIL() << "expected NoConvergence";
  } catch (const young::NoConvergence& e) {
    EXPECT_NEAR(e.off_diagonal_residual, std::sqrt(2.0), 1e-12);
  }
}

TEST(Svd, NilpotentShiftIsExact) {
  const ComplexMatrix m(2, 2, {Complex(0), Complex(1), Complex(0), Complex(0)});
  const young::Svd dec = young::svd(m);
  ASSERT_EQ(dec.singular_values.size(), 2u);
  EXPECT_NEAR(dec.singular_values[0], 1.0, 1e-15);
  EXPECT_NEAR(dec.singular_values[1], 0.0, 1e-15);
  // Left factor keeps only the range column; the null column is zeroed.
  EXPECT_NEAR(std::abs(dec.left(0, 0)), 1.0, 1e-14);
  EXPECT_NEAR(std::abs(dec.left(1, 0)), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(dec.left(0, 1)) + std::abs(dec.left(1, 1)), 0.0, 1e-14);
}

TEST(Svd, ReconstructionOnRandomMatrices) {
  for (int n = 2; n <= 7; ++n) {
    const ComplexMatrix m = random_matrix(n, n, 7 * n + 1);
    const young::Svd dec = young::svd(m);
    const ComplexMatrix rebuilt =
        dec.left * young::diag(dec.singular_values) * young::adjoint(dec.right);
    EXPECT_LT(frob_diff(rebuilt, m), 1e-12 * young::frobenius_norm(m)) << "n=" << n;
    EXPECT_LT(frob_diff(young::adjoint(dec.right) * dec.right, young::identity(n)), 1e-12);
    // Full-rank inputs make the left factor unitary too.
    EXPECT_LT(frob_diff(young::adjoint(dec.left) * dec.left, young::identity(n)), 1e-10);
  }
}

TEST(Svd, RankDeficientLeftFactorIsPartialIsometry) {
  // Rank-1 outer product: exactly one nonzero singular value; u*u must
  // be a projection, not the identity.
  const ComplexMatrix g = random_matrix(4, 1, 9);
  const ComplexMatrix m = g * young::adjoint(g);
  const young::Svd dec = young::svd(m);
  EXPECT_GT(dec.singular_values[0], 0.0);
  for (int k = 1; k < 4; ++k) EXPECT_LT(dec.singular_values[k], 1e-12 * dec.singular_values[0]);
  const ComplexMatrix uu = young::adjoint(dec.left) * dec.left;
  EXPECT_NEAR(uu(0, 0).real(), 1.0, 1e-12);
  for (int k = 1; k < 4; ++k) EXPECT_NEAR(std::abs(uu(k, k)), 0.0, 1e-12);
}

TEST(Svd, SingularValuesMatchEigenvaluesOfAbs) {
  const ComplexMatrix m = random_matrix(5, 5, 23);
  const young::Svd dec = young::svd(m);
  const auto e = young::hermitian_eigen(young::matrix_abs(m));
  for (int k = 0; k < 5; ++k) {
    EXPECT_NEAR(dec.singular_values[k], e.values[k], 1e-10 * dec.singular_values[0]);
  }
}

TEST(MatrixAbs, NilpotentShift) {
  const ComplexMatrix m(2, 2, {Complex(0), Complex(1), Complex(0), Complex(0)});
  const ComplexMatrix abs_m = young::matrix_abs(m);
  EXPECT_NEAR(std::abs(abs_m(0, 0)), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(abs_m(1, 1) - Complex(1.0)), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(abs_m(0, 1)), 0.0, 1e-14);
}

TEST(Polar, NilpotentShift) {
  // [[0,1],[0,0]] is already a partial isometry, so polar returns it.
  const ComplexMatrix m(2, 2, {Complex(0), Complex(1), Complex(0), Complex(0)});
  const young::PolarParts parts = young::polar(m);
  EXPECT_LT(frob_diff(parts.isometry, m), 1e-13);
  EXPECT_LT(frob_diff(parts.positive_part, young::diag({0.0, 1.0})), 1e-13);
  EXPECT_LT(frob_diff(parts.support_projection, young::diag({0.0, 1.0})), 1e-13);
  EXPECT_LT(frob_diff(parts.range_projection, young::diag({1.0, 0.0})), 1e-13);
}

TEST(Polar, FactorizationAndIsometryLaw) {
  for (int n = 2; n <= 6; ++n) {
    const ComplexMatrix m = random_matrix(n, n, 300 + n);
    const young::PolarParts parts = young::polar(m);
    EXPECT_LT(frob_diff(parts.isometry * parts.positive_part, m),
              1e-11 * young::frobenius_norm(m))
        << "n=" << n;
    // Partial isometry law v v* v = v.
    EXPECT_LT(frob_diff(parts.isometry * young::adjoint(parts.isometry) * parts.isometry,
                        parts.isometry),
              1e-11)
        << "n=" << n;
    EXPECT_TRUE(young::is_psd(parts.positive_part).psd);
  }
}

TEST(Polar, ConjugatesAbsToAbsOfAdjoint) {
  // v |b| v* = |b*| — the defining conjugation property of the polar
  // isometry, checked against an independently computed |b*|.
  const ComplexMatrix b = random_matrix(5, 5, 77);
  const young::PolarParts parts = young::polar(b);
  const ComplexMatrix abs_b_star = young::matrix_abs(young::adjoint(b));
  EXPECT_LT(frob_diff(parts.isometry * parts.positive_part * young::adjoint(parts.isometry),
                      abs_b_star),
            1e-11 * young::frobenius_norm(b));
}

TEST(Polar, RejectsNonSquare) {
  EXPECT_THROW(young::polar(ComplexMatrix(2, 3)), young::NotSquare);
}

TEST(PsdCalculus, PowerOfDiagonal) {
  const ComplexMatrix r = young::psd_power(young::diag({4.0, 9.0}), 0.5);
  EXPECT_NEAR(r(0, 0).real(), 2.0, 1e-13);
  EXPECT_NEAR(r(1, 1).real(), 3.0, 1e-13);
  EXPECT_NEAR(std::abs(r(0, 1)), 0.0, 1e-13);
}

TEST(PsdCalculus, PowerCommutesWithSpectrum) {
  const ComplexMatrix x = random_psd(5, 51);
  const auto base = young::hermitian_eigen(x);
  for (const double s : {0.5, 1.5, 2.0}) {
    const auto powered = young::hermitian_eigen(young::psd_power(x, s));
    for (int k = 0; k < 5; ++k) {
      EXPECT_NEAR(powered.values[k], std::pow(base.values[k], s),
                  1e-10 * std::pow(base.values[0], s))
          << "s=" << s << " k=" << k;
    }
  }
}

TEST(PsdCalculus, PowerRoundTrips) {
  const ComplexMatrix x = random_psd(4, 52);
  EXPECT_LT(frob_diff(young::psd_power(young::psd_power(x, 2.0), 0.5), x),
            1e-10 * young::frobenius_norm(x));
  EXPECT_LT(frob_diff(young::psd_power(x, 1.0), x), 1e-11 * young::frobenius_norm(x));
}

TEST(PsdCalculus, PowerThrows) {
  const ComplexMatrix x = young::diag({1.0, 2.0});
  EXPECT_THROW(young::psd_power(x, 0.0), young::BadExponent);
  EXPECT_THROW(young::psd_power(x, -1.0), young::BadExponent);
  EXPECT_THROW(young::psd_power(x, std::numeric_limits<double>::infinity()),
               young::BadExponent);
  EXPECT_THROW(young::psd_power(young::diag({1.0, -1.0}), 0.5), young::NotPsd);
}

TEST(PsdCalculus, IsPsdVerdicts) {
  EXPECT_TRUE(young::is_psd(young::diag({1.0, 0.0})).psd);
  const ComplexMatrix m(2, 2, {Complex(2), Complex(1), Complex(1), Complex(2)});
  const young::PsdVerdict v = young::is_psd(m);
  EXPECT_TRUE(v.psd);
  EXPECT_NEAR(v.min_eigenvalue, 1.0, 1e-12);
  const young::PsdVerdict w = young::is_psd(young::diag({1.0, -1e-3}));
  EXPECT_FALSE(w.psd);
  EXPECT_NEAR(w.min_eigenvalue, -1e-3, 1e-12);
}

TEST(RangeProjection, DiagonalSupport) {
  const ComplexMatrix p = young::range_projection(young::diag({3.0, 0.0, 2.0}));
  EXPECT_LT(frob_diff(p, young::diag({1.0, 0.0, 1.0})), 1e-12);
}

TEST(RangeProjection, IsIdempotentAndFixesRange) {
  const ComplexMatrix g = random_matrix(5, 2, 61);
  const ComplexMatrix m = g * young::adjoint(g);  // rank 2 PSD
  const ComplexMatrix p = young::range_projection(m);
  EXPECT_LT(frob_diff(p * p, p), 1e-11);
  EXPECT_LT(frob_diff(p * m, m), 1e-11 * young::frobenius_norm(m));
  EXPECT_NEAR(young::trace(p).real(), 2.0, 1e-10);
}

TEST(ProjectionLemmas, CompressionFixedPointMeansLeftFixed) {
  // If x = pxp for a projection p, then px = x (and xp = x): the
  // compression already contains everything.
  const ComplexMatrix g = random_matrix(5, 3, 71);
  const ComplexMatrix p = young::range_projection(g * young::adjoint(g));
  const ComplexMatrix y = random_matrix(5, 5, 72);
  const ComplexMatrix x = p * y * p;  // by construction x = pxp
  EXPECT_LT(frob_diff(p * x, x), 1e-12 * young::frobenius_norm(x));
  EXPECT_LT(frob_diff(x * p, x), 1e-12 * young::frobenius_norm(x));
}

TEST(ProjectionLemmas, ComplementPerturbationActsAsIdentityOnRange) {
  // If x = p + (1-p) r (1-p), then xp = p and px = p.
  const ComplexMatrix g = random_matrix(5, 2, 73);
  const ComplexMatrix p = young::range_projection(g * young::adjoint(g));
  const ComplexMatrix comp = young::identity(5) - p;
  const ComplexMatrix r = random_matrix(5, 5, 74);
  const ComplexMatrix x = p + comp * r * comp;
  EXPECT_LT(frob_diff(x * p, p), 1e-12);
  EXPECT_LT(frob_diff(p * x, p), 1e-12);
}
