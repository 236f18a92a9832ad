#include <gtest/gtest.h>

#include "crownlab/matrix_core.hpp"

using namespace crownlab;

namespace {

ComplexMatrix random_matrix(int n, std::uint64_t seed) {
  CounterRng rng(seed);
  return gaussian_complex(n, rng);
}

}  // namespace

// S = [[a, b], [c, d]] = U D L gives D = (a - b c / d, d), U12 = b / d, L21 = c / d.
TEST(Udl, TwoByTwoClosedForm) {
  ComplexMatrix s(2, 2);
  s << Complex(1.0, 2.0), Complex(0.5, -1.0), Complex(3.0, 0.25), Complex(-2.0, 1.0);
  const UDLFactors f = udl_decompose(s);
  const Complex a = s(0, 0), b = s(0, 1), c = s(1, 0), d = s(1, 1);
  EXPECT_NEAR(std::abs(f.diag(1) - d), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(f.diag(0) - (a - b * c / d)), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(f.upper(0, 1) - b / d), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(f.lower(1, 0) - c / d), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(f.trailing_minors(0) - s.determinant()), 0.0, 1e-13);
  EXPECT_NEAR(std::abs(f.trailing_minors(1) - d), 0.0, 1e-15);
  EXPECT_EQ(f.trailing_minors(2), Complex(1.0));
}

TEST(Udl, RoundTripAndTriangularShape) {
  for (int n = 2; n <= 6; ++n) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const ComplexMatrix s = random_matrix(n, seed);
      const UDLFactors f = udl_decompose(s);
      EXPECT_LT(relative_frobenius(f.product(), s), 1e-11) << "n=" << n << " seed=" << seed;
      for (int i = 0; i < n; ++i) {
        EXPECT_EQ(f.upper(i, i), Complex(1.0));
        EXPECT_EQ(f.lower(i, i), Complex(1.0));
        for (int j = 0; j < i; ++j) {
          EXPECT_EQ(f.upper(i, j), Complex(0.0));
          EXPECT_EQ(f.lower(j, i), Complex(0.0));
        }
      }
      Complex prod = 1.0;
      for (int i = 0; i < n; ++i) prod *= f.diag(i);
      EXPECT_LT(std::abs(prod - s.determinant()), 1e-10 * std::max(1.0, std::abs(prod)));
      // D_k = tau_k / tau_{k+1}
      for (int k = 0; k < n; ++k)
        EXPECT_LT(std::abs(f.diag(k) - f.trailing_minors(k) / f.trailing_minors(k + 1)),
                  1e-10 * std::abs(f.diag(k)) + 1e-12);
    }
  }
}

// UDL of S is the reversal of the leading-minor LDU of J S J.
TEST(Udl, IndexReversalMatchesLdu) {
  const ComplexMatrix s = random_matrix(4, 99);
  const ComplexMatrix j = reversal(4);
  const UDLFactors f = udl_decompose(s);
  const LDUFactors g = ldu_decompose(j * s * j);
  EXPECT_LT((f.upper - j * g.lower * j).norm(), 1e-12);
  EXPECT_LT((f.lower - j * g.upper * j).norm(), 1e-12);
  EXPECT_LT((f.diag - g.diag.reverse()).norm(), 1e-12);
  EXPECT_LT(relative_frobenius(g.lower * g.diag.asDiagonal() * g.upper, j * s * j), 1e-12);
}

TEST(Udl, VanishingTrailingMinorNamesIndex) {
  ComplexMatrix s(3, 3);
  s << 1, 2, 3, 4, 5, 6, 7, 8, 0;  // S_33 = 0
  try {
    udl_decompose(s);
    FAIL() << "expected DecompositionOutsideCell";
  } catch (const DecompositionOutsideCell& e) {
    EXPECT_EQ(e.index(), 2u);
    EXPECT_NE(std::string(e.what()).find("trailing minor 3"), std::string::npos);
  }
  ComplexMatrix t(2, 2);
  t << 0, 1, 1, 1;  // tau_2 = 1, tau_1 = -1: inside the cell despite S_11 = 0
  EXPECT_NO_THROW(udl_decompose(t));
  ComplexMatrix u(2, 2);
  u << 1, 1, 1, 1;  // tau_1 = det = 0
  try {
    udl_decompose(u);
    FAIL();
  } catch (const DecompositionOutsideCell& e) {
    EXPECT_EQ(e.index(), 0u);
  }
}

TEST(Udl, RejectsBadInput) {
  EXPECT_THROW(udl_decompose(ComplexMatrix::Zero(2, 3)), InvalidArgument);
  ComplexMatrix s = ComplexMatrix::Identity(2, 2);
  s(0, 0) = Complex(std::numeric_limits<double>::quiet_NaN(), 0);
  EXPECT_THROW(udl_decompose(s), InvalidArgument);
}

TEST(Haar, UnitaryAndSpecial) {
  for (int n = 2; n <= 5; ++n)
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const ComplexMatrix u = haar_unitary(n, seed);
      EXPECT_LT(unitarity_residual(u), 1e-13);
      EXPECT_LT(std::abs(u.determinant() - Complex(1.0)), 1e-12);
      const ComplexMatrix o = haar_orthogonal(n, seed);
      EXPECT_LT(orthogonality_residual(o), 1e-13);
      EXPECT_EQ(o.imag().cwiseAbs().maxCoeff(), 0.0);
      EXPECT_NEAR(o.real().determinant(), 1.0, 1e-12);
    }
}

TEST(Haar, SecondMomentsMatchUniformMeasure) {
  // E|U_11|^2 = 1/n for Haar U(n) and SU(n); E O_11^2 = 1/n for SO(n).
  const int n = 3;
  const int m = 100000;
  double su = 0, so = 0, su4 = 0;
  for (int i = 0; i < m; ++i) {
    const double a = std::norm(haar_unitary(n, static_cast<std::uint64_t>(i))(0, 0));
    su += a;
    su4 += a * a;
    so += std::norm(haar_orthogonal(n, static_cast<std::uint64_t>(i))(0, 0));
  }
  EXPECT_NEAR(su / m, 1.0 / n, 0.005);
  EXPECT_NEAR(so / m, 1.0 / n, 0.005);
  // E|U_11|^4 = 2 / (n (n + 1))
  EXPECT_NEAR(su4 / m, 2.0 / (n * (n + 1)), 0.005);
}

TEST(Expm, SkewHermitianGivesUnitary) {
  CounterRng rng(5);
  const ComplexMatrix y = random_su(3, rng);
  const ComplexMatrix e = expm_skew_hermitian(y);
  EXPECT_LT(unitarity_residual(e), 1e-13);
  // central difference recovers Y
  const double h = 1e-6;
  const ComplexMatrix d = (expm_skew_hermitian(h * y) - expm_skew_hermitian(-h * y)) / (2 * h);
  EXPECT_LT((d - y).norm(), 1e-6);
}
