#include <gtest/gtest.h>

#include <numbers>

#include "crownlab/horospherical.hpp"
#include "crownlab/verify.hpp"

using namespace crownlab;

TEST(Horospherical, IdentityGivesX) {
  const CartanVector x{0.5, 0.1, -0.6};
  for (GroupCase c : {GroupCase::complex, GroupCase::real_split}) {
    const HoroResult r = continued_log_a(ComplexMatrix::Identity(3, 3), x, c);
    EXPECT_LT(max_abs_diff(r.phi, x), 1e-15);
    for (int i = 0; i < 3; ++i) EXPECT_NEAR(r.z(i).real(), 0.0, 1e-15);
  }
}

TEST(Horospherical, SPhiSumsToZero) {
  const CartanVector x{0.5, 0.1, -0.6};
  for (std::uint64_t s = 0; s < 200; ++s) {
    const CartanVector phi = moment_map(haar_unitary(3, s), x, GroupCase::complex);
    EXPECT_LT(std::abs(phi.sum()), 1e-12);
  }
}

// Independent closed form for n = 2.
TEST(Horospherical, AgreesWithTwoByTwoOracle) {
  const CartanVector x{0.6, -0.6};
  double worst = 0;
  for (std::uint64_t s = 0; s < 1000; ++s) {
    const ComplexMatrix k = haar_unitary(2, s);
    worst = std::max(worst, max_abs_diff(moment_map(k, x, GroupCase::complex),
                                         moment_n2_oracle(k, 0.6)));
  }
  EXPECT_LT(worst, 1e-9);
}

TEST(Horospherical, OracleDomain) {
  const ComplexMatrix k = haar_unitary(2, 1);
  EXPECT_THROW(moment_n2_oracle(k, std::numbers::pi / 4), OutOfDomain);
  EXPECT_THROW(moment_n2_oracle(haar_unitary(3, 1), 0.1), InvalidArgument);
  // Hand value: k = identity, d2 = e^{-2ix}.
  const CartanVector p = moment_n2_oracle(ComplexMatrix::Identity(2, 2), 0.3);
  EXPECT_NEAR(p[0], 0.3, 1e-15);
  EXPECT_NEAR(p[1], -0.3, 1e-15);
}

// k -> k t with t in the torus leaves S unchanged (t commutes with e^{2iX}).
TEST(Horospherical, RightTorusInvariance) {
  const CartanVector x{0.5, 0.1, -0.6};
  const CartanVector theta{1.0, -0.3, -0.7};
  for (std::uint64_t s = 0; s < 50; ++s) {
    const ComplexMatrix k = haar_unitary(3, s);
    const CartanVector a = moment_map(k, x, GroupCase::complex);
    const CartanVector b = moment_map(k * torus_element(theta), x, GroupCase::complex);
    EXPECT_LT(max_abs_diff(a, b), 1e-12);
  }
}

// Left torus multiplication conjugates S by a diagonal unitary, which fixes D.
TEST(Horospherical, LeftTorusInvariance) {
  const CartanVector x{0.5, 0.1, -0.6};
  const CartanVector theta{0.4, 0.2, -0.6};
  for (std::uint64_t s = 0; s < 50; ++s) {
    const ComplexMatrix k = haar_unitary(3, s);
    const HoroResult a = continued_log_a(k, x, GroupCase::complex);
    const HoroResult b = continued_log_a(torus_element(theta) * k, x, GroupCase::complex);
    EXPECT_LT((a.d_final - b.d_final).norm(), 1e-12);
    EXPECT_LT(max_abs_diff(a.phi, b.phi), 1e-12);
  }
}

TEST(Horospherical, RealAndComplexAgreeOnSO) {
  const CartanVector x{0.5, 0.1, -0.6};
  for (std::uint64_t s = 0; s < 100; ++s) {
    const ComplexMatrix k0 = haar_orthogonal(3, s);
    EXPECT_EQ(max_abs_diff(moment_map(k0, x, GroupCase::complex),
                           moment_map(k0, x, GroupCase::real_split)),
              0.0);
  }
}

TEST(Horospherical, RealCaseRejectsComplexK) {
  EXPECT_THROW(moment_map(haar_unitary(3, 2), CartanVector{0.5, 0.1, -0.6}, GroupCase::real_split),
               InvalidGroupElement);
  ComplexMatrix bad = ComplexMatrix::Identity(2, 2) * 2.0;
  EXPECT_THROW(moment_map(bad, CartanVector{0.3, -0.3}, GroupCase::complex), InvalidGroupElement);
  EXPECT_THROW(moment_map(ComplexMatrix::Identity(3, 3), CartanVector{0.3, -0.3}, GroupCase::complex),
               InvalidArgument);
}

TEST(Horospherical, StepDoublingIsStable) {
  const CartanVector x{0.5, 0.1, -0.6};
  PathOptions fine;
  fine.initial_steps = 128;
  for (std::uint64_t s = 0; s < 100; ++s) {
    const ComplexMatrix k = haar_unitary(3, s);
    EXPECT_LT(max_abs_diff(moment_map(k, x, GroupCase::complex),
                           moment_map(k, x, GroupCase::complex, fine)),
              1e-9);
  }
}

TEST(Horospherical, PathRecordsMonotoneTimes) {
  const HoroResult r =
      continued_log_a(haar_unitary(4, 3), CartanVector{0.6, 0.2, -0.3, -0.5}, GroupCase::complex);
  ASSERT_GE(r.path.size(), 65u);
  EXPECT_EQ(r.path.front().t, 0.0);
  EXPECT_EQ(r.path.back().t, 1.0);
  for (std::size_t i = 1; i < r.path.size(); ++i) EXPECT_GT(r.path[i].t, r.path[i - 1].t);
  EXPECT_EQ(r.steps_used, static_cast<int>(r.path.size()) - 1);
}

TEST(Horospherical, UdlReproducesS) {
  const CartanVector x{0.5, 0.1, -0.6};
  const ComplexMatrix k = haar_unitary(3, 8);
  const HoroResult r = continued_log_a(k, x, GroupCase::complex);
  EXPECT_LT(relative_frobenius(r.factors.product(), build_s_matrix(k, x, GroupCase::complex)), 1e-12);
  // D = e^{2Z}
  for (int i = 0; i < 3; ++i) EXPECT_LT(std::abs(std::exp(2.0 * r.z(i)) - r.d_final(i)), 1e-12);
}

TEST(Horospherical, BTildeReconstructsKa) {
  const CartanVector x{0.5, 0.1, -0.6};
  for (std::uint64_t s = 0; s < 20; ++s) {
    const ComplexMatrix k = haar_unitary(3, s);
    const BorelPair b = b_tilde(k, x, GroupCase::complex);
    // upper triangular with diag e^Z, lower with diag e^{-Z}
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < i; ++j) {
        EXPECT_EQ(b.upper(i, j), Complex(0.0));
        EXPECT_LT(std::abs(b.lower(j, i)), 1e-15);
      }
    for (int i = 0; i < 3; ++i) EXPECT_LT(std::abs(b.upper(i, i) * b.lower(i, i) - Complex(1.0)), 1e-12);
    const ComplexMatrix k0 = haar_orthogonal(3, s);
    EXPECT_NO_THROW(b_tilde(k0, x, GroupCase::real_split));
  }
}

TEST(Horospherical, OutsideCrownIsBestEffort) {
  // spread 1.6 > pi/2: may still succeed, must not return garbage silently
  const CartanVector x{0.8, -0.8};
  int ok = 0;
  for (std::uint64_t s = 0; s < 50; ++s) {
    try {
      const CartanVector p = moment_map(haar_unitary(2, s), x, GroupCase::complex);
      EXPECT_LT(std::abs(p.sum()), 1e-12);
      ++ok;
    } catch (const DecompositionOutsideCell&) {
    } catch (const BranchTrackingFailure&) {
    }
  }
  EXPECT_GT(ok, 0);
}

TEST(Horospherical, RejectsBadSteps) {
  PathOptions o;
  o.initial_steps = 0;
  EXPECT_THROW(continued_log_a(ComplexMatrix::Identity(2, 2), CartanVector{0.1, -0.1},
                               GroupCase::complex, o),
               InvalidArgument);
}

// Jacobi: leading minors of a unitary S with det 1 are conjugates of the
// complementary trailing minors, so D_lead = conj(1 / D_trail).
TEST(Horospherical, LeadingMinorReadingHasSameArguments) {
  const CartanVector x{0.5, 0.1, -0.6};
  for (std::uint64_t s = 0; s < 20; ++s) {
    const ComplexMatrix S = build_s_matrix(haar_unitary(3, s), x, GroupCase::complex);
    const UDLFactors t = udl_decompose(S);
    const LDUFactors l = ldu_decompose(S);
    for (int i = 0; i < 3; ++i)
      EXPECT_LT(std::abs(l.diag(i) - std::conj(1.0 / t.diag(i))), 1e-12);
  }
}
