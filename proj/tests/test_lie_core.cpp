#include <gtest/gtest.h>

#include <algorithm>
#include <numbers>

#include "crownlab/lie_core.hpp"
#include "crownlab/rng.hpp"

using namespace crownlab;

TEST(CartanVector, RejectsNonZeroSum) {
  EXPECT_THROW(CartanVector({1.0, 2.0}), InvalidArgument);
  EXPECT_THROW(CartanVector(std::vector<double>{}), InvalidArgument);
  EXPECT_NO_THROW(CartanVector({0.5, 0.1, -0.6}));
}

TEST(CartanVector, CenteredSubtractsMean) {
  const CartanVector x = CartanVector::centered({1.0, 2.0, 6.0});
  EXPECT_NEAR(x[0], -2.0, 1e-15);
  EXPECT_NEAR(x[1], -1.0, 1e-15);
  EXPECT_NEAR(x[2], 3.0, 1e-15);
  EXPECT_NEAR(x.sum(), 0.0, 1e-15);
}

TEST(LieCore, PositiveRoots) {
  EXPECT_EQ(positive_roots(2).size(), 1u);
  EXPECT_EQ(positive_roots(4).size(), 6u);
  EXPECT_THROW(positive_roots(1), InvalidRank);
}

TEST(LieCore, CrownDomain) {
  EXPECT_TRUE(in_crown_domain(CartanVector{0.5, 0.1, -0.6}));
  EXPECT_FALSE(in_crown_domain(CartanVector{0.8, -0.8}));  // spread 1.6 > pi/2
  const double h = std::numbers::pi / 4;
  EXPECT_FALSE(in_crown_domain(CartanVector{h, -h}));  // boundary is excluded
  EXPECT_NEAR(root_spread(CartanVector{0.5, 0.1, -0.6}), 1.1, 1e-15);
}

TEST(Weyl, GroupOrderAndOrbit) {
  EXPECT_EQ(weyl_group(3).size(), 6u);
  EXPECT_EQ(weyl_group(4).size(), 24u);
  const auto orbit = weyl_orbit(CartanVector{0.5, 0.1, -0.6});
  EXPECT_EQ(orbit.size(), 6u);
  // repeated entries collapse the orbit
  EXPECT_EQ(weyl_orbit(CartanVector{0.3, 0.3, -0.6}).size(), 3u);
}

TEST(Weyl, LiftIsSpecialOrthogonalAndActsByConjugation) {
  const CartanVector x{0.5, 0.1, -0.6};
  for (const auto& w : weyl_group(3)) {
    const RealMatrix m = w.matrix_lift();
    EXPECT_NEAR((m.transpose() * m - RealMatrix::Identity(3, 3)).norm(), 0.0, 1e-15);
    EXPECT_NEAR(m.determinant(), 1.0, 1e-15);
    const RealMatrix conj = m * x.as_vector().asDiagonal() * m.transpose();
    const CartanVector wx = w.apply(x);
    for (int i = 0; i < 3; ++i) EXPECT_NEAR(conj(i, i), wx[static_cast<std::size_t>(i)], 1e-15);
  }
}

TEST(Weyl, RejectsNonPermutation) {
  EXPECT_THROW(WeylElement({0, 0, 1}), InvalidArgument);
  EXPECT_THROW(WeylElement({0, 3, 1}), InvalidArgument);
}

// Brute force: dim of {Y in su(n) : [diag(x), Y] = 0} from the basis.
int centralizer_brute_force(const CartanVector& x) {
  const int n = x.n();
  const AlgebraBasis k = algebra_basis(BasisLabel::k, n);
  const ComplexMatrix d = x.diag_matrix();
  RealMatrix a(2 * n * n, static_cast<Eigen::Index>(k.size()));
  for (std::size_t c = 0; c < k.size(); ++c) {
    const ComplexMatrix comm = d * k[c] - k[c] * d;
    for (int i = 0; i < n * n; ++i) {
      a(2 * i, static_cast<Eigen::Index>(c)) = comm.reshaped()(i).real();
      a(2 * i + 1, static_cast<Eigen::Index>(c)) = comm.reshaped()(i).imag();
    }
  }
  Eigen::FullPivLU<RealMatrix> lu(a);
  lu.setThreshold(1e-10);
  return static_cast<int>(k.size()) - static_cast<int>(lu.rank());
}

TEST(LieCore, CentralizerDimensionMatchesBruteForce) {
  for (const CartanVector& x : {CartanVector{0.5, 0.1, -0.6}, CartanVector{0.3, 0.3, -0.6},
                                CartanVector{0.0, 0.0, 0.0}, CartanVector{0.2, 0.2, -0.2, -0.2},
                                CartanVector{0.3, 0.1, -0.1, -0.3}}) {
    EXPECT_EQ(centralizer_dim(x), centralizer_brute_force(x));
  }
  EXPECT_EQ(centralizer_dim(CartanVector{0.5, 0.1, -0.6}), 2);
  EXPECT_EQ(centralizer_dim(CartanVector{0.3, 0.3, -0.6}), 4);
}

TEST(LieCore, Genericity) {
  EXPECT_TRUE(is_generic(CartanVector{0.5, 0.1, -0.6}));
  EXPECT_FALSE(is_generic(CartanVector{0.3, 0.3, -0.6}));
  EXPECT_FALSE(is_generic(CartanVector{0.0005, 0.0, -0.0005}));
}

TEST(AlgebraBasis, DimensionsAndMembership) {
  for (int n = 2; n <= 4; ++n) {
    const auto k = algebra_basis(BasisLabel::k, n);
    EXPECT_EQ(static_cast<int>(k.size()), n * n - 1);
    for (const auto& y : k.elements) {
      EXPECT_TRUE(is_skew_hermitian(y));
      EXPECT_NEAR(std::abs(y.trace()), 0.0, 1e-15);
    }
    EXPECT_EQ(static_cast<int>(algebra_basis(BasisLabel::k0, n).size()), n * (n - 1) / 2);
    EXPECT_EQ(static_cast<int>(algebra_basis(BasisLabel::torus, n).size()), n - 1);
    EXPECT_EQ(static_cast<int>(algebra_basis(BasisLabel::a, n).size()), n - 1);
    EXPECT_EQ(static_cast<int>(algebra_basis(BasisLabel::n, n).size()), n * (n - 1));
    EXPECT_EQ(static_cast<int>(algebra_basis(BasisLabel::nbar, n).size()), n * (n - 1));
    EXPECT_EQ(static_cast<int>(sl_real_basis(n).size()), 2 * (n * n - 1));
  }
  EXPECT_THROW(algebra_basis(BasisLabel::k, 1), InvalidRank);
}

TEST(Rng, StreamsAreReproducibleAndDistinct) {
  CounterRng a(stream_seed(42, 3)), b(stream_seed(42, 3)), c(stream_seed(42, 4));
  for (int i = 0; i < 10; ++i) {
    const auto va = a.next_u64();
    EXPECT_EQ(va, b.next_u64());
    EXPECT_NE(va, c.next_u64());
  }
}

TEST(Rng, NormalMoments) {
  CounterRng r(7);
  double s = 0, s2 = 0;
  const int m = 200000;
  for (int i = 0; i < m; ++i) {
    const double v = r.normal();
    s += v;
    s2 += v * v;
  }
  EXPECT_NEAR(s / m, 0.0, 0.01);
  EXPECT_NEAR(s2 / m, 1.0, 0.01);
}
