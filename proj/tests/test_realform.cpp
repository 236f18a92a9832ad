#include <gtest/gtest.h>

#include "crownlab/verify.hpp"

using namespace crownlab;

namespace {

LieDouble random_double(int n, CounterRng& rng) {
  LieDouble w = LieDouble::zero(n);
  for (const auto& e : sl_real_basis(n)) w.first += rng.normal() * e;
  for (const auto& e : sl_real_basis(n)) w.second += rng.normal() * e;
  return w;
}

}  // namespace

TEST(Involutions, AreInvolutiveAndCommute) {
  CounterRng rng(1);
  const LieDouble w = random_double(3, rng);
  for (InvolutionTag t : {InvolutionTag::theta, InvolutionTag::sigma, InvolutionTag::tau})
    EXPECT_LT((apply_involution(t, apply_involution(t, w)) - w).norm(), 1e-15);
  EXPECT_LT((theta_on_algebra(tau_on_algebra(w)) - tau_on_algebra(theta_on_algebra(w))).norm(), 1e-15);
}

TEST(Involutions, TauFixesRealForm) {
  // g0 = sl(n, R) embeds as (Z, -Z^T) and is tau-fixed; so is so(n) inside k.
  CounterRng rng(2);
  RealMatrix z = RealMatrix::Zero(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) z(i, j) = rng.normal();
  z -= RealMatrix::Identity(3, 3) * (z.trace() / 3);
  const LieDouble v = embed_g(z.cast<Complex>());
  EXPECT_LT((tau_on_algebra(v) - v).norm(), 1e-15);
  for (const auto& y : algebra_basis(BasisLabel::k0, 3).elements) {
    const LieDouble u = embed_k(y);
    EXPECT_LT((tau_on_algebra(u) - u).norm(), 1e-15);
  }
}

TEST(Involutions, TauNegatesForm) {
  // <tau v, tau w> = -<v, w>, which makes tau anti-symplectic
  CounterRng rng(3);
  const LieDouble v = random_double(3, rng), w = random_double(3, rng);
  EXPECT_NEAR(pairing(tau_on_algebra(v), tau_on_algebra(w)), -pairing(v, w), 1e-10);
}

TEST(Involutions, TauOnBorelIsGroupLevelTau) {
  CounterRng rng(4);
  const BorelPair b = detail::random_borel(3, rng);
  const BorelPair tb = tau_on_borel(b);
  EXPECT_LT(pair_distance(tau_on_borel(tb), b), 1e-12);
  // derivative check: tau(exp(tW)) = exp(t tau(W)) for W in b_C
  const LieDouble w = manin_split(random_double(3, rng)).b_part();
  const double h = 1e-7;
  const ComplexMatrix one = ComplexMatrix::Identity(3, 3);
  const BorelPair e{one + h * w.first + 0.5 * h * h * w.first * w.first,
                    one + h * w.second + 0.5 * h * h * w.second * w.second};
  const BorelPair te = tau_on_borel(e);
  const LieDouble d{(te.upper - ComplexMatrix::Identity(3, 3)) / h,
                    (te.lower - ComplexMatrix::Identity(3, 3)) / h};
  EXPECT_LT((d - tau_on_algebra(w)).norm(), 1e-5 * w.norm());
}

TEST(RealForm, PassesOnRandomPoints) {
  const CartanVector x{0.5, 0.1, -0.6};
  for (std::uint64_t s = 0; s < 20; ++s) {
    const RealFormReport r = check_real_form(haar_unitary(3, s), haar_orthogonal(3, s), x,
                                          CartanVector{0.3, -1.0, 0.7});
    EXPECT_LT(r.anticommutation, 1e-12);
    EXPECT_LT(r.moment_invariance, 1e-9);
    EXPECT_LT(r.lagrangian, 1e-9);
    EXPECT_LT(r.tau_fixes_q, 1e-9);
  }
  EXPECT_THROW(check_real_form(haar_unitary(2, 0), haar_orthogonal(2, 0), CartanVector{0.8, -0.8},
                             CartanVector{0.1, -0.1}),
               OutOfDomain);
}

TEST(RealformSuite, PassesAndDetectsTransposeOnlyTau) {
  const CartanVector x{0.5, 0.1, -0.6};
  SuiteReport r = suite_realform(3, x, 100);
  EXPECT_TRUE(r.pass) << r.to_json().dump(2);
  SuiteOptions o;
  o.mutation = Mutation::tau_transpose_only;
  r = suite_realform(3, x, 100, o);
  EXPECT_FALSE(r.pass);
}

TEST(RealformSuite, LagrangianForRanksTwoToFour) {
  for (const CartanVector& x : {CartanVector{0.6, -0.6}, CartanVector{0.5, 0.1, -0.6},
                                CartanVector{0.6, 0.2, -0.3, -0.5}}) {
    const SuiteReport r = suite_realform(x.n(), x, 20);
    EXPECT_TRUE(r.find("lagrangian_q_a")->pass);
    EXPECT_TRUE(r.pass);
  }
}
