#include <gtest/gtest.h>

#include "crownlab/verify.hpp"

using namespace crownlab;

namespace {

const CartanVector kX{0.5, 0.1, -0.6};

SuiteOptions with(Mutation m, unsigned threads = 1) {
  SuiteOptions o;
  o.mutation = m;
  o.threads = threads;
  return o;
}

ConvexityOptions small_convexity() {
  ConvexityOptions c;
  c.membership_samples = 2000;
  c.coverage_samples = 5000;
  c.coverage_threshold = 0.9;
  c.robustness_stride = 50;
  return c;
}

}  // namespace

TEST(Report, JsonShape) {
  const SuiteReport r = suite_manin(2);
  const auto j = r.to_json();
  EXPECT_EQ(j["suite_name"], "manin");
  EXPECT_TRUE(j.contains("runtime_ms"));
  EXPECT_FALSE(r.to_json(false).contains("runtime_ms"));
  EXPECT_TRUE(j["residuals"]["nondegeneracy_ratio"].contains("min"));
  EXPECT_TRUE(j["residuals"]["symmetry"].contains("max"));
  EXPECT_EQ(j["parameters"]["seed"], 42);
}

TEST(Report, EmptyReportFails) {
  SuiteReport r;
  r.finalize();
  EXPECT_FALSE(r.pass);
  ResidualStat s;
  s.add(std::numeric_limits<double>::quiet_NaN());
  r.require_below("nan", s, 1.0);
  r.finalize();
  EXPECT_FALSE(r.pass);
}

TEST(Symplectic, PassesAndRanks) {
  const SuiteReport r3 = suite_symplectic(3, kX, 20);
  EXPECT_TRUE(r3.pass) << r3.to_json().dump(2);
  EXPECT_EQ(r3.diagnostics["expected_kernel_dim"], 2);
  const SuiteReport r2 = suite_symplectic(2, CartanVector{0.6, -0.6}, 10);
  EXPECT_TRUE(r2.pass);
  EXPECT_EQ(r2.diagnostics["expected_rank"], 2);
}

TEST(Symplectic, RejectsDegenerateInputs) {
  EXPECT_THROW(suite_symplectic(3, CartanVector{0.3, 0.3, -0.6}, 5), InvalidArgument);
  EXPECT_THROW(suite_symplectic(2, CartanVector{0.8, -0.8}, 5), OutOfDomain);
  EXPECT_THROW(suite_symplectic(2, kX, 5), InvalidArgument);
}

TEST(Symplectic, DetectsPairingSign) {
  EXPECT_FALSE(suite_symplectic(3, kX, 5, with(Mutation::pairing_sign)).pass);
}

TEST(MomentIdentity, PassesAndDetectsMutations) {
  for (const CartanVector& x : {CartanVector{0.6, -0.6}, kX}) {
    const SuiteReport r = suite_moment_identity(x.n(), x, 30);
    EXPECT_TRUE(r.pass) << r.to_json().dump(2);
  }
  EXPECT_FALSE(suite_moment_identity(3, kX, 10, with(Mutation::pairing_sign)).pass);
  const SuiteReport t = suite_moment_identity(3, kX, 10, with(Mutation::transposed_udl));
  EXPECT_FALSE(t.pass);
  EXPECT_FALSE(t.find("finite_difference")->pass);
}

TEST(Convexity, ComplexAndRealPass) {
  for (GroupCase c : {GroupCase::complex, GroupCase::real_split}) {
    const SuiteReport r = suite_convexity(c, 3, kX, small_convexity());
    EXPECT_TRUE(r.pass) << r.to_json().dump(2);
  }
}

TEST(Convexity, DetectsExponentSign) {
  const SuiteReport r = suite_convexity(GroupCase::complex, 3, kX, small_convexity(),
                                        with(Mutation::exponent_sign));
  EXPECT_FALSE(r.pass);
  EXPECT_FALSE(r.find("vertex_attainment")->pass);
}

TEST(Convexity, RankFourSkipsCoverage) {
  ConvexityOptions c = small_convexity();
  c.membership_samples = 300;
  c.coverage_samples = 300;
  const SuiteReport r = suite_convexity(GroupCase::complex, 4, CartanVector{0.6, 0.2, -0.3, -0.5}, c);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.find("hull_coverage"), nullptr);
  EXPECT_TRUE(r.diagnostics.contains("hull_coverage"));
}

TEST(Determinism, ThreadCountDoesNotChangeReports) {
  const auto a = suite_convexity(GroupCase::complex, 3, kX, small_convexity(), with(Mutation::none, 1));
  const auto b = suite_convexity(GroupCase::complex, 3, kX, small_convexity(), with(Mutation::none, 4));
  EXPECT_EQ(a.to_json(false).dump(), b.to_json(false).dump());
  const auto c = suite_realform(3, kX, 50, with(Mutation::none, 1));
  const auto d = suite_realform(3, kX, 50, with(Mutation::none, 3));
  EXPECT_EQ(c.to_json(false).dump(), d.to_json(false).dump());
}

TEST(Determinism, SeedChangesSamples) {
  SuiteOptions a, b;
  b.seed = 43;
  const auto pa = sample_moments(GroupCase::complex, kX, 5, a);
  const auto pb = sample_moments(GroupCase::complex, kX, 5, b);
  EXPECT_GT(max_abs_diff(*pa[0], *pb[0]), 0.0);
}

TEST(Parallel, PropagatesExceptions) {
  EXPECT_THROW(parallel_for(100, 4,
                            [](std::size_t i) {
                              if (i == 37) throw InvalidArgument("boom");
                            }),
               InvalidArgument);
}
