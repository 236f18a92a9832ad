#pragma once

// Horospherical projection on the crown for G = SL(n, C), and by restriction
// for the split real form SL(n, R).
//
// Pair model. With g_C = g x g, a = exp(iX) is the pair (e^{jX}, e^{-jX}) and
// k in K is (k, k); here j is the matrix imaginary unit. Write
// ka = (g1, g2) = (n1 e^Z h, n2 e^{-Z} h) with n1 upper unitriangular,
// n2 lower unitriangular, h in G (the diagonal copy K_C). Then
//
//   S := g1 g2^{-1} = k e^{2jX} k^*  =  n1 . e^{2Z} . n2^{-1},
//
// which is exactly the UDL factorization of S with D = e^{2Z}. The A_C
// component of ka is (e^Z, e^{-Z}), i.e. log a~(ka) = Re Z + i Im Z, and the
// moment map is Phi = Im Z. For k0 in SO(n) the same S equals
// k0 e^{2iX} k0^T, the real-form Iwasawa square x x^T.
//
// D only determines Z up to the finite group F (entrywise sign of e^Z). The
// single-valued lift with log a~(1) = 0 is obtained by continuing
// arg D_k(t) along S(t) = k e^{2itX} k°, t in [0, 1], from S(0) = I.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "crownlab/errors.hpp"
#include "crownlab/lie_core.hpp"
#include "crownlab/matrix_core.hpp"
#include "crownlab/types.hpp"

namespace crownlab {

enum class GroupCase { complex, real_split };

inline std::string to_string(GroupCase c) {
  return c == GroupCase::complex ? "complex" : "real_split";
}

inline constexpr double kGroupTolerance = 1e-8;

struct PathOptions {
  int initial_steps = 64;
  /// A grid interval is split whenever some arg D_k moves by more than this.
  double unwrap_threshold = std::numbers::pi / 2;
  double min_step = 0x1.0p-20;
  double minor_tol = kMinorTolerance;
};

struct PathPoint {
  double t;
  std::vector<double> args;  // continued arg D_k(t)
};

struct HoroResult {
  ComplexVector d_final;
  ComplexVector z;  // 1/2 (log|D| + i continued arg D)
  CartanVector phi;
  std::vector<PathPoint> path;
  int steps_used = 0;
  UDLFactors factors;  // UDL of S(1)
};

/// b = (b1, b2) in B_C with b1 = n1 e^Z upper and b2 = n2 e^{-Z} lower.
struct BorelPair {
  ComplexMatrix upper;
  ComplexMatrix lower;

  int n() const noexcept { return static_cast<int>(upper.rows()); }

  static BorelPair identity(int n) {
    return {ComplexMatrix::Identity(n, n), ComplexMatrix::Identity(n, n)};
  }

  /// a = exp(iX) as the pair (e^{jX}, e^{-jX}).
  static BorelPair torus_point(const CartanVector& x) {
    const ComplexVector e = (kJ * x.as_vector().cast<Complex>()).array().exp().matrix();
    return {e.asDiagonal(), e.cwiseInverse().asDiagonal()};
  }
};

inline void validate_group_element(const ComplexMatrix& k, GroupCase c) {
  require_square(k, "group element");
  require_finite(k, "group element");
  if (c == GroupCase::complex) {
    const double r = unitarity_residual(k);
    if (r > kGroupTolerance)
      throw InvalidGroupElement("k is not unitary (residual " + std::to_string(r) + ")");
  } else {
    const double im = k.imag().cwiseAbs().maxCoeff();
    const double r = orthogonality_residual(k);
    if (im > kGroupTolerance || r > kGroupTolerance)
      throw InvalidGroupElement("k is not real orthogonal (residual " +
                                std::to_string(std::max(im, r)) + ")");
  }
}

/// S(t) = k e^{2itX} k° with ° the conjugate transpose (complex case) or the
/// transpose (split real case).
inline ComplexMatrix build_s_matrix(const ComplexMatrix& k, const CartanVector& x, GroupCase c,
                                    double t = 1.0) {
  validate_group_element(k, c);
  if (x.n() != k.rows()) throw InvalidArgument("build_s_matrix: dimension mismatch");
  const ComplexVector e = (2.0 * t * kJ * x.as_vector().cast<Complex>()).array().exp().matrix();
  const ComplexMatrix right = c == GroupCase::complex ? ComplexMatrix(k.adjoint())
                                                      : ComplexMatrix(k.transpose());
  return k * e.asDiagonal() * right;
}

namespace detail {

inline double wrap_to_pi(double a) {
  a = std::remainder(a, 2.0 * std::numbers::pi);
  return a;
}

}  // namespace detail

/// Branch-continued log a~ along t -> S(t). Requires X in the crown domain;
/// outside it the result is a best-effort continuation and may throw.
inline HoroResult continued_log_a(const ComplexMatrix& k, const CartanVector& x, GroupCase c,
                                  const PathOptions& opts = {}) {
  if (opts.initial_steps < 1) throw InvalidArgument("initial_steps must be positive");
  validate_group_element(k, c);
  const int n = x.n();
  if (k.rows() != n) throw InvalidArgument("continued_log_a: dimension mismatch");

  HoroResult res;
  res.path.push_back({0.0, std::vector<double>(static_cast<std::size_t>(n), 0.0)});

  auto factor_at = [&](double t) { return udl_decompose(build_s_matrix(k, x, c, t), opts.minor_tol); };

  // Explicit stack of pending interval end points; intervals are processed
  // left to right so the path stays ordered.
  const double h0 = 1.0 / opts.initial_steps;
  UDLFactors last;
  for (int s = 1; s <= opts.initial_steps; ++s) {
    std::vector<double> pending{s == opts.initial_steps ? 1.0 : s * h0};
    while (!pending.empty()) {
      const double t1 = pending.back();
      const PathPoint& prev = res.path.back();
      UDLFactors f = factor_at(t1);
      double worst = 0.0;
      std::vector<double> args(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) {
        const double delta = detail::wrap_to_pi(std::arg(f.diag(i)) - prev.args[static_cast<std::size_t>(i)]);
        worst = std::max(worst, std::abs(delta));
        args[static_cast<std::size_t>(i)] = prev.args[static_cast<std::size_t>(i)] + delta;
      }
      if (worst > opts.unwrap_threshold) {
        const double mid = 0.5 * (prev.t + t1);
        if (t1 - mid < opts.min_step)
          throw BranchTrackingFailure("branch tracking failed near t=" + std::to_string(t1) +
                                      ": arg jump " + std::to_string(worst));
        pending.push_back(mid);
        continue;
      }
      res.path.push_back({t1, std::move(args)});
      pending.pop_back();
      last = std::move(f);
    }
  }

  res.steps_used = static_cast<int>(res.path.size()) - 1;
  res.d_final = last.diag;
  res.z.resize(n);
  std::vector<double> phi(static_cast<std::size_t>(n));
  const auto& final_args = res.path.back().args;
  for (int i = 0; i < n; ++i) {
    const double half_arg = 0.5 * final_args[static_cast<std::size_t>(i)];
    res.z(i) = Complex(0.5 * std::log(std::abs(last.diag(i))), half_arg);
    phi[static_cast<std::size_t>(i)] = half_arg;
  }
  res.phi = CartanVector(std::move(phi), 1e-9);
  res.factors = std::move(last);
  return res;
}

/// Phi(b~(ka)) = Im log a~(ka) in a ~ t*.
inline CartanVector moment_map(const ComplexMatrix& k, const CartanVector& x, GroupCase c,
                               const PathOptions& opts = {}) {
  return continued_log_a(k, x, c, opts).phi;
}

inline constexpr double kReconstructionTolerance = 1e-8;

/// Borel pair b~(ka) = (U e^Z, L^{-1} e^{-Z}) from the UDL of S(1) and the
/// continued Z. Verifies that ka = b~(ka) . h with h in the diagonal K_C.
inline BorelPair b_tilde_from(const HoroResult& r, const ComplexMatrix& k, const CartanVector& x,
                              GroupCase c) {
  const int n = x.n();
  const ComplexVector ez = r.z.array().exp().matrix();
  const ComplexVector emz = ez.cwiseInverse();
  const ComplexMatrix lower_inv =
      r.factors.lower.triangularView<Eigen::UnitLower>().solve(ComplexMatrix::Identity(n, n));
  BorelPair b{r.factors.upper * ez.asDiagonal(), lower_inv * emz.asDiagonal()};

  const BorelPair a = BorelPair::torus_point(x);
  const ComplexMatrix g1 = k * a.upper;
  const ComplexMatrix g2 = k * a.lower;
  const ComplexMatrix h =
      emz.asDiagonal() *
      ComplexMatrix(r.factors.upper.triangularView<Eigen::UnitUpper>().solve(g1));
  const double scale = std::max(1.0, g2.norm());
  double residual = (g2 - b.lower * h).norm() / scale;
  if (c == GroupCase::real_split) {
    // Real form: x = k0 a = (U e^Z) h with h in SO(n, C).
    residual = std::max(residual, orthogonality_residual(h) / std::sqrt(static_cast<double>(n)));
  }
  if (!(residual < kReconstructionTolerance))
    throw InconsistentDecomposition("b~ reconstruction residual " + std::to_string(residual));
  return b;
}

inline BorelPair b_tilde(const ComplexMatrix& k, const CartanVector& x, GroupCase c,
                         const PathOptions& opts = {}) {
  return b_tilde_from(continued_log_a(k, x, c, opts), k, x, c);
}

/// Closed-form moment map for n = 2, X = (x, -x):
///   d2 = S_22 = |k21|^2 e^{2ix} + |k22|^2 e^{-2ix},  Phi = (-arg d2 / 2, arg d2 / 2).
/// Re d2 = cos 2x > 0 on the crown, so the principal argument is the lift.
inline CartanVector moment_n2_oracle(const ComplexMatrix& k, double x) {
  if (k.rows() != 2 || k.cols() != 2) throw InvalidArgument("moment_n2_oracle: need a 2x2 matrix");
  if (!(std::abs(x) < std::numbers::pi / 4))
    throw OutOfDomain("moment_n2_oracle: |x| must be below pi/4");
  const Complex d2 = std::norm(k(1, 0)) * std::exp(2.0 * kJ * x) +
                     std::norm(k(1, 1)) * std::exp(-2.0 * kJ * x);
  const double half = 0.5 * std::arg(d2);
  return CartanVector({-half, half});
}

}  // namespace crownlab
