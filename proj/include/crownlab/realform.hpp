#pragma once

// Split real form sl(n, R) inside the pair model.
//
// tau is the i-linear extension of entrywise conjugation c of g = sl(n, C).
// Pushing it through Z -> (Z, -Z^*) gives, on the algebra,
//   tau(W1, W2) = (-W2^T, -W1^T),
// and on the group tau(g1, g2) = ((g2^T)^{-1}, (g1^T)^{-1}). On K = {(k, k)}
// this is k -> conj(k), whose fixed points are K0 = SO(n); a = exp(iX) is
// fixed. Q_a = b~(K0 a) is the component of the fixed set through a.

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "crownlab/horospherical.hpp"
#include "crownlab/lie_core.hpp"
#include "crownlab/manin.hpp"
#include "crownlab/types.hpp"

namespace crownlab {

enum class InvolutionTag { theta, sigma, tau };

inline ComplexMatrix tau_on_k(const ComplexMatrix& k) { return k.conjugate(); }

inline LieDouble tau_on_algebra(const LieDouble& w) {
  return {-w.second.transpose(), -w.first.transpose()};
}

/// Cartan involution theta on the pair model: swap of the two factors.
inline LieDouble theta_on_algebra(const LieDouble& w) { return {w.second, w.first}; }

/// sigma = theta tau: (W1, W2) -> (-W1^T, -W2^T).
inline LieDouble sigma_on_algebra(const LieDouble& w) {
  return theta_on_algebra(tau_on_algebra(w));
}

inline LieDouble apply_involution(InvolutionTag tag, const LieDouble& w) {
  switch (tag) {
    case InvolutionTag::theta: return theta_on_algebra(w);
    case InvolutionTag::sigma: return sigma_on_algebra(w);
    case InvolutionTag::tau: return tau_on_algebra(w);
  }
  return w;
}

/// tau(b1, b2) = ((b2^T)^{-1}, (b1^T)^{-1}); upper stays upper.
inline BorelPair tau_on_borel(const BorelPair& b) {
  validate_borel(b);
  return {detail::lower_inverse(b.lower).transpose(), detail::upper_inverse(b.upper).transpose()};
}

/// Torus element t = exp(j diag(theta)) of T = exp(j a).
inline ComplexMatrix torus_element(const CartanVector& theta) {
  return (kJ * theta.as_vector().cast<Complex>()).array().exp().matrix().asDiagonal();
}

/// t.b = t b t^{-1} componentwise.
inline BorelPair torus_act(const ComplexMatrix& t, const BorelPair& b) {
  const ComplexMatrix t_inv = t.diagonal().cwiseInverse().asDiagonal();
  return {t * b.upper * t_inv, t * b.lower * t_inv};
}

inline double pair_distance(const BorelPair& a, const BorelPair& b) {
  return std::sqrt((a.upper - b.upper).squaredNorm() + (a.lower - b.lower).squaredNorm());
}

struct RealFormReport {
  double anticommutation = 0.0;     // ||t.tau(b) - tau(t^{-1}.b)||
  double moment_invariance = 0.0;   // Phi o tau vs Phi, incl. tau-equivariance of b~
  double lagrangian = 0.0;          // max |omega_b(U~, V~)|, U, V in so(n), b in Q_a
  double tau_fixes_q = 0.0;         // ||tau(b) - b|| for b in Q_a
};

/// Residuals of the three compatibility properties of (M_a, T, tau).
/// `tau_b` is the involution on Borel pairs under test.
template <typename TauOnBorel>
RealFormReport check_real_form(const ComplexMatrix& k, const ComplexMatrix& k0, const CartanVector& x,
                            const CartanVector& theta, TauOnBorel tau_b,
                            const PathOptions& opts = {}) {
  if (!in_crown_domain(x)) throw OutOfDomain("check_real_form: X outside the crown domain");
  RealFormReport rep;
  const int n = x.n();

  const HoroResult hk = continued_log_a(k, x, GroupCase::complex, opts);
  const BorelPair b = b_tilde_from(hk, k, x, GroupCase::complex);

  const ComplexMatrix t = torus_element(theta);
  const ComplexMatrix t_inv = t.diagonal().cwiseInverse().asDiagonal();
  rep.anticommutation = pair_distance(torus_act(t, tau_b(b)), tau_b(torus_act(t_inv, b)));

  const ComplexMatrix tk = tau_on_k(k);
  const HoroResult htk = continued_log_a(tk, x, GroupCase::complex, opts);
  const BorelPair b_tau = b_tilde_from(htk, tk, x, GroupCase::complex);
  const BorelPair tau_b_value = tau_b(b);
  double inv = max_abs_diff(htk.phi, hk.phi);
  // Phi read from the A_C-part of tau(b): diag(b1) = e^Z with |Im Z| < pi/2.
  for (int i = 0; i < n; ++i)
    inv = std::max(inv, std::abs(std::arg(tau_b_value.upper(i, i)) - hk.phi[static_cast<std::size_t>(i)]));
  const double scale = std::max(1.0, std::sqrt(b.upper.squaredNorm() + b.lower.squaredNorm()));
  inv = std::max(inv, pair_distance(tau_b_value, b_tau) / scale);
  rep.moment_invariance = inv;

  const HoroResult h0 = continued_log_a(k0, x, GroupCase::complex, opts);
  const BorelPair q = b_tilde_from(h0, k0, x, GroupCase::complex);
  const AlgebraBasis so = algebra_basis(BasisLabel::k0, n);
  double lag = 0.0;
  for (std::size_t i = 0; i < so.size(); ++i)
    for (std::size_t j = 0; j < so.size(); ++j)
      lag = std::max(lag, std::abs(symplectic_form(q, so[i], so[j])));
  rep.lagrangian = lag;
  const double qscale = std::max(1.0, std::sqrt(q.upper.squaredNorm() + q.lower.squaredNorm()));
  rep.tau_fixes_q = pair_distance(tau_b(q), q) / qscale;
  return rep;
}

inline RealFormReport check_real_form(const ComplexMatrix& k, const ComplexMatrix& k0,
                                   const CartanVector& x, const CartanVector& theta,
                                   const PathOptions& opts = {}) {
  return check_real_form(k, k0, x, theta, [](const BorelPair& b) { return tau_on_borel(b); }, opts);
}

}  // namespace crownlab
