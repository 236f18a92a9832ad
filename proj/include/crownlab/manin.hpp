#pragma once

// The double g_C = g x g of g = sl(n, C), its invariant form, the Manin
// splitting g_C = k_C (+) b_C, dressing tangent vectors, and the leaf
// symplectic form restricted to M_a.
//
// An element of g_C is a pair (W1, W2) of complex traceless matrices. The
// embedding of g is Z -> (Z, -Z^*) (the conjugation of g with respect to
// k = su(n) is Z -> -Z^*), so
//   k_C = {(Z, Z)},  a_C = {(H, -H) : H diagonal},  n_C = n x nbar,
//   k = {(Y, Y) : Y in su(n)},  a = {(H, -H) : H real diagonal}.
// The second complex structure i acts as (W1, W2) -> (jW1, -jW2); "Re" and
// "Im" with respect to it are never formed as numbers.

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "crownlab/errors.hpp"
#include "crownlab/horospherical.hpp"
#include "crownlab/lie_core.hpp"
#include "crownlab/types.hpp"

namespace crownlab {

struct LieDouble {
  ComplexMatrix first;
  ComplexMatrix second;

  int n() const noexcept { return static_cast<int>(first.rows()); }

  static LieDouble zero(int n) { return {ComplexMatrix::Zero(n, n), ComplexMatrix::Zero(n, n)}; }

  LieDouble operator+(const LieDouble& o) const { return {first + o.first, second + o.second}; }
  LieDouble operator-(const LieDouble& o) const { return {first - o.first, second - o.second}; }
  LieDouble operator*(double s) const { return {s * first, s * second}; }
  friend LieDouble operator*(double s, const LieDouble& v) { return v * s; }

  double norm() const { return std::sqrt(first.squaredNorm() + second.squaredNorm()); }
};

/// kappa(A, B) = 2n tr(AB), the Killing form of sl(n, C).
inline Complex killing(const ComplexMatrix& a, const ComplexMatrix& b) {
  return 2.0 * static_cast<double>(a.rows()) * (a.cwiseProduct(b.transpose())).sum();
}

/// <(X, Y), (X', Y')> = c Re kappa(X, X') + s c Re kappa(Y, Y').
/// The invariant form has s = -1; `scale` is the normalization c of kappa.
struct BilinearForm {
  double scale = 1.0;
  double second_sign = -1.0;

  double operator()(const LieDouble& v, const LieDouble& w) const {
    return scale * (killing(v.first, w.first).real() +
                    second_sign * killing(v.second, w.second).real());
  }
};

inline double pairing(const LieDouble& v, const LieDouble& w, const BilinearForm& form = {}) {
  return form(v, w);
}

/// Image of Z in g under g -> g_C.
inline LieDouble embed_g(const ComplexMatrix& z) { return {z, -z.adjoint()}; }

/// (Y, Y) for Y in su(n).
inline LieDouble embed_k(const ComplexMatrix& y) {
  if (!is_skew_hermitian(y, 1e-10)) throw InvalidArgument("embed_k: expected a traceless skew-Hermitian matrix");
  return {y, y};
}

/// (Z, Z) in k_C for arbitrary traceless Z.
inline LieDouble embed_kc(const ComplexMatrix& z) { return {z, z}; }

/// i Y for Y in a, i.e. (jY, -jY) in a_C.
inline LieDouble embed_i_cartan(const CartanVector& y) {
  const ComplexMatrix d = kJ * y.diag_matrix();
  return {d, -d};
}

struct ManinSplit {
  LieDouble k_part;      // (Z, Z)
  ComplexVector h_part;  // H; the a_C part is (H, -H)
  ComplexMatrix n_upper;  // N, strictly upper
  ComplexMatrix n_lower;  // N', strictly lower

  LieDouble a_part() const {
    const ComplexMatrix h = h_part.asDiagonal();
    return {h, -h};
  }
  LieDouble b_part() const {
    const ComplexMatrix h = h_part.asDiagonal();
    return {h + n_upper, -h + n_lower};
  }
  LieDouble reassemble() const { return k_part + b_part(); }
};

/// W = (Z + H + N, Z - H + N') solved in closed form from D = W1 - W2.
inline ManinSplit manin_split(const LieDouble& w) {
  const ComplexMatrix delta = w.first - w.second;
  ManinSplit s;
  s.h_part = 0.5 * delta.diagonal();
  s.n_upper = delta.triangularView<Eigen::StrictlyUpper>();
  s.n_lower = -ComplexMatrix(delta.triangularView<Eigen::StrictlyLower>());
  const ComplexMatrix z = w.first - ComplexMatrix(s.h_part.asDiagonal()) - s.n_upper;
  s.k_part = {z, z};
  return s;
}

inline LieDouble pr_k(const LieDouble& w) { return manin_split(w).k_part; }
inline LieDouble pr_b(const LieDouble& w) { return manin_split(w).b_part(); }
inline LieDouble pr_a(const LieDouble& w) { return manin_split(w).a_part(); }

namespace detail {

inline void require_invertible_triangular(const ComplexMatrix& m, const char* which) {
  const ComplexVector d = m.diagonal();
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if (!m.allFinite() || d.cwiseAbs().minCoeff() <= 1e-14 * scale)
    throw InvalidBorel(std::string("singular ") + which + " Borel factor");
}

inline ComplexMatrix upper_inverse(const ComplexMatrix& b) {
  return b.triangularView<Eigen::Upper>().solve(ComplexMatrix::Identity(b.rows(), b.cols()));
}

inline ComplexMatrix lower_inverse(const ComplexMatrix& b) {
  return b.triangularView<Eigen::Lower>().solve(ComplexMatrix::Identity(b.rows(), b.cols()));
}

}  // namespace detail

inline void validate_borel(const BorelPair& b) {
  detail::require_invertible_triangular(b.upper, "upper");
  detail::require_invertible_triangular(b.lower, "lower");
}

/// Ad(b^{-1}) W = (b1^{-1} W1 b1, b2^{-1} W2 b2).
inline LieDouble adjoint(const BorelPair& b, const LieDouble& w) {
  validate_borel(b);
  return {detail::upper_inverse(b.upper) * w.first * b.upper,
          detail::lower_inverse(b.lower) * w.second * b.lower};
}

/// Ad(b) W.
inline LieDouble adjoint_fwd(const BorelPair& b, const LieDouble& w) {
  validate_borel(b);
  return {b.upper * w.first * detail::upper_inverse(b.upper),
          b.lower * w.second * detail::lower_inverse(b.lower)};
}

/// Left-trivialized dressing vector b^{-1} d/dt b~(exp(tY) ka) = pr_b(Ad(b^{-1}) Y).
inline LieDouble tangent_vector(const BorelPair& b, const ComplexMatrix& y) {
  return pr_b(adjoint(b, embed_k(y)));
}

inline constexpr double kSymplecticConsistencyTolerance = 1e-10;

/// omega_b(Y~, Z~) = <pr_k(Ad(b^{-1})Y), Ad(b^{-1})Z> for Y, Z in su(n).
/// The equal expression -<pr_b(Ad(b^{-1})Y), Ad(b^{-1})Z> is evaluated as
/// well; disagreement means the form is not isotropic on k_C.
inline double symplectic_form(const BorelPair& b, const ComplexMatrix& y, const ComplexMatrix& z,
                              const BilinearForm& form = {}) {
  const LieDouble ay = adjoint(b, embed_k(y));
  const LieDouble az = adjoint(b, embed_k(z));
  const ManinSplit split = manin_split(ay);
  const double via_k = form(split.k_part, az);
  const double via_b = -form(split.b_part(), az);
  const double scale = std::max({1.0, std::abs(via_k), std::abs(via_b)});
  if (!(std::abs(via_k - via_b) <= kSymplecticConsistencyTolerance * scale))
    throw InternalConsistency("symplectic form expressions disagree: " + std::to_string(via_k) +
                              " vs " + std::to_string(via_b));
  return via_k;
}

/// Im of the a_C-component of a left-trivialized direction W, i.e.
/// d/dt Phi(b exp(tW)) at t = 0.
inline CartanVector moment_derivative(const LieDouble& w) {
  const ComplexVector h = manin_split(w).h_part;
  std::vector<double> out(static_cast<std::size_t>(h.size()));
  for (Eigen::Index i = 0; i < h.size(); ++i) out[static_cast<std::size_t>(i)] = h(i).imag();
  return CartanVector(std::move(out), 1e-8);
}

/// Torus element Z = i diag(h) in t = j a, checked.
inline void require_torus(const ComplexMatrix& z) {
  const bool diagonal = (z - ComplexMatrix(z.diagonal().asDiagonal())).cwiseAbs().maxCoeff() <= 1e-12;
  if (!diagonal || z.diagonal().real().cwiseAbs().maxCoeff() > 1e-12 || std::abs(z.trace()) > 1e-10)
    throw InvalidArgument("expected a torus element i*diag(h) with zero-sum h");
}

/// The identification a -> t*, Y -> (Z -> <iY, Z>). With the unit Killing
/// normalization, <iY, (i diag h, i diag h)> = -4n sum_k y_k h_k.
inline double moment_pairing(const CartanVector& y, const ComplexMatrix& z,
                             const BilinearForm& form = {}) {
  require_torus(z);
  return form(embed_i_cartan(y), embed_kc(z));
}

/// Gram matrix omega_b(Y~_i, Y~_j) over a basis of k.
inline RealMatrix omega_gram(const BorelPair& b, const AlgebraBasis& basis,
                             const BilinearForm& form = {}) {
  if (basis.label != BasisLabel::k && basis.label != BasisLabel::k0 &&
      basis.label != BasisLabel::torus)
    throw InvalidArgument("omega_gram: basis must span a subalgebra of k");
  const auto m = static_cast<Eigen::Index>(basis.size());
  RealMatrix g(m, m);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j)
      g(i, j) = symplectic_form(b, basis[static_cast<std::size_t>(i)],
                                basis[static_cast<std::size_t>(j)], form);
  return g;
}

}  // namespace crownlab
