#pragma once

// Dense complex matrix helpers, the pivot-free upper-diagonal-lower (UDL)
// factorization in the trailing-minor convention, and Haar sampling of
// SU(n) and SO(n).
//
// Convention: an Iwasawa factor x = n a k with n UPPER unitriangular gives
// S = x x° = n a^2 n°, i.e. (upper)(diagonal)(lower). The factorization
// therefore exists iff every trailing principal minor
//   tau_k = det S[k.., k..]
// is nonzero, and then D[k] = tau_k / tau_{k+1} with tau_{n+1} = 1.
// Pivoting is never allowed: a permuted factorization describes a different
// Bruhat cell, not the Iwasawa cell.

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/QR>

#include "crownlab/errors.hpp"
#include "crownlab/lie_core.hpp"
#include "crownlab/rng.hpp"
#include "crownlab/types.hpp"

namespace crownlab {

inline constexpr double kMinorTolerance = 1e-12;

inline bool all_finite(const ComplexMatrix& m) { return m.allFinite(); }

inline void require_finite(const ComplexMatrix& m, const char* what) {
  if (!all_finite(m)) throw InvalidArgument(std::string(what) + ": non-finite entry");
}

inline void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0)
    throw InvalidArgument(std::string(what) + ": expected a non-empty square matrix");
}

/// Order-reversal permutation matrix J (J e_i = e_{n-1-i}).
inline ComplexMatrix reversal(Eigen::Index n) {
  return ComplexMatrix::Identity(n, n).rowwise().reverse();
}

/// J m J computed by index reversal.
inline ComplexMatrix reverse_both(const ComplexMatrix& m) { return m.reverse(); }

inline double relative_frobenius(const ComplexMatrix& a, const ComplexMatrix& ref) {
  const double scale = ref.norm();
  return (a - ref).norm() / (scale > 0.0 ? scale : 1.0);
}

inline double unitarity_residual(const ComplexMatrix& k) {
  return (k.adjoint() * k - ComplexMatrix::Identity(k.rows(), k.cols())).norm();
}

inline double orthogonality_residual(const ComplexMatrix& k) {
  return (k.transpose() * k - ComplexMatrix::Identity(k.rows(), k.cols())).norm();
}

struct UDLFactors {
  ComplexMatrix upper;  // unit upper-triangular
  ComplexVector diag;   // nonzero diagonal D
  ComplexMatrix lower;  // unit lower-triangular
  /// tau_1 .. tau_{n+1} (zero-based: trailing_minors[k] = det S[k.., k..]),
  /// with trailing_minors[n] = 1.
  ComplexVector trailing_minors;

  int n() const noexcept { return static_cast<int>(diag.size()); }
  ComplexMatrix product() const { return upper * diag.asDiagonal() * lower; }
};

struct LDUFactors {
  ComplexMatrix lower;
  ComplexVector diag;
  ComplexMatrix upper;
};

namespace detail {

/// Doolittle elimination of A = L D U without pivoting. `pivot_floor(k)` is
/// the smallest admissible |leading minor of order k+1|.
template <typename Floor, typename OnFail>
LDUFactors ldu_no_pivot(ComplexMatrix a, ComplexVector& leading_minors, Floor pivot_floor,
                        OnFail on_fail) {
  const Eigen::Index n = a.rows();
  LDUFactors f{ComplexMatrix::Identity(n, n), ComplexVector(n), ComplexMatrix::Identity(n, n)};
  leading_minors.resize(n);
  Complex minor = 1.0;
  for (Eigen::Index k = 0; k < n; ++k) {
    const Complex pivot = a(k, k);
    minor *= pivot;
    leading_minors(k) = minor;
    if (!(std::abs(minor) > pivot_floor(k))) on_fail(k, std::abs(minor));
    f.diag(k) = pivot;
    for (Eigen::Index i = k + 1; i < n; ++i) {
      f.lower(i, k) = a(i, k) / pivot;
      f.upper(k, i) = a(k, i) / pivot;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j) a(i, j) -= f.lower(i, k) * a(k, j);
  }
  return f;
}

}  // namespace detail

/// S = U D L with U unit upper, L unit lower, computed as the leading-minor
/// LDU of J S J read back through J. Throws DecompositionOutsideCell when
/// some |tau_k| <= tol * m^(n-k+1), m = max |S_ij|.
inline UDLFactors udl_decompose(const ComplexMatrix& s, double tol = kMinorTolerance) {
  require_square(s, "udl_decompose");
  require_finite(s, "udl_decompose");
  const Eigen::Index n = s.rows();
  const double m = s.cwiseAbs().maxCoeff();
  ComplexVector leading;
  // Leading minor of order k+1 of JSJ is the trailing minor of S starting
  // at row n-1-k.
  const LDUFactors f = detail::ldu_no_pivot(
      reverse_both(s), leading,
      [&](Eigen::Index k) { return tol * std::pow(m, static_cast<double>(k + 1)); },
      [&](Eigen::Index k, double mag) {
        throw DecompositionOutsideCell(static_cast<std::size_t>(n - 1 - k), mag);
      });
  UDLFactors out;
  out.upper = reverse_both(f.lower);
  out.lower = reverse_both(f.upper);
  out.diag = f.diag.reverse();
  out.trailing_minors.resize(n + 1);
  out.trailing_minors(n) = 1.0;
  for (Eigen::Index k = 0; k < n; ++k) out.trailing_minors(n - 1 - k) = leading(k);
  return out;
}

/// Leading-minor LDU (S = L D U). Used by the index-reversal cross-check and
/// by the transposed-convention mutation in the verification harness.
inline LDUFactors ldu_decompose(const ComplexMatrix& s, double tol = kMinorTolerance) {
  require_square(s, "ldu_decompose");
  require_finite(s, "ldu_decompose");
  const double m = s.cwiseAbs().maxCoeff();
  ComplexVector leading;
  return detail::ldu_no_pivot(
      s, leading, [&](Eigen::Index k) { return tol * std::pow(m, static_cast<double>(k + 1)); },
      [&](Eigen::Index k, double mag) {
        throw DecompositionOutsideCell(static_cast<std::size_t>(k), mag);
      });
}

inline ComplexMatrix gaussian_complex(int n, CounterRng& rng) {
  ComplexMatrix g(n, n);
  const double s = std::sqrt(0.5);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) g(i, j) = Complex(s * rng.normal(), s * rng.normal());
  return g;
}

/// Haar-distributed element of SU(n). Gaussian matrix, Householder QR,
/// phases of diag(R) moved into Q, then det fixed by a phase on the last
/// column (this commutes with left translation, so Haar is preserved).
inline ComplexMatrix haar_unitary(int n, std::uint64_t seed) {
  if (n < 1) throw InvalidRank(n);
  CounterRng rng(seed);
  const Eigen::HouseholderQR<ComplexMatrix> qr(gaussian_complex(n, rng));
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix& r = qr.matrixQR();
  for (int j = 0; j < n; ++j) {
    const Complex d = r(j, j);
    const double mag = std::abs(d);
    if (mag > 0.0) q.col(j) *= d / mag;
  }
  const Complex det = q.determinant();
  q.col(n - 1) *= std::conj(det) / std::abs(det);
  return q;
}

/// Haar-distributed element of SO(n), returned with zero imaginary parts.
inline ComplexMatrix haar_orthogonal(int n, std::uint64_t seed) {
  if (n < 1) throw InvalidRank(n);
  CounterRng rng(seed);
  RealMatrix g(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) g(i, j) = rng.normal();
  const Eigen::HouseholderQR<RealMatrix> qr(g);
  RealMatrix q = qr.householderQ();
  const RealMatrix& r = qr.matrixQR();
  for (int j = 0; j < n; ++j)
    if (r(j, j) < 0.0) q.col(j) *= -1.0;
  if (q.determinant() < 0.0) q.col(n - 1) *= -1.0;
  return q.cast<Complex>();
}

/// Random element of su(n): Gaussian coefficients on the standard basis.
inline ComplexMatrix random_su(int n, CounterRng& rng) {
  const AlgebraBasis basis = algebra_basis(BasisLabel::k, n);
  ComplexMatrix y = ComplexMatrix::Zero(n, n);
  for (const auto& e : basis.elements) y += rng.normal() * e;
  return y;
}

/// exp of a skew-Hermitian matrix through the Hermitian eigendecomposition
/// of -i y. The result is unitary to rounding.
inline ComplexMatrix expm_skew_hermitian(const ComplexMatrix& y) {
  const ComplexMatrix h = -kJ * y;
  const Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(0.5 * (h + h.adjoint()));
  const ComplexVector phases =
      (kJ * es.eigenvalues().cast<Complex>()).array().exp().matrix();
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace crownlab
