#pragma once

// Type-A structure theory for SL(n): roots, the Weyl group S_n acting on the
// Cartan space, the crown domain gate, and real bases of the subalgebras
// k = su(n), k0 = so(n), t = i a, a, n, nbar, m.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <numbers>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "crownlab/errors.hpp"
#include "crownlab/types.hpp"

namespace crownlab {

inline constexpr double kTraceTolerance = 1e-12;

/// A point of the Cartan space a = {real traceless diagonal matrices},
/// stored as its zero-sum diagonal.
class CartanVector {
 public:
  CartanVector() = default;

  explicit CartanVector(std::vector<double> entries, double tol = kTraceTolerance)
      : entries_(std::move(entries)) {
    if (entries_.empty()) throw InvalidArgument("CartanVector: empty entry list");
    const double s = std::accumulate(entries_.begin(), entries_.end(), 0.0);
    if (!std::isfinite(s)) throw InvalidArgument("CartanVector: non-finite entry");
    if (std::abs(s) > tol)
      throw InvalidArgument("CartanVector: entries sum to " + std::to_string(s) +
                            ", expected 0");
  }

  CartanVector(std::initializer_list<double> entries)
      : CartanVector(std::vector<double>(entries)) {}

  /// Subtracts the mean so the result lies in a.
  static CartanVector centered(std::vector<double> entries) {
    if (entries.empty()) throw InvalidArgument("CartanVector: empty entry list");
    const double mean =
        std::accumulate(entries.begin(), entries.end(), 0.0) / static_cast<double>(entries.size());
    for (double& e : entries) e -= mean;
    return CartanVector(std::move(entries), 1e-9);
  }

  static CartanVector zero(int n) { return CartanVector(std::vector<double>(n, 0.0)); }

  int n() const noexcept { return static_cast<int>(entries_.size()); }
  double operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<double>& entries() const noexcept { return entries_; }

  RealVector as_vector() const {
    return Eigen::Map<const RealVector>(entries_.data(), static_cast<Eigen::Index>(entries_.size()));
  }

  double sum() const { return std::accumulate(entries_.begin(), entries_.end(), 0.0); }

  /// diag(x) as a complex matrix.
  ComplexMatrix diag_matrix() const { return as_vector().cast<Complex>().asDiagonal(); }

  friend bool operator==(const CartanVector&, const CartanVector&) = default;

 private:
  std::vector<double> entries_;
};

inline double max_abs_diff(const CartanVector& a, const CartanVector& b) {
  double m = 0.0;
  for (int i = 0; i < a.n(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

inline double distance(const CartanVector& a, const CartanVector& b) {
  return (a.as_vector() - b.as_vector()).norm();
}

/// Positive roots x_i - x_j, i < j, as zero-based index pairs.
inline std::vector<std::pair<int, int>> positive_roots(int n) {
  if (n < 2) throw InvalidRank(n);
  std::vector<std::pair<int, int>> roots;
  roots.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) roots.emplace_back(i, j);
  return roots;
}

/// X lies in Omega iff every root value |x_i - x_j| is below pi/2. For the
/// split real form a0 = a, so the same gate serves Omega_0.
inline bool in_crown_domain(const CartanVector& x) {
  const auto [lo, hi] = std::minmax_element(x.entries().begin(), x.entries().end());
  return (*hi - *lo) < std::numbers::pi / 2;
}

/// Largest root value max_{i<j} |x_i - x_j|.
inline double root_spread(const CartanVector& x) {
  const auto [lo, hi] = std::minmax_element(x.entries().begin(), x.entries().end());
  return *hi - *lo;
}

class WeylElement {
 public:
  /// `perm[j]` is the image of coordinate j: (w.x)[perm[j]] = x[j].
  explicit WeylElement(std::vector<int> perm) : perm_(std::move(perm)) {
    const int n = static_cast<int>(perm_.size());
    std::vector<int> seen(perm_.size(), 0);
    for (int p : perm_) {
      if (p < 0 || p >= n || seen[static_cast<std::size_t>(p)]++)
        throw InvalidArgument("WeylElement: not a permutation");
    }
    lift_ = RealMatrix::Zero(n, n);
    for (int j = 0; j < n; ++j) lift_(perm_[static_cast<std::size_t>(j)], j) = 1.0;
    if (parity() < 0) lift_.col(n - 1) *= -1.0;
  }

  static WeylElement identity(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    return WeylElement(std::move(p));
  }

  int n() const noexcept { return static_cast<int>(perm_.size()); }
  const std::vector<int>& perm() const noexcept { return perm_; }

  /// Signed permutation matrix in SO(n) normalizing a.
  const RealMatrix& matrix_lift() const noexcept { return lift_; }
  ComplexMatrix complex_lift() const { return lift_.cast<Complex>(); }

  int parity() const {
    int sign = 1;
    std::vector<bool> visited(perm_.size(), false);
    for (std::size_t i = 0; i < perm_.size(); ++i) {
      if (visited[i]) continue;
      std::size_t len = 0;
      for (std::size_t j = i; !visited[j]; j = static_cast<std::size_t>(perm_[j])) {
        visited[j] = true;
        ++len;
      }
      if (len % 2 == 0) sign = -sign;
    }
    return sign;
  }

  CartanVector apply(const CartanVector& x) const {
    std::vector<double> y(x.entries().size());
    for (std::size_t j = 0; j < y.size(); ++j) y[static_cast<std::size_t>(perm_[j])] = x[j];
    return CartanVector(std::move(y), 1e-9);
  }

 private:
  std::vector<int> perm_;
  RealMatrix lift_;
};

/// All n! elements of S_n in lexicographic order of `perm`.
inline std::vector<WeylElement> weyl_group(int n) {
  if (n < 2) throw InvalidRank(n);
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<WeylElement> out;
  do {
    out.emplace_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// Distinct coordinate permutations of x, in lexicographic order.
inline std::vector<CartanVector> weyl_orbit(const CartanVector& x) {
  std::vector<double> e = x.entries();
  std::sort(e.begin(), e.end());
  std::vector<CartanVector> out;
  do {
    out.emplace_back(e, 1e-9);
  } while (std::next_permutation(e.begin(), e.end()));
  return out;
}

/// Sizes of the blocks of equal entries of x (entries within `tol` merge).
inline std::vector<int> eigenvalue_multiplicities(const CartanVector& x, double tol = 1e-12) {
  std::vector<double> e = x.entries();
  std::sort(e.begin(), e.end());
  std::vector<int> blocks{1};
  for (std::size_t i = 1; i < e.size(); ++i) {
    if (e[i] - e[i - 1] <= tol)
      ++blocks.back();
    else
      blocks.push_back(1);
  }
  return blocks;
}

/// Real dimension of the centralizer of diag(x) in su(n): sum of squared
/// block sizes minus one.
inline int centralizer_dim(const CartanVector& x, double tol = 1e-12) {
  int d = -1;
  for (int m : eigenvalue_multiplicities(x, tol)) d += m * m;
  return d;
}

/// Generic means pairwise-distinct entries separated by at least `min_gap`.
inline bool is_generic(const CartanVector& x, double min_gap = 1e-3) {
  std::vector<double> e = x.entries();
  std::sort(e.begin(), e.end());
  for (std::size_t i = 1; i < e.size(); ++i)
    if (e[i] - e[i - 1] < min_gap) return false;
  return true;
}

enum class BasisLabel { k, k0, torus, a, n, nbar, m };

inline std::string to_string(BasisLabel label) {
  switch (label) {
    case BasisLabel::k: return "k";
    case BasisLabel::k0: return "k0";
    case BasisLabel::torus: return "torus";
    case BasisLabel::a: return "a";
    case BasisLabel::n: return "n";
    case BasisLabel::nbar: return "nbar";
    case BasisLabel::m: return "m";
  }
  return "?";
}

struct AlgebraBasis {
  BasisLabel label;
  std::vector<ComplexMatrix> elements;

  std::size_t size() const noexcept { return elements.size(); }
  const ComplexMatrix& operator[](std::size_t i) const { return elements[i]; }
};

namespace detail {

inline ComplexMatrix unit(int n, int i, int j, Complex value = 1.0) {
  ComplexMatrix e = ComplexMatrix::Zero(n, n);
  e(i, j) = value;
  return e;
}

inline std::vector<ComplexMatrix> cartan_elements(int n, Complex scale) {
  std::vector<ComplexMatrix> out;
  for (int k = 0; k + 1 < n; ++k) out.push_back(unit(n, k, k, scale) - unit(n, k + 1, k + 1, scale));
  return out;
}

}  // namespace detail

/// Real basis of the subalgebra named by `label`, as traceless complex
/// n x n matrices. For the complex group m = z_k(a) coincides with the torus.
inline AlgebraBasis algebra_basis(BasisLabel label, int n) {
  if (n < 2) throw InvalidRank(n);
  using detail::unit;
  AlgebraBasis basis{label, {}};
  auto& out = basis.elements;
  switch (label) {
    case BasisLabel::k:
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          out.push_back(unit(n, i, j) - unit(n, j, i));
          out.push_back(unit(n, i, j, kJ) + unit(n, j, i, kJ));
        }
      for (auto& h : detail::cartan_elements(n, kJ)) out.push_back(std::move(h));
      break;
    case BasisLabel::k0:
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) out.push_back(unit(n, i, j) - unit(n, j, i));
      break;
    case BasisLabel::torus:
    case BasisLabel::m:
      out = detail::cartan_elements(n, kJ);
      break;
    case BasisLabel::a:
      out = detail::cartan_elements(n, 1.0);
      break;
    case BasisLabel::n:
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          out.push_back(unit(n, i, j));
          out.push_back(unit(n, i, j, kJ));
        }
      break;
    case BasisLabel::nbar:
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          out.push_back(unit(n, j, i));
          out.push_back(unit(n, j, i, kJ));
        }
      break;
  }
  return basis;
}

/// Real basis of sl(n, C) viewed as a real vector space (dimension 2(n^2-1)).
inline std::vector<ComplexMatrix> sl_real_basis(int n) {
  std::vector<ComplexMatrix> out;
  for (Complex s : {Complex(1.0), kJ}) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) out.push_back(detail::unit(n, i, j, s));
    for (auto& h : detail::cartan_elements(n, s)) out.push_back(std::move(h));
  }
  return out;
}

inline bool is_skew_hermitian(const ComplexMatrix& y, double tol = 1e-10) {
  return (y + y.adjoint()).cwiseAbs().maxCoeff() <= tol && std::abs(y.trace()) <= tol;
}

}  // namespace crownlab
