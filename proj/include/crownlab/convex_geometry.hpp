#pragma once

// The Weyl orbit polytope conv(S_n . X): membership through majorization
// (Rado's theorem), an independent vertex-hull LP, and hull coverage
// statistics in ranks 1 and 2.

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "crownlab/errors.hpp"
#include "crownlab/lie_core.hpp"

namespace crownlab {

inline constexpr double kMajorizationSlack = 1e-8;

struct WeylPolytope {
  CartanVector base;
  std::vector<CartanVector> vertices;
  std::vector<double> sorted_base;  // descending

  explicit WeylPolytope(CartanVector x) : base(std::move(x)), vertices(weyl_orbit(base)) {
    sorted_base = base.entries();
    std::sort(sorted_base.begin(), sorted_base.end(), std::greater<>());
  }

  int n() const noexcept { return base.n(); }
};

/// min_k (sum of k largest of base - sum of k largest of p), k < n.
/// Non-negative iff p is majorized by base (given equal totals).
inline double majorization_margin(const CartanVector& p, const WeylPolytope& poly) {
  if (p.n() != poly.n()) throw InvalidArgument("majorization: dimension mismatch");
  std::vector<double> q = p.entries();
  std::sort(q.begin(), q.end(), std::greater<>());
  double margin = std::numeric_limits<double>::infinity();
  double sp = 0.0, sb = 0.0;
  for (int k = 0; k + 1 < p.n(); ++k) {
    sp += q[static_cast<std::size_t>(k)];
    sb += poly.sorted_base[static_cast<std::size_t>(k)];
    margin = std::min(margin, sb - sp);
  }
  return margin;
}

inline bool membership_majorization(const CartanVector& p, const WeylPolytope& poly,
                                    double slack = kMajorizationSlack) {
  if (std::abs(p.sum() - poly.base.sum()) > slack) return false;
  return majorization_margin(p, poly) >= -slack;
}

struct LpResult {
  bool feasible = false;
  double infeasibility = 0.0;     // optimal phase-I objective
  std::vector<double> weights;    // convex weights on poly.vertices
};

namespace detail {

/// Phase-I simplex for {A lambda = b, lambda >= 0} with Bland's rule.
inline LpResult phase_one(const std::vector<std::vector<double>>& a, std::vector<double> b) {
  const std::size_t rows = a.size();
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  const std::size_t width = cols + rows;
  std::vector<std::vector<double>> t(rows, std::vector<double>(width + 1, 0.0));
  std::vector<std::size_t> basis(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    const double sign = b[r] < 0.0 ? -1.0 : 1.0;
    for (std::size_t c = 0; c < cols; ++c) t[r][c] = sign * a[r][c];
    t[r][cols + r] = 1.0;
    t[r][width] = sign * b[r];
    basis[r] = cols + r;
  }
  constexpr double eps = 1e-12;
  for (int iter = 0; iter < 10000; ++iter) {
    // reduced cost of column c: cost_c - sum over artificial-basic rows
    std::optional<std::size_t> entering;
    for (std::size_t c = 0; c < width && !entering; ++c) {
      const double cost = c >= cols ? 1.0 : 0.0;
      double z = 0.0;
      for (std::size_t r = 0; r < rows; ++r)
        if (basis[r] >= cols) z += t[r][c];
      if (cost - z < -eps) entering = c;
    }
    if (!entering) break;
    const std::size_t e = *entering;
    std::optional<std::size_t> leave;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < rows; ++r) {
      if (t[r][e] <= eps) continue;
      const double ratio = t[r][width] / t[r][e];
      if (ratio < best - 1e-15 || (std::abs(ratio - best) <= 1e-15 && leave && basis[r] < basis[*leave])) {
        best = ratio;
        leave = r;
      }
    }
    if (!leave) break;  // unbounded direction cannot lower a bounded phase-I objective
    const std::size_t l = *leave;
    const double piv = t[l][e];
    for (double& v : t[l]) v /= piv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == l) continue;
      const double f = t[r][e];
      if (f == 0.0) continue;
      for (std::size_t c = 0; c <= width; ++c) t[r][c] -= f * t[l][c];
    }
    basis[l] = e;
  }
  LpResult res;
  res.weights.assign(cols, 0.0);
  for (std::size_t r = 0; r < rows; ++r) {
    if (basis[r] >= cols)
      res.infeasibility += t[r][width];
    else
      res.weights[basis[r]] = t[r][width];
  }
  return res;
}

}  // namespace detail

/// Feasibility of p = sum_w lambda_w (w . base), lambda >= 0, sum lambda = 1.
/// Independent of majorization; limited to n <= 5 (at most 120 vertices).
inline LpResult membership_lp_solve(const CartanVector& p, const WeylPolytope& poly, double tol = 1e-9) {
  const int n = poly.n();
  if (n > 5) throw OracleOutOfRange("membership_lp: n = " + std::to_string(n) + " exceeds 5");
  if (p.n() != n) throw InvalidArgument("membership_lp: dimension mismatch");
  const std::size_t m = poly.vertices.size();
  std::vector<std::vector<double>> a(static_cast<std::size_t>(n + 1), std::vector<double>(m, 0.0));
  std::vector<double> b(static_cast<std::size_t>(n + 1));
  for (std::size_t w = 0; w < m; ++w) {
    for (int i = 0; i < n; ++i) a[static_cast<std::size_t>(i)][w] = poly.vertices[w][static_cast<std::size_t>(i)];
    a[static_cast<std::size_t>(n)][w] = 1.0;
  }
  for (int i = 0; i < n; ++i) b[static_cast<std::size_t>(i)] = p[static_cast<std::size_t>(i)];
  b[static_cast<std::size_t>(n)] = 1.0;
  LpResult res = detail::phase_one(a, b);
  res.feasible = res.infeasibility <= tol;
  return res;
}

inline bool membership_lp(const CartanVector& p, const WeylPolytope& poly, double tol = 1e-9) {
  return membership_lp_solve(p, poly, tol).feasible;
}

using Point2 = std::array<double, 2>;

/// Orthonormal coordinates on the zero-sum plane of R^3.
inline Point2 project_plane(const CartanVector& p) {
  static const double s2 = std::sqrt(2.0), s6 = std::sqrt(6.0);
  return {(p[0] - p[1]) / s2, (p[0] + p[1] - 2.0 * p[2]) / s6};
}

/// Andrew's monotone chain, counter-clockwise, collinear points dropped.
inline std::vector<Point2> convex_hull_2d(std::vector<Point2> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  auto cross = [](const Point2& o, const Point2& a, const Point2& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
  };
  std::vector<Point2> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0.0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

inline double polygon_area(const std::vector<Point2>& poly) {
  double a = 0.0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const auto& p = poly[i];
    const auto& q = poly[(i + 1) % poly.size()];
    a += p[0] * q[1] - q[0] * p[1];
  }
  return 0.5 * std::abs(a);
}

namespace detail {

inline double hull_measure(const std::vector<CartanVector>& pts, int n) {
  if (pts.empty()) return 0.0;
  if (n == 2) {
    double lo = pts[0][0], hi = pts[0][0];
    for (const auto& p : pts) {
      lo = std::min(lo, p[0]);
      hi = std::max(hi, p[0]);
    }
    return hi - lo;
  }
  std::vector<Point2> proj;
  proj.reserve(pts.size());
  for (const auto& p : pts) proj.push_back(project_plane(p));
  return polygon_area(convex_hull_2d(std::move(proj)));
}

}  // namespace detail

/// measure(conv(points)) / measure(poly) for n in {2, 3}. A degenerate
/// polytope (X = 0) counts as fully covered.
inline double hull_coverage(const std::vector<CartanVector>& points, const WeylPolytope& poly) {
  const int n = poly.n();
  if (n >= 4) throw CoverageNotSupported("hull_coverage: only n in {2, 3} is supported");
  if (n < 2) throw InvalidRank(n);
  for (const auto& p : points)
    if (p.n() != n) throw InvalidArgument("hull_coverage: dimension mismatch");
  const double full = detail::hull_measure(poly.vertices, n);
  if (full <= 0.0) return 1.0;
  const double ratio = detail::hull_measure(points, n) / full;
  return std::clamp(ratio, 0.0, 1.0 + 1e-12);
}

}  // namespace crownlab
