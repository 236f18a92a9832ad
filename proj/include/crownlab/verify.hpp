#pragma once

// Verification suites. Each suite samples group elements from per-index
// random streams, evaluates residuals in parallel, and reduces them in index
// order, so a report is a pure function of its parameters and seed.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/SVD>

#include "json.hpp"

#include "crownlab/convex_geometry.hpp"
#include "crownlab/horospherical.hpp"
#include "crownlab/lie_core.hpp"
#include "crownlab/manin.hpp"
#include "crownlab/matrix_core.hpp"
#include "crownlab/parallel.hpp"
#include "crownlab/realform.hpp"
#include "crownlab/rng.hpp"

namespace crownlab {

using ordered_json = nlohmann::ordered_json;

/// Deliberate formula errors each suite must detect.
enum class Mutation {
  none,
  pairing_sign,        // <,> = Re k(X,X') + Re k(Y,Y')
  exponent_sign,       // a = exp(-iX) in place of exp(iX)
  transposed_udl,      // factor order swapped: S = k° e^{2iX} k
  tau_transpose_only,  // tau(b1, b2) = (b2^T, b1^T)
};

inline std::string to_string(Mutation m) {
  switch (m) {
    case Mutation::none: return "none";
    case Mutation::pairing_sign: return "pairing_sign";
    case Mutation::exponent_sign: return "exponent_sign";
    case Mutation::transposed_udl: return "transposed_udl";
    case Mutation::tau_transpose_only: return "tau_transpose_only";
  }
  return "?";
}

enum class Bound { below, at_least, equal };

struct ResidualCheck {
  std::string name;
  double extreme = 0.0;  // max for `below`, min for `at_least`
  double mean = 0.0;
  std::size_t count = 0;
  double tolerance = 0.0;
  Bound bound = Bound::below;
  bool pass = false;
};

class ResidualStat {
 public:
  void add(double v) {
    if (std::isnan(v)) has_nan_ = true;
    max_ = std::max(max_, v);
    min_ = std::min(min_, v);
    sum_ += v;
    ++count_;
  }
  double max() const noexcept { return count_ ? max_ : 0.0; }
  double min() const noexcept { return count_ ? min_ : 0.0; }
  double mean() const noexcept { return count_ ? sum_ / static_cast<double>(count_) : 0.0; }
  std::size_t count() const noexcept { return count_; }
  bool has_nan() const noexcept { return has_nan_; }

 private:
  double max_ = -std::numeric_limits<double>::infinity();
  double min_ = std::numeric_limits<double>::infinity();
  double sum_ = 0.0;
  std::size_t count_ = 0;
  bool has_nan_ = false;
};

struct SuiteReport {
  std::string suite_name;
  ordered_json parameters = ordered_json::object();
  std::vector<ResidualCheck> checks;
  ordered_json diagnostics = ordered_json::object();
  bool pass = false;
  double runtime_ms = 0.0;

  /// max residual must stay strictly below `tol`.
  void require_below(const std::string& name, const ResidualStat& s, double tol) {
    checks.push_back({name, s.max(), s.mean(), s.count(), tol, Bound::below,
                      !s.has_nan() && s.max() < tol});
  }
  /// min value must reach `tol`.
  void require_at_least(const std::string& name, const ResidualStat& s, double tol) {
    checks.push_back({name, s.min(), s.mean(), s.count(), tol, Bound::at_least,
                      !s.has_nan() && s.count() > 0 && s.min() >= tol});
  }
  void require_equal(const std::string& name, double value, double expected) {
    checks.push_back({name, value, value, 1, expected, Bound::equal, value == expected});
  }

  const ResidualCheck* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }

  void finalize() {
    pass = !checks.empty() &&
           std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
  }

  ordered_json to_json(bool include_runtime = true) const {
    ordered_json j;
    j["suite_name"] = suite_name;
    j["parameters"] = parameters;
    ordered_json res = ordered_json::object();
    for (const auto& c : checks) {
      const char* bound = c.bound == Bound::below ? "below" : c.bound == Bound::at_least ? "at_least" : "equal";
      const char* extreme = c.bound == Bound::at_least ? "min" : "max";
      res[c.name] = {{extreme, c.extreme}, {"mean", c.mean}, {"count", c.count},
                     {"tolerance", c.tolerance}, {"bound", bound}, {"pass", c.pass}};
    }
    j["residuals"] = res;
    j["diagnostics"] = diagnostics;
    j["pass"] = pass;
    if (include_runtime) j["runtime_ms"] = runtime_ms;
    return j;
  }
};

struct SuiteOptions {
  std::uint64_t seed = 42;
  unsigned threads = 1;
  PathOptions path{};
  Mutation mutation = Mutation::none;
};

namespace detail {

class Stopwatch {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline ordered_json x_json(const CartanVector& x) { return x.entries(); }

inline void base_parameters(SuiteReport& r, int n, const SuiteOptions& o) {
  r.parameters["n"] = n;
  r.parameters["seed"] = o.seed;
  r.parameters["steps"] = o.path.initial_steps;
  r.parameters["mutation"] = to_string(o.mutation);
}

inline BilinearForm form_for(Mutation m) {
  return m == Mutation::pairing_sign ? BilinearForm{1.0, +1.0} : BilinearForm{};
}

// Distinct stream families so that, e.g., the SU(n) and SO(n) draws of one
// sample index never share a key.
enum Stream : std::uint64_t { kUnitary = 1, kOrthogonal = 2, kAlgebra = 3, kBorel = 4, kTorus = 5 };

inline std::uint64_t key(const SuiteOptions& o, Stream s, std::size_t i) {
  return stream_seed(mix64(o.seed) ^ (s * 0x632be59bd9b4e019ULL), i);
}

inline void require_n(int n, int lo, int hi) {
  if (n < 2) throw InvalidRank(n);
  if (n < lo || n > hi)
    throw InvalidArgument("suite supports " + std::to_string(lo) + " <= n <= " + std::to_string(hi));
}

inline void require_crown(const CartanVector& x) {
  if (!in_crown_domain(x)) throw OutOfDomain("X lies outside the crown domain");
}

inline void require_generic(const CartanVector& x) {
  if (!is_generic(x))
    throw InvalidArgument("suite requires generic X (pairwise distinct entries, gap >= 1e-3)");
}

inline BorelPair random_borel(int n, CounterRng& rng) {
  ComplexMatrix up = ComplexMatrix::Zero(n, n);
  ComplexMatrix lo = ComplexMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    const Complex z(0.3 * rng.normal(), 0.3 * rng.normal());
    up(i, i) = std::exp(z);
    lo(i, i) = std::exp(-z);
    for (int j = i + 1; j < n; ++j) {
      up(i, j) = Complex(0.5 * rng.normal(), 0.5 * rng.normal());
      lo(j, i) = Complex(0.5 * rng.normal(), 0.5 * rng.normal());
    }
  }
  return {up, lo};
}

inline ComplexMatrix random_torus(int n, CounterRng& rng) {
  std::vector<double> h(static_cast<std::size_t>(n));
  for (double& v : h) v = rng.normal();
  return kJ * CartanVector::centered(std::move(h)).diag_matrix();
}

inline std::vector<double> real_coordinates(const LieDouble& v) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(4 * v.first.size()));
  for (const ComplexMatrix* m : {&v.first, &v.second})
    for (Eigen::Index i = 0; i < m->size(); ++i) {
      out.push_back((*m)(i).real());
      out.push_back((*m)(i).imag());
    }
  return out;
}

inline int real_rank(const std::vector<LieDouble>& vs, double rel_tol = 1e-10) {
  if (vs.empty()) return 0;
  const auto dim = static_cast<Eigen::Index>(real_coordinates(vs[0]).size());
  RealMatrix m(static_cast<Eigen::Index>(vs.size()), dim);
  for (std::size_t r = 0; r < vs.size(); ++r) {
    const auto c = real_coordinates(vs[r]);
    for (Eigen::Index k = 0; k < dim; ++k) m(static_cast<Eigen::Index>(r), k) = c[static_cast<std::size_t>(k)];
  }
  const Eigen::JacobiSVD<RealMatrix> svd(m);
  const RealVector s = svd.singularValues();
  int rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > rel_tol * s(0)) ++rank;
  return rank;
}

}  // namespace detail

/// Named bases of the double used by the Manin-triple checks.
struct DoubleBases {
  std::vector<LieDouble> kc, bc, k, a, n, nc, t;

  explicit DoubleBases(int dim) {
    for (const auto& z : sl_real_basis(dim)) kc.push_back(embed_kc(z));
    for (const auto& h : algebra_basis(BasisLabel::a, dim).elements) {
      bc.push_back({h, -h});
      bc.push_back({kJ * h, -kJ * h});
    }
    for (const auto& e : algebra_basis(BasisLabel::n, dim).elements) {
      bc.push_back({e, ComplexMatrix::Zero(dim, dim)});
      nc.push_back(bc.back());
    }
    for (const auto& e : algebra_basis(BasisLabel::nbar, dim).elements) {
      bc.push_back({ComplexMatrix::Zero(dim, dim), e});
      nc.push_back(bc.back());
    }
    for (const auto& y : algebra_basis(BasisLabel::k, dim).elements) k.push_back(embed_k(y));
    for (const auto& h : algebra_basis(BasisLabel::a, dim).elements) a.push_back(embed_g(h));
    for (const auto& e : algebra_basis(BasisLabel::n, dim).elements) n.push_back(embed_g(e));
    for (const auto& y : algebra_basis(BasisLabel::torus, dim).elements) t.push_back(embed_k(y));
  }

  std::vector<LieDouble> full() const {
    std::vector<LieDouble> out = kc;
    out.insert(out.end(), bc.begin(), bc.end());
    return out;
  }
};

/// Invariant form and Manin triple: symmetry, isotropy of k_C and b_C,
/// non-degeneracy, Ad(B_C)-invariance, k^perp = k_C + b and <t, n_C> = 0.
inline SuiteReport suite_manin(int n, const SuiteOptions& opt = {}, std::size_t borel_samples = 100) {
  detail::require_n(n, 2, 6);
  const detail::Stopwatch clock;
  SuiteReport rep;
  rep.suite_name = "manin";
  detail::base_parameters(rep, n, opt);
  rep.parameters["samples"] = borel_samples;
  const BilinearForm form = detail::form_for(opt.mutation);
  const DoubleBases B(n);
  const std::vector<LieDouble> full = B.full();

  ResidualStat symmetry, iso_k, iso_b, kperp, tn, adinv;
  const auto m = static_cast<Eigen::Index>(full.size());
  RealMatrix gram(m, m);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j) gram(i, j) = form(full[static_cast<std::size_t>(i)], full[static_cast<std::size_t>(j)]);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j) symmetry.add(std::abs(gram(i, j) - gram(j, i)));
  const auto kc_n = static_cast<Eigen::Index>(B.kc.size());
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j) {
      if (i < kc_n && j < kc_n) iso_k.add(std::abs(gram(i, j)));
      if (i >= kc_n && j >= kc_n) iso_b.add(std::abs(gram(i, j)));
    }

  const Eigen::SelfAdjointEigenSolver<RealMatrix> es(0.5 * (gram + gram.transpose()));
  const RealVector ev = es.eigenvalues().cwiseAbs();
  ResidualStat nondeg;
  nondeg.add(ev.minCoeff() / ev.maxCoeff());

  std::vector<LieDouble> kperp_span = B.kc;
  kperp_span.insert(kperp_span.end(), B.a.begin(), B.a.end());
  kperp_span.insert(kperp_span.end(), B.n.begin(), B.n.end());
  for (const auto& u : B.k)
    for (const auto& v : kperp_span) kperp.add(std::abs(form(u, v)));
  for (const auto& u : B.t)
    for (const auto& v : B.nc) tn.add(std::abs(form(u, v)));
  const int kperp_dim = detail::real_rank(kperp_span);

  std::vector<double> ad_res(borel_samples);
  parallel_for(borel_samples, opt.threads, [&](std::size_t s) {
    CounterRng rng(detail::key(opt, detail::kBorel, s));
    const BorelPair b = detail::random_borel(n, rng);
    LieDouble v = LieDouble::zero(n), w = LieDouble::zero(n);
    for (const auto& e : full) {
      v = v + rng.normal() * e;
      w = w + rng.normal() * e;
    }
    const double before = form(v, w);
    const double after = form(adjoint(b, v), adjoint(b, w));
    ad_res[s] = std::abs(after - before) / std::max(1.0, std::abs(before));
  });
  for (double r : ad_res) adinv.add(r);

  rep.require_below("symmetry", symmetry, 1e-10);
  rep.require_below("isotropy_kc", iso_k, 1e-10);
  rep.require_below("isotropy_bc", iso_b, 1e-10);
  rep.require_at_least("nondegeneracy_ratio", nondeg, 1e-10);
  rep.require_below("ad_invariance", adinv, 1e-9);
  rep.require_below("k_perp_orthogonality", kperp, 1e-10);
  rep.require_below("t_nc_orthogonality", tn, 1e-10);
  rep.require_equal("k_perp_dimension", kperp_dim, 3.0 * (n * n - 1));
  rep.diagnostics["gram_dimension"] = m;
  rep.finalize();
  rep.runtime_ms = clock.elapsed_ms();
  return rep;
}

/// Non-degeneracy of omega on M_a with kernel Ad(k) z_k(X) on the su(n)
/// basis, torus isotropy, and the Lagrangian property of Q_a.
inline SuiteReport suite_symplectic(int n, const CartanVector& x, std::size_t samples,
                                    const SuiteOptions& opt = {}) {
  detail::require_n(n, 2, 6);
  if (x.n() != n) throw InvalidArgument("X has the wrong length");
  detail::require_crown(x);
  detail::require_generic(x);
  const detail::Stopwatch clock;
  SuiteReport rep;
  rep.suite_name = "symplectic";
  detail::base_parameters(rep, n, opt);
  rep.parameters["x"] = detail::x_json(x);
  rep.parameters["samples"] = samples;
  const BilinearForm form = detail::form_for(opt.mutation);
  const AlgebraBasis kb = algebra_basis(BasisLabel::k, n);
  const AlgebraBasis tb = algebra_basis(BasisLabel::torus, n);
  const AlgebraBasis sob = algebra_basis(BasisLabel::k0, n);
  const int kernel_dim = centralizer_dim(x);

  struct Row {
    double skew = 0, torus = 0, lagrangian = 0, kernel_ratio = 0, image_ratio = 1;
    int small = 0, middle = 0;
    bool failed = false;
    std::string error;
  };
  std::vector<Row> rows(samples);
  parallel_for(samples, opt.threads, [&](std::size_t s) {
    Row& row = rows[s];
    try {
      const ComplexMatrix k = haar_unitary(n, detail::key(opt, detail::kUnitary, s));
      const BorelPair b = b_tilde(k, x, GroupCase::complex, opt.path);
      const RealMatrix g = omega_gram(b, kb, form);
      row.skew = (g + g.transpose()).cwiseAbs().maxCoeff();
      const RealVector sv = Eigen::JacobiSVD<RealMatrix>(g).singularValues();
      const double smax = sv(0);
      row.kernel_ratio = 0.0;
      row.image_ratio = std::numeric_limits<double>::infinity();
      for (Eigen::Index i = 0; i < sv.size(); ++i) {
        const double r = sv(i) / smax;
        if (r < 1e-8) {
          ++row.small;
          row.kernel_ratio = std::max(row.kernel_ratio, r);
        } else if (r > 1e-4) {
          row.image_ratio = std::min(row.image_ratio, r);
        } else {
          ++row.middle;
        }
      }
      row.torus = omega_gram(b, tb, form).cwiseAbs().maxCoeff();
      const ComplexMatrix k0 = haar_orthogonal(n, detail::key(opt, detail::kOrthogonal, s));
      const BorelPair q = b_tilde(k0, x, GroupCase::complex, opt.path);
      row.lagrangian = omega_gram(q, sob, form).cwiseAbs().maxCoeff();
    } catch (const Error& e) {
      row.failed = true;
      row.error = e.what();
    }
  });

  ResidualStat skew, torus, lag, rank_mismatch, failures, kernel, image;
  std::optional<std::string> first_error;
  for (const Row& r : rows) {
    failures.add(r.failed ? 1.0 : 0.0);
    if (r.failed) {
      if (!first_error) first_error = r.error;
      continue;
    }
    skew.add(r.skew);
    torus.add(r.torus);
    lag.add(r.lagrangian);
    rank_mismatch.add(std::abs(r.small - kernel_dim) + r.middle);
    kernel.add(r.kernel_ratio);
    image.add(r.image_ratio);
  }
  rep.require_below("evaluation_failures", failures, 0.5);
  rep.require_below("skew_symmetry", skew, 1e-10);
  rep.require_below("rank_mismatch", rank_mismatch, 0.5);
  rep.require_below("torus_isotropy", torus, 1e-10);
  rep.require_below("lagrangian_q_a", lag, 1e-9);
  rep.diagnostics["expected_kernel_dim"] = kernel_dim;
  rep.diagnostics["expected_rank"] = n * n - 1 - kernel_dim;
  rep.diagnostics["max_kernel_sv_ratio"] = kernel.max();
  rep.diagnostics["min_image_sv_ratio"] = image.count() ? image.min() : 0.0;
  if (first_error) rep.diagnostics["first_error"] = *first_error;
  rep.finalize();
  rep.runtime_ms = clock.elapsed_ms();
  return rep;
}

/// Evaluates the three sides of iota(Z~) omega = d Phi_Z at one sample.
struct MomentIdentitySample {
  double via_omega = 0;     // omega_b(Z~, Y~)
  double via_projection = 0;  // <pr_a(Ad(b^{-1})Y), Z>
  double via_derivative = 0;  // moment_pairing(moment_derivative(...), Z)
  double finite_difference = 0;
};

namespace detail {

inline CartanVector mutated_moment(const ComplexMatrix& k, const CartanVector& x, GroupCase c,
                                   const SuiteOptions& opt) {
  // Reading the leading-minor LDU instead would not be a usable mutation:
  // for S unitary it yields the same arguments (only Re Z flips sign).
  if (opt.mutation == Mutation::transposed_udl) {
    const ComplexMatrix kt = c == GroupCase::complex ? ComplexMatrix(k.adjoint())
                                                     : ComplexMatrix(k.transpose());
    return moment_map(kt, x, c, opt.path);
  }
  return moment_map(k, x, c, opt.path);
}

/// The exponent-sign mutation evaluates at -X.
inline CartanVector effective_x(const CartanVector& x, const SuiteOptions& opt) {
  if (opt.mutation != Mutation::exponent_sign) return x;
  std::vector<double> e = x.entries();
  for (double& v : e) v = -v;
  return CartanVector(std::move(e), 1e-9);
}

}  // namespace detail

inline MomentIdentitySample moment_identity_sample(const ComplexMatrix& k, const CartanVector& x,
                                                   const ComplexMatrix& y, const ComplexMatrix& z,
                                                   double h, const SuiteOptions& opt = {},
                                                   const BilinearForm& form = {}) {
  MomentIdentitySample s;
  const BorelPair b = b_tilde(k, x, GroupCase::complex, opt.path);
  s.via_omega = symplectic_form(b, z, y, form);
  const LieDouble ay = adjoint(b, embed_k(y));
  s.via_projection = form(pr_a(ay), embed_kc(z));
  s.via_derivative = moment_pairing(moment_derivative(ay), z, form);
  const CartanVector plus = detail::mutated_moment(expm_skew_hermitian(h * y) * k, x, GroupCase::complex, opt);
  const CartanVector minus = detail::mutated_moment(expm_skew_hermitian(-h * y) * k, x, GroupCase::complex, opt);
  s.finite_difference = (moment_pairing(plus, z, form) - moment_pairing(minus, z, form)) / (2.0 * h);
  return s;
}

/// Hamiltonian identity omega(Z~, Y~) = <pr_a(Ad(b^{-1})Y), Z> = dPhi_Z(Y~)
/// for random k, Y in su(n), Z in t.
inline SuiteReport suite_moment_identity(int n, const CartanVector& x, std::size_t samples,
                                         const SuiteOptions& opt = {}, double h = 1e-5) {
  detail::require_n(n, 2, 6);
  if (x.n() != n) throw InvalidArgument("X has the wrong length");
  detail::require_crown(x);
  const detail::Stopwatch clock;
  SuiteReport rep;
  rep.suite_name = "moment-id";
  detail::base_parameters(rep, n, opt);
  rep.parameters["x"] = detail::x_json(x);
  rep.parameters["samples"] = samples;
  rep.parameters["fd_step"] = h;
  const BilinearForm form = detail::form_for(opt.mutation);
  const AlgebraBasis tb = algebra_basis(BasisLabel::torus, n);

  struct Row {
    double closed = 0, fd = 0, torus = 0;
    bool failed = false;
    std::string error;
  };
  std::vector<Row> rows(samples);
  parallel_for(samples, opt.threads, [&](std::size_t i) {
    Row& row = rows[i];
    try {
      const ComplexMatrix k = haar_unitary(n, detail::key(opt, detail::kUnitary, i));
      CounterRng rng(detail::key(opt, detail::kAlgebra, i));
      const ComplexMatrix y = random_su(n, rng);
      const ComplexMatrix z = detail::random_torus(n, rng);
      const MomentIdentitySample s = moment_identity_sample(k, x, y, z, h, opt, form);
      const double scale = std::max(1.0, std::abs(s.via_omega));
      row.closed = std::max(std::abs(s.via_omega - s.via_projection),
                            std::abs(s.via_projection - s.via_derivative)) / scale;
      row.fd = std::abs(s.finite_difference - s.via_omega) / (1.0 + std::abs(s.via_omega));
      const BorelPair b = b_tilde(k, x, GroupCase::complex, opt.path);
      row.torus = omega_gram(b, tb, form).cwiseAbs().maxCoeff();
    } catch (const Error& e) {
      row.failed = true;
      row.error = e.what();
    }
  });
  ResidualStat closed, fd, torus, failures;
  std::optional<std::string> first_error;
  for (const Row& r : rows) {
    failures.add(r.failed ? 1.0 : 0.0);
    if (r.failed) {
      if (!first_error) first_error = r.error;
      continue;
    }
    closed.add(r.closed);
    fd.add(r.fd);
    torus.add(r.torus);
  }
  rep.require_below("evaluation_failures", failures, 0.5);
  rep.require_below("closed_form_agreement", closed, 1e-10);
  rep.require_below("finite_difference", fd, 1e-5);
  rep.require_below("torus_isotropy", torus, 1e-10);
  if (first_error) rep.diagnostics["first_error"] = *first_error;
  rep.finalize();
  rep.runtime_ms = clock.elapsed_ms();
  return rep;
}

struct ConvexityOptions {
  std::size_t membership_samples = 10000;
  std::size_t coverage_samples = 50000;
  std::optional<double> coverage_threshold;  // defaults: 0.999 (n=2), 0.95 (n=3)
  double slack = kMajorizationSlack;
  std::size_t robustness_stride = 100;
};

inline double default_coverage_threshold(int n) { return n == 2 ? 0.999 : 0.95; }

inline ComplexMatrix sample_group(GroupCase c, int n, std::uint64_t key) {
  return c == GroupCase::complex ? haar_unitary(n, key) : haar_orthogonal(n, key);
}

/// Moment-map samples Phi(k_i a), i < count, for Haar k_i in K (or K0).
/// Failed evaluations (decomposition outside the cell, branch tracking)
/// leave std::nullopt.
inline std::vector<std::optional<CartanVector>> sample_moments(GroupCase c, const CartanVector& x,
                                                                std::size_t count,
                                                                const SuiteOptions& opt) {
  std::vector<std::optional<CartanVector>> out(count);
  const CartanVector used = detail::effective_x(x, opt);
  parallel_for(count, opt.threads, [&](std::size_t i) {
    const ComplexMatrix k = sample_group(c, x.n(), detail::key(opt, detail::kUnitary, i));
    try {
      out[i] = detail::mutated_moment(k, used, c, opt);
    } catch (const DecompositionOutsideCell&) {
    } catch (const BranchTrackingFailure&) {
    }
  });
  return out;
}

/// conv(W.X) equality: membership of sampled Phi values, attainment of every
/// vertex at the Weyl lifts, hull coverage (n <= 3), and branch stability.
inline SuiteReport suite_convexity(GroupCase c, int n, const CartanVector& x,
                                   const ConvexityOptions& copt = {}, const SuiteOptions& opt = {}) {
  if (n < 2) throw InvalidRank(n);
  if (x.n() != n) throw InvalidArgument("X has the wrong length");
  const detail::Stopwatch clock;
  SuiteReport rep;
  rep.suite_name = c == GroupCase::complex ? "convexity-complex" : "convexity-real";
  detail::base_parameters(rep, n, opt);
  rep.parameters["x"] = detail::x_json(x);
  rep.parameters["case"] = to_string(c);
  rep.parameters["samples"] = copt.membership_samples;
  rep.parameters["coverage_samples"] = copt.coverage_samples;
  if (!in_crown_domain(x)) rep.diagnostics["crown_warning"] = "X lies outside the crown domain";

  const WeylPolytope poly(x);
  const std::size_t total = std::max(copt.membership_samples, copt.coverage_samples);
  const auto phis = sample_moments(c, x, total, opt);

  ResidualStat outside, violation, zero_sum;
  std::size_t warnings = 0;
  std::vector<CartanVector> ok;
  ok.reserve(total);
  for (std::size_t i = 0; i < total; ++i) {
    if (!phis[i]) {
      ++warnings;
      continue;
    }
    const CartanVector& p = *phis[i];
    if (i < copt.membership_samples) {
      outside.add(membership_majorization(p, poly, copt.slack) ? 0.0 : 1.0);
      violation.add(std::max(0.0, -majorization_margin(p, poly)));
    }
    zero_sum.add(std::abs(p.sum()));
    if (i < copt.coverage_samples) ok.push_back(p);
  }

  ResidualStat vertex;
  const CartanVector used = detail::effective_x(x, opt);
  for (const auto& w : weyl_group(n)) {
    const CartanVector phi = detail::mutated_moment(w.complex_lift(), used, c, opt);
    vertex.add(max_abs_diff(phi, w.apply(x)));
  }

  ResidualStat robust;
  SuiteOptions doubled = opt;
  doubled.path.initial_steps *= 2;
  const std::size_t stride = std::max<std::size_t>(1, copt.robustness_stride);
  std::vector<std::size_t> picks;
  for (std::size_t i = 0; i < total; i += stride)
    if (phis[i]) picks.push_back(i);
  std::vector<double> deltas(picks.size());
  parallel_for(picks.size(), opt.threads, [&](std::size_t j) {
    const ComplexMatrix k = sample_group(c, n, detail::key(opt, detail::kUnitary, picks[j]));
    deltas[j] = max_abs_diff(detail::mutated_moment(k, used, c, doubled), *phis[picks[j]]);
  });
  for (double d : deltas) robust.add(d);

  rep.require_below("membership_failures", outside, 0.5);
  rep.require_below("vertex_attainment", vertex, 1e-10);
  rep.require_below("branch_step_doubling", robust, 1e-9);
  rep.require_below("zero_sum", zero_sum, 1e-12);
  rep.diagnostics["max_majorization_violation"] = violation.max();
  rep.diagnostics["decomposition_warnings"] = warnings;
  if (n <= 3) {
    const double threshold = copt.coverage_threshold.value_or(default_coverage_threshold(n));
    ResidualStat cov;
    cov.add(hull_coverage(ok, poly));
    rep.require_at_least("hull_coverage", cov, threshold);
  } else {
    rep.diagnostics["hull_coverage"] = "not supported for n >= 4; membership and vertices only";
  }
  rep.finalize();
  rep.runtime_ms = clock.elapsed_ms();
  return rep;
}

/// Compatibility of tau with the torus action and the moment map, the
/// Lagrangian property of Q_a, and real/complex consistency on K0.
inline SuiteReport suite_realform(int n, const CartanVector& x, std::size_t samples,
                                  const SuiteOptions& opt = {}, std::size_t lagrangian_points = 20) {
  detail::require_n(n, 2, 6);
  if (x.n() != n) throw InvalidArgument("X has the wrong length");
  detail::require_crown(x);
  const detail::Stopwatch clock;
  SuiteReport rep;
  rep.suite_name = "realform";
  detail::base_parameters(rep, n, opt);
  rep.parameters["x"] = detail::x_json(x);
  rep.parameters["samples"] = samples;
  rep.parameters["lagrangian_points"] = lagrangian_points;

  auto tau_b = [&](const BorelPair& b) {
    if (opt.mutation == Mutation::tau_transpose_only)
      return BorelPair{b.lower.transpose(), b.upper.transpose()};
    return tau_on_borel(b);
  };

  struct Row {
    RealFormReport residuals;
    double s_consistency = 0, q_consistency = 0, k0_fixed = 0;
    bool failed = false;
    std::string error;
  };
  std::vector<Row> rows(samples);
  parallel_for(samples, opt.threads, [&](std::size_t i) {
    Row& row = rows[i];
    try {
      const ComplexMatrix k = haar_unitary(n, detail::key(opt, detail::kUnitary, i));
      const ComplexMatrix k0 = haar_orthogonal(n, detail::key(opt, detail::kOrthogonal, i));
      CounterRng rng(detail::key(opt, detail::kTorus, i));
      std::vector<double> th(static_cast<std::size_t>(n));
      for (double& v : th) v = rng.uniform(-std::numbers::pi, std::numbers::pi);
      const CartanVector theta = CartanVector::centered(std::move(th));
      row.residuals = check_real_form(k, k0, x, theta, tau_b, opt.path);
      row.s_consistency = (build_s_matrix(k0, x, GroupCase::complex) -
                           build_s_matrix(k0, x, GroupCase::real_split)).cwiseAbs().maxCoeff();
      row.q_consistency = max_abs_diff(moment_map(k0, x, GroupCase::complex, opt.path),
                                       moment_map(k0, x, GroupCase::real_split, opt.path));
      row.k0_fixed = (tau_on_k(k0) - k0).cwiseAbs().maxCoeff();
    } catch (const Error& e) {
      row.failed = true;
      row.error = e.what();
    }
  });
  ResidualStat anti, inv, lag, fixes, s_cons, q_cons, k0_fixed, failures;
  std::optional<std::string> first_error;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Row& r = rows[i];
    failures.add(r.failed ? 1.0 : 0.0);
    if (r.failed) {
      if (!first_error) first_error = r.error;
      continue;
    }
    anti.add(r.residuals.anticommutation);
    inv.add(r.residuals.moment_invariance);
    if (i < lagrangian_points) lag.add(r.residuals.lagrangian);
    fixes.add(r.residuals.tau_fixes_q);
    s_cons.add(r.s_consistency);
    q_cons.add(r.q_consistency);
    k0_fixed.add(r.k0_fixed);
  }
  rep.require_below("evaluation_failures", failures, 0.5);
  rep.require_below("anticommutation", anti, 1e-12);
  rep.require_below("moment_invariance", inv, 1e-9);
  rep.require_below("lagrangian_q_a", lag, 1e-9);
  rep.require_below("tau_fixes_q_a", fixes, 1e-9);
  rep.require_equal("s_matrix_consistency", s_cons.max(), 0.0);
  rep.require_equal("q_a_moment_consistency", q_cons.max(), 0.0);
  rep.require_equal("k0_tau_fixed", k0_fixed.max(), 0.0);
  if (first_error) rep.diagnostics["first_error"] = *first_error;
  rep.finalize();
  rep.runtime_ms = clock.elapsed_ms();
  return rep;
}

}  // namespace crownlab
