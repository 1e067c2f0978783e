#include "schwarz/schwarz_verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include <Eigen/SVD>

#include "schwarz/differentiation.hpp"
#include "schwarz/error.hpp"
#include "schwarz/random.hpp"

namespace schwarz::verify {

using holo::MapExpr;

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

Verdict start(const std::string& id, const VerifyConfig& cfg) {
  Verdict v;
  v.theorem_id = id;
  v.tolerance = cfg.tol.margin;
  return v;
}

Verdict stop(Verdict v, const std::string& why) {
  v.margin = kNaN;
  if (!why.empty()) v.detail = why;
  v.finalize();
  return v;
}

ComplexVector zeros(Eigen::Index n) { return ComplexVector::Zero(n); }

// Runs `body`, turning an Error into a failed hypothesis named `name`.
template <typename Fn>
bool guarded(Verdict& v, const std::string& name, Fn&& body) {
  try {
    body();
    return true;
  } catch (const Error& e) {
    v.require_flag(name, false, kNaN);
    v.detail = e.what();
    return false;
  }
}

struct DiskData {
  Complex f0;
  Complex fp0;
};

DiskData disk_origin_data(const MapExpr& g) {
  const ComplexVector z = zeros(1);
  const auto J = holo::complex_jacobian(g, z);
  return {g(z)[0], J.matrix(0, 0)};
}

double disk_bound(double f0_defect_sq, double f0_abs, double fp0_abs) {
  return 2.0 * f0_defect_sq / (1.0 - f0_abs * f0_abs + fp0_abs);
}

}  // namespace

// ------------------------------------------------------ operator norm ------

OperatorNormEstimate operator_norm(const ComplexMatrix& A, const lp::Exponent& p, int starts, std::uint64_t seed) {
  if (A.rows() != A.cols()) throw Error(ErrorKind::DimensionMismatch, "operator norm of a non-square matrix");
  if (A.size() == 0) return {0.0, true, 0};
  if (p.is_infinite()) return {A.cwiseAbs().rowwise().sum().maxCoeff(), true, 0};
  if (p.value() == 2.0) {
    Eigen::JacobiSVD<ComplexMatrix> svd(A);
    return {svd.singularValues()(0), true, 0};
  }
  const auto q = lp::Exponent::finite(p.conjugate());
  const auto n = A.cols();
  CounterRng base(seed, "operator-norm");
  double best = 0.0;
  for (int s = 0; s < starts; ++s) {
    CounterRng rng = base.substream(static_cast<std::uint64_t>(s));
    ComplexVector x = sampling::sphere_point(rng, n, p);
    for (int it = 0; it < 200; ++it) {
      const ComplexVector y = A * x;
      const double ny = lp::norm_p(y, p);
      best = std::max(best, ny);
      if (ny == 0.0) break;
      const ComplexVector c = lp::norming_functional(y, p);
      const ComplexVector t = A.transpose() * c;
      if (t.cwiseAbs().maxCoeff() == 0.0) break;
      const ComplexVector next = lp::norming_functional(t, q);
      const double step = (next - x).cwiseAbs().maxCoeff();
      x = next;
      if (step < 1e-14) break;
    }
    best = std::max(best, lp::norm_p(ComplexVector(A * x), p));
  }
  return {best, false, starts};
}

// ------------------------------------------------------- Schwarz-Pick ------

Verdict verify_schwarz_pick(const MapExpr& f, const lp::Exponent& p, const VerifyConfig& cfg) {
  Verdict v = start("schwarz_pick", cfg);
  const auto n = f.in_dim();
  v.require_flag("self-map dimensions", f.out_dim() == n);
  if (!v.hypotheses_hold()) return stop(std::move(v), "f must map C^n to C^n");
  const ComplexVector origin = zeros(n);
  v.require("f(0) = 0", lp::norm_p(f(origin), p), cfg.tol.origin);
  v.require("holomorphic at 0", holo::holomorphy_residual(f, origin), cfg.tol.holomorphy);
  if (!v.hypotheses_hold()) return stop(std::move(v), "hypotheses failed");

  CounterRng base(cfg.seed, "schwarz-pick");
  double slack = std::numeric_limits<double>::infinity();
  for (int i = 0; i < cfg.samples; ++i) {
    CounterRng rng = base.substream(static_cast<std::uint64_t>(i));
    const ComplexVector z = sampling::ball_point(rng, n, p);
    slack = std::min(slack, lp::norm_p(z, p) - lp::norm_p(f(z), p));
  }
  const auto J = holo::complex_jacobian(f, origin);
  const auto op = operator_norm(J.matrix, p, 64, cfg.seed);
  v.set("min_slack", slack);
  v.set("samples", static_cast<double>(cfg.samples));
  v.set("op_norm_estimate", op.value);
  v.set("op_norm_exact", op.exact ? 1.0 : 0.0);
  v.check("op_norm_excess", std::max(0.0, op.value - 1.0), cfg.tol.margin);
  v.margin = cfg.samples > 0 ? slack : 0.0;
  v.detail = op.exact ? "derivative norm computed exactly" : "derivative norm is a lower estimate; <= 1 is consistent";
  v.finalize();
  return v;
}

// --------------------------------------------------- disk and vector -------

Verdict verify_zhu(const MapExpr& f, const VerifyConfig& cfg) {
  Verdict v = start("disk_boundary_estimate", cfg);
  v.require_flag("scalar map", f.in_dim() == 1 && f.out_dim() == 1);
  if (!v.hypotheses_hold()) return stop(std::move(v), "f must be a scalar map of one variable");
  v.require("holomorphic at 0", holo::holomorphy_residual(f, zeros(1)), cfg.tol.holomorphy);
  ComplexVector one(1);
  one[0] = 1.0;
  Complex f1 = kNaN;
  if (!guarded(v, "f(1) = 1", [&] { f1 = f(one)[0]; })) return stop(std::move(v), "");
  v.require("f(1) = 1", std::abs(f1 - 1.0), cfg.tol.hypothesis);
  if (!v.hypotheses_hold()) return stop(std::move(v), "hypotheses failed");

  const lp::BoundaryPoint b(one, lp::Exponent::finite(2.0));
  const auto d = holo::radial_boundary_derivative(f, b, one);
  const Complex fp1 = d.value[0];
  const auto [f0, fp0] = disk_origin_data(f);
  const double bound = disk_bound(std::norm(1.0 - f0), std::abs(f0), std::abs(fp0));
  v.set("fprime1", fp1);
  v.set("bound", bound);
  v.set("f0", f0);
  v.set("fprime0", fp0);
  v.set("derivative_error", d.error_estimate);
  v.check("fprime1_imag", std::abs(fp1.imag()), cfg.tol.hypothesis);
  v.margin = fp1.real() - bound;
  v.finalize();
  return v;
}

Verdict verify_kalaj(const MapExpr& f, const lp::Exponent& p, const VerifyConfig& cfg) {
  Verdict v = start("vector_boundary_estimate", cfg);
  v.require_flag("map from the disk", f.in_dim() == 1);
  if (!v.hypotheses_hold()) return stop(std::move(v), "f must be a map of one complex variable");
  v.require("holomorphic at 0", holo::holomorphy_residual(f, zeros(1)), cfg.tol.holomorphy);
  ComplexVector one(1);
  one[0] = 1.0;
  ComplexVector f1;
  if (!guarded(v, "||f(1)|| = 1", [&] { f1 = f(one); })) return stop(std::move(v), "");
  v.require("||f(1)|| = 1", std::abs(lp::norm_p(f1, p) - 1.0), cfg.tol.hypothesis);
  if (!v.hypotheses_hold()) return stop(std::move(v), "hypotheses failed");

  const lp::BoundaryPoint b(one, lp::Exponent::finite(2.0));
  const auto d = holo::radial_boundary_derivative(f, b, one);
  const ComplexVector f0 = f(zeros(1));
  const ComplexVector fp0 = holo::complex_jacobian(f, zeros(1)).matrix.col(0);
  const double a = lp::norm_p(f0, p);
  const double fp1 = lp::norm_p(d.value, p);
  const double bound = disk_bound((1.0 - a) * (1.0 - a), a, lp::norm_p(fp0, p));
  v.set("fprime1_norm", fp1);
  v.set("bound", bound);
  v.set("f0_norm", a);
  v.set("fprime0_norm", lp::norm_p(fp0, p));
  v.set("derivative_error", d.error_estimate);

  // Scalar reduction G = l_b o f with b = f(1); G(1) = ||b|| = 1.
  const ComplexVector c = lp::norming_functional(f1, p);
  ComplexMatrix row(1, c.size());
  row.row(0) = c.transpose();
  const Verdict g = verify_zhu(MapExpr::compose(MapExpr::linear(row), f), cfg);
  v.set("reduction_margin", g.margin);
  v.set("reduction_fprime1", g.real("fprime1"));
  v.check("reduction_margin_deficit", std::isnan(g.margin) ? kNaN : std::max(0.0, -g.margin), cfg.tol.margin);
  v.check("reduction_dominated", std::max(0.0, std::abs(g.real("fprime1")) - fp1), cfg.tol.margin);
  v.margin = fp1 - bound;
  v.finalize();
  return v;
}

// --------------------------------------------------- boundary normal -------

std::pair<Verdict, LambdaCertificate> verify_boundary_normal(const MapExpr& f, const lp::BoundaryPoint& z0,
                                                             const VerifyConfig& cfg) {
  Verdict v = start("boundary_normal", cfg);
  LambdaCertificate cert;
  const auto& p = z0.exponent();
  const auto n = z0.dim();
  const bool p_ok = p.is_finite() && p.value() >= 2.0;
  v.require_flag("2 <= p < inf", p_ok);
  v.require_flag("self-map dimensions", f.in_dim() == n && f.out_dim() == n);
  if (!v.hypotheses_hold()) return {stop(std::move(v), "unsupported exponent or dimensions"), cert};

  const bool origin_fixed = v.require("f(0) = 0", lp::norm_p(f(zeros(n)), p), cfg.tol.origin);
  v.require("holomorphic at z0", holo::holomorphy_residual(f, z0.point()), cfg.tol.holomorphy);
  const ComplexVector w = f(z0.point());
  const bool on_boundary = v.require("f(z0) on the boundary", std::abs(lp::norm_p(w, p) - 1.0), cfg.tol.hypothesis);
  if (!on_boundary) return {stop(std::move(v), "f(z0) is not a boundary point"), cert};

  const lp::BoundaryPoint w0(w, p, cfg.tol.hypothesis);
  const ComplexMatrix J = holo::complex_jacobian(f, z0.point()).matrix;
  const ComplexVector vz = lp::schwarz_v(z0);
  const ComplexVector vw = lp::schwarz_v(w0);
  const ComplexVector u = J.adjoint() * vw;
  const double vv = vz.squaredNorm();
  const Complex pairing = lp::inner(u, vz);
  cert.lambda = pairing.real() / vv;
  cert.imag_residual = std::abs(pairing.imag()) / vv;
  cert.proportionality_residual = (u - cert.lambda * vz).norm();

  // Part (1): J T_{z0} in T_{w0}, on the projections of e_j and i e_j.
  const ComplexVector gz = lp::grad_rho(z0.point(), p);
  const ComplexVector gw = lp::grad_rho(w, p);
  double tangent = 0.0;
  for (Eigen::Index j = 0; j < 2 * n; ++j) {
    ComplexVector alpha = ComplexVector::Zero(n);
    alpha[j % n] = j < n ? Complex(1.0) : Complex(0.0, 1.0);
    alpha -= (lp::inner(alpha, gz).real() / gz.squaredNorm()) * gz;
    const double len = alpha.norm();
    if (len < 1e-12) continue;
    alpha /= len;
    tangent = std::max(tangent, std::abs(lp::inner(ComplexVector(J * alpha), gw).real()));
    ++cert.tangent_samples_checked;
  }

  // Proof identity: ||f(z0 - t v)||_p^p = 1 - p lambda t ||v||^2 + O(t^2).
  const double expected = -p.value() * cert.lambda * vv;
  auto slope_at = [&](double t) {
    const ComplexVector fz = f(ComplexVector(z0.point() - t * vz));
    return (std::pow(lp::norm_p(fz, p), p.value()) - 1.0) / t;
  };
  const double s2 = slope_at(1e-2);
  const double s3 = slope_at(1e-3);
  const double slope_err = expected != 0.0 ? std::abs(s3 - expected) / std::abs(expected) : std::abs(s3);

  v.set("lambda", cert.lambda);
  v.set("imag_residual", cert.imag_residual);
  v.set("proportionality_residual", cert.proportionality_residual);
  v.set("tangent_residual", tangent);
  v.set("tangent_samples", static_cast<double>(cert.tangent_samples_checked));
  v.set("slope_expected", expected);
  v.set("slope_t1e-2", s2);
  v.set("slope_t1e-3", s3);
  v.check("imag_residual", cert.imag_residual, cfg.tol.hypothesis);
  v.check("proportionality_residual", cert.proportionality_residual, cfg.tol.hypothesis);
  v.check("tangent_residual", tangent, cfg.tol.tangent);
  v.check("slope_relative_error", slope_err, cfg.tol.slope);
  if (!origin_fixed) {
    v.margin = kNaN;
    v.detail = "f(0) != 0: lambda reported, lambda >= 1 not asserted";
  } else {
    v.margin = cert.lambda - 1.0;
  }
  v.finalize();
  return {v, cert};
}

Verdict verify_liu_wang(const MapExpr& f, const lp::BoundaryPoint& z0, const VerifyConfig& cfg) {
  Verdict v = start("ball_fixed_point", cfg);
  const auto n = z0.dim();
  const auto& p = z0.exponent();
  v.require_flag("p = 2", p.is_finite() && p.value() == 2.0);
  v.require_flag("self-map dimensions", f.in_dim() == n && f.out_dim() == n);
  if (!v.hypotheses_hold()) return stop(std::move(v), "unsupported exponent or dimensions");
  const ComplexVector& z = z0.point();
  v.require("f(z0) = z0", (f(z) - z).norm(), cfg.tol.hypothesis);
  v.require("holomorphic at z0", holo::holomorphy_residual(f, z), cfg.tol.holomorphy);
  const ComplexVector f0 = f(zeros(n));
  v.require("f(0) inside the ball", std::max(0.0, f0.norm() - (1.0 - 1e-12)), 0.0);
  if (!v.hypotheses_hold()) return stop(std::move(v), "hypotheses failed");

  const ComplexMatrix J = holo::complex_jacobian(f, z).matrix;
  const Complex lam = z.dot(J * z);  // conj(z0)^T J z0
  const double lambda = lam.real();
  const double lower = std::norm(1.0 - f0.dot(z)) / (1.0 - f0.squaredNorm());
  const double det_abs = std::abs(J.determinant());
  const double det_cap = std::pow(std::max(lambda, 0.0), 0.5 * static_cast<double>(n + 1));
  const double eigen = (J.adjoint() * z - lambda * z).norm();
  v.set("lambda", lambda);
  v.set("lambda_imag", lam.imag());
  v.set("lower_bound", lower);
  v.set("det_abs", det_abs);
  v.set("det_cap", det_cap);
  v.set("eigen_residual", eigen);
  v.set("lambda_margin", lambda - lower);
  v.set("det_margin", det_cap - det_abs);
  v.check("lambda_imag", std::abs(lam.imag()), cfg.tol.hypothesis);
  v.check("eigen_residual", eigen, cfg.tol.equation);
  v.margin = std::min(lambda - lower, det_cap - det_abs);
  v.finalize();
  return v;
}

// ----------------------------------------------------- product slice -------

Verdict verify_product_slice(const MapExpr& f, const MapExpr& phi, const ComplexVector& z_fix,
                             const lp::Exponent& p, const VerifyConfig& cfg) {
  Verdict v = start("product_slice", cfg);
  const auto n = z_fix.size();
  const auto m = phi.in_dim();
  v.require_flag("p in {2, inf}", p.is_infinite() || p.value() == 2.0);
  v.require_flag("dimensions", f.in_dim() == n + m && f.out_dim() == m && phi.out_dim() == m);
  if (!v.hypotheses_hold()) return stop(std::move(v), "unsupported exponent or dimensions");
  v.require("z_fix inside the ball", std::max(0.0, lp::norm_p(z_fix, p) - (1.0 - 1e-12)), 0.0);
  if (!v.hypotheses_hold()) return stop(std::move(v), "z_fix is not an interior point");

  auto joint = [&](const ComplexVector& z, const ComplexVector& w) {
    ComplexVector zw(n + m);
    zw << z, w;
    return zw;
  };
  const auto inf = lp::Exponent::infinity();
  const double r_max = 1.0 - 1e-3;

  // Slice hypothesis on a polar grid of the polydisk.
  double slice = 0.0;
  double into = 0.0;
  {
    CounterRng rng(cfg.seed, "product-slice-grid");
    for (int i = 0; i < 256; ++i) {
      ComplexVector w(m);
      for (Eigen::Index k = 0; k < m; ++k) w[k] = sampling::disk_point(rng, r_max);
      const ComplexVector fw = f(joint(z_fix, w));
      slice = std::max(slice, lp::norm_p(ComplexVector(fw - phi(w)), inf));
    }
  }
  v.require("slice f(z_fix, .) = phi", slice, cfg.tol.slice);

  // Conclusion and proof chain, sampled in normalized coordinates: the
  // sample zeta maps to z = psi(zeta) with psi an involutive automorphism
  // exchanging 0 and z_fix, and w' = phi(w) plays the role of w.
  MapExpr psi = MapExpr::identity(n);
  if (p.is_infinite()) {
    std::vector<MapExpr> parts;
    for (Eigen::Index j = 0; j < n; ++j) parts.push_back(MapExpr::moebius(z_fix[j], -1.0, MapExpr::coordinate(j, n)));
    psi = MapExpr::tuple(std::move(parts));
  } else {
    psi = MapExpr::scale(-1.0, MapExpr::identity(n));
    if (z_fix.norm() > 0.0) {
      // (a - P z - s Q z) / (1 - <z, a>)
      const double aa = z_fix.squaredNorm();
      const ComplexMatrix P = z_fix * z_fix.adjoint() / aa;
      const ComplexMatrix Q = ComplexMatrix::Identity(n, n) - P;
      const MapExpr num = MapExpr::sum(MapExpr::constant(z_fix, n), MapExpr::linear(-P - std::sqrt(1.0 - aa) * Q));
      ComplexVector one(1);
      one[0] = 1.0;
      const MapExpr den = MapExpr::sum(MapExpr::constant(one, n), MapExpr::linear(-z_fix.adjoint()));
      psi = MapExpr::product(MapExpr::reciprocal(den), num);
    }
  }

  double deviation = 0.0;
  double chain_schwarz = 0.0;
  double chain_first = 0.0;
  double chain_second = 0.0;
  CounterRng base(cfg.seed, "product-slice");
  for (int i = 0; i < cfg.samples; ++i) {
    CounterRng rng = base.substream(static_cast<std::uint64_t>(i));
    const ComplexVector zeta = sampling::ball_point(rng, n, p);
    ComplexVector w(m);
    for (Eigen::Index k = 0; k < m; ++k) w[k] = sampling::disk_point(rng, r_max);
    const ComplexVector z = psi(zeta);
    const ComplexVector fz = f(joint(z, w));
    const ComplexVector pw = phi(w);
    into = std::max(into, lp::norm_p(fz, inf));
    deviation = std::max(deviation, lp::norm_p(ComplexVector(fz - pw), inf));
    const double rz = lp::norm_p(zeta, p);
    for (Eigen::Index k = 0; k < m; ++k) {
      const Complex one_minus = 1.0 - std::conj(pw[k]) * fz[k];
      const double G = std::abs((fz[k] - pw[k]) / one_minus);
      chain_schwarz = std::max(chain_schwarz, G - rz);
      chain_first = std::max(chain_first, std::norm(pw[k] - fz[k]) - std::norm(one_minus));
      chain_second = std::max(chain_second, std::norm(one_minus) - (1.0 - std::norm(pw[k])) / (1.0 - rz * rz));
    }
  }
  v.require("maps into the polydisk", std::max(0.0, into - 1.0), 0.0);
  v.set("slice_residual", slice);
  v.set("max_deviation", deviation);
  v.set("chain_schwarz", chain_schwarz);
  v.set("chain_first", chain_first);
  v.set("chain_second", chain_second);
  v.check("chain_schwarz", chain_schwarz, cfg.tol.chain);
  v.check("chain_first", chain_first, cfg.tol.chain);
  v.check("chain_second", chain_second, cfg.tol.chain);
  v.margin = -deviation;
  if (!v.hypotheses_hold()) v.detail = "hypotheses failed";
  v.finalize();
  return v;
}

// -------------------------------------------------- pluriharmonic ----------

HarnackGrid sample_harnack_grid(const std::function<double(Complex)>& phi, int angles) {
  HarnackGrid grid;
  grid.center = phi(0.0);
  for (int k = 1; k <= 9; ++k) {
    const double r = 0.1 * k;
    for (int a = 0; a < angles; ++a) {
      const double theta = 2.0 * std::numbers::pi * a / angles;
      grid.samples.push_back({r, theta, phi(std::polar(r, theta))});
    }
  }
  return grid;
}

Verdict harnack_certificate(const HarnackGrid& grid, const VerifyConfig& cfg) {
  Verdict v = start("harnack", cfg);
  double min_value = grid.center;
  double slack = std::numeric_limits<double>::infinity();
  for (const auto& s : grid.samples) {
    const double lo = (1.0 - s.radius) / (1.0 + s.radius) * grid.center;
    const double hi = (1.0 + s.radius) / (1.0 - s.radius) * grid.center;
    slack = std::min({slack, s.value - lo, hi - s.value});
    min_value = std::min(min_value, s.value);
  }
  v.require("nonnegative", std::max(0.0, -min_value), cfg.tol.hypothesis);
  v.set("phi0", grid.center);
  v.set("min_phi", min_value);
  v.set("samples", static_cast<double>(grid.samples.size()));
  v.margin = grid.samples.empty() ? 0.0 : slack;
  v.finalize();
  return v;
}

Verdict verify_pluriharmonic_boundary(const MapExpr& f, const lp::BoundaryPoint& z0, const VerifyConfig& cfg) {
  Verdict v = start("pluriharmonic_boundary", cfg);
  const auto& p = z0.exponent();
  const auto n = z0.dim();
  v.require_flag("2 <= p", p.is_infinite() || p.value() >= 2.0);
  v.require_flag("input dimension", f.in_dim() == n);
  if (!v.hypotheses_hold()) return stop(std::move(v), "unsupported exponent or dimensions");
  const auto N = f.out_dim();

  double harmonic = holo::pluriharmonic_residual(f, zeros(n), 1e-3, cfg.seed);
  for (std::uint64_t i = 1; i <= 8; ++i) {
    const ComplexVector z = 0.9 * sampling::halton_ball_point(i, n, p);
    harmonic = std::max(harmonic, holo::pluriharmonic_residual(f, z, 1e-3, cfg.seed + i));
  }
  v.require("pluriharmonic", harmonic, cfg.tol.pluriharmonic);

  const ComplexVector w = f(z0.point());
  const RealVector wr = lp::realify(w);
  v.require("f(z0) in the complex boundary", std::abs(lp::norm_p(w, p) - 1.0), cfg.tol.hypothesis);
  v.require("f(z0)' in the real boundary", std::abs(lp::norm_p(wr, p) - 1.0), cfg.tol.hypothesis);
  if (p.is_infinite()) {
    v.require_flag("f(z0) on the distinguished boundary", lp::on_distinguished_boundary(w, cfg.tol.hypothesis));
  }
  RealMatrix D;
  guarded(v, "C1 at z0", [&] { D = holo::real_jacobian(f, z0.point()).matrix; });
  if (!v.hypotheses_hold()) {
    if (v.detail.empty()) v.detail = "hypotheses failed";
    return stop(std::move(v), "");
  }

  const RealVector V = lp::pluriharmonic_v(lp::BoundaryPoint(w, p, cfg.tol.hypothesis));
  const RealVector f0 = lp::realify(f(zeros(n)));
  const double lhs = (D * lp::realify(z0.point())).dot(V);
  const double mid = 0.5 * (1.0 - f0.dot(V));
  const double low = 0.5 * (1.0 - lp::norm_p(f0, p));
  v.set("lhs", lhs);
  v.set("mid", mid);
  v.set("low", low);
  v.set("lhs_minus_mid", lhs - mid);
  v.set("mid_minus_low", mid - low);
  v.set("output_dim", static_cast<double>(N));

  const ComplexVector& z = z0.point();
  const auto grid = sample_harnack_grid([&](Complex zeta) { return 1.0 - lp::realify(f(ComplexVector(zeta * z))).dot(V); });
  const Verdict h = harnack_certificate(grid, cfg);
  v.set("harnack_margin", h.margin);
  v.set("harnack_min_phi", h.real("min_phi"));
  v.check("harnack_nonnegative", std::max(0.0, -h.real("min_phi")), cfg.tol.hypothesis);
  v.check("harnack_slack_deficit", std::max(0.0, -h.margin), cfg.tol.margin);
  v.margin = std::min({lhs - mid, mid - low, low});
  v.finalize();
  return v;
}

}  // namespace schwarz::verify
