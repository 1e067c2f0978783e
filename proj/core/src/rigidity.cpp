#include "schwarz/rigidity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include <Eigen/SVD>

#include "schwarz/differentiation.hpp"
#include "schwarz/error.hpp"
#include "schwarz/gallery.hpp"
#include "schwarz/json_io.hpp"
#include "schwarz/random.hpp"

namespace schwarz::rigidity {

using holo::MapExpr;

std::string_view to_string(Variant v) noexcept {
  switch (v) {
    case Variant::P2: return "P2";
    case Variant::Polydisk: return "Polydisk";
    case Variant::SchwarzV: return "SchwarzV";
    case Variant::RigidityV: return "RigidityV";
  }
  return "?";
}

Variant parse_variant(std::string_view name) {
  for (Variant v : {Variant::P2, Variant::Polydisk, Variant::SchwarzV, Variant::RigidityV}) {
    if (name == to_string(v)) return v;
  }
  throw Error(ErrorKind::BadParams, "unknown rigidity variant '" + std::string(name) + "'");
}

std::string_view to_string(Outcome o) noexcept {
  switch (o) {
    case Outcome::RigidityCertified: return "RigidityCertified";
    case Outcome::EquationsFail: return "EquationsFail";
    case Outcome::HypothesesFail: return "HypothesesFail";
    case Outcome::IdentityNotConfirmed: return "IdentityNotConfirmed";
  }
  return "?";
}

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

bool exponent_fits(Variant v, const lp::Exponent& p) {
  switch (v) {
    case Variant::P2: return p.is_finite() && p.value() == 2.0;
    case Variant::Polydisk: return p.is_infinite();
    case Variant::SchwarzV: return p.is_infinite() || p.value() >= 2.0;
    case Variant::RigidityV: return p.is_finite();
  }
  return false;
}

bool needs_distinguished(Variant v, const lp::Exponent& p) {
  return v == Variant::Polydisk || (v == Variant::SchwarzV && p.is_infinite());
}

// v_alpha of the variant (un-normalized: the polydisk target is n).
ComplexVector normal_vector(Variant v, const lp::BoundaryPoint& a) {
  switch (v) {
    case Variant::P2:
    case Variant::Polydisk: return a.point();
    case Variant::SchwarzV: return lp::schwarz_v(a);
    case Variant::RigidityV: return lp::rigidity_v(a);
  }
  return a.point();
}

double target_of(Variant v, Eigen::Index n) { return v == Variant::Polydisk ? static_cast<double>(n) : 1.0; }

ComplexMatrix column(const ComplexVector& a) {
  ComplexMatrix m(a.size(), 1);
  m.col(0) = a;
  return m;
}

ComplexMatrix row_conj(const ComplexVector& w) {
  ComplexMatrix m(1, w.size());
  m.row(0) = w.adjoint();
  return m;
}

// phi(xi) = conj(w)^T f(xi alpha) as a scalar map of one variable.
MapExpr slice_functional(const MapExpr& f, const ComplexVector& alpha, const ComplexVector& w) {
  return MapExpr::compose(MapExpr::linear(row_conj(w)), MapExpr::compose(f, MapExpr::linear(column(alpha))));
}

}  // namespace

std::vector<ComplexVector> basis_anchors(Variant variant, Eigen::Index n, const lp::Exponent& p) {
  std::vector<ComplexVector> out;
  for (Eigen::Index k = 0; k < n; ++k) {
    if (needs_distinguished(variant, p)) {
      ComplexVector a(n);
      for (Eigen::Index j = 0; j < n; ++j) a[j] = std::polar(1.0, 2.0 * std::numbers::pi * double(j * k) / double(n));
      out.push_back(a);
    } else {
      out.push_back(unit_vector(n, k));
    }
  }
  return out;
}

int anchor_rank(const std::vector<ComplexVector>& anchors, bool over_reals) {
  if (anchors.empty()) return 0;
  const auto n = anchors.front().size();
  const auto k = static_cast<Eigen::Index>(anchors.size());
  Eigen::VectorXd sv;
  if (over_reals) {
    RealMatrix A(2 * n, k);
    for (Eigen::Index j = 0; j < k; ++j) A.col(j) = lp::realify(anchors[j]);
    sv = Eigen::JacobiSVD<RealMatrix>(A).singularValues();
  } else {
    ComplexMatrix A(n, k);
    for (Eigen::Index j = 0; j < k; ++j) A.col(j) = anchors[j];
    sv = Eigen::JacobiSVD<ComplexMatrix>(A).singularValues();
  }
  if (sv.size() == 0 || sv[0] == 0.0) return 0;
  return static_cast<int>((sv.array() > 1e-10 * sv[0]).count());
}

double identity_residual(const MapExpr& f, const lp::Exponent& p, const std::vector<ComplexVector>& anchors,
                         int points) {
  const auto n = f.in_dim();
  double worst = 0.0;
  CounterRng rng(0, "identity-grid");
  for (int i = 1; i <= points; ++i) {
    const ComplexVector z = n <= 11 ? sampling::halton_ball_point(static_cast<std::uint64_t>(i), n, p)
                                    : sampling::ball_point(rng, n, p);
    worst = std::max(worst, lp::norm_p(ComplexVector(f(z) - z), p));
  }
  for (const auto& a : anchors) {
    for (int j = 1; j <= 32; ++j) {
      const ComplexVector z = (j / 32.0) * a;
      worst = std::max(worst, lp::norm_p(ComplexVector(f(z) - z), p));
    }
  }
  return worst;
}

Report check_rigidity(const Instance& inst, const verify::VerifyConfig& cfg) {
  Report r;
  const auto& f = inst.map;
  const auto& p = inst.exponent;
  const auto n = f.in_dim();
  const auto& tol = cfg.tol;
  r.target = target_of(inst.variant, n);
  auto hyp = [&](const std::string& name, bool holds, double residual) {
    r.hypotheses.push_back({name, holds, residual});
    return holds;
  };
  auto fail = [&](const std::string& reason) {
    r.outcome = Outcome::HypothesesFail;
    r.reason = reason;
    return r;
  };

  if (!hyp("exponent fits variant", exponent_fits(inst.variant, p), 0.0)) {
    return fail("exponent " + p.to_string() + " does not fit variant " + std::string(to_string(inst.variant)));
  }
  bool dims = f.out_dim() == n && !inst.anchors.empty();
  for (const auto& a : inst.anchors) dims = dims && a.size() == n;
  if (!hyp("dimensions", dims, 0.0)) return fail("map and anchors must share the dimension n");
  const ComplexVector origin = ComplexVector::Zero(n);
  const double f0 = lp::norm_p(f(origin), p);
  if (!hyp("f(0) = 0", f0 <= tol.origin, f0)) return fail("f(0) != 0");

  std::vector<lp::BoundaryPoint> points;
  for (std::size_t k = 0; k < inst.anchors.size(); ++k) {
    const auto& a = inst.anchors[k];
    const std::string tag = "anchor " + std::to_string(k + 1);
    const double gap = std::abs(lp::norm_p(a, p) - 1.0);
    if (!hyp(tag + " on the boundary", gap <= tol.hypothesis, gap)) return fail(tag + " is not a boundary point");
    if (needs_distinguished(inst.variant, p) &&
        !hyp(tag + " on the distinguished boundary", lp::on_distinguished_boundary(a, tol.hypothesis), 0.0)) {
      return fail(tag + " is not on the distinguished boundary");
    }
    for (std::size_t j = 0; j < k; ++j) {
      const double d = (inst.anchors[j] - a).norm();
      if (!hyp(tag + " distinct", d > 1e-12, d)) return fail("anchors must be distinct");
    }
    points.emplace_back(a, p, tol.hypothesis);
  }
  for (std::size_t k = 0; k < points.size(); ++k) {
    const auto& a = points[k].point();
    const std::string tag = "anchor " + std::to_string(k + 1);
    const double fixed = lp::norm_p(ComplexVector(f(a) - a), p);
    r.fixed_point_residuals.push_back(fixed);
    const double hol = holo::holomorphy_residual(f, a);
    r.holomorphy_residuals.push_back(hol);
    if (!hyp(tag + " fixed", fixed <= tol.hypothesis, fixed)) return fail(tag + " is not a fixed point");
    if (!hyp("holomorphic at " + tag, hol <= tol.holomorphy, hol)) return fail("f is not holomorphic at " + tag);
  }

  // Equations first: a failing equation is reported even when the anchors
  // would also violate the rank or sign hypotheses.
  double worst_eq = 0.0;
  std::size_t worst_k = 0;
  for (std::size_t k = 0; k < points.size(); ++k) {
    const auto& a = points[k].point();
    const ComplexMatrix J = holo::complex_jacobian(f, a).matrix;
    const Complex value = normal_vector(inst.variant, points[k]).dot(J * a);
    r.equation_values.push_back(value);
    if (std::abs(value - r.target) > worst_eq) {
      worst_eq = std::abs(value - r.target);
      worst_k = k;
    }
  }
  const ComplexMatrix J0 = holo::complex_jacobian(f, origin).matrix;
  for (const auto& a : inst.anchors) {
    const ComplexVector Ja = J0 * a;
    r.jf0_norms.push_back(lp::norm_p(Ja, p));
    r.jf0_residuals.push_back(lp::norm_p(ComplexVector(Ja - a), p));
  }
  r.identity_residual = identity_residual(f, p, inst.anchors);
  const bool over_reals = inst.variant == Variant::RigidityV;
  r.rank = anchor_rank(inst.anchors, over_reals);
  if (over_reals) {
    r.max_imag = 0.0;
    r.min_real = std::numeric_limits<double>::infinity();
    for (const auto& a : inst.anchors) {
      r.max_imag = std::max(r.max_imag, a.imag().cwiseAbs().maxCoeff());
      r.min_real = std::min(r.min_real, a.real().minCoeff());
    }
    r.nonneg_ok = r.max_imag <= tol.hypothesis && r.min_real >= -tol.hypothesis;
  }

  if (worst_eq > tol.equation) {
    std::ostringstream os;
    os << "equation at anchor " << worst_k + 1 << " is " << r.equation_values[worst_k].real() << " + "
       << r.equation_values[worst_k].imag() << "i, target " << r.target;
    r.outcome = Outcome::EquationsFail;
    r.reason = os.str();
    return r;
  }
  if (over_reals) {
    hyp("anchors real", r.max_imag <= tol.hypothesis, r.max_imag);
    hyp("anchors non-negative", r.min_real >= -tol.hypothesis, std::max(0.0, -r.min_real));
  }
  const bool full_rank = hyp("anchor rank = n", r.rank == n, static_cast<double>(n - r.rank));
  if (!full_rank) {
    return fail("insufficient anchors (rank " + std::to_string(r.rank) + " < " + std::to_string(n) + ")");
  }
  if (!r.nonneg_ok) return fail("anchors must be real with non-negative coordinates");
  if (r.identity_residual > tol.identity) {
    r.outcome = Outcome::IdentityNotConfirmed;
    r.reason = "equations hold but f differs from the identity on the grid";
    return r;
  }
  r.outcome = Outcome::RigidityCertified;
  r.reason = "f = id on the grid";
  return r;
}

verify::Verdict to_verdict(const Report& r, const verify::VerifyConfig& cfg) {
  verify::Verdict v;
  v.theorem_id = "rigidity";
  v.tolerance = 0.0;
  v.hypotheses = r.hypotheses;
  v.set("target", r.target);
  v.set("rank", static_cast<double>(r.rank));
  v.set("identity_residual", r.identity_residual);
  v.set("nonneg_ok", r.nonneg_ok ? 1.0 : 0.0);
  double worst_eq = r.equation_values.empty() ? kNaN : 0.0;
  for (std::size_t k = 0; k < r.equation_values.size(); ++k) {
    v.set("equation_" + std::to_string(k + 1), r.equation_values[k]);
    worst_eq = std::max(worst_eq, std::abs(r.equation_values[k] - r.target));
  }
  for (std::size_t k = 0; k < r.jf0_residuals.size(); ++k) {
    v.set("jf0_residual_" + std::to_string(k + 1), r.jf0_residuals[k]);
  }
  v.margin = std::min(cfg.tol.equation - worst_eq, cfg.tol.identity - r.identity_residual);
  v.detail = std::string(to_string(r.outcome)) + ": " + r.reason;
  v.finalize();
  v.passed = v.passed && r.outcome == Outcome::RigidityCertified;
  return v;
}

nlohmann::json to_json(const Report& r) {
  nlohmann::json eq = nlohmann::json::array();
  for (const auto& e : r.equation_values) eq.push_back(json_io::to_json(e));
  nlohmann::json hyps = nlohmann::json::array();
  for (const auto& h : r.hypotheses) hyps.push_back({{"name", h.name}, {"holds", h.holds}, {"residual", h.residual}});
  return {{"fixed_point_residuals", r.fixed_point_residuals},
          {"equation_values", eq},
          {"target", r.target},
          {"rank", r.rank},
          {"nonneg_ok", r.nonneg_ok},
          {"jf0_residuals", r.jf0_residuals},
          {"identity_residual", r.identity_residual},
          {"verdict", std::string(to_string(r.outcome))},
          {"reason", r.reason},
          {"hypotheses", hyps}};
}

verify::Verdict check_proof_chain(const Instance& inst, const verify::VerifyConfig& cfg) {
  verify::Verdict v;
  v.theorem_id = "rigidity_proof_chain";
  v.tolerance = cfg.tol.margin;
  const Report rep = check_rigidity(inst, cfg);
  const bool equations = rep.outcome != Outcome::EquationsFail && !rep.equation_values.empty();
  v.require_flag("equations hold", equations);
  if (!equations) {
    v.detail = "equations do not hold: " + rep.reason;
    v.finalize();
    return v;
  }
  const auto& f = inst.map;
  const auto& p = inst.exponent;
  const auto n = f.in_dim();
  const ComplexMatrix J0 = holo::complex_jacobian(f, ComplexVector::Zero(n)).matrix;
  const double scale = inst.variant == Variant::Polydisk ? 1.0 / static_cast<double>(n) : 1.0;

  double link[5] = {0.0, 0.0, 0.0, 0.0, 0.0};
  double holder_gap = 0.0;
  CounterRng base(cfg.seed, "proof-chain");
  for (std::size_t k = 0; k < inst.anchors.size(); ++k) {
    const ComplexVector& a = inst.anchors[k];
    const lp::BoundaryPoint bp(a, p, cfg.tol.hypothesis);
    const ComplexVector w = scale * normal_vector(inst.variant, bp);
    const MapExpr phi = slice_functional(f, a, w);
    auto at = [&](Complex xi) {
      ComplexVector x(1);
      x[0] = xi;
      return phi(x)[0];
    };
    CounterRng rng = base.substream(static_cast<std::uint64_t>(k));
    for (int i = 0; i < 256; ++i) link[0] = std::max(link[0], std::abs(at(sampling::disk_point(rng, 1.0 - 1e-6))) - 1.0);
    ComplexVector one(1);
    one[0] = 1.0;
    double dphi1 = kNaN;
    try {
      dphi1 = std::abs(holo::radial_boundary_derivative(phi, lp::BoundaryPoint(one, lp::Exponent::finite(2.0)), one)
                           .value[0] -
                       1.0);
    } catch (const Error&) {
    }
    link[1] = std::max({link[1], std::abs(at(0.0)), std::abs(at(1.0) - 1.0), std::isnan(dphi1) ? 1.0 : dphi1});
    for (int ri = 1; ri <= 9; ++ri) {
      for (int t = 0; t < 16; ++t) {
        const Complex xi = std::polar(0.1 * ri, 2.0 * std::numbers::pi * t / 16.0);
        link[2] = std::max(link[2], std::abs(at(xi) - xi));
      }
    }
    link[3] = std::max(link[3], lp::norm_p(ComplexVector(J0 * a - a), p));
    holder_gap = std::max(holder_gap, std::abs(lp::norm_p(ComplexVector(J0 * a), p) - 1.0));
  }
  const int rank = anchor_rank(inst.anchors, inst.variant == Variant::RigidityV);
  link[4] = rank == n ? (J0 - ComplexMatrix::Identity(n, n)).cwiseAbs().maxCoeff() : kNaN;

  const char* names[5] = {"link_a_into_disk", "link_b_boundary_values", "link_c_slice_identity",
                          "link_d_jf0_fixes_anchors", "link_e_jf0_identity"};
  const double bounds[5] = {0.0, cfg.tol.equation, cfg.tol.identity, cfg.tol.equation, cfg.tol.equation};
  for (int i = 0; i < 5; ++i) {
    v.set(names[i], link[i]);
    v.check(names[i], link[i], bounds[i]);
  }
  v.set("rank", static_cast<double>(rank));
  v.set("holder_gap", holder_gap);
  v.check("holder_gap", holder_gap, cfg.tol.equation);
  v.margin = 0.0;
  for (int i = 0; i < 5; ++i) {
    if (!(link[i] <= bounds[i])) {
      std::ostringstream os;
      os << "first failing link: " << names[i];
      if (i == 4 && rank < n) os << " (span deficiency, rank " << rank << " < " << n << ")";
      else os << " residual " << link[i];
      v.detail = os.str();
      break;
    }
  }
  v.finalize();
  return v;
}

verify::Verdict equality_case_1d(const MapExpr& f, const verify::VerifyConfig& cfg) {
  verify::Verdict v;
  v.theorem_id = "disk_equality_case";
  v.tolerance = cfg.tol.margin;
  v.require_flag("scalar map", f.in_dim() == 1 && f.out_dim() == 1);
  if (!v.hypotheses_hold()) {
    v.finalize();
    return v;
  }
  ComplexVector zero = ComplexVector::Zero(1);
  ComplexVector one(1);
  one[0] = 1.0;
  v.require("f(0) = 0", std::abs(f(zero)[0]), cfg.tol.origin);
  v.require("f(1) = 1", std::abs(f(one)[0] - 1.0), cfg.tol.hypothesis);
  if (!v.hypotheses_hold()) {
    v.finalize();
    return v;
  }
  const auto d = holo::radial_boundary_derivative(f, lp::BoundaryPoint(one, lp::Exponent::finite(2.0)), one);
  const Complex fp1 = d.value[0];
  v.set("fprime1", fp1);
  const bool equality = std::abs(fp1 - 1.0) <= 1e-8;
  v.set("equality", equality ? 1.0 : 0.0);
  if (equality) {
    double worst = 0.0;
    for (std::uint64_t i = 1; i <= 2000; ++i) {
      const Complex z = sampling::halton_ball_point(i, 1, lp::Exponent::finite(2.0))[0];
      ComplexVector x(1);
      x[0] = z;
      worst = std::max(worst, std::abs(f(x)[0] - z));
    }
    v.set("identity_residual", worst);
    v.check("identity_residual", worst, cfg.tol.identity);
    v.detail = "equality f'(1) = 1: identity checked on the grid";
  }
  v.margin = fp1.real() - 1.0;
  v.finalize();
  return v;
}

verify::Verdict counterexample_polydisk_eigen(Eigen::Index n) {
  verify::Verdict v;
  v.theorem_id = "polydisk_counterexample";
  v.tolerance = 0.0;
  const MapExpr g = holo::gallery::square_first(n);
  const ComplexVector z0 = ComplexVector::Ones(n);
  const ComplexMatrix J = holo::complex_jacobian(g, z0).matrix;
  const ComplexVector y = J * z0;
  const Complex lambda = z0.dot(y) / z0.squaredNorm();
  const double residual = (y - lambda * z0).norm();
  v.require("g(z0) = z0", (g(z0) - z0).norm(), 1e-12);
  v.set("lambda", lambda);
  v.set("residual", residual);
  for (Eigen::Index j = 0; j < n; ++j) v.set("Jw0_" + std::to_string(j + 1), y[j]);
  v.margin = residual - 0.5;
  v.detail = "J_g(z0) w0 is not a scalar multiple of z0";
  v.finalize();
  return v;
}

}  // namespace schwarz::rigidity
