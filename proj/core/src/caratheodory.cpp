#include "schwarz/caratheodory.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "schwarz/error.hpp"
#include "schwarz/random.hpp"

namespace schwarz::cara {

double metric_origin_closed(const ComplexVector& xi, const lp::Exponent& p) {
  require_finite(xi, "direction");
  return lp::norm_p(xi, p);
}

double distance_origin_closed(const ComplexVector& z, const lp::Exponent& p) {
  require_finite(z, "point");
  const double r = lp::norm_p(z, p);
  if (!(r < 1.0)) throw Error(ErrorKind::OutsideBall, "distance needs ||z||_p < 1");
  return std::atanh(r);
}

std::string_view to_string(CompetitorKind k) noexcept {
  return k == CompetitorKind::LinearDual ? "LinearDual" : "LinearThenMoebius";
}

CompetitorKind parse_competitor(std::string_view name) {
  if (name == "LinearDual" || name == "linear_dual") return CompetitorKind::LinearDual;
  if (name == "LinearThenMoebius" || name == "linear_then_moebius") return CompetitorKind::LinearThenMoebius;
  throw Error(ErrorKind::BadParams, "unknown competitor family '" + std::string(name) + "'");
}

ComplexVector dual_coefficients(const RealVector& theta, const lp::Exponent& p) {
  const ComplexVector g = lp::complexify(theta);
  const double norm = lp::norm_raw(g, p.conjugate());
  if (norm == 0.0) return ComplexVector::Zero(g.size());
  return g / norm;
}

namespace {

using Objective = std::function<double(const ComplexVector&)>;

constexpr double kMinStep = 1e-10;

OptResult maximize(Eigen::Index n, const lp::Exponent& p, const Objective& objective, const Budget& budget,
                   std::string_view stream) {
  if (budget.starts < 1 || budget.iterations < 1) throw Error(ErrorKind::BadParams, "budget must be positive");
  OptResult best;
  best.value = -1.0;
  CounterRng base(budget.seed, stream);
  for (int s = 0; s < budget.starts; ++s) {
    CounterRng rng = base.substream(static_cast<std::uint64_t>(s));
    RealVector theta(2 * n);
    for (Eigen::Index k = 0; k < theta.size(); ++k) theta[k] = rng.normal();
    auto eval = [&](const RealVector& t) {
      ++best.evaluations;
      return objective(dual_coefficients(t, p));
    };
    double value = eval(theta);
    double step = 0.5 * theta.cwiseAbs().maxCoeff();
    int sweep = 0;
    auto accept = [&](const RealVector& trial) {
      const double tv = eval(trial);
      if (tv <= value) return false;
      theta = trial;
      value = tv;
      return true;
    };
    for (; sweep < budget.iterations && step >= kMinStep; ++sweep) {
      bool improved = false;
      for (Eigen::Index k = 0; k < theta.size(); ++k) {
        for (const double sign : {1.0, -1.0}) {
          RealVector trial = theta;
          trial[k] += sign * step;
          if (accept(trial)) {
            improved = true;
            break;
          }
        }
      }
      // Polar moves on each complex coefficient: the dual norm is not smooth
      // where a coefficient vanishes, and plain coordinate steps stall there.
      const double scale = theta.cwiseAbs().maxCoeff();
      const double rel = scale > 0.0 ? std::min(1.0, step / scale) : 1.0;
      for (Eigen::Index j = 0; j < n; ++j) {
        const Complex g(theta[j], theta[n + j]);
        for (const Complex factor : {Complex(1.0 - rel), Complex(1.0 + rel), std::polar(1.0, rel),
                                     std::polar(1.0, -rel)}) {
          const Complex h = g * factor;
          RealVector trial = theta;
          trial[j] = h.real();
          trial[n + j] = h.imag();
          if (accept(trial)) {
            improved = true;
            break;
          }
        }
      }
      if (!improved) step *= 0.5;
    }
    if (step >= kMinStep) best.converged = false;
    if (value > best.value) {
      best.value = value;
      best.coefficients = dual_coefficients(theta, p);
    }
  }
  return best;
}

Complex pairing(const ComplexVector& c, const ComplexVector& z) { return lp::apply_functional(c, z); }

}  // namespace

OptResult metric_lower_bound_opt(const MetricQuery& q, CompetitorKind kind, const Budget& budget) {
  const auto n = q.direction.size();
  if (q.base.size() != n) throw Error(ErrorKind::DimensionMismatch, "base and direction differ in dimension");
  require_finite(q.base, "base");
  require_finite(q.direction, "direction");
  if (!(lp::norm_p(q.base, q.exponent) < 1.0)) throw Error(ErrorKind::OutsideBall, "base point must be interior");
  if (kind == CompetitorKind::LinearDual && q.base.cwiseAbs().maxCoeff() > 0.0) {
    throw Error(ErrorKind::BadParams, "LinearDual competitors vanish only at base 0");
  }
  const Objective obj = [&](const ComplexVector& c) {
    const double lb = std::abs(pairing(c, q.base));
    return std::abs(pairing(c, q.direction)) / (1.0 - lb * lb);
  };
  return maximize(n, q.exponent, obj, budget, "caratheodory-metric");
}

OptResult distance_lower_bound_opt(const ComplexVector& z, const ComplexVector& w, const lp::Exponent& p,
                                   CompetitorKind kind, const Budget& budget) {
  const auto n = z.size();
  if (w.size() != n) throw Error(ErrorKind::DimensionMismatch, "points differ in dimension");
  require_finite(z, "z");
  require_finite(w, "w");
  if (!(lp::norm_p(z, p) < 1.0) || !(lp::norm_p(w, p) < 1.0)) {
    throw Error(ErrorKind::OutsideBall, "points must be interior");
  }
  if (kind == CompetitorKind::LinearDual && z.cwiseAbs().maxCoeff() > 0.0) {
    throw Error(ErrorKind::BadParams, "LinearDual competitors vanish only at base 0");
  }
  // The Moebius post-composition sending l(z) to 0 leaves the disk distance
  // unchanged, so both families share one objective.
  const Objective obj = [&](const ComplexVector& c) {
    return lp::hyperbolic_distance(pairing(c, z), pairing(c, w));
  };
  return maximize(n, p, obj, budget, "caratheodory-distance");
}

double membership_sup(const ComplexVector& c, const ComplexVector& base, CompetitorKind kind,
                      const lp::Exponent& p, int samples, std::uint64_t seed) {
  const Complex lb = kind == CompetitorKind::LinearThenMoebius ? pairing(c, base) : Complex(0.0);
  CounterRng rng(seed, "caratheodory-membership");
  double sup = 0.0;
  for (int i = 0; i < samples; ++i) {
    CounterRng r = rng.substream(static_cast<std::uint64_t>(i));
    const ComplexVector z = (1.0 - 1e-6) * sampling::sphere_point(r, c.size(), p);
    const Complex l = pairing(c, z);
    const Complex value = (l - lb) / (1.0 - std::conj(lb) * l);
    sup = std::max(sup, std::abs(value));
  }
  return sup;
}

verify::Verdict verify_metric(const MetricQuery& q, CompetitorKind kind, const Budget& budget,
                              const verify::VerifyConfig& cfg) {
  verify::Verdict v;
  v.theorem_id = "caratheodory_metric";
  v.tolerance = cfg.tol.margin;
  const OptResult r = metric_lower_bound_opt(q, kind, budget);
  v.set("optimized", r.value);
  v.set("evaluations", static_cast<double>(r.evaluations));
  v.set("converged", r.converged ? 1.0 : 0.0);
  if (r.coefficients.size() > 0) {
    const double sup = membership_sup(r.coefficients, q.base, kind, q.exponent, 1000, cfg.seed);
    v.set("membership_sup", sup);
    v.check("membership_sup", sup, 1.0);
  }
  const bool at_origin = q.base.size() == 0 || q.base.cwiseAbs().maxCoeff() == 0.0;
  if (at_origin) {
    const double closed = metric_origin_closed(q.direction, q.exponent);
    v.set("closed_form", closed);
    v.set("gap", closed - r.value);
    v.check("soundness", r.value - closed, 1e-9);
    v.margin = cfg.tol.attainment - std::abs(closed - r.value);
  } else {
    v.margin = 0.0;
    v.detail = "away from the origin only the lower bound is reported";
  }
  if (!r.converged) v.detail += (v.detail.empty() ? "" : "; ") + std::string("budget exhausted");
  v.finalize();
  return v;
}

}  // namespace schwarz::cara
