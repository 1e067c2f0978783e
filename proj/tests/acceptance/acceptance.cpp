// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "schwarz/caratheodory.hpp"
#include "schwarz/differentiation.hpp"
#include "schwarz/gallery.hpp"
#include "schwarz/random.hpp"
#include "schwarz/report.hpp"
#include "schwarz/rigidity.hpp"
#include "schwarz/schwarz_verify.hpp"
#include "schwarz/suite.hpp"

#ifndef SCHWARZ_SHIPPED_SUITE
#define SCHWARZ_SHIPPED_SUITE "suites/boundary_schwarz.json"
#endif

namespace {

using namespace schwarz;
using holo::MapExpr;
using lp::Exponent;
namespace gal = holo::gallery;

struct Outcome {
  bool ok = true;
  std::string note;

  void fail(const std::string& why) {
    if (ok) note = why;
    ok = false;
  }
  void expect(bool cond, const std::string& why) {
    if (!cond) fail(why);
  }
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

std::string exponent_name(const Exponent& p) { return p.to_string(); }

// 1. Schwarz-Pick on holomorphic gallery self-maps fixing 0.
Outcome schwarz_pick_suite() {
  Outcome out;
  const std::vector<Exponent> ps = {Exponent::finite(2.0), Exponent::finite(3.0), Exponent::finite(4.0),
                                    Exponent::infinity()};
  double worst = std::numeric_limits<double>::infinity();
  int runs = 0;
  for (int n : {1, 2, 3, 5}) {
    CounterRng rng(1000 + n);
    std::vector<std::pair<std::string, MapExpr>> maps = {
        {"identity", gal::identity(n)},
        {"scaled_identity", gal::scaled_identity(n, Complex(0.3, -0.6))},
        {"square_first", gal::square_first(n)},
        {"first_times_last", gal::first_times_last(n)},
        {"power_slice", gal::power_slice(n, 3)},
        {"diagonal_blaschke", gal::diagonal_blaschke(0.6 * sampling::ball_point(rng, n, Exponent::infinity()))},
        {"ball_automorphism(0)", gal::ball_automorphism(ComplexVector::Zero(n))},
    };
    std::vector<int> powers;
    std::vector<double> phases;
    for (int j = 0; j < n; ++j) {
      powers.push_back(1 + j % 3);
      phases.push_back(rng.uniform() * 6.283185307179586);
    }
    maps.emplace_back("diagonal_power", gal::diagonal_power(powers, phases));
    const ComplexMatrix U = sampling::unitary(rng, n);
    for (const auto& p : ps) {
      auto run = [&](const std::string& name, const MapExpr& f) {
        verify::VerifyConfig cfg;
        cfg.samples = 10000;
        cfg.seed = 77;
        const auto v = verify::verify_schwarz_pick(f, p, cfg);
        ++runs;
        worst = std::min(worst, v.margin);
        const std::string where = name + " n=" + std::to_string(n) + " p=" + exponent_name(p);
        out.expect(v.hypotheses_hold(), "hypotheses failed for " + where);
        out.expect(v.margin >= -1e-10, "slack " + fmt(v.margin) + " for " + where);
      };
      for (const auto& [name, f] : maps) run(name, f);
      if (p.is_finite() && p.value() == 2.0) run("unitary", gal::unitary(U));
    }
  }
  out.note = std::to_string(runs) + " runs x 1e4 samples, min slack " + fmt(worst) + (out.ok ? "" : "; " + out.note);
  return out;
}

// 2. Sharpness of the disk and vector boundary estimates on the 5x5 extremal grid.
Outcome extremal_grid() {
  Outcome out;
  double worst = 0.0;
  int runs = 0;
  const std::vector<double> grid = {0.0, 0.2, 0.4, 0.6, 0.8};
  const std::vector<Exponent> ps = {Exponent::finite(2.0), Exponent::finite(3.0), Exponent::infinity()};
  for (double a : grid) {
    for (double d : grid) {
      if (d > 1.0 - a * a) continue;
      const auto z = verify::verify_zhu(gal::zhu_extremal(a, d));
      ++runs;
      worst = std::max(worst, std::abs(z.margin));
      out.expect(z.hypotheses_hold() && std::abs(z.margin) <= 1e-7,
                 "disk estimate a=" + fmt(a) + " d=" + fmt(d) + " margin " + fmt(z.margin));
      for (const auto& p : ps) {
        const ComplexVector b = lp::normalize(cvec({1.0, Complex(0.3, -0.4)}), p);
        const auto k = verify::verify_kalaj(gal::kalaj_extremal(b, a, d, p), p);
        ++runs;
        worst = std::max(worst, std::abs(k.margin));
        out.expect(k.hypotheses_hold() && std::abs(k.margin) <= 1e-7,
                   "vector estimate a=" + fmt(a) + " d=" + fmt(d) + " p=" + exponent_name(p) + " margin " +
                       fmt(k.margin));
      }
    }
  }
  out.note = std::to_string(runs) + " extremal maps, max |margin| " + fmt(worst) + (out.ok ? "" : "; " + out.note);
  return out;
}

// 3. Boundary normal certificate for the identity and (z1^2, 0, ..., 0) at e1.
Outcome boundary_normal_certificate() {
  Outcome out;
  double worst_slope = 0.0;
  for (double pv : {2.0, 3.0, 4.0}) {
    const Exponent p = Exponent::finite(pv);
    const lp::BoundaryPoint e1(unit_vector(3, 0), p);
    for (const auto& [f, lambda] : {std::pair{gal::identity(3), 1.0}, std::pair{gal::power_slice(3, 2), 2.0}}) {
      const auto [v, cert] = verify::verify_boundary_normal(f, e1);
      const std::string where = "lambda=" + fmt(lambda) + " p=" + fmt(pv);
      out.expect(v.passed, "verdict failed for " + where + ": " + v.detail);
      out.expect(std::abs(cert.lambda - lambda) <= 1e-8, "lambda " + fmt(cert.lambda) + " for " + where);
      out.expect(cert.imag_residual <= 1e-8, "imag residual for " + where);
      out.expect(cert.proportionality_residual <= 1e-8, "proportionality residual for " + where);
      out.expect(v.real("tangent_residual") <= 1e-7, "tangent residual for " + where);
      const double expected = v.real("slope_expected");
      const double rel = std::abs(v.real("slope_t1e-3") - expected) / std::abs(expected);
      worst_slope = std::max(worst_slope, rel);
      out.expect(rel <= 0.02, "slope error " + fmt(rel) + " at t=1e-3 for " + where);
    }
  }
  out.note = "p in {2,3,4}, worst slope error at t=1e-3 " + fmt(worst_slope) + (out.ok ? "" : "; " + out.note);
  return out;
}

// 4. Ball fixed-point estimate vs the boundary normal certificate at p = 2.
Outcome ball_fixed_point() {
  Outcome out;
  const Exponent p2 = Exponent::finite(2.0);
  CounterRng root(4040);
  double worst_gap = 0.0;
  double worst_det = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < 10; ++i) {
    CounterRng rng = root.substream(static_cast<std::uint64_t>(i));
    const int n = 2 + i % 3;
    const ComplexVector z0 = sampling::sphere_point(rng, n, p2);
    MapExpr f = gal::identity(n);
    if (i % 2 == 0) {
      f = gal::ball_automorphism_fixing(0.7 * sampling::ball_point(rng, n, p2), z0);
    } else {
      // W g W^* with g = square_first fixes W e1 = z0.
      const ComplexMatrix W = gal::unitary_mapping(unit_vector(n, 0), z0);
      f = MapExpr::compose(gal::unitary(W), MapExpr::compose(gal::square_first(n), gal::unitary(W.adjoint())));
    }
    const lp::BoundaryPoint z(z0, p2);
    const auto lw = verify::verify_liu_wang(f, z);
    const auto [bn, cert] = verify::verify_boundary_normal(f, z);
    const double gap = std::abs(cert.lambda - lw.real("lambda"));
    worst_gap = std::max(worst_gap, gap);
    const double det_excess = lw.real("det_abs") - lw.real("det_cap");
    worst_det = std::max(worst_det, det_excess);
    const std::string where = "instance " + std::to_string(i);
    out.expect(lw.hypotheses_hold(), "hypotheses failed for " + where + ": " + lw.detail);
    out.expect(gap <= 1e-9, "lambda gap " + fmt(gap) + " for " + where);
    out.expect(det_excess <= 1e-9, "det bound exceeded by " + fmt(det_excess) + " for " + where);
  }
  out.note = "10 instances, max lambda gap " + fmt(worst_gap) + ", max |det J| - cap " + fmt(worst_det) +
             (out.ok ? "" : "; " + out.note);
  return out;
}

// 5. Polydisk counterexample.
Outcome polydisk_counterexample() {
  Outcome out;
  const auto v = rigidity::counterexample_polydisk_eigen(3);
  const double r = v.real("residual");
  out.expect(std::abs(r - std::sqrt(6.0) / 3.0) <= 1e-9, "residual " + fmt(r));
  out.expect(v.passed, "verdict failed");
  char buf[64];
  std::snprintf(buf, sizeof buf, "n=3 residual %.12f (sqrt(6)/3 = %.12f)", r, std::sqrt(6.0) / 3.0);
  out.note = buf + (out.ok ? std::string() : "; " + out.note);
  return out;
}

// 6. Pluriharmonic boundary inequality on seeded blends at p = 2.
Outcome pluriharmonic_boundary() {
  Outcome out;
  const Exponent p2 = Exponent::finite(2.0);
  CounterRng root(6060);
  double worst = std::numeric_limits<double>::infinity();
  double low_min = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 20; ++i) {
    CounterRng rng = root.substream(static_cast<std::uint64_t>(i));
    const int n = 1 + i % 3;
    const ComplexVector z0 = sampling::sphere_point(rng, n, p2);
    const ComplexVector w0 = sampling::sphere_point(rng, n, p2);
    const double s = 0.3 + 0.7 * rng.uniform();
    const double t = rng.uniform();
    const auto f = gal::pluriharmonic_blend(z0, w0, s, t, i % 2 == 1);
    const auto v = verify::verify_pluriharmonic_boundary(f, lp::BoundaryPoint(z0, p2));
    const double lhs = v.real("lhs"), mid = v.real("mid"), low = v.real("low");
    worst = std::min({worst, lhs - mid, mid - low});
    low_min = std::min(low_min, low);
    const std::string where = "blend " + std::to_string(i);
    out.expect(v.hypotheses_hold(), "hypotheses failed for " + where + ": " + v.detail);
    out.expect(lhs - mid >= -1e-7 && mid - low >= -1e-7 && low > 0.0, "chain fails for " + where);
    out.expect(v.real("harnack_margin") >= -1e-7 && v.real("harnack_min_phi") >= -1e-8,
               "Harnack certificate fails for " + where);
    out.expect(v.passed, "verdict failed for " + where + ": " + v.detail);
  }
  out.note = "20 blends, min chain slack " + fmt(worst) + ", min low " + fmt(low_min) + (out.ok ? "" : "; " + out.note);
  return out;
}

// 7. Caratheodory attainment at the origin and the disk distance.
Outcome caratheodory_attainment() {
  Outcome out;
  double worst = 0.0;
  int runs = 0;
  const std::vector<Exponent> ps = {Exponent::finite(2.0), Exponent::finite(3.0), Exponent::infinity()};
  for (const auto& p : ps) {
    for (int n : {1, 2, 3, 5}) {
      CounterRng root(7000 + n);
      for (int k = 0; k < 10; ++k) {
        CounterRng rng = root.substream(static_cast<std::uint64_t>(k));
        cara::MetricQuery q;
        q.base = ComplexVector::Zero(n);
        q.direction = sampling::complex_normal_vector(rng, n);
        q.exponent = p;
        cara::Budget budget;
        budget.seed = static_cast<std::uint64_t>(k);
        const auto r = cara::metric_lower_bound_opt(q, cara::CompetitorKind::LinearDual, budget);
        const double gap = std::abs(r.value - lp::norm_p(q.direction, p));
        worst = std::max(worst, gap);
        ++runs;
        out.expect(gap <= 1e-3, "metric gap " + fmt(gap) + " at p=" + exponent_name(p) + " n=" + std::to_string(n));
      }
    }
  }
  const double target = 0.5 * std::log(3.0);
  const double closed = cara::distance_origin_closed(cvec({0.5}), Exponent::finite(2.0));
  const double opt = cara::distance_lower_bound_opt(cvec({0.0}), cvec({Complex(0.3, 0.4)}), Exponent::finite(2.0),
                                                    cara::CompetitorKind::LinearDual)
                         .value;
  out.expect(std::abs(closed - target) <= 1e-9, "closed-form distance " + fmt(closed));
  out.expect(std::abs(opt - target) <= 1e-9, "optimized distance " + fmt(opt));
  out.note = std::to_string(runs) + " directions, max gap " + fmt(worst) + "; n=1 distance error " +
             fmt(std::max(std::abs(closed - target), std::abs(opt - target))) + (out.ok ? "" : "; " + out.note);
  return out;
}

// 8. Rigidity certificates and the two counterexample configurations.
Outcome rigidity_suite() {
  Outcome out;
  verify::VerifyConfig cfg;
  const std::vector<std::pair<rigidity::Variant, std::vector<Exponent>>> cases = {
      {rigidity::Variant::P2, {Exponent::finite(2.0)}},
      {rigidity::Variant::Polydisk, {Exponent::infinity()}},
      {rigidity::Variant::SchwarzV, {Exponent::finite(2.0), Exponent::finite(4.0), Exponent::infinity()}},
      {rigidity::Variant::RigidityV, {Exponent::finite(1.5), Exponent::finite(2.0), Exponent::finite(3.0)}}};
  int certified = 0;
  for (int n : {2, 3}) {
    for (const auto& [variant, exps] : cases) {
      for (const auto& p : exps) {
        rigidity::Instance inst{gal::identity(n), rigidity::basis_anchors(variant, n, p), p, variant};
        const auto rep = rigidity::check_rigidity(inst, cfg);
        const double target = variant == rigidity::Variant::Polydisk ? n : 1.0;
        const std::string where =
            std::string(rigidity::to_string(variant)) + " p=" + exponent_name(p) + " n=" + std::to_string(n);
        out.expect(rep.outcome == rigidity::Outcome::RigidityCertified, where + ": " + rep.reason);
        out.expect(rep.target == target, "target " + fmt(rep.target) + " for " + where);
        if (rep.outcome == rigidity::Outcome::RigidityCertified) ++certified;
      }
    }
  }
  double id_res = 0.0;
  for (const auto& [variant, p] : {std::pair{rigidity::Variant::P2, Exponent::finite(2.0)},
                                   std::pair{rigidity::Variant::RigidityV, Exponent::finite(3.0)}}) {
    const int n = 3;
    rigidity::Instance inst{gal::first_times_last(n), {}, p, variant};
    for (int k = 1; k < n; ++k) inst.anchors.push_back(unit_vector(n, k));
    const auto rep = rigidity::check_rigidity(inst, cfg);
    bool eq = rep.equation_values.size() == static_cast<std::size_t>(n - 1);
    for (const Complex& e : rep.equation_values) eq = eq && std::abs(e - rep.target) <= cfg.tol.equation;
    out.expect(eq, "missing-anchor equations do not hold");
    out.expect(rep.outcome != rigidity::Outcome::RigidityCertified, "missing-anchor case was certified");
    out.expect(rep.reason.find("insufficient anchors") != std::string::npos, "reason: " + rep.reason);
    out.expect(rep.identity_residual >= 0.1, "identity residual " + fmt(rep.identity_residual));
    id_res = rep.identity_residual;
  }
  rigidity::Instance neg{gal::identity(3), {}, Exponent::finite(3.0), rigidity::Variant::RigidityV};
  for (int k = 0; k < 3; ++k) neg.anchors.push_back(-unit_vector(3, k));
  const auto rep = rigidity::check_rigidity(neg, cfg);
  bool minus_one = rep.equation_values.size() == 3;
  for (const Complex& e : rep.equation_values) minus_one = minus_one && std::abs(e + 1.0) <= 1e-9;
  out.expect(minus_one, "negated anchors: equation values are not -1");
  out.expect(rep.outcome == rigidity::Outcome::EquationsFail, "negated anchors: " + std::string(to_string(rep.outcome)));
  out.note = std::to_string(certified) + " identity certificates; missing anchor withheld (identity residual " +
             fmt(id_res) + "); negated anchors EquationsFail" + (out.ok ? "" : "; " + out.note);
  return out;
}

// 9. Cauchy-integral vs finite-difference Jacobians, and the chain rule.
Outcome differentiation_engine() {
  Outcome out;
  const Exponent p2 = Exponent::finite(2.0);
  CounterRng prng(9090);
  std::vector<std::pair<std::string, MapExpr>> maps = {
      {"identity", gal::identity(3)},
      {"scaled_identity", gal::scaled_identity(3, Complex(0, 0.5))},
      {"square_first", gal::square_first(3)},
      {"first_times_last", gal::first_times_last(3)},
      {"power_slice", gal::power_slice(3, 4)},
      {"diagonal_power", gal::diagonal_power({1, 2, 3}, {0.0, 0.4, -1.1})},
      {"diagonal_blaschke", gal::diagonal_blaschke(cvec({0.5, Complex(-0.2, 0.6), 0.0}))},
      {"unitary", gal::unitary(sampling::unitary(prng, 3))},
      {"disk_moebius", gal::disk_moebius(Complex(0.4, -0.3), Complex(0, 1))},
      {"zhu_extremal", gal::zhu_extremal(Complex(0.3, 0.2), 0.5)},
      {"kalaj_extremal", gal::kalaj_extremal(lp::normalize(cvec({1.0, Complex(0, 1)}), p2), 0.5, 0.4, p2)},
      {"ball_automorphism", gal::ball_automorphism(cvec({0.3, Complex(0, -0.4), 0.2}))},
      {"ball_automorphism_fixing",
       gal::ball_automorphism_fixing(cvec({0.2, 0.1, Complex(0, 0.3)}), lp::normalize(cvec({1.0, 1.0, 1.0}), p2))},
      {"blaschke_tuple", gal::blaschke_tuple(cvec({0.5, Complex(0, 0.3)}), cvec({1.0, Complex(0, 1)}))},
      {"slice_product", gal::slice_product(1, cvec({0.3, 0.6}), cvec({1.0, -1.0}))},
      {"slice_mixed", gal::slice_mixed(1, 2)},
  };
  double worst = 0.0;
  int points = 0;
  for (std::size_t m = 0; m < maps.size(); ++m) {
    const auto& [name, f] = maps[m];
    CounterRng root(9100 + m);
    for (int i = 0; i < 100; ++i) {
      CounterRng rng = root.substream(static_cast<std::uint64_t>(i));
      const ComplexVector z = sampling::ball_point(rng, f.in_dim(), p2);
      const ComplexMatrix a = holo::complex_jacobian(f, z).matrix;
      const ComplexMatrix b = holo::complex_jacobian_fd(f, z).matrix;
      const double d = (a - b).cwiseAbs().maxCoeff();
      worst = std::max(worst, d);
      ++points;
      out.expect(d <= 1e-8, name + ": Jacobian difference " + fmt(d));
    }
  }
  // Chain rule on compositions of self-maps of C^3.
  std::vector<MapExpr> self;
  for (const auto& [name, f] : maps) {
    if (f.in_dim() == 3 && f.out_dim() == 3) self.push_back(f);
  }
  double chain = 0.0;
  CounterRng croot(9200);
  for (int i = 0; i < 50; ++i) {
    CounterRng rng = croot.substream(static_cast<std::uint64_t>(i));
    const auto& f = self[rng.next() % self.size()];
    const auto& g = self[rng.next() % self.size()];
    const ComplexVector z = sampling::ball_point(rng, 3, p2);
    const ComplexMatrix lhs = holo::complex_jacobian(MapExpr::compose(g, f), z).matrix;
    const ComplexMatrix rhs = holo::complex_jacobian(g, f(z)).matrix * holo::complex_jacobian(f, z).matrix;
    const double d = (lhs - rhs).cwiseAbs().maxCoeff();
    chain = std::max(chain, d);
    out.expect(d <= 1e-8, "chain rule residual " + fmt(d) + " on composition " + std::to_string(i));
  }
  out.note = std::to_string(maps.size()) + " holomorphic maps x 100 points, max difference " + fmt(worst) +
             "; 50 compositions, max chain residual " + fmt(chain) + (out.ok ? "" : "; " + out.note);
  return out;
}

// 10. Two runs of the shipped suite give identical JSONL.
Outcome determinism(const std::string& path) {
  Outcome out;
  std::ifstream in(path);
  if (!in) {
    out.fail("cannot open " + path);
    return out;
  }
  std::ostringstream text;
  text << in.rdbuf();
  const auto cfg = suite::parse_suite_text(text.str());
  const auto first = suite::run_suite(cfg, {1, false});
  const std::string a = report::emit(first, report::Format::Jsonl);
  const std::string b = report::emit(suite::run_suite(cfg, {1, false}), report::Format::Jsonl);
  const std::string c = report::emit(suite::run_suite(cfg, {4, false}), report::Format::Jsonl);
  out.expect(a == b, "two serial runs differ");
  out.expect(a == c, "serial and 4-thread runs differ");
  out.expect(suite::all_passed(first), "shipped suite has failing jobs");
  out.note = std::to_string(cfg.jobs.size()) + " jobs, " + std::to_string(a.size()) + " bytes of JSONL, identical" +
             (out.ok ? "" : "; " + out.note);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string suite_path = argc > 1 ? argv[1] : SCHWARZ_SHIPPED_SUITE;
  struct Criterion {
    const char* name;
    Outcome (*run)(const std::string&);
  };
  const Criterion criteria[] = {
      {"schwarz-pick suite", [](const std::string&) { return schwarz_pick_suite(); }},
      {"extremal sharpness grid", [](const std::string&) { return extremal_grid(); }},
      {"boundary normal certificate", [](const std::string&) { return boundary_normal_certificate(); }},
      {"ball fixed-point consistency", [](const std::string&) { return ball_fixed_point(); }},
      {"polydisk counterexample", [](const std::string&) { return polydisk_counterexample(); }},
      {"pluriharmonic boundary inequality", [](const std::string&) { return pluriharmonic_boundary(); }},
      {"caratheodory attainment", [](const std::string&) { return caratheodory_attainment(); }},
      {"rigidity suite", [](const std::string&) { return rigidity_suite(); }},
      {"differentiation engine", [](const std::string&) { return differentiation_engine(); }},
      {"determinism", determinism},
  };
  int failed = 0;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    Outcome o;
    try {
      o = c.run(suite_path);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    if (!o.ok) ++failed;
    std::printf("%s  %2d %-34s %s\n", o.ok ? "PASS" : "FAIL", index, c.name, o.note.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%d criteria passed\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}
