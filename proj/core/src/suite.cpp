#include "schwarz/suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <set>
#include <thread>

#include "schwarz/caratheodory.hpp"
#include "schwarz/differentiation.hpp"
#include "schwarz/error.hpp"
#include "schwarz/gallery.hpp"
#include "schwarz/json_io.hpp"
#include "schwarz/random.hpp"
#include "schwarz/rigidity.hpp"
#include "schwarz/schwarz_verify.hpp"

namespace schwarz::suite {

using holo::MapExpr;
using verify::Verdict;
using verify::VerifyConfig;

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{
      "schwarz_pick",        "zhu",           "kalaj",          "boundary_normal",      "liu_wang",
      "product_slice",       "pluriharmonic_boundary", "harnack", "caratheodory_metric", "caratheodory_distance",
      "rigidity",            "proof_chain",   "equality_case_1d", "polydisk_counterexample", "jacobian_agreement",
  };
  return names;
}

// ------------------------------------------------------------- parsing ----

namespace {

std::string child(const std::string& path, const std::string& key) { return path + "/" + key; }

bool has(const json& j, const char* key) { return j.is_object() && j.contains(key); }

int int_or(const json& j, const char* key, int fallback, const std::string& path) {
  if (!has(j, key)) return fallback;
  const auto v = json_io::integer_from(j.at(key), child(path, key));
  if (v < 0 || v > 100000000) json_io::schema_error(child(path, key), "out of range");
  return static_cast<int>(v);
}

std::string string_or(const json& j, const char* key, const std::string& fallback, const std::string& path) {
  if (!has(j, key)) return fallback;
  if (!j.at(key).is_string()) json_io::schema_error(child(path, key), "expected a string");
  return j.at(key).get<std::string>();
}

lp::Exponent exponent_or_2(const json& j, const std::string& path) {
  return has(j, "p") ? exponent_from(j.at("p"), child(path, "p")) : lp::Exponent::finite(2.0);
}

ComplexVector vector_at(const json& j, const char* key, const std::string& path) {
  return json_io::vector_from(json_io::member(j, key, path), child(path, key));
}

std::vector<ComplexVector> anchors_from(const json& j, const MapExpr& f, rigidity::Variant variant,
                                        const lp::Exponent& p, const std::string& path) {
  const json& a = json_io::member(j, "anchors", path);
  if (a.is_string()) {
    if (a.get<std::string>() != "basis") json_io::schema_error(child(path, "anchors"), "expected \"basis\" or a list");
    return rigidity::basis_anchors(variant, f.in_dim(), p);
  }
  if (!a.is_array()) json_io::schema_error(child(path, "anchors"), "expected \"basis\" or a list");
  std::vector<ComplexVector> out;
  for (std::size_t k = 0; k < a.size(); ++k) {
    out.push_back(json_io::vector_from(a[k], child(path, "anchors") + "/" + std::to_string(k)));
  }
  return out;
}

void check_dim(const ComplexVector& z, Eigen::Index n, const std::string& path) {
  if (z.size() != n) {
    json_io::schema_error(path, "dimension " + std::to_string(z.size()) + " does not match map dimension " +
                                    std::to_string(n));
  }
}

// Structural validation of a job; semantic failures surface at run time.
void validate_job(const JobSpec& job, const std::string& path) {
  const json& j = job.params;
  try {
    const std::string& c = job.check;
    if (c == "polydisk_counterexample") {
      json_io::integer_from(json_io::member(j, "n", path), child(path, "n"));
      return;
    }
    if (c == "caratheodory_metric") {
      const ComplexVector d = vector_at(j, "direction", path);
      if (has(j, "base")) check_dim(vector_at(j, "base", path), d.size(), child(path, "base"));
      exponent_or_2(j, path);
      if (has(j, "family")) cara::parse_competitor(string_or(j, "family", "", path));
      return;
    }
    if (c == "caratheodory_distance") {
      const ComplexVector z = vector_at(j, "z", path);
      check_dim(vector_at(j, "w", path), z.size(), child(path, "w"));
      exponent_or_2(j, path);
      if (has(j, "family")) cara::parse_competitor(string_or(j, "family", "", path));
      return;
    }
    const MapExpr f = map_from_spec(json_io::member(j, "map", path), child(path, "map"));
    exponent_or_2(j, path);
    if (has(j, "point")) check_dim(vector_at(j, "point", path), f.in_dim(), child(path, "point"));
    if (c == "product_slice") {
      const MapExpr phi = map_from_spec(json_io::member(j, "phi", path), child(path, "phi"));
      const ComplexVector z = vector_at(j, "z_fix", path);
      if (f.in_dim() != z.size() + phi.in_dim() || f.out_dim() != phi.out_dim()) {
        json_io::schema_error(path, "map, phi and z_fix dimensions are inconsistent");
      }
    }
    if (c == "rigidity" || c == "proof_chain") {
      const auto variant = rigidity::parse_variant(string_or(j, "variant", "P2", path));
      for (const auto& a : anchors_from(j, f, variant, exponent_or_2(j, path), path)) {
        check_dim(a, f.in_dim(), child(path, "anchors"));
      }
    }
    const bool needs_point = c == "boundary_normal" || c == "liu_wang" || c == "pluriharmonic_boundary";
    if (needs_point) json_io::member(j, "point", path);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::SchemaError) throw;
    json_io::schema_error(path, e.what());
  }
}

}  // namespace

lp::Exponent exponent_from(const json& j, const std::string& path) {
  try {
    if (j.is_string()) return lp::parse_exponent(j.get<std::string>());
    if (j.is_number()) return lp::Exponent::finite(j.get<double>());
  } catch (const Error& e) {
    json_io::schema_error(path, e.what());
  }
  json_io::schema_error(path, "expected a number or \"inf\"");
}

MapExpr map_from_spec(const json& spec, const std::string& path) {
  if (!spec.is_object()) json_io::schema_error(path, "expected an object with \"gallery\" or \"ast\"");
  if (spec.contains("gallery")) {
    if (!spec.at("gallery").is_string()) json_io::schema_error(child(path, "gallery"), "expected a string");
    const json params = spec.contains("params") ? spec.at("params") : json::object();
    if (!params.is_object()) json_io::schema_error(child(path, "params"), "expected an object");
    return holo::gallery::build(spec.at("gallery").get<std::string>(), params, path);
  }
  if (spec.contains("ast")) return MapExpr::from_json(spec.at("ast"), child(path, "ast"));
  json_io::schema_error(path, "expected \"gallery\" or \"ast\"");
}

SuiteConfig parse_suite(const json& doc) {
  if (!doc.is_object()) json_io::schema_error("", "suite must be a JSON object");
  static const std::set<std::string> top{"suite_name", "seed", "tolerance_overrides", "jobs"};
  for (const auto& [key, value] : doc.items()) {
    if (!top.count(key)) json_io::schema_error("/" + key, "unknown field");
  }
  SuiteConfig cfg;
  const json& name = json_io::member(doc, "suite_name", "");
  if (!name.is_string()) json_io::schema_error("/suite_name", "expected a string");
  cfg.suite_name = name.get<std::string>();
  const json& seed = json_io::member(doc, "seed", "");
  if (!seed.is_number_unsigned() && !(seed.is_number_integer() && seed.get<long long>() >= 0)) {
    json_io::schema_error("/seed", "expected an unsigned integer");
  }
  cfg.seed = seed.get<std::uint64_t>();
  if (doc.contains("tolerance_overrides")) {
    const json& t = doc.at("tolerance_overrides");
    if (!t.is_object()) json_io::schema_error("/tolerance_overrides", "expected an object");
    verify::Tolerances probe;
    for (const auto& [key, value] : t.items()) {
      const std::string p = "/tolerance_overrides/" + key;
      const double x = json_io::number_from(value, p);
      try {
        verify::set_tolerance(probe, key, x);
      } catch (const Error& e) {
        json_io::schema_error(p, e.what());
      }
      cfg.tolerance_overrides[key] = x;
    }
  }
  const json& jobs = json_io::member(doc, "jobs", "");
  if (!jobs.is_array()) json_io::schema_error("/jobs", "expected an array");
  std::set<std::string> ids;
  const auto& names = check_names();
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const std::string path = "/jobs/" + std::to_string(i);
    const json& j = jobs[i];
    if (!j.is_object()) json_io::schema_error(path, "expected an object");
    JobSpec job;
    const json& id = json_io::member(j, "id", path);
    if (!id.is_string() || id.get<std::string>().empty()) json_io::schema_error(path + "/id", "expected a non-empty string");
    job.id = id.get<std::string>();
    if (!ids.insert(job.id).second) json_io::schema_error(path + "/id", "duplicate job id '" + job.id + "'");
    const json& check = json_io::member(j, "check", path);
    if (!check.is_string() || std::find(names.begin(), names.end(), check.get<std::string>()) == names.end()) {
      json_io::schema_error(path + "/check", "unknown check");
    }
    job.check = check.get<std::string>();
    job.expect = string_or(j, "expect", "pass", path);
    for (const auto& [key, value] : j.items()) {
      if (key != "id" && key != "check" && key != "expect") job.params[key] = value;
    }
    validate_job(job, path);
    cfg.jobs.push_back(std::move(job));
  }
  return cfg;
}

SuiteConfig parse_suite_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    json_io::schema_error("", std::string("invalid JSON: ") + e.what());
  }
  return parse_suite(doc);
}

json serialize(const SuiteConfig& cfg) {
  json jobs = json::array();
  for (const auto& job : cfg.jobs) {
    json j = job.params;
    j["id"] = job.id;
    j["check"] = job.check;
    j["expect"] = job.expect;
    jobs.push_back(std::move(j));
  }
  json tol = json::object();
  for (const auto& [k, v] : cfg.tolerance_overrides) tol[k] = v;
  return {{"suite_name", cfg.suite_name}, {"seed", cfg.seed}, {"tolerance_overrides", tol}, {"jobs", jobs}};
}

json normalize(const json& doc) {
  json out = doc;
  if (!out.contains("tolerance_overrides")) out["tolerance_overrides"] = json::object();
  if (out.contains("jobs") && out["jobs"].is_array()) {
    for (auto& j : out["jobs"]) {
      if (j.is_object() && !j.contains("expect")) j["expect"] = "pass";
    }
  }
  return out;
}

// ------------------------------------------------------------- running ----

namespace {

Verdict jacobian_agreement(const MapExpr& f, const json& j, const VerifyConfig& cfg, const std::string& path) {
  Verdict v;
  v.theorem_id = "jacobian_agreement";
  v.tolerance = 0.0;
  std::vector<ComplexVector> points;
  if (has(j, "point")) {
    points.push_back(vector_at(j, "point", path));
  } else {
    const lp::Exponent p = exponent_or_2(j, path);
    CounterRng base(cfg.seed, "jacobian-points");
    for (int i = 0; i < int_or(j, "samples", 100, path); ++i) {
      CounterRng rng = base.substream(static_cast<std::uint64_t>(i));
      points.push_back(sampling::ball_point(rng, f.in_dim(), p));
    }
  }
  double worst = 0.0;
  for (const auto& z : points) {
    const auto a = holo::complex_jacobian(f, z);
    const auto b = holo::complex_jacobian_fd(f, z);
    worst = std::max(worst, (a.matrix - b.matrix).cwiseAbs().maxCoeff());
  }
  v.set("max_difference", worst);
  v.set("points", static_cast<double>(points.size()));
  v.margin = cfg.tol.jacobian - worst;
  v.finalize();
  return v;
}

Verdict harnack_job(const MapExpr& f, const VerifyConfig& cfg) {
  if (f.in_dim() != 1 || f.out_dim() != 1) throw Error(ErrorKind::DimensionMismatch, "harnack needs a scalar map");
  const auto grid = verify::sample_harnack_grid([&](Complex z) {
    ComplexVector x(1);
    x[0] = z;
    return f(x)[0].real();
  });
  return verify::harnack_certificate(grid, cfg);
}

Verdict distance_job(const json& j, const VerifyConfig& cfg, const std::string& path) {
  const ComplexVector z = vector_at(j, "z", path);
  const ComplexVector w = vector_at(j, "w", path);
  const lp::Exponent p = exponent_or_2(j, path);
  const auto kind = cara::parse_competitor(string_or(j, "family", "LinearThenMoebius", path));
  const cara::Budget budget{int_or(j, "starts", 32, path), int_or(j, "iterations", 400, path), cfg.seed};
  Verdict v;
  v.theorem_id = "caratheodory_distance";
  v.tolerance = 0.0;
  const auto r = cara::distance_lower_bound_opt(z, w, p, kind, budget);
  v.set("optimized", r.value);
  v.set("converged", r.converged ? 1.0 : 0.0);
  if (z.cwiseAbs().maxCoeff() == 0.0) {
    const double closed = cara::distance_origin_closed(w, p);
    v.set("closed_form", closed);
    v.check("soundness", r.value - closed, 1e-9);
    v.margin = cfg.tol.attainment - std::abs(closed - r.value);
  } else {
    const auto back = cara::distance_lower_bound_opt(w, z, p, kind, budget);
    v.set("optimized_reverse", back.value);
    v.margin = 2.0 * cfg.tol.attainment - std::abs(r.value - back.value);
    v.detail = "symmetry check of the lower bound";
  }
  v.finalize();
  return v;
}

Verdict dispatch(const JobSpec& job, const VerifyConfig& cfg, std::string& outcome) {
  const json& j = job.params;
  const std::string path = "/" + job.id;
  const std::string& c = job.check;
  if (c == "polydisk_counterexample") {
    return rigidity::counterexample_polydisk_eigen(json_io::integer_from(j.at("n"), child(path, "n")));
  }
  if (c == "caratheodory_metric") {
    cara::MetricQuery q;
    q.direction = vector_at(j, "direction", path);
    q.base = has(j, "base") ? vector_at(j, "base", path) : ComplexVector::Zero(q.direction.size());
    q.exponent = exponent_or_2(j, path);
    const bool origin = q.base.cwiseAbs().maxCoeff() == 0.0;
    const auto kind = cara::parse_competitor(string_or(j, "family", origin ? "LinearDual" : "LinearThenMoebius", path));
    const cara::Budget budget{int_or(j, "starts", 32, path), int_or(j, "iterations", 400, path), cfg.seed};
    return cara::verify_metric(q, kind, budget, cfg);
  }
  if (c == "caratheodory_distance") return distance_job(j, cfg, path);

  const MapExpr f = map_from_spec(j.at("map"), child(path, "map"));
  const lp::Exponent p = exponent_or_2(j, path);
  VerifyConfig local = cfg;
  local.samples = int_or(j, "samples", cfg.samples, path);
  auto point = [&] { return lp::BoundaryPoint(vector_at(j, "point", path), p, cfg.tol.hypothesis); };

  if (c == "schwarz_pick") return verify::verify_schwarz_pick(f, p, local);
  if (c == "zhu") return verify::verify_zhu(f, local);
  if (c == "kalaj") return verify::verify_kalaj(f, p, local);
  if (c == "boundary_normal") return verify::verify_boundary_normal(f, point(), local).first;
  if (c == "liu_wang") return verify::verify_liu_wang(f, point(), local);
  if (c == "pluriharmonic_boundary") return verify::verify_pluriharmonic_boundary(f, point(), local);
  if (c == "harnack") return harnack_job(f, local);
  if (c == "equality_case_1d") return rigidity::equality_case_1d(f, local);
  if (c == "jacobian_agreement") return jacobian_agreement(f, j, local, path);
  if (c == "product_slice") {
    if (!has(j, "samples")) local.samples = 2000;
    const MapExpr phi = map_from_spec(j.at("phi"), child(path, "phi"));
    return verify::verify_product_slice(f, phi, vector_at(j, "z_fix", path), p, local);
  }
  if (c == "rigidity" || c == "proof_chain") {
    rigidity::Instance inst{f, {}, p, rigidity::parse_variant(string_or(j, "variant", "P2", path))};
    inst.anchors = anchors_from(j, f, inst.variant, p, path);
    if (c == "proof_chain") return rigidity::check_proof_chain(inst, local);
    const auto report = rigidity::check_rigidity(inst, local);
    outcome = std::string(rigidity::to_string(report.outcome));
    return rigidity::to_verdict(report, local);
  }
  throw Error(ErrorKind::SchemaError, path + "/check: unknown check '" + c + "'");
}

}  // namespace

JobResult run_job(const JobSpec& job, const verify::Tolerances& tol, std::uint64_t suite_seed, const RunOptions& opt) {
  JobResult r;
  r.id = job.id;
  r.check = job.check;
  r.expect = job.expect;
  VerifyConfig cfg;
  cfg.tol = tol;
  cfg.seed = CounterRng(suite_seed).substream(job.id).key();
  const auto t0 = std::chrono::steady_clock::now();
  try {
    std::string outcome;
    r.verdict = dispatch(job, cfg, outcome);
    if (outcome.empty()) {
      outcome = r.verdict.passed ? "pass" : (r.verdict.hypotheses_hold() ? "fail" : "HypothesisFailed");
    }
    r.outcome = outcome;
  } catch (const Error& e) {
    r.outcome = std::string(to_string(e.kind()));
    r.error = e.what();
    r.verdict.theorem_id = job.check;
    r.verdict.detail = e.what();
  } catch (const std::exception& e) {
    r.outcome = "Exception";
    r.error = e.what();
    r.verdict.theorem_id = job.check;
    r.verdict.detail = e.what();
  }
  if (opt.timing) {
    r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  }
  const bool clean = r.error.empty();
  if (r.expect == "pass") {
    r.passed = clean && r.verdict.passed;
  } else if (r.expect == "fail") {
    r.passed = clean && !r.verdict.passed;
  } else {
    r.passed = r.outcome == r.expect;
  }
  return r;
}

std::vector<JobResult> run_suite(const SuiteConfig& cfg, const RunOptions& opt) {
  verify::Tolerances tol;
  for (const auto& [k, v] : cfg.tolerance_overrides) verify::set_tolerance(tol, k, v);
  std::vector<JobResult> results(cfg.jobs.size());
  const int threads = std::clamp(opt.threads, 1, std::max(1, static_cast<int>(cfg.jobs.size())));
  if (threads == 1) {
    for (std::size_t i = 0; i < cfg.jobs.size(); ++i) results[i] = run_job(cfg.jobs[i], tol, cfg.seed, opt);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < cfg.jobs.size(); i = next++) results[i] = run_job(cfg.jobs[i], tol, cfg.seed, opt);
    });
  }
  for (auto& th : pool) th.join();
  return results;
}

bool all_passed(const std::vector<JobResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const JobResult& r) { return r.passed; });
}

}  // namespace schwarz::suite
