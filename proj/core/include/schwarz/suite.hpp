#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "schwarz/lp_geometry.hpp"
#include "schwarz/map_expr.hpp"
#include "schwarz/verdict.hpp"

/// Declarative batch runs. A suite is one JSON document:
///
///   { "suite_name": "...", "seed": 7, "tolerance_overrides": {"margin": 1e-7},
///     "jobs": [ { "id": "...", "check": "schwarz_pick",
///                 "map": {"gallery": "identity", "params": {"n": 2}},
///                 "p": 3, "samples": 1000, "expect": "pass" }, ... ] }
///
/// Maps are {"gallery": name, "params": {...}} or {"ast": <map JSON>}.
/// Exponents are numbers or "inf". A job passes when its outcome matches
/// "expect": "pass", "fail", a rigidity outcome name or an error kind name.
namespace schwarz::suite {

using nlohmann::json;

struct JobSpec {
  std::string id;
  std::string check;
  std::string expect = "pass";
  /// Remaining job fields (map, point, p, samples, ...).
  json params = json::object();
};

struct SuiteConfig {
  std::string suite_name;
  std::uint64_t seed = 0;
  std::map<std::string, double> tolerance_overrides;
  std::vector<JobSpec> jobs;
};

/// Names accepted in "check".
const std::vector<std::string>& check_names();

/// Validates and parses; throws Error(SchemaError) with a JSON pointer.
SuiteConfig parse_suite(const json& doc);
SuiteConfig parse_suite_text(const std::string& text);
json serialize(const SuiteConfig& cfg);
/// Canonical form of a valid suite document (defaults filled in).
json normalize(const json& doc);

holo::MapExpr map_from_spec(const json& spec, const std::string& path);
lp::Exponent exponent_from(const json& j, const std::string& path);

struct JobResult {
  std::string id;
  std::string check;
  std::string expect;
  /// "pass", "fail", a rigidity outcome or an error kind name.
  std::string outcome;
  bool passed = false;
  verify::Verdict verdict;
  std::string error;
  double runtime_ms = 0.0;
};

struct RunOptions {
  int threads = 1;
  /// Record wall-clock runtimes; off by default so output is reproducible.
  bool timing = false;
};

/// Runs one job; errors are captured in the result.
JobResult run_job(const JobSpec& job, const verify::Tolerances& tol, std::uint64_t suite_seed,
                  const RunOptions& opt = {});

/// Runs every job (in parallel when opt.threads > 1); results are in job order.
std::vector<JobResult> run_suite(const SuiteConfig& cfg, const RunOptions& opt = {});

bool all_passed(const std::vector<JobResult>& results);

}  // namespace schwarz::suite
