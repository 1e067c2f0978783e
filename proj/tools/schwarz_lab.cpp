// schwarz-lab: command line front end for the verifiers.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "schwarz/error.hpp"
#include "schwarz/gallery.hpp"
#include "schwarz/json_io.hpp"
#include "schwarz/report.hpp"
#include "schwarz/rigidity.hpp"
#include "schwarz/suite.hpp"

namespace {

using nlohmann::json;
using namespace schwarz;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::BadParams, "cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Inline JSON, or @file.
json json_arg(const std::string& text, const std::string& what) {
  const std::string body = !text.empty() && text[0] == '@' ? read_file(text.substr(1)) : text;
  try {
    return json::parse(body);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::SchemaError, what + ": " + e.what());
  }
}

// A gallery name (with --params), a {"gallery"/"ast"} spec, or a bare AST.
json map_arg(const std::string& text, const std::string& params) {
  const bool looks_json = !text.empty() && (text[0] == '{' || text[0] == '@');
  if (!looks_json) return {{"gallery", text}, {"params", params.empty() ? json::object() : json_arg(params, "--params")}};
  json j = json_arg(text, "--map");
  if (j.is_object() && (j.contains("gallery") || j.contains("ast"))) return j;
  return {{"ast", j}};
}

json exponent_arg(const std::string& p) {
  if (p == "inf" || p == "infinity") return p;
  try {
    return std::stod(p);
  } catch (const std::exception&) {
    throw Error(ErrorKind::BadParams, "bad exponent '" + p + "'");
  }
}

struct Common {
  std::string format = "text";
  int jobs = 1;
  std::vector<std::string> tolerances;
  std::uint64_t seed = 0;
  bool timing = false;
};

void add_common(CLI::App* app, Common& c, bool parallel) {
  app->add_option("--format", c.format, "Output format: jsonl, csv or text")
      ->check(CLI::IsMember({"jsonl", "csv", "text"}));
  app->add_option("--tolerance", c.tolerances, "Tolerance override name=value (repeatable)");
  app->add_flag("--timing", c.timing, "Record wall-clock runtime_ms (output is no longer reproducible)");
  if (parallel) app->add_option("--jobs", c.jobs, "Jobs run in parallel")->check(CLI::PositiveNumber);
}

json tolerance_overrides(const std::vector<std::string>& items) {
  json out = json::object();
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::BadParams, "--tolerance expects name=value, got '" + item + "'");
    try {
      out[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw Error(ErrorKind::BadParams, "bad tolerance value in '" + item + "'");
    }
  }
  return out;
}

int run_config(json doc, const Common& c) {
  for (const auto& [k, v] : tolerance_overrides(c.tolerances).items()) doc["tolerance_overrides"][k] = v;
  const auto cfg = suite::parse_suite(doc);
  const auto results = suite::run_suite(cfg, {c.jobs, c.timing});
  report::emit(std::cout, results, report::parse_format(c.format));
  return suite::all_passed(results) ? 0 : 1;
}

json single_job_suite(json job, std::uint64_t seed) {
  return {{"suite_name", "cli"}, {"seed", seed}, {"jobs", json::array({std::move(job)})}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical verification of boundary Schwarz lemmas and rigidity on l^p balls"};
  app.require_subcommand(1);

  Common run_opts;
  std::string suite_path;
  auto* run = app.add_subcommand("run", "Run a suite file; exit status 0 iff every job passed");
  run->add_option("suite", suite_path, "Suite JSON file")->required();
  run->add_option("--seed", run_opts.seed, "Ignored; suites carry their own seed");
  add_common(run, run_opts, true);

  auto* gallery = app.add_subcommand("gallery", "Gallery of named maps");
  auto* gallery_list = gallery->add_subcommand("list", "List gallery maps and their parameters");
  gallery->require_subcommand(1);
  std::string gallery_format = "text";
  gallery_list->add_option("--format", gallery_format, "text or jsonl")->check(CLI::IsMember({"jsonl", "text"}));

  Common check_opts;
  std::string check_name, check_map, check_params, check_point, check_p = "2", check_extra;
  int check_samples = -1;
  auto* check = app.add_subcommand("check", "Run one verifier on one map");
  check->add_option("name", check_name, "Check name")->required()->check(CLI::IsMember(suite::check_names()));
  check->add_option("--map", check_map, "Gallery name, {\"gallery\"|\"ast\"} JSON, AST JSON or @file");
  check->add_option("--params", check_params, "Gallery parameters (JSON or @file)");
  check->add_option("--point", check_point, "Point as JSON [[re, im], ...]");
  check->add_option("-p", check_p, "Exponent (number or inf)");
  check->add_option("--samples", check_samples, "Sample count");
  check->add_option("--job", check_extra, "Extra job fields as a JSON object (phi, z_fix, anchors, ...)");
  check->add_option("--seed", check_opts.seed, "Seed");
  add_common(check, check_opts, false);

  Common cara_opts;
  std::string cara_base, cara_dir, cara_p = "2", cara_family;
  int cara_starts = 32, cara_iters = 400;
  auto* cara = app.add_subcommand("caratheodory", "Caratheodory metric: closed form vs optimized lower bound");
  cara->add_option("--base", cara_base, "Base point JSON (default 0)");
  cara->add_option("--dir", cara_dir, "Direction JSON")->required();
  cara->add_option("-p", cara_p, "Exponent (number or inf)");
  cara->add_option("--family", cara_family, "LinearDual or LinearThenMoebius");
  cara->add_option("--starts", cara_starts, "Random starts")->check(CLI::PositiveNumber);
  cara->add_option("--iterations", cara_iters, "Sweeps per start")->check(CLI::PositiveNumber);
  cara->add_option("--seed", cara_opts.seed, "Seed");
  add_common(cara, cara_opts, false);

  Common rig_opts;
  std::string rig_map, rig_params, rig_anchors = "basis", rig_variant = "P2", rig_p = "2";
  auto* rig = app.add_subcommand("rigidity", "Rigidity certificate for a map and boundary fixed points");
  rig->add_option("--map", rig_map, "Gallery name, {\"gallery\"|\"ast\"} JSON, AST JSON or @file")->required();
  rig->add_option("--params", rig_params, "Gallery parameters (JSON or @file)");
  rig->add_option("--anchors", rig_anchors, "\"basis\", a JSON list of points, or @file");
  rig->add_option("--variant", rig_variant, "P2, Polydisk, SchwarzV or RigidityV");
  rig->add_option("-p", rig_p, "Exponent (number or inf)");
  rig->add_option("--seed", rig_opts.seed, "Seed");
  add_common(rig, rig_opts, false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return run_config(json_arg("@" + suite_path, suite_path), run_opts);

    if (gallery_list->parsed()) {
      for (const auto& e : holo::gallery::list()) {
        if (gallery_format == "jsonl") {
          std::cout << json{{"name", e.name}, {"params", e.params}, {"description", e.description}}.dump() << '\n';
        } else {
          std::cout << e.name << "\n    params: " << e.params << "\n    " << e.description << '\n';
        }
      }
      return 0;
    }

    if (check->parsed()) {
      json job = check_extra.empty() ? json::object() : json_arg(check_extra, "--job");
      job["id"] = check_name;
      job["check"] = check_name;
      if (!check_map.empty()) job["map"] = map_arg(check_map, check_params);
      if (!check_point.empty()) job["point"] = json_arg(check_point, "--point");
      if (!job.contains("p")) job["p"] = exponent_arg(check_p);
      if (check_samples >= 0) job["samples"] = check_samples;
      return run_config(single_job_suite(job, check_opts.seed), check_opts);
    }

    if (cara->parsed()) {
      json job{{"id", "caratheodory"}, {"check", "caratheodory_metric"}, {"direction", json_arg(cara_dir, "--dir")},
               {"p", exponent_arg(cara_p)}, {"starts", cara_starts}, {"iterations", cara_iters}};
      if (!cara_base.empty()) job["base"] = json_arg(cara_base, "--base");
      if (!cara_family.empty()) job["family"] = cara_family;
      return run_config(single_job_suite(job, cara_opts.seed), cara_opts);
    }

    if (rig->parsed()) {
      const json anchors = rig_anchors == "basis" ? json("basis") : json_arg(rig_anchors, "--anchors");
      json job{{"id", "rigidity"},
               {"check", "rigidity"},
               {"map", map_arg(rig_map, rig_params)},
               {"anchors", anchors},
               {"variant", rig_variant},
               {"p", exponent_arg(rig_p)},
               {"expect", "RigidityCertified"}};
      const auto cfg = suite::parse_suite(single_job_suite(job, rig_opts.seed));
      verify::VerifyConfig vc;
      for (const auto& [k, v] : tolerance_overrides(rig_opts.tolerances).items()) {
        verify::set_tolerance(vc.tol, k, v.get<double>());
      }
      const auto& params = cfg.jobs.front().params;
      const auto f = suite::map_from_spec(params.at("map"), "/jobs/0/map");
      rigidity::Instance inst{f, {}, suite::exponent_from(params.at("p"), "/jobs/0/p"),
                              rigidity::parse_variant(rig_variant)};
      if (anchors.is_string()) {
        inst.anchors = rigidity::basis_anchors(inst.variant, f.in_dim(), inst.exponent);
      } else {
        for (std::size_t k = 0; k < anchors.size(); ++k) {
          inst.anchors.push_back(json_io::vector_from(anchors[k], "/anchors/" + std::to_string(k)));
        }
      }
      const auto rep = rigidity::check_rigidity(inst, vc);
      if (rig_opts.format == "text") {
        std::cout << rigidity::to_string(rep.outcome) << ": " << rep.reason << '\n'
                  << "rank " << rep.rank << ", identity residual " << rep.identity_residual << '\n';
        for (std::size_t k = 0; k < rep.equation_values.size(); ++k) {
          std::cout << "  anchor " << k + 1 << ": equation " << rep.equation_values[k].real() << " + "
                    << rep.equation_values[k].imag() << "i (target " << rep.target << ")\n";
        }
      } else {
        std::cout << rigidity::to_json(rep).dump() << '\n';
      }
      return rep.outcome == rigidity::Outcome::RigidityCertified ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "schwarz-lab: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
