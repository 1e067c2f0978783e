#include "schwarz/verdict.hpp"

#include <algorithm>
#include <cmath>

#include "schwarz/error.hpp"
#include "schwarz/json_io.hpp"

namespace schwarz::verify {

namespace {

const std::map<std::string, double Tolerances::*>& tolerance_fields() {
  static const std::map<std::string, double Tolerances::*> fields{
      {"hypothesis", &Tolerances::hypothesis}, {"margin", &Tolerances::margin},
      {"origin", &Tolerances::origin},         {"holomorphy", &Tolerances::holomorphy},
      {"pluriharmonic", &Tolerances::pluriharmonic}, {"slice", &Tolerances::slice},
      {"tangent", &Tolerances::tangent},       {"slope", &Tolerances::slope},
      {"equation", &Tolerances::equation},     {"identity", &Tolerances::identity},
      {"chain", &Tolerances::chain},           {"attainment", &Tolerances::attainment},
      {"jacobian", &Tolerances::jacobian},
  };
  return fields;
}

// JSON has no NaN or infinity.
nlohmann::json number(double x) { return std::isfinite(x) ? nlohmann::json(x) : nlohmann::json(nullptr); }

}  // namespace

void set_tolerance(Tolerances& tol, const std::string& name, double value) {
  const auto& fields = tolerance_fields();
  auto it = fields.find(name);
  if (it == fields.end()) throw Error(ErrorKind::BadParams, "unknown tolerance '" + name + "'");
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw Error(ErrorKind::BadParams, "tolerance '" + name + "' must be positive and finite");
  }
  tol.*(it->second) = value;
}

std::vector<std::string> tolerance_names() {
  std::vector<std::string> out;
  for (const auto& [name, field] : tolerance_fields()) out.push_back(name);
  return out;
}

bool Verdict::require(const std::string& name, double residual, double bound) {
  const bool holds = residual <= bound;
  hypotheses.push_back({name, holds, residual});
  return holds;
}

void Verdict::require_flag(const std::string& name, bool holds, double residual) {
  hypotheses.push_back({name, holds, residual});
}

bool Verdict::hypotheses_hold() const noexcept {
  return std::all_of(hypotheses.begin(), hypotheses.end(), [](const Hypothesis& h) { return h.holds; });
}

bool Verdict::residuals_ok() const noexcept {
  return std::all_of(residuals.begin(), residuals.end(), [](const ResidualCheck& r) { return r.ok(); });
}

std::optional<Quantity> Verdict::get(const std::string& name) const {
  auto it = quantities.find(name);
  if (it == quantities.end()) return std::nullopt;
  return it->second;
}

double Verdict::real(const std::string& name) const {
  const auto q = get(name);
  if (!q) return std::numeric_limits<double>::quiet_NaN();
  if (const double* d = std::get_if<double>(&*q)) return *d;
  return std::get<Complex>(*q).real();
}

void Verdict::finalize() { passed = hypotheses_hold() && residuals_ok() && margin >= -tolerance; }

nlohmann::json to_json(const Quantity& q) {
  if (const double* d = std::get_if<double>(&q)) return number(*d);
  const Complex c = std::get<Complex>(q);
  return nlohmann::json::array({number(c.real()), number(c.imag())});
}

nlohmann::json to_json(const Verdict& v) {
  nlohmann::json hyps = nlohmann::json::array();
  for (const auto& h : v.hypotheses) hyps.push_back({{"name", h.name}, {"holds", h.holds}, {"residual", number(h.residual)}});
  nlohmann::json res = nlohmann::json::array();
  for (const auto& r : v.residuals) {
    res.push_back({{"name", r.name}, {"value", number(r.value)}, {"bound", number(r.bound)}, {"ok", r.ok()}});
  }
  nlohmann::json qs = nlohmann::json::object();
  for (const auto& [name, q] : v.quantities) qs[name] = to_json(q);
  nlohmann::json out{{"theorem_id", v.theorem_id}, {"hypotheses", hyps}, {"quantities", qs},
                     {"residuals", res},           {"margin", number(v.margin)}, {"tolerance", v.tolerance},
                     {"passed", v.passed}};
  if (!v.detail.empty()) out["detail"] = v.detail;
  return out;
}

}  // namespace schwarz::verify
