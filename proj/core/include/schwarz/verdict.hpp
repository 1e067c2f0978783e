#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "schwarz/types.hpp"

namespace schwarz::verify {

/// Tolerances shared by all verifiers. Names double as the keys accepted by
/// --tolerance and by suite "tolerance_overrides".
struct Tolerances {
  double hypothesis = 1e-8;     // boundary membership, fixed points
  double margin = 1e-7;         // allowed negative conclusion slack
  double origin = 1e-10;        // f(0) = 0
  double holomorphy = 1e-7;
  double pluriharmonic = 1e-6;
  double slice = 1e-10;
  double tangent = 1e-7;
  double slope = 0.02;          // relative error of the proof-identity slope
  double equation = 1e-7;       // rigidity equations
  double identity = 1e-7;       // f = id certification
  double chain = 1e-10;         // proof-chain inequalities
  double attainment = 1e-3;     // optimizer vs closed form
  double jacobian = 1e-8;       // Cauchy-integral vs finite differences
};

/// Sets one named tolerance; throws Error(BadParams) for unknown names or
/// non-positive values.
void set_tolerance(Tolerances& tol, const std::string& name, double value);
std::vector<std::string> tolerance_names();

struct VerifyConfig {
  Tolerances tol;
  int samples = 10000;
  std::uint64_t seed = 0;
};

struct Hypothesis {
  std::string name;
  bool holds = false;
  double residual = 0.0;
};

/// A numerical residual that must stay at or below `bound` for a pass.
struct ResidualCheck {
  std::string name;
  double value = 0.0;
  double bound = 0.0;
  bool ok() const noexcept { return value <= bound; }
};

using Quantity = std::variant<double, Complex>;

struct Verdict {
  std::string theorem_id;
  std::vector<Hypothesis> hypotheses;
  std::map<std::string, Quantity> quantities;
  std::vector<ResidualCheck> residuals;
  /// Conclusion slack; NaN when the verifier declines to assert it.
  double margin = std::numeric_limits<double>::quiet_NaN();
  double tolerance = 1e-7;
  bool passed = false;
  std::string detail;

  /// Records a hypothesis holding iff residual <= bound.
  bool require(const std::string& name, double residual, double bound);
  void require_flag(const std::string& name, bool holds, double residual = 0.0);
  void set(const std::string& name, Quantity q) { quantities[name] = q; }
  void check(const std::string& name, double value, double bound) { residuals.push_back({name, value, bound}); }

  bool hypotheses_hold() const noexcept;
  bool residuals_ok() const noexcept;
  /// Real part of a stored quantity; NaN when absent.
  double real(const std::string& name) const;
  std::optional<Quantity> get(const std::string& name) const;
  /// passed = hypotheses hold, residual checks hold, margin >= -tolerance.
  void finalize();
};

nlohmann::json to_json(const Quantity& q);
nlohmann::json to_json(const Verdict& v);

}  // namespace schwarz::verify
