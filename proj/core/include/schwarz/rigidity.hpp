#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "schwarz/lp_geometry.hpp"
#include "schwarz/map_expr.hpp"
#include "schwarz/verdict.hpp"

/// Boundary rigidity: a self-map with f(0) = 0 fixing n independent boundary
/// points alpha_k is the identity iff conj(v_k)^T J_f(alpha_k) alpha_k hits
/// the variant's target at every anchor.
namespace schwarz::rigidity {

enum class Variant {
  P2,        // Euclidean ball, v = alpha, target 1
  Polydisk,  // distinguished boundary, v = alpha, target n
  SchwarzV,  // 2 <= p <= inf, v = (|a_j|^{p-2} a_j) or alpha / n, target 1
  RigidityV  // 1 < p < inf, real anchors, v = (|a_j|^{p-1}), target 1
};

std::string_view to_string(Variant v) noexcept;
Variant parse_variant(std::string_view name);

enum class Outcome { RigidityCertified, EquationsFail, HypothesesFail, IdentityNotConfirmed };

std::string_view to_string(Outcome o) noexcept;

struct Instance {
  holo::MapExpr map;
  std::vector<ComplexVector> anchors;
  lp::Exponent exponent = lp::Exponent::finite(2.0);
  Variant variant = Variant::P2;
};

struct Report {
  /// Every hypothesis evaluated, in order.
  std::vector<verify::Hypothesis> hypotheses;
  std::vector<double> fixed_point_residuals;
  std::vector<double> holomorphy_residuals;
  std::vector<Complex> equation_values;
  double target = 1.0;
  int rank = 0;
  bool nonneg_ok = true;
  double max_imag = 0.0;   // largest |Im alpha_kj| (RigidityV)
  double min_real = 0.0;   // smallest Re alpha_kj (RigidityV)
  std::vector<double> jf0_residuals;
  std::vector<double> jf0_norms;  // ||J_f(0) alpha_k||_p
  double identity_residual = 0.0;
  Outcome outcome = Outcome::HypothesesFail;
  std::string reason;
};

/// Anchors suited to a variant: the standard basis, or for the polydisk
/// (and SchwarzV at p = inf) the unimodular columns of the n-point DFT.
std::vector<ComplexVector> basis_anchors(Variant variant, Eigen::Index n, const lp::Exponent& p);

/// Number of singular values above 1e-10 sigma_max, over R (realified
/// columns) or over C.
int anchor_rank(const std::vector<ComplexVector>& anchors, bool over_reals);

/// Max of ||f(z) - z||_p over `points` Halton points of the ball and the
/// radial segments of the anchors.
double identity_residual(const holo::MapExpr& f, const lp::Exponent& p, const std::vector<ComplexVector>& anchors,
                         int points = 10000);

Report check_rigidity(const Instance& inst, const verify::VerifyConfig& cfg = {});

verify::Verdict to_verdict(const Report& r, const verify::VerifyConfig& cfg = {});
nlohmann::json to_json(const Report& r);

/// Links of the rigidity argument for each anchor, with phi_k(xi) =
/// conj(w_k)^T f(xi alpha_k) and w_k normalized so that phi_k(1) = 1:
/// (a) phi_k maps into the disk, (b) phi_k(0) = 0, phi_k(1) = 1,
/// phi_k'(1) = 1, (c) phi_k = id on a radial grid,
/// (d) J_f(0) alpha_k = alpha_k, (e) J_f(0) = I (needs full anchor rank).
/// The detail names the first failing link.
verify::Verdict check_proof_chain(const Instance& inst, const verify::VerifyConfig& cfg = {});

/// Disk equality case: for f(0) = 0, f(1) = 1, f'(1) >= 1 with equality only
/// for the identity; when |f'(1) - 1| <= 1e-8 the identity is checked on a
/// grid.
verify::Verdict equality_case_1d(const holo::MapExpr& f, const verify::VerifyConfig& cfg = {});

/// g(z) = (z_1^2, z_2, ..., z_n) at z0 = w0 = (1, ..., 1) on the polydisk:
/// J_g(z0) w0 = (2, 1, ..., 1) is not a multiple of z0. Margin is the
/// least-squares residual min_lambda ||J w0 - lambda z0||_2 minus 0.5.
verify::Verdict counterexample_polydisk_eigen(Eigen::Index n);

}  // namespace schwarz::rigidity
