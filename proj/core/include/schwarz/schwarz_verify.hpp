#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "schwarz/lp_geometry.hpp"
#include "schwarz/map_expr.hpp"
#include "schwarz/verdict.hpp"

/// Verifiers for the boundary Schwarz-type statements. Each returns a Verdict
/// with the hypotheses it checked, the quantities it computed and the
/// conclusion margin. Failed hypotheses are recorded in the Verdict rather
/// than thrown; numerical breakdowns (NoConvergence, PoleHit, ...) propagate
/// as schwarz::Error.
namespace schwarz::verify {

struct OperatorNormEstimate {
  double value = 0.0;
  /// True for p = 2 (largest singular value) and p = inf (max row sum).
  bool exact = false;
  int starts = 0;
};

/// ||A||_{p -> p}. Exact for p = 2 and p = inf; otherwise a lower bound from
/// `starts` seeded runs of the dual power iteration on the l^p sphere.
OperatorNormEstimate operator_norm(const ComplexMatrix& A, const lp::Exponent& p, int starts = 64,
                                   std::uint64_t seed = 0);

/// ||f(z)||_p <= ||z||_p on seeded ball samples and ||f'(0)||_{p->p} <= 1.
Verdict verify_schwarz_pick(const holo::MapExpr& f, const lp::Exponent& p, const VerifyConfig& cfg = {});

/// Disk estimate f'(1) >= 2|1 - f(0)|^2 / (1 - |f(0)|^2 + |f'(0)|) for a
/// scalar self-map of the disk with f(1) = 1.
Verdict verify_zhu(const holo::MapExpr& f, const VerifyConfig& cfg = {});

/// ||f'(1)||_p >= 2 (1 - ||f(0)||_p)^2 / (1 - ||f(0)||_p^2 + ||f'(0)||_p) for
/// f: D -> B_p^n with ||f(1)||_p = 1, plus the scalar reduction
/// G = l_b o f, b = f(1).
Verdict verify_kalaj(const holo::MapExpr& f, const lp::Exponent& p, const VerifyConfig& cfg = {});

struct LambdaCertificate {
  double lambda = 0.0;
  double imag_residual = 0.0;
  double proportionality_residual = 0.0;
  int tangent_samples_checked = 0;
};

/// Boundary estimate for self-maps of B_p^n, 2 <= p < inf, with f(0) = 0 and
/// f(z0) = w0 on the boundary: J maps T_{z0} into T_{w0} and
/// conj(J)^T v_{w0} = lambda v_{z0} with lambda >= 1.
std::pair<Verdict, LambdaCertificate> verify_boundary_normal(const holo::MapExpr& f, const lp::BoundaryPoint& z0,
                                                   const VerifyConfig& cfg = {});

/// Euclidean ball, f(z0) = z0: lambda = conj(z0)^T J z0 is at least
/// |1 - conj(f(0))^T z0|^2 / (1 - ||f(0)||^2) and |det J| <= lambda^{(n+1)/2}.
Verdict verify_liu_wang(const holo::MapExpr& f, const lp::BoundaryPoint& z0, const VerifyConfig& cfg = {});

/// f: B_p^n x D^m -> D^m (p = 2 or inf) with f(z_fix, .) = phi for an
/// automorphism phi of D^m: checks f(z, w) = phi(w) everywhere and the
/// inequality chain of the normalized problem.
Verdict verify_product_slice(const holo::MapExpr& f, const holo::MapExpr& phi, const ComplexVector& z_fix,
                             const lp::Exponent& p, const VerifyConfig& cfg = {});

struct HarnackSample {
  double radius = 0.0;
  double angle = 0.0;
  double value = 0.0;
};

struct HarnackGrid {
  double center = 0.0;  // phi(0)
  std::vector<HarnackSample> samples;
};

/// Samples phi on circles r = 0.1, ..., 0.9 with `angles` points each.
HarnackGrid sample_harnack_grid(const std::function<double(Complex)>& phi, int angles = 32);

/// Margin = min over samples of the two Harnack slacks
/// phi - (1-r)/(1+r) phi(0) and (1+r)/(1-r) phi(0) - phi; nonnegativity of
/// phi is the hypothesis.
Verdict harnack_certificate(const HarnackGrid& grid, const VerifyConfig& cfg = {});

/// Pluriharmonic f: B_p^n -> B_p^N, f(z0) = w0 on both boundaries:
/// (J z0')^T V >= (1 - f(0)'^T V) / 2 >= (1 - ||f(0)'||_p) / 2 > 0, with J the
/// real Jacobian.
Verdict verify_pluriharmonic_boundary(const holo::MapExpr& f, const lp::BoundaryPoint& z0,
                                      const VerifyConfig& cfg = {});

}  // namespace schwarz::verify
