#pragma once

#include <cstdint>
#include <string_view>

#include "schwarz/lp_geometry.hpp"
#include "schwarz/map_expr.hpp"

namespace schwarz::holo {

enum class JacobianMethod { CauchyIntegral, CentralDifference };

std::string_view to_string(JacobianMethod m) noexcept;

/// Complex Jacobian J_f(a) = (df_i/dz_j(a)), m x n.
struct JacobianRecord {
  ComplexMatrix matrix;
  JacobianMethod method = JacobianMethod::CauchyIntegral;
  double radius_or_step = 0.0;
  double error_estimate = 0.0;
};

/// Real derivative of z' -> f(z)', stored 2m x 2n (acting on input
/// realifications). Row blocks: Re f, Im f. Column blocks: x, y.
struct RealJacobianRecord {
  RealMatrix matrix;
  double step = 0.0;
};

struct CauchyConfig {
  /// Nodes of the base trapezoidal rule; the 2K rule provides the estimate.
  int nodes = 32;
  /// Upper bound on the contour radius; the radius used is
  /// min(radius, clearance / 2).
  double radius = 1e-2;
  /// Smallest admissible contour radius before InsufficientClearance.
  double min_radius = 1e-7;
  /// Largest admissible K vs 2K discrepancy before QuadratureDivergence.
  double tol = 1e-8;
};

/// Cauchy-integral Jacobian: column j is (1/2 pi i) \oint f(z + zeta e_j) / zeta^2
/// by the trapezoidal rule on |zeta| = r. Requires a holomorphic map.
JacobianRecord complex_jacobian(const MapExpr& f, const ComplexVector& z, const CauchyConfig& cfg = {});

/// Fourth-order central differences along x_j and y_j combined as
/// (d/dx - i d/dy) / 2. The step is reduced near poles to
/// min(h, 1e-3 * clearance).
JacobianRecord complex_jacobian_fd(const MapExpr& f, const ComplexVector& z, double h = 1e-3);

/// Fourth-order central differences in the 2n real input coordinates.
/// Throws Error(StepTooLarge) when the pole clearance is below h.
RealJacobianRecord real_jacobian(const MapExpr& f, const ComplexVector& z, double h = 1e-3);

struct RadialConfig {
  double t0 = 1e-2;
  int stages = 8;
  double tol = 1e-9;
};

struct RadialDerivative {
  ComplexVector value;
  double error_estimate = 0.0;
  int stages_used = 0;
};

/// Richardson-extrapolated one-sided quotient (f(z0) - f(z0 - t u)) / t over
/// t = t0 2^{-k}. Converges when successive diagonal extrapolants differ by
/// at most cfg.tol; throws Error(NoConvergence) when a stage fails to shrink
/// the difference by a factor of 2 or the ladder runs out.
RadialDerivative radial_boundary_derivative(const MapExpr& f, const lp::BoundaryPoint& z0,
                                            const ComplexVector& inward, const RadialConfig& cfg = {});

/// ||A - D||_F + ||B + C||_F for real Jacobian blocks [[A, B], [C, D]].
double holomorphy_residual(const MapExpr& f, const ComplexVector& z, double h = 1e-3);

/// Max over 8 seeded complex lines through z of |Laplacian| of each component
/// restricted to the line. The Laplacian is the 5-point stencil at steps h and
/// 2h, Richardson-combined.
double pluriharmonic_residual(const MapExpr& f, const ComplexVector& z, double h = 1e-3,
                              std::uint64_t seed = 0);

}  // namespace schwarz::holo
