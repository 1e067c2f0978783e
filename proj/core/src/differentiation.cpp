#include "schwarz/differentiation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "schwarz/error.hpp"
#include "schwarz/random.hpp"

namespace schwarz::holo {

std::string_view to_string(JacobianMethod m) noexcept {
  return m == JacobianMethod::CauchyIntegral ? "CauchyIntegral" : "CentralDifference";
}

namespace {

double max_abs(const ComplexMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

// Fourth-order central difference of f along direction `dir` in coordinate j.
ComplexVector central4(const MapExpr& f, const ComplexVector& z, Eigen::Index j, Complex dir, double h) {
  auto at = [&](double s) {
    ComplexVector w = z;
    w[j] += s * h * dir;
    return f(w);
  };
  return (-at(2.0) + 8.0 * at(1.0) - 8.0 * at(-1.0) + at(-2.0)) / (12.0 * h);
}

ComplexMatrix wirtinger_fd(const MapExpr& f, const ComplexVector& z, double h) {
  ComplexMatrix J(f.out_dim(), f.in_dim());
  for (Eigen::Index j = 0; j < f.in_dim(); ++j) {
    const ComplexVector dx = central4(f, z, j, {1.0, 0.0}, h);
    const ComplexVector dy = central4(f, z, j, {0.0, 1.0}, h);
    J.col(j) = 0.5 * (dx - Complex(0.0, 1.0) * dy);
  }
  return J;
}

}  // namespace

JacobianRecord complex_jacobian(const MapExpr& f, const ComplexVector& z, const CauchyConfig& cfg) {
  if (!f.is_holomorphic()) throw Error(ErrorKind::NotHolomorphic, "Cauchy-integral Jacobian needs a holomorphic map");
  if (z.size() != f.in_dim()) throw Error(ErrorKind::DimensionMismatch, "Jacobian point dimension mismatch");
  require_finite(z, "Jacobian point");
  const double clearance = pole_clearance(f, z);
  const double r = std::min(cfg.radius, clearance / 2.0);
  if (!(r >= cfg.min_radius)) {
    std::ostringstream os;
    os << "pole clearance " << clearance << " admits no contour radius >= " << cfg.min_radius;
    throw Error(ErrorKind::InsufficientClearance, os.str());
  }
  const int K = cfg.nodes;
  const int K2 = 2 * K;
  ComplexMatrix coarse(f.out_dim(), f.in_dim());
  ComplexMatrix fine(f.out_dim(), f.in_dim());
  for (Eigen::Index j = 0; j < f.in_dim(); ++j) {
    ComplexVector sum_coarse = ComplexVector::Zero(f.out_dim());
    ComplexVector sum_fine = ComplexVector::Zero(f.out_dim());
    for (int k = 0; k < K2; ++k) {
      const Complex node = std::polar(1.0, 2.0 * std::numbers::pi * k / K2);
      ComplexVector w = z;
      w[j] += r * node;
      const ComplexVector term = f(w) / (r * node);
      sum_fine += term;
      if (k % 2 == 0) sum_coarse += term;
    }
    coarse.col(j) = sum_coarse / static_cast<double>(K);
    fine.col(j) = sum_fine / static_cast<double>(K2);
  }
  const double err = max_abs(coarse - fine);
  if (!(err <= cfg.tol)) {
    std::ostringstream os;
    os << "doubling the rule from " << K << " to " << K2 << " nodes changed entries by " << err;
    throw Error(ErrorKind::QuadratureDivergence, os.str());
  }
  return {fine, JacobianMethod::CauchyIntegral, r, err};
}

JacobianRecord complex_jacobian_fd(const MapExpr& f, const ComplexVector& z, double h) {
  if (z.size() != f.in_dim()) throw Error(ErrorKind::DimensionMismatch, "Jacobian point dimension mismatch");
  const double clearance = pole_clearance(f, z);
  const double step = std::min(h, 1e-3 * clearance);
  const ComplexMatrix J = wirtinger_fd(f, z, step);
  const ComplexMatrix J2 = wirtinger_fd(f, z, 2.0 * step);
  return {J, JacobianMethod::CentralDifference, step, max_abs(J - J2) / 15.0};
}

RealJacobianRecord real_jacobian(const MapExpr& f, const ComplexVector& z, double h) {
  if (z.size() != f.in_dim()) throw Error(ErrorKind::DimensionMismatch, "Jacobian point dimension mismatch");
  const double clearance = pole_clearance(f, z);
  if (clearance < h) {
    std::ostringstream os;
    os << "step " << h << " exceeds pole clearance " << clearance;
    throw Error(ErrorKind::StepTooLarge, os.str());
  }
  const double step = std::min(h, 1e-3 * clearance);
  const auto n = f.in_dim();
  const auto m = f.out_dim();
  RealMatrix D(2 * m, 2 * n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const ComplexVector dx = central4(f, z, j, {1.0, 0.0}, step);
    const ComplexVector dy = central4(f, z, j, {0.0, 1.0}, step);
    D.col(j) = lp::realify(dx);
    D.col(n + j) = lp::realify(dy);
  }
  return {D, step};
}

RadialDerivative radial_boundary_derivative(const MapExpr& f, const lp::BoundaryPoint& z0,
                                            const ComplexVector& inward, const RadialConfig& cfg) {
  if (inward.size() != z0.dim()) throw Error(ErrorKind::DimensionMismatch, "inward direction dimension mismatch");
  const ComplexVector f0 = f(z0.point());
  const int K = cfg.stages;
  // table[k][m]: m-th Richardson column at step t0 2^{-k}.
  std::vector<std::vector<ComplexVector>> table(K + 1);
  double prev_delta = 0.0;
  for (int k = 0; k <= K; ++k) {
    const double t = cfg.t0 * std::ldexp(1.0, -k);
    table[k].push_back((f0 - f(z0.point() - t * inward)) / t);
    for (int m = 1; m <= k; ++m) {
      const double w = std::ldexp(1.0, m);
      table[k].push_back((w * table[k][m - 1] - table[k - 1][m - 1]) / (w - 1.0));
    }
    if (k == 0) continue;
    const double delta = (table[k][k] - table[k - 1][k - 1]).cwiseAbs().maxCoeff();
    if (delta <= cfg.tol) return {table[k][k], delta, k};
    if (k >= 2 && delta > prev_delta / 2.0) {
      std::ostringstream os;
      os << "extrapolation stage " << k << " changed by " << delta << " after " << prev_delta
         << " (contraction below 2)";
      throw Error(ErrorKind::NoConvergence, os.str());
    }
    prev_delta = delta;
  }
  std::ostringstream os;
  os << "ladder of " << K << " stages ended with difference " << prev_delta;
  throw Error(ErrorKind::NoConvergence, os.str());
}

double holomorphy_residual(const MapExpr& f, const ComplexVector& z, double h) {
  const RealMatrix D = real_jacobian(f, z, h).matrix;
  const auto m = f.out_dim();
  const auto n = f.in_dim();
  const RealMatrix A = D.topLeftCorner(m, n);
  const RealMatrix B = D.topRightCorner(m, n);
  const RealMatrix C = D.bottomLeftCorner(m, n);
  const RealMatrix Dd = D.bottomRightCorner(m, n);
  return (A - Dd).norm() + (B + C).norm();
}

double pluriharmonic_residual(const MapExpr& f, const ComplexVector& z, double h, std::uint64_t seed) {
  CounterRng rng(seed, "pluriharmonic-lines");
  const auto n = f.in_dim();
  const ComplexVector f0 = f(z);
  auto laplacian = [&](const ComplexVector& u, double s) {
    ComplexVector acc = -4.0 * f0;
    for (const Complex d : {Complex(1, 0), Complex(-1, 0), Complex(0, 1), Complex(0, -1)}) acc += f(z + (s * d) * u);
    return ComplexVector(acc / (s * s));
  };
  double worst = 0.0;
  for (int line = 0; line < 8; ++line) {
    ComplexVector u = sampling::complex_normal_vector(rng, n);
    u /= u.norm();
    const ComplexVector lap = (4.0 * laplacian(u, h) - laplacian(u, 2.0 * h)) / 3.0;
    worst = std::max(worst, lap.cwiseAbs().maxCoeff());
  }
  return worst;
}

}  // namespace schwarz::holo
