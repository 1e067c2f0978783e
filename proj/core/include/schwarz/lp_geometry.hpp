#pragma once

#include <compare>
#include <string>

#include "schwarz/types.hpp"

/// Geometry of the l^p unit balls B_p^n in C^n: norms, the defining function
/// rho(z) = ||z||_p^p - 1 and its gradient, boundary normal vectors, tangent
/// spaces, norming functionals and the hyperbolic distance on the disk.
///
/// Complex inner product convention throughout: <a, b> = sum_j a_j conj(b_j).
namespace schwarz::lp {

/// The ball parameter p in (1, inf) or p = inf (the polydisk).
class Exponent {
 public:
  /// Throws Error(BadParams) unless p > 1 and finite.
  static Exponent finite(double p);
  static Exponent infinity() noexcept { return Exponent(); }

  bool is_infinite() const noexcept { return infinite_; }
  bool is_finite() const noexcept { return !infinite_; }
  /// The finite value; +inf when is_infinite().
  double value() const noexcept;
  /// Hoelder conjugate q with 1/p + 1/q = 1 (q = 1 for p = inf).
  double conjugate() const noexcept;

  std::string to_string() const;

  friend bool operator==(const Exponent&, const Exponent&) = default;

 private:
  Exponent() = default;
  explicit Exponent(double p) : infinite_(false), p_(p) {}

  bool infinite_ = true;
  double p_ = 0.0;
};

/// Parses "2", "3.5", "inf" / "infinity".
Exponent parse_exponent(const std::string& text);

inline constexpr double kDefaultBoundaryTolerance = 1e-9;

/// A point z with | ||z||_p - 1 | <= tolerance, checked at construction.
class BoundaryPoint {
 public:
  /// Throws Error(NotOnBoundary) when the tolerance is violated.
  BoundaryPoint(ComplexVector point, Exponent exponent,
                double tolerance = kDefaultBoundaryTolerance);

  const ComplexVector& point() const noexcept { return point_; }
  const Exponent& exponent() const noexcept { return exponent_; }
  double tolerance() const noexcept { return tolerance_; }
  Eigen::Index dim() const noexcept { return point_.size(); }

 private:
  ComplexVector point_;
  Exponent exponent_;
  double tolerance_;
};

/// <a, b> = sum a_j conj(b_j).
Complex inner(const ComplexVector& a, const ComplexVector& b);

/// ||z||_p for a raw exponent p >= 1 (std::numeric_limits<double>::infinity()
/// selects the max norm). Used for dual norms where q may equal 1.
double norm_raw(const ComplexVector& z, double p);
double norm_raw(const RealVector& x, double p);

double norm_p(const ComplexVector& z, const Exponent& p);
/// Real l^p norm of a vector in R^{2n}.
double norm_p(const RealVector& x, const Exponent& p);

/// z = x + iy  ->  z' = (x, y).
RealVector realify(const ComplexVector& z);
/// Inverse of realify; throws Error(DimensionMismatch) on odd length.
ComplexVector complexify(const RealVector& x);

/// rho(z) = ||z||_p^p - 1. Rejects p = inf with Error(BadParams).
double defining_rho(const ComplexVector& z, const Exponent& p);

/// grad rho(z) = p (|z_j|^{p-2} z_j)_j. For p < 2 a zero coordinate is a
/// singularity and raises Error(SingularGradient).
ComplexVector grad_rho(const ComplexVector& z, const Exponent& p);

/// Boundary vector of the Schwarz-type statements: (|z_j|^{p-2} z_j)_j for
/// finite p, z / n for p = inf where z must lie on the distinguished
/// boundary (every |z_j| = 1).
ComplexVector schwarz_v(const BoundaryPoint& z);

/// Boundary vector of the rigidity statement: (|z_j|^{p-1})_j, p finite.
ComplexVector rigidity_v(const BoundaryPoint& z);

/// Normal vector V_{w0} in R^{2N} for the pluriharmonic boundary estimate.
/// Requires both w0 in the complex boundary and w0' in the real boundary of
/// B_p^{2N}; for p = inf the complex condition is the distinguished boundary.
/// Throws Error(HypothesisFailed) when the real-boundary condition fails.
RealVector pluriharmonic_v(const BoundaryPoint& w0);

struct TangentResiduals {
  /// |Re <alpha, grad rho(z)>|: zero iff alpha in T_z.
  double real_tangent = 0.0;
  /// |<alpha, grad rho(z)>|: zero iff alpha in T_z^{1,0}.
  double complex_tangent = 0.0;
};

TangentResiduals tangent_residuals(const ComplexVector& alpha, const BoundaryPoint& z);

struct NormalTangentSplit {
  double lambda = 0.0;
  ComplexVector beta;
};

/// u = lambda v_z + beta with beta in T_z, v_z = schwarz_v(z).
NormalTangentSplit normal_tangent_decompose(const ComplexVector& u, const BoundaryPoint& z);

/// Coefficients c of the unit-norm dual functional l_x(y) = sum c_j y_j with
/// l_x(x) = ||x||_p. Throws Error(ZeroVector) for x = 0.
ComplexVector norming_functional(const ComplexVector& x, const Exponent& p);

/// l(y) = sum c_j y_j (bilinear, no conjugation).
Complex apply_functional(const ComplexVector& c, const ComplexVector& y);

/// Poincare distance on the unit disk, 0.5 log((|1-conj(a)b|+|a-b|)/(|1-conj(a)b|-|a-b|)).
/// Throws Error(OutsideDisk) unless |a|, |b| < 1.
double hyperbolic_distance(Complex a, Complex b);

/// True when every |z_j| equals 1 within tol.
bool on_distinguished_boundary(const ComplexVector& z, double tol);

/// Scales a nonzero z onto the unit sphere of l^p.
ComplexVector normalize(const ComplexVector& z, const Exponent& p);

}  // namespace schwarz::lp
