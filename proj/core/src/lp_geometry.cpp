#include "schwarz/lp_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "schwarz/error.hpp"

namespace schwarz::lp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Scaled l^p sum so that huge or tiny entries do not overflow.
template <typename Abs>
double scaled_norm(Eigen::Index n, Abs abs_at, double p) {
  double m = 0.0;
  for (Eigen::Index j = 0; j < n; ++j) m = std::max(m, abs_at(j));
  if (m == 0.0 || std::isinf(p)) return m;
  double s = 0.0;
  for (Eigen::Index j = 0; j < n; ++j) s += std::pow(abs_at(j) / m, p);
  return m * std::pow(s, 1.0 / p);
}

}  // namespace

Exponent Exponent::finite(double p) {
  if (!(p > 1.0) || !std::isfinite(p)) {
    throw Error(ErrorKind::BadParams, "exponent must satisfy 1 < p < inf, got " + std::to_string(p));
  }
  return Exponent(p);
}

double Exponent::value() const noexcept { return infinite_ ? kInf : p_; }

double Exponent::conjugate() const noexcept { return infinite_ ? 1.0 : p_ / (p_ - 1.0); }

std::string Exponent::to_string() const {
  if (infinite_) return "inf";
  std::ostringstream os;
  os << p_;
  return os.str();
}

Exponent parse_exponent(const std::string& text) {
  if (text == "inf" || text == "infinity" || text == "Infinity") return Exponent::infinity();
  std::size_t used = 0;
  double p = 0.0;
  try {
    p = std::stod(text, &used);
  } catch (const std::exception&) {
    throw Error(ErrorKind::BadParams, "cannot parse exponent '" + text + "'");
  }
  if (used != text.size()) throw Error(ErrorKind::BadParams, "cannot parse exponent '" + text + "'");
  return Exponent::finite(p);
}

BoundaryPoint::BoundaryPoint(ComplexVector point, Exponent exponent, double tolerance)
    : point_(std::move(point)), exponent_(exponent), tolerance_(tolerance) {
  require_finite(point_, "boundary point");
  const double gap = std::abs(norm_p(point_, exponent_) - 1.0);
  if (!(gap <= tolerance_)) {
    std::ostringstream os;
    os << "| ||z||_" << exponent_.to_string() << " - 1 | = " << gap << " exceeds " << tolerance_;
    throw Error(ErrorKind::NotOnBoundary, os.str());
  }
}

Complex inner(const ComplexVector& a, const ComplexVector& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "inner product operands differ in size");
  Complex s = 0.0;
  for (Eigen::Index j = 0; j < a.size(); ++j) s += a[j] * std::conj(b[j]);
  return s;
}

double norm_raw(const ComplexVector& z, double p) {
  return scaled_norm(z.size(), [&](Eigen::Index j) { return std::abs(z[j]); }, p);
}

double norm_raw(const RealVector& x, double p) {
  return scaled_norm(x.size(), [&](Eigen::Index j) { return std::abs(x[j]); }, p);
}

double norm_p(const ComplexVector& z, const Exponent& p) { return norm_raw(z, p.value()); }

double norm_p(const RealVector& x, const Exponent& p) { return norm_raw(x, p.value()); }

RealVector realify(const ComplexVector& z) {
  const Eigen::Index n = z.size();
  RealVector out(2 * n);
  out.head(n) = z.real();
  out.tail(n) = z.imag();
  return out;
}

ComplexVector complexify(const RealVector& x) {
  if (x.size() % 2 != 0) throw Error(ErrorKind::DimensionMismatch, "realified vector has odd length");
  const Eigen::Index n = x.size() / 2;
  ComplexVector z(n);
  for (Eigen::Index j = 0; j < n; ++j) z[j] = Complex(x[j], x[n + j]);
  return z;
}

double defining_rho(const ComplexVector& z, const Exponent& p) {
  if (p.is_infinite()) throw Error(ErrorKind::BadParams, "defining function needs finite p");
  double s = 0.0;
  for (Eigen::Index j = 0; j < z.size(); ++j) s += std::pow(std::abs(z[j]), p.value());
  return s - 1.0;
}

ComplexVector grad_rho(const ComplexVector& z, const Exponent& p) {
  if (p.is_infinite()) throw Error(ErrorKind::BadParams, "gradient of rho needs finite p");
  const double pv = p.value();
  ComplexVector g(z.size());
  for (Eigen::Index j = 0; j < z.size(); ++j) {
    const double r = std::abs(z[j]);
    if (r == 0.0) {
      if (pv < 2.0) {
        throw Error(ErrorKind::SingularGradient,
                    "coordinate " + std::to_string(j) + " vanishes with p < 2");
      }
      g[j] = 0.0;
    } else {
      g[j] = pv * std::pow(r, pv - 2.0) * z[j];
    }
  }
  return g;
}

bool on_distinguished_boundary(const ComplexVector& z, double tol) {
  for (Eigen::Index j = 0; j < z.size(); ++j) {
    if (std::abs(std::abs(z[j]) - 1.0) > tol) return false;
  }
  return true;
}

ComplexVector schwarz_v(const BoundaryPoint& bp) {
  const auto& z = bp.point();
  if (bp.exponent().is_infinite()) {
    if (!on_distinguished_boundary(z, bp.tolerance())) {
      throw Error(ErrorKind::NotOnBoundary, "p = inf requires every |z_j| = 1");
    }
    return z / static_cast<double>(z.size());
  }
  const double pv = bp.exponent().value();
  ComplexVector v(z.size());
  for (Eigen::Index j = 0; j < z.size(); ++j) {
    const double r = std::abs(z[j]);
    // |z|^{p-2} z -> 0 as z -> 0 for every p > 1.
    v[j] = r == 0.0 ? Complex(0.0) : std::pow(r, pv - 2.0) * z[j];
  }
  return v;
}

ComplexVector rigidity_v(const BoundaryPoint& bp) {
  if (bp.exponent().is_infinite()) throw Error(ErrorKind::BadParams, "rigidity vector needs finite p");
  const double pv = bp.exponent().value();
  const auto& z = bp.point();
  ComplexVector v(z.size());
  for (Eigen::Index j = 0; j < z.size(); ++j) v[j] = std::pow(std::abs(z[j]), pv - 1.0);
  return v;
}

RealVector pluriharmonic_v(const BoundaryPoint& w0) {
  const auto& p = w0.exponent();
  const RealVector wr = realify(w0.point());
  const auto N = w0.dim();
  if (p.is_infinite()) {
    if (!on_distinguished_boundary(w0.point(), w0.tolerance())) {
      throw Error(ErrorKind::HypothesisFailed, "p = inf requires w0 on the distinguished boundary");
    }
  } else if (p.value() < 2.0) {
    throw Error(ErrorKind::BadParams, "pluriharmonic normal vector needs p >= 2");
  }
  const double real_gap = std::abs(norm_p(wr, p) - 1.0);
  if (!(real_gap <= w0.tolerance())) {
    std::ostringstream os;
    os << "realified point is off the real sphere: | ||w0'||_p - 1 | = " << real_gap;
    throw Error(ErrorKind::HypothesisFailed, os.str());
  }
  if (p.is_infinite()) return wr / (2.0 * static_cast<double>(N));
  const double pv = p.value();
  RealVector v(wr.size());
  for (Eigen::Index j = 0; j < wr.size(); ++j) {
    const double a = std::abs(wr[j]);
    v[j] = a == 0.0 ? 0.0 : std::pow(a, pv - 2.0) * wr[j];
  }
  return v;
}

TangentResiduals tangent_residuals(const ComplexVector& alpha, const BoundaryPoint& z) {
  if (z.exponent().is_infinite() || z.exponent().value() < 2.0) {
    throw Error(ErrorKind::BadParams, "tangent spaces are defined through rho for 2 <= p < inf");
  }
  const Complex pairing = inner(alpha, grad_rho(z.point(), z.exponent()));
  return {std::abs(pairing.real()), std::abs(pairing)};
}

NormalTangentSplit normal_tangent_decompose(const ComplexVector& u, const BoundaryPoint& z) {
  const ComplexVector v = schwarz_v(z);
  const double vv = v.squaredNorm();
  if (vv == 0.0) throw Error(ErrorKind::ZeroVector, "normal vector vanishes");
  const double lambda = inner(u, v).real() / vv;
  return {lambda, u - lambda * v};
}

ComplexVector norming_functional(const ComplexVector& x, const Exponent& p) {
  require_finite(x, "norming functional argument");
  const double nx = norm_p(x, p);
  if (nx == 0.0) throw Error(ErrorKind::ZeroVector, "norming functional of the zero vector");
  ComplexVector c = ComplexVector::Zero(x.size());
  if (p.is_infinite()) {
    Eigen::Index k = 0;
    for (Eigen::Index j = 1; j < x.size(); ++j) {
      if (std::abs(x[j]) > std::abs(x[k])) k = j;
    }
    c[k] = std::conj(x[k]) / std::abs(x[k]);
    return c;
  }
  const double pv = p.value();
  for (Eigen::Index j = 0; j < x.size(); ++j) {
    const Complex y = x[j] / nx;
    const double r = std::abs(y);
    if (r != 0.0) c[j] = std::pow(r, pv - 2.0) * std::conj(y);
  }
  return c;
}

Complex apply_functional(const ComplexVector& c, const ComplexVector& y) {
  if (c.size() != y.size()) throw Error(ErrorKind::DimensionMismatch, "functional and vector differ in size");
  Complex s = 0.0;
  for (Eigen::Index j = 0; j < c.size(); ++j) s += c[j] * y[j];
  return s;
}

double hyperbolic_distance(Complex a, Complex b) {
  if (!(std::abs(a) < 1.0) || !(std::abs(b) < 1.0)) {
    throw Error(ErrorKind::OutsideDisk, "hyperbolic distance needs |a|, |b| < 1");
  }
  const double x = std::abs(a - b) / std::abs(1.0 - std::conj(a) * b);
  return std::atanh(x);
}

ComplexVector normalize(const ComplexVector& z, const Exponent& p) {
  const double n = norm_p(z, p);
  if (n == 0.0) throw Error(ErrorKind::ZeroVector, "cannot normalize the zero vector");
  return z / n;
}

}  // namespace schwarz::lp
