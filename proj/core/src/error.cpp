#include "schwarz/error.hpp"

#include "schwarz/types.hpp"

#include <cmath>

namespace schwarz {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::SingularGradient: return "SingularGradient";
    case ErrorKind::NotOnBoundary: return "NotOnBoundary";
    case ErrorKind::HypothesisFailed: return "HypothesisFailed";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::OutsideDisk: return "OutsideDisk";
    case ErrorKind::OutsideBall: return "OutsideBall";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::PoleHit: return "PoleHit";
    case ErrorKind::NotHolomorphic: return "NotHolomorphic";
    case ErrorKind::InsufficientClearance: return "InsufficientClearance";
    case ErrorKind::QuadratureDivergence: return "QuadratureDivergence";
    case ErrorKind::StepTooLarge: return "StepTooLarge";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::BadParams: return "BadParams";
    case ErrorKind::BudgetExhausted: return "BudgetExhausted";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::NonFinite: return "NonFinite";
  }
  return "Unknown";
}

void require_finite(const ComplexVector& z, const char* what) {
  for (Eigen::Index j = 0; j < z.size(); ++j) {
    if (!std::isfinite(z[j].real()) || !std::isfinite(z[j].imag())) {
      throw Error(ErrorKind::NonFinite, std::string(what) + " has a non-finite entry");
    }
  }
}

void require_finite(const RealVector& x, const char* what) {
  if (!x.allFinite()) {
    throw Error(ErrorKind::NonFinite, std::string(what) + " has a non-finite entry");
  }
}

ComplexVector cvec(std::initializer_list<Complex> entries) {
  ComplexVector z(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index j = 0;
  for (const auto& c : entries) z[j++] = c;
  return z;
}

ComplexVector unit_vector(Eigen::Index n, Eigen::Index k) {
  ComplexVector e = ComplexVector::Zero(n);
  e[k] = 1.0;
  return e;
}

}  // namespace schwarz
