#pragma once

#include <complex>

#include <Eigen/Dense>

namespace schwarz {

using Complex = std::complex<double>;

/// Points of C^n. Column vectors; dimension fixed at construction.
using ComplexVector = Eigen::VectorXcd;
/// Points of R^{2n}, e.g. realifications z' = (x, y).
using RealVector = Eigen::VectorXd;
using ComplexMatrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;

/// Throws Error(NonFinite) if any entry is NaN or infinite.
void require_finite(const ComplexVector& z, const char* what);
void require_finite(const RealVector& x, const char* what);

/// Convenience constructor: ComplexVector from an initializer list.
ComplexVector cvec(std::initializer_list<Complex> entries);

/// Standard basis vector e_k (0-based k) in C^n.
ComplexVector unit_vector(Eigen::Index n, Eigen::Index k);

}  // namespace schwarz
