#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "schwarz/lp_geometry.hpp"
#include "schwarz/map_expr.hpp"

/// Named maps used to exercise the verifiers: self-maps of l^p balls,
/// extremal functions for the disk boundary estimates, product-domain maps,
/// ball automorphisms and pluriharmonic maps.
namespace schwarz::holo::gallery {

MapExpr identity(Eigen::Index n);
/// t z with |t| <= 1.
MapExpr scaled_identity(Eigen::Index n, Complex t);
/// (z_1^2, z_2, ..., z_n).
MapExpr square_first(Eigen::Index n);
/// (z_1 z_n, z_2, ..., z_{n-1}, z_n).
MapExpr first_times_last(Eigen::Index n);
/// (z_1^k, 0, ..., 0).
MapExpr power_slice(Eigen::Index n, int k = 2);
/// (c_j z_j^{k_j}) with unimodular c_j = exp(i phase_j), k_j >= 1.
MapExpr diagonal_power(const std::vector<int>& powers, const std::vector<double>& phases);
/// (z_j (z_j - a_j) / (1 - conj(a_j) z_j)): fixes 0, maps every B_p^n into itself.
MapExpr diagonal_blaschke(const ComplexVector& zeros);
/// z -> U z; throws BadParams unless U is unitary to 1e-10.
MapExpr unitary(const ComplexMatrix& U);
/// Disk automorphism rotation (z - a) / (1 - conj(a) z), scalar.
MapExpr disk_moebius(Complex a, Complex rotation);

/// Sharp extremal for the disk estimate with f(0) = a, |f'(0)| = d, f(1) = 1:
/// (beta A + a) / (1 + beta conj(a) A), beta = (1 - a) / (1 - conj(a)),
/// A(z) = z ((1 - |a|^2) z + d) / ((1 - |a|^2) + d z). Needs 0 <= d <= 1 - |a|^2.
MapExpr zhu_extremal(Complex a, double d);

/// Vector extremal b (A + a) / (1 + a A) with ||b||_p = 1, real 0 <= a < 1,
/// 0 <= d <= 1 - a^2; a map D -> B_p^n with ||phi(0)|| = a, ||phi'(0)|| = d.
MapExpr kalaj_extremal(const ComplexVector& b, double a, double d, const lp::Exponent& p);

/// Involutive automorphism of the Euclidean ball exchanging a and 0:
/// (a - P_a z - s_a Q_a z) / (1 - <z, a>).
MapExpr ball_automorphism(const ComplexVector& a);

/// U o ball_automorphism(a) with U unitary chosen so that z0 is fixed.
MapExpr ball_automorphism_fixing(const ComplexVector& a, const ComplexVector& z0);

/// Unitary U with U w = z for Euclidean unit vectors w, z.
ComplexMatrix unitary_mapping(const ComplexVector& w, const ComplexVector& z);

/// Componentwise Moebius tuple on C^m (an automorphism of the polydisk).
MapExpr blaschke_tuple(const ComplexVector& zeros, const ComplexVector& rotations);

/// f(z, w) = blaschke_tuple(w) on C^n x C^m, constant in z.
MapExpr slice_product(Eigen::Index n, const ComplexVector& zeros, const ComplexVector& rotations);

/// f_i(z, w) = (w_i + z_1 w_i^2) / 2 on C^n x C^m; no slice z = const gives w.
MapExpr slice_mixed(Eigen::Index n, Eigen::Index m);

/// conj(z), antiholomorphic.
MapExpr conjugate_map(Eigen::Index n);

/// (z + c conj(z)) / (1 + |c|), pluriharmonic self-map of the ball fixing
/// every real boundary point when c >= 0.
MapExpr harmonic_shear(Eigen::Index n, Complex c);

/// s (t h(z) + (1 - t) conj(V z)) + (1 - s) w0 where h(z0) = w0 and
/// V z0 = conj(w0); a pluriharmonic self-map of the Euclidean ball with
/// f(z0) = w0 and f(0) = (1 - s) w0. h is U z, or U R g(R^* z) with
/// g(z) = (z_1^2, z_2, ...) when `quadratic` is set.
MapExpr pluriharmonic_blend(const ComplexVector& z0, const ComplexVector& w0, double s, double t,
                            bool quadratic);

/// |z_1|^2 as a scalar map; not pluriharmonic.
MapExpr modulus_squared(Eigen::Index n);

struct EntryInfo {
  std::string name;
  std::string params;
  std::string description;
};

/// All registered names with parameter documentation, sorted by name.
std::vector<EntryInfo> list();

/// Builds a registered map from JSON parameters. Throws Error(BadParams) for
/// invalid values and Error(SchemaError) for malformed input.
MapExpr build(const std::string& name, const nlohmann::json& params, const std::string& path = "");

}  // namespace schwarz::holo::gallery
