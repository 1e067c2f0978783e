#pragma once

#include <memory>
#include <vector>

#include <nlohmann/json.hpp>

#include "schwarz/types.hpp"

namespace schwarz::holo {

struct Node;

/// Immutable expression tree for maps C^in -> C^out built from coordinates,
/// constants, arithmetic, disk Moebius maps, linear maps, composition and
/// tupling. Shallow-copied; safe to share between threads.
///
/// Every node is itself a map with fixed input and output dimension. Scalar
/// expressions are maps with out_dim() == 1. Indices are 0-based.
///
/// A map is holomorphic iff it contains no conjugate-coordinate node. Rational
/// nodes (moebius, reciprocal) record their denominators during evaluation;
/// that record drives pole_clearance().
class MapExpr {
 public:
  static MapExpr coordinate(Eigen::Index index, Eigen::Index in_dim);
  static MapExpr conj_coordinate(Eigen::Index index, Eigen::Index in_dim);
  static MapExpr constant(ComplexVector value, Eigen::Index in_dim);
  static MapExpr identity(Eigen::Index n);
  static MapExpr linear(ComplexMatrix matrix);
  /// Elementwise a + b (same shapes).
  static MapExpr sum(MapExpr a, MapExpr b);
  /// Elementwise a * b; a scalar operand broadcasts over the other.
  static MapExpr product(MapExpr a, MapExpr b);
  static MapExpr scale(Complex factor, MapExpr a);
  /// Elementwise integer power, k >= 0.
  static MapExpr power(MapExpr a, int k);
  /// Elementwise rotation * (w - a) / (1 - conj(a) w), |a| < 1, |rotation| = 1.
  static MapExpr moebius(Complex a, Complex rotation, MapExpr arg);
  /// Elementwise 1 / w.
  static MapExpr reciprocal(MapExpr arg);
  /// outer(inner(z)).
  static MapExpr compose(MapExpr outer, MapExpr inner);
  /// Stacks the outputs of maps sharing one input dimension.
  static MapExpr tuple(std::vector<MapExpr> parts);

  Eigen::Index in_dim() const noexcept;
  Eigen::Index out_dim() const noexcept;
  bool is_holomorphic() const noexcept;
  /// True when the tree has no rational node.
  bool is_polynomial() const noexcept;

  /// Throws Error(DimensionMismatch) or Error(PoleHit).
  ComplexVector operator()(const ComplexVector& z) const;

  /// Evaluation that appends every rational denominator value, in a fixed
  /// traversal order, to `denominators`.
  ComplexVector eval_traced(const ComplexVector& z, std::vector<Complex>& denominators) const;

  nlohmann::json to_json() const;
  /// Throws Error(SchemaError) with a JSON-pointer path.
  static MapExpr from_json(const nlohmann::json& j, const std::string& path = "");

  const Node& node() const noexcept { return *node_; }

 private:
  explicit MapExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Same as f(z).
ComplexVector eval(const MapExpr& f, const ComplexVector& z);

/// First-order estimate of the distance from z to the nearest zero of any
/// rational denominator of f: min_k |d_k(z)| / |grad d_k(z)|. Infinity for
/// polynomial maps. Throws Error(PoleHit) if z is itself a pole.
double pole_clearance(const MapExpr& f, const ComplexVector& z);

/// Threshold below which a denominator counts as vanishing.
inline constexpr double kPoleThreshold = 1e-14;

}  // namespace schwarz::holo
