#pragma once

#include <cstdint>
#include <string_view>

#include "schwarz/lp_geometry.hpp"
#include "schwarz/types.hpp"

namespace schwarz {

/// Counter-based generator: the value at counter c is a pure function of
/// (key, c), so draws are identical regardless of evaluation order or
/// thread assignment. Keys are derived from a seed and named sub-streams
/// (suite seed -> job id -> sample index).
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed = 0) noexcept;
  CounterRng(std::uint64_t seed, std::string_view stream) noexcept;

  CounterRng substream(std::string_view name) const noexcept;
  CounterRng substream(std::uint64_t index) const noexcept;

  std::uint64_t key() const noexcept { return key_; }

  /// Stateless access.
  std::uint64_t bits_at(std::uint64_t counter) const noexcept;

  /// Sequential access (advances the internal counter).
  std::uint64_t next() noexcept { return bits_at(counter_++); }
  /// Uniform in [0, 1).
  double uniform() noexcept;
  /// Uniform in (0, 1].
  double uniform_open_low() noexcept { return 1.0 - uniform(); }
  double normal() noexcept;
  /// Real and imaginary parts independent N(0, 1).
  Complex complex_normal() noexcept;

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

std::uint64_t hash_string(std::string_view s) noexcept;

namespace sampling {

ComplexVector complex_normal_vector(CounterRng& rng, Eigen::Index n);

/// Point on the unit l^p sphere with a Gaussian-distributed direction.
ComplexVector sphere_point(CounterRng& rng, Eigen::Index n, const lp::Exponent& p);

/// Interior point of B_p^n; radius drawn as u^{1/(2n)} and capped below 1.
ComplexVector ball_point(CounterRng& rng, Eigen::Index n, const lp::Exponent& p);

/// Interior point of the unit disk with |zeta| <= max_radius.
Complex disk_point(CounterRng& rng, double max_radius = 1.0 - 1e-9);

/// Random unitary matrix (QR of a complex Gaussian matrix with phase fix).
ComplexMatrix unitary(CounterRng& rng, Eigen::Index n);

/// Deterministic Halton point in B_p^n, index >= 1. Each complex coordinate
/// uses a Box-Muller pair of Halton coordinates; one extra coordinate sets
/// the radius.
ComplexVector halton_ball_point(std::uint64_t index, Eigen::Index n, const lp::Exponent& p);

/// Radical inverse of index in the given prime base.
double radical_inverse(std::uint64_t index, unsigned base) noexcept;

}  // namespace sampling
}  // namespace schwarz
