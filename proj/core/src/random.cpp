#include "schwarz/random.hpp"

#include "schwarz/error.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace schwarz {

namespace {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t combine(std::uint64_t key, std::uint64_t salt) noexcept {
  return splitmix64(key ^ splitmix64(salt + 0x632BE59BD9B4E019ULL));
}

}  // namespace

std::uint64_t hash_string(std::string_view s) noexcept {
  std::uint64_t h = 0xCBF29CE484222325ULL;  // FNV-1a
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

CounterRng::CounterRng(std::uint64_t seed) noexcept : key_(splitmix64(seed)) {}

CounterRng::CounterRng(std::uint64_t seed, std::string_view stream) noexcept
    : key_(combine(splitmix64(seed), hash_string(stream))) {}

CounterRng CounterRng::substream(std::string_view name) const noexcept {
  CounterRng r;
  r.key_ = combine(key_, hash_string(name));
  return r;
}

CounterRng CounterRng::substream(std::uint64_t index) const noexcept {
  CounterRng r;
  r.key_ = combine(key_, index ^ 0xA5A5A5A5A5A5A5A5ULL);
  return r;
}

std::uint64_t CounterRng::bits_at(std::uint64_t counter) const noexcept {
  return splitmix64(key_ ^ splitmix64(counter));
}

double CounterRng::uniform() noexcept {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

// Box-Muller, one output per pair so the stream position is predictable.
double CounterRng::normal() noexcept {
  const double u1 = uniform_open_low();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Complex CounterRng::complex_normal() noexcept {
  const double u1 = uniform_open_low();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double t = 2.0 * std::numbers::pi * u2;
  return {r * std::cos(t), r * std::sin(t)};
}

namespace sampling {

ComplexVector complex_normal_vector(CounterRng& rng, Eigen::Index n) {
  ComplexVector z(n);
  for (Eigen::Index j = 0; j < n; ++j) z[j] = rng.complex_normal();
  return z;
}

ComplexVector sphere_point(CounterRng& rng, Eigen::Index n, const lp::Exponent& p) {
  for (;;) {
    ComplexVector g = complex_normal_vector(rng, n);
    if (lp::norm_p(g, p) > 1e-12) return lp::normalize(g, p);
  }
}

ComplexVector ball_point(CounterRng& rng, Eigen::Index n, const lp::Exponent& p) {
  ComplexVector s = sphere_point(rng, n, p);
  const double r = std::min(std::pow(rng.uniform(), 1.0 / (2.0 * static_cast<double>(n))), 1.0 - 1e-12);
  return r * s;
}

Complex disk_point(CounterRng& rng, double max_radius) {
  const double r = max_radius * std::sqrt(rng.uniform());
  const double t = 2.0 * std::numbers::pi * rng.uniform();
  return std::polar(r, t);
}

ComplexMatrix unitary(CounterRng& rng, Eigen::Index n) {
  ComplexMatrix g(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) g(i, j) = rng.complex_normal();
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(n, n);
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < n; ++j) {
    const double m = std::abs(r(j, j));
    if (m > 0.0) q.col(j) *= r(j, j) / m;
  }
  return q;
}

double radical_inverse(std::uint64_t index, unsigned base) noexcept {
  double inv = 1.0 / base;
  double f = inv;
  double result = 0.0;
  while (index > 0) {
    result += f * static_cast<double>(index % base);
    index /= base;
    f *= inv;
  }
  return result;
}

ComplexVector halton_ball_point(std::uint64_t index, Eigen::Index n, const lp::Exponent& p) {
  static constexpr std::array<unsigned, 24> primes = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37,
                                                      41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89};
  const auto dims = static_cast<std::size_t>(2 * n + 1);
  if (dims > primes.size()) {
    throw Error(ErrorKind::BadParams, "Halton grid supports n <= 11");
  }
  ComplexVector z(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const double u1 = 1.0 - radical_inverse(index, primes[2 * j]);  // in (0, 1]
    const double u2 = radical_inverse(index, primes[2 * j + 1]);
    const double r = std::sqrt(-2.0 * std::log(u1));
    z[j] = std::polar(r, 2.0 * std::numbers::pi * u2);
  }
  const double nz = lp::norm_p(z, p);
  if (nz == 0.0) return z;
  const double u = radical_inverse(index, primes[dims - 1]);
  const double radius = std::min(std::pow(u, 1.0 / (2.0 * static_cast<double>(n))), 1.0 - 1e-12);
  return z * (radius / nz);
}

}  // namespace sampling
}  // namespace schwarz
