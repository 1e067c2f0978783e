#include <benchmark/benchmark.h>

#include "schwarz/differentiation.hpp"
#include "schwarz/gallery.hpp"

using namespace schwarz;
namespace gal = holo::gallery;

namespace {

holo::MapExpr sample_map(Eigen::Index n) {
  ComplexVector a = ComplexVector::Zero(n);
  a[0] = Complex(0.3, 0.1);
  return gal::ball_automorphism(a);
}

void BM_CauchyJacobian(benchmark::State& state) {
  const auto n = state.range(0);
  const auto f = sample_map(n);
  const ComplexVector z = ComplexVector::Constant(n, Complex(0.1, -0.05));
  holo::CauchyConfig cfg;
  cfg.nodes = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(holo::complex_jacobian(f, z, cfg));
}
BENCHMARK(BM_CauchyJacobian)->ArgsProduct({{2, 5, 10}, {32, 64}});

void BM_FiniteDifferenceJacobian(benchmark::State& state) {
  const auto n = state.range(0);
  const auto f = sample_map(n);
  const ComplexVector z = ComplexVector::Constant(n, Complex(0.1, -0.05));
  for (auto _ : state) benchmark::DoNotOptimize(holo::complex_jacobian_fd(f, z));
}
BENCHMARK(BM_FiniteDifferenceJacobian)->Arg(2)->Arg(5)->Arg(10);

void BM_RadialDerivative(benchmark::State& state) {
  const auto f = gal::power_slice(3, 2);
  const lp::BoundaryPoint e1(unit_vector(3, 0), lp::Exponent::finite(3.0));
  for (auto _ : state) benchmark::DoNotOptimize(holo::radial_boundary_derivative(f, e1, unit_vector(3, 0)));
}
BENCHMARK(BM_RadialDerivative);

}  // namespace
