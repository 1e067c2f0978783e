#include <benchmark/benchmark.h>

#include "schwarz/gallery.hpp"
#include "schwarz/lp_geometry.hpp"
#include "schwarz/random.hpp"

using namespace schwarz;
namespace gal = holo::gallery;

namespace {

void BM_EvaluateBlaschke(benchmark::State& state) {
  const auto n = state.range(0);
  const auto f = gal::diagonal_blaschke(ComplexVector::Constant(n, Complex(0.2, 0.3)));
  CounterRng rng(1);
  const ComplexVector z = sampling::ball_point(rng, n, lp::Exponent::infinity());
  for (auto _ : state) benchmark::DoNotOptimize(f(z));
}
BENCHMARK(BM_EvaluateBlaschke)->Arg(2)->Arg(8)->Arg(32);

void BM_EvaluateComposition(benchmark::State& state) {
  const auto f = holo::MapExpr::compose(gal::ball_automorphism(cvec({0.3, 0.1, 0.0})), gal::square_first(3));
  const ComplexVector z = cvec({0.2, Complex(0, 0.3), -0.1});
  for (auto _ : state) benchmark::DoNotOptimize(f(z));
}
BENCHMARK(BM_EvaluateComposition);

void BM_NormP(benchmark::State& state) {
  CounterRng rng(2);
  const ComplexVector z = sampling::complex_normal_vector(rng, state.range(0));
  const auto p = lp::Exponent::finite(3.0);
  for (auto _ : state) benchmark::DoNotOptimize(lp::norm_p(z, p));
}
BENCHMARK(BM_NormP)->Arg(4)->Arg(64)->Arg(1024);

void BM_SphereSample(benchmark::State& state) {
  CounterRng rng(3);
  const auto p = lp::Exponent::finite(4.0);
  for (auto _ : state) benchmark::DoNotOptimize(sampling::sphere_point(rng, 5, p));
}
BENCHMARK(BM_SphereSample);

}  // namespace
