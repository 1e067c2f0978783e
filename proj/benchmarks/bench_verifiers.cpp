#include <benchmark/benchmark.h>

#include "schwarz/caratheodory.hpp"
#include "schwarz/gallery.hpp"
#include "schwarz/rigidity.hpp"
#include "schwarz/schwarz_verify.hpp"

using namespace schwarz;
namespace gal = holo::gallery;
using lp::Exponent;

namespace {

void BM_SchwarzPick(benchmark::State& state) {
  const auto f = gal::first_times_last(3);
  verify::VerifyConfig cfg;
  cfg.samples = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify::verify_schwarz_pick(f, Exponent::finite(3.0), cfg));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SchwarzPick)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_BoundaryNormal(benchmark::State& state) {
  const auto f = gal::power_slice(3, 2);
  const lp::BoundaryPoint e1(unit_vector(3, 0), Exponent::finite(4.0));
  for (auto _ : state) benchmark::DoNotOptimize(verify::verify_boundary_normal(f, e1));
}
BENCHMARK(BM_BoundaryNormal)->Unit(benchmark::kMillisecond);

void BM_MetricOptimizer(benchmark::State& state) {
  cara::MetricQuery q;
  q.base = ComplexVector::Zero(state.range(0));
  q.direction = ComplexVector::Constant(state.range(0), Complex(0.4, -0.2));
  q.exponent = Exponent::finite(3.0);
  for (auto _ : state) benchmark::DoNotOptimize(cara::metric_lower_bound_opt(q, cara::CompetitorKind::LinearDual));
}
BENCHMARK(BM_MetricOptimizer)->Arg(2)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_RigidityIdentity(benchmark::State& state) {
  const Exponent p = Exponent::finite(2.0);
  const rigidity::Instance inst{gal::identity(3), rigidity::basis_anchors(rigidity::Variant::P2, 3, p), p,
                                rigidity::Variant::P2};
  for (auto _ : state) benchmark::DoNotOptimize(rigidity::check_rigidity(inst));
}
BENCHMARK(BM_RigidityIdentity)->Unit(benchmark::kMillisecond);

}  // namespace
