#include <benchmark/benchmark.h>

#include "cubecx/completion.hpp"
#include "cubecx/divisibility.hpp"
#include "cubecx/fixpoints.hpp"
#include "cubecx/generators.hpp"
#include "cubecx/host.hpp"
#include "cubecx/isomorphism.hpp"
#include "cubecx/topology.hpp"

using namespace cubecx;

namespace {

void BM_Hyperplanes(benchmark::State& st) {
  auto c = configuration_space(graphs::cycle(static_cast<std::size_t>(st.range(0))), 2).complex;
  for (auto _ : st) benchmark::DoNotOptimize(HyperplaneStructure(c).size());
}
BENCHMARK(BM_Hyperplanes)->DenseRange(5, 9, 2);

void BM_StrongDivisibility(benchmark::State& st) {
  auto c = droms(graphs::path(static_cast<std::size_t>(st.range(0)))).complex;
  HyperplaneStructure hs(c);
  for (auto _ : st) benchmark::DoNotOptimize(is_strongly_divisible(c, hs).strongly_divisible);
}
BENCHMARK(BM_StrongDivisibility)->DenseRange(2, 5);

void BM_BuildHost(benchmark::State& st) {
  auto pc = configuration_space(graphs::cycle(static_cast<std::size_t>(st.range(0))), 2);
  for (auto _ : st) benchmark::DoNotOptimize(build_host(pc.complex, pc.pattern).host.num_vertices());
}
BENCHMARK(BM_BuildHost)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_HostRoutes(benchmark::State& st) {
  auto fx = fixture("genus2");
  HostOptions o;
  o.squares_then_fill = st.range(0) != 0;
  for (auto _ : st) benchmark::DoNotOptimize(build_host(fx.complex, *fx.pattern, o).host.num_edges());
}
BENCHMARK(BM_HostRoutes)->Arg(0)->Arg(1);

void BM_FixedSetBraid(benchmark::State& st) {
  auto pc = configuration_space(graphs::cycle(5), 2);
  auto b = build_extended_host(build_host(pc.complex, pc.pattern), static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(fixed_set(b.extended->complex, {b.extended->phi}).complex.num_vertices());
}
BENCHMARK(BM_FixedSetBraid)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_Completion(benchmark::State& st) {
  auto q = fixture("genus2").complex;
  for (auto _ : st) benchmark::DoNotOptimize(canonical_completion(q).completed.num_edges());
}
BENCHMARK(BM_Completion)->Unit(benchmark::kMillisecond);

void BM_Median(benchmark::State& st) {
  auto pc = configuration_space(graphs::cycle(5), 2);
  auto e = build_e_complex(pc.complex, pc.pattern);
  for (auto _ : st) benchmark::DoNotOptimize(is_median_graph(e).median);
}
BENCHMARK(BM_Median);

void BM_Isomorphism(benchmark::State& st) {
  auto n = static_cast<std::size_t>(st.range(0));
  auto a = configuration_space(graphs::cycle(n), 2).complex;
  auto b = configuration_space(graphs::cycle(n), n - 2).complex;
  for (auto _ : st) benchmark::DoNotOptimize(is_isomorphic(a, b).has_value());
}
BENCHMARK(BM_Isomorphism)->DenseRange(5, 7);

}  // namespace
