#include <benchmark/benchmark.h>

#include "glidekit/glides.hpp"
#include "glidekit/graded_ring.hpp"
#include "glidekit/ktheory.hpp"
#include "glidekit/poset.hpp"
#include "glidekit/qsym.hpp"
#include "glidekit/schur.hpp"

using namespace glidekit;

namespace {

void BM_BuildPoset(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_poset(Composition({1, 2, 1}), n));
}
BENCHMARK(BM_BuildPoset)->DenseRange(4, 8);

void BM_Mobius(benchmark::State& state) {
  const auto p = build_poset(Composition({1, 2, 1}), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mobius(p));
  state.counters["elements"] = static_cast<double>(p.size());
}
BENCHMARK(BM_Mobius)->DenseRange(4, 8);

void BM_Glide(benchmark::State& state) {
  const auto method = static_cast<GlideMethod>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(glide_polynomial(Composition({1, 3, 2}), 6, method));
  state.SetLabel(std::string(glide_method_name(method)));
}
BENCHMARK(BM_Glide)->DenseRange(0, 2);

void BM_OverlappingShuffle(benchmark::State& state) {
  const Composition a({1, 2, 1, 3});
  const Composition b({2, 1, 2});
  for (auto _ : state) benchmark::DoNotOptimize(overlapping_shuffle(a, b));
}
BENCHMARK(BM_OverlappingShuffle);

void BM_GlideStructureConstants(benchmark::State& state) {
  const int D = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(glide_structure_constants(Composition({1}), Composition({2, 1}), D));
}
BENCHMARK(BM_GlideStructureConstants)->DenseRange(4, 8, 2);

void BM_KnutsonClass(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(knutson_class(Composition({1, 3}), 5, 4));
}
BENCHMARK(BM_KnutsonClass);

void BM_ChernSubstitute(benchmark::State& state) {
  const auto cls = knutson_class(Composition({1, 2}), 4, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(chern_substitute(cls));
}
BENCHMARK(BM_ChernSubstitute)->DenseRange(2, 4);

void BM_SsytEnumerate(benchmark::State& state) {
  // lr_coefficient caches its results, so time the tableau enumeration behind it.
  const SkewShape shape(Partition{5, 4, 3, 1}, Partition{3, 2, 1, 0});
  for (auto _ : state) benchmark::DoNotOptimize(ssyt_enumerate(shape, WeakComposition{3, 2, 2}));
}
BENCHMARK(BM_SsytEnumerate);

void BM_BukStructureConstant(benchmark::State& state) {
  const auto L = parse_partition_tuple("1,0,0;2,1,0;1,1,0");
  const auto M = parse_partition_tuple("2,1,0;1,0,0");
  const auto N = parse_partition_tuple("1,0,0;3,2,1;2,1,0;1,1,0");
  const auto jobs = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(buk_structure_constant(L, M, N, 3, jobs));
}
BENCHMARK(BM_BukStructureConstant)->Arg(1)->Arg(4);

void BM_SchurRingProduct(benchmark::State& state) {
  const auto ring = schur_ring_data(3, 8);
  for (auto _ : state) benchmark::DoNotOptimize(qsym_r_product({"1,0,0", "2,1,0"}, {"2,1,0"}, ring, 3));
}
BENCHMARK(BM_SchurRingProduct);

}  // namespace

BENCHMARK_MAIN();
