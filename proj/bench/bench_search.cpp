#include <benchmark/benchmark.h>

#include "binperm/index_agw.hpp"
#include "binperm/perm_test.hpp"
#include "binperm/search.hpp"

namespace {

using namespace binperm;

SearchConfig config(int n, Tester tester) {
  SearchConfig c;
  c.n = n;
  c.tester = tester;
  c.skip_linearized = true;
  return c;
}

void BM_SearchSerialReference(benchmark::State& state) {
  const auto c = config(static_cast<int>(state.range(0)), Tester::Direct);
  for (auto _ : state) benchmark::DoNotOptimize(search_field_serial(c));
}
BENCHMARK(BM_SearchSerialReference)->DenseRange(6, 9)->Unit(benchmark::kMillisecond);

void BM_SearchParallel(benchmark::State& state) {
  auto c = config(static_cast<int>(state.range(0)), Tester::Auto);
  c.workers = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(search_field(c));
}
BENCHMARK(BM_SearchParallel)
    ->ArgsProduct({{6, 7, 8, 9, 10}, {1, 2, 4}})
    ->Unit(benchmark::kMillisecond);

void BM_SearchTester(benchmark::State& state) {
  const auto tester = static_cast<Tester>(state.range(1));
  auto c = config(static_cast<int>(state.range(0)), tester);
  c.workers = 1;
  for (auto _ : state) benchmark::DoNotOptimize(search_field(c));
  state.SetLabel(std::string(tester_name(tester)));
}
BENCHMARK(BM_SearchTester)
    ->ArgsProduct({{8, 10}, {static_cast<long>(Tester::Direct), static_cast<long>(Tester::Agw),
                             static_cast<long>(Tester::Auto)}})
    ->Unit(benchmark::kMillisecond);

// One high-index pair: the AGW map walks d elements instead of q.
void BM_PairDirect(benchmark::State& state) {
  const Field f(12);
  const Binomial b(f, 1846, f.exp(1));
  OccupancyMask scratch(f.size());
  for (auto _ : state) benchmark::DoNotOptimize(is_pp_direct(b, scratch));
}
BENCHMARK(BM_PairDirect);

void BM_PairAgw(benchmark::State& state) {
  const Field f(12);
  const auto form = compute_index(f, 1846);
  OccupancyMask scratch(f.size());
  for (auto _ : state) benchmark::DoNotOptimize(is_pp_via_agw(f, form, f.exp(1), scratch));
}
BENCHMARK(BM_PairAgw);

}  // namespace

BENCHMARK_MAIN();
