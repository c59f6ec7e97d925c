#include <benchmark/benchmark.h>

#include "breadthlab/camina.hpp"
#include "breadthlab/campaigns.hpp"

using namespace breadthlab;

namespace {

void BM_T03Odd(benchmark::State& state) {
  CampaignOptions o;
  o.field = Field::gf(3);
  o.jobs = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_campaign("t03-odd", o).counts.scanned);
}
BENCHMARK(BM_T03Odd)->Arg(1)->Arg(2)->Unit(benchmark::kSecond)->Iterations(1)->UseRealTime();

void BM_SksSearchN4(benchmark::State& state) {
  const Field f = Field::gf(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(max_sks_rank_subspace(4, f).k_sks);
}
BENCHMARK(BM_SksSearchN4)->Arg(2)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_Correspondence(benchmark::State& state) {
  CampaignOptions o;
  o.triples = 10000;
  for (auto _ : state) benchmark::DoNotOptimize(run_campaign("correspondence", o).counts.scanned);
}
BENCHMARK(BM_Correspondence)->Unit(benchmark::kSecond)->Iterations(1);

}  // namespace

BENCHMARK_MAIN();
