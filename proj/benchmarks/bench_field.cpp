#include <benchmark/benchmark.h>

#include <random>

#include "breadthlab/field.hpp"

using namespace breadthlab;

namespace {

void BM_FiniteMulAdd(benchmark::State& state) {
  const Field f = Field::gf(2, static_cast<std::uint32_t>(state.range(0)));
  std::mt19937_64 rng(1);
  std::vector<FieldElem> xs;
  for (int i = 0; i < 1024; ++i) xs.push_back(f.element(static_cast<std::uint32_t>(rng() % f.size())));
  FieldElem acc = f.zero();
  for (auto _ : state) {
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) acc += xs[i] * xs[i + 1];
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * 1023);
}
BENCHMARK(BM_FiniteMulAdd)->DenseRange(1, 6);

void BM_RationalMulAdd(benchmark::State& state) {
  const Field q = Field::rational();
  std::vector<FieldElem> xs;
  for (int i = 1; i <= 256; ++i) xs.push_back(q.ratio(i % 7 - 3, i % 5 + 1));
  for (auto _ : state) {
    FieldElem acc = q.zero();
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) acc += xs[i] * xs[i + 1];
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * 255);
}
BENCHMARK(BM_RationalMulAdd);

void BM_QuadraticIrreducible(benchmark::State& state) {
  const Field f = Field::gf(2, 3);
  for (auto _ : state) {
    int count = 0;
    for (std::uint32_t a = 1; a < 8; ++a)
      for (std::uint32_t b = 0; b < 8; ++b)
        for (std::uint32_t c = 0; c < 8; ++c) count += quadratic_irreducible(f.element(a), f.element(b), f.element(c));
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_QuadraticIrreducible);

}  // namespace
