#include <benchmark/benchmark.h>

#include <random>

#include "breadthlab/bivector.hpp"
#include "breadthlab/constructions.hpp"
#include "breadthlab/subspace.hpp"

using namespace breadthlab;

namespace {

Matrix random_skew(Field f, std::size_t n, std::mt19937_64& rng) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = f.random(rng);
      m(j, i) = -m(i, j);
    }
  return m;
}

void BM_Rank(benchmark::State& state) {
  const Field f = Field::gf(3);
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(2);
  Matrix m(f, n, n);
  for (auto& x : m.entries()) x = f.random(rng);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_Rank)->RangeMultiplier(2)->Range(4, 64);

void BM_Pfaffian(benchmark::State& state) {
  const Field f = Field::gf(7);
  std::mt19937_64 rng(3);
  const Matrix m = random_skew(f, static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(pfaffian(m));
}
BENCHMARK(BM_Pfaffian)->DenseRange(4, 16, 4);

void BM_EnumerateSubspaces(benchmark::State& state) {
  const Field f = Field::gf(3);
  const auto d = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    SubspaceEnumerator en(f, 6, d);
    Subspace s;
    std::uint64_t count = 0;
    while (en.next(s)) ++count;
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumerateSubspaces)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_BreadthType(benchmark::State& state) {
  const LieAlgebra l = free_two_step(static_cast<std::size_t>(state.range(0)), Field::gf(3));
  for (auto _ : state) benchmark::DoNotOptimize(breadth_type(l));
}
BENCHMARK(BM_BreadthType)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_BracketFreeDim2(benchmark::State& state) {
  const Field f = Field::gf(3);
  std::mt19937_64 rng(4);
  std::vector<Subspace> ideals;
  while (ideals.size() < 64) {
    std::vector<Vector> rows(2, Vector(6, f.zero()));
    for (auto& r : rows)
      for (auto& x : r) x = f.random(rng);
    const Subspace s = Subspace::span(f, 6, rows);
    if (s.dim() == 2) ideals.push_back(s);
  }
  for (auto _ : state)
    for (const auto& s : ideals) benchmark::DoNotOptimize(bracket_free(s, 4));
  state.SetItemsProcessed(state.iterations() * 64);
}
BENCHMARK(BM_BracketFreeDim2);

}  // namespace
