#include <benchmark/benchmark.h>

#include "u5slopes/modforms.hpp"
#include "u5slopes/op_matrix.hpp"
#include "u5slopes/slopes.hpp"

namespace {

u5s::RingElement sample_element(const u5s::PrecisionContext& ctx, std::uint64_t seed) {
  u5s::RingElement x = u5s::RingElement::zero(ctx);
  for (int m = 0; m < 4; ++m) {
    seed = seed * 6364136223846793005ULL + 1442695040888963407ULL;
    x = x + u5s::RingElement::from_int(ctx, static_cast<std::int64_t>(seed >> 8)).mul_pi_pow(m);
  }
  return x;
}

void BM_RingMul(benchmark::State& state) {
  u5s::PrecisionContext ctx(static_cast<unsigned>(state.range(0)));
  u5s::RingElement a = sample_element(ctx, 1), b = sample_element(ctx, 2);
  for (auto _ : state) {
    a = a * b;
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_RingMul)->Arg(32)->Arg(40)->Arg(100);

void BM_SeriesMul(benchmark::State& state) {
  u5s::PrecisionContext ctx(32);
  const int window = static_cast<int>(state.range(0));
  u5s::LaurentSeries f = u5s::big_t_series(ctx, window);
  for (auto _ : state) {
    auto p = u5s::ls_mul(f, f, window);
    benchmark::DoNotOptimize(p);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SeriesMul)->Arg(128)->Arg(256)->Arg(512)->Complexity();

void BM_ColumnSet(benchmark::State& state) {
  u5s::PrecisionContext ctx(32);
  const int n = static_cast<int>(state.range(0));
  u5s::Workspace ws = u5s::make_workspace(ctx, n);
  for (auto _ : state) {
    auto cols = u5s::build_column_set(ws, {25, 1}, n);
    benchmark::DoNotOptimize(cols);
  }
}
BENCHMARK(BM_ColumnSet)->Arg(5)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_Berkowitz(benchmark::State& state) {
  u5s::PrecisionContext ctx(32);
  const int n = static_cast<int>(state.range(0));
  u5s::UMatrix m;
  m.n = n;
  m.m.assign(static_cast<std::size_t>(n) * n, u5s::RingElement::zero(ctx));
  std::uint64_t seed = 5;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) m.at(i, j) = sample_element(ctx, ++seed);
  for (auto _ : state) {
    auto cp = u5s::berkowitz_charpoly(m);
    benchmark::DoNotOptimize(cp);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Berkowitz)->Arg(10)->Arg(20)->Arg(30)->Complexity()->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
