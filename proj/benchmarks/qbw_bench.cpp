#include "qbw/bernoulli.hpp"
#include "qbw/padic.hpp"
#include "qbw/qcore.hpp"
#include "qbw/series.hpp"
#include "qbw/stirling.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace qbw;

void BM_BiPolyMul(benchmark::State& state) {
  const BiPoly a = q_factorial(8);
  const BiPoly b = q_binomial(12, 6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(a * b);
  }
}
BENCHMARK(BM_BiPolyMul);

void BM_RatFuncNormalize(benchmark::State& state) {
  const BiPoly common = q_factorial(6);
  const BiPoly num = common * q_binomial(10, 4);
  const BiPoly den = common * q_int(11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(RatFunc(num, den));
  }
}
BENCHMARK(BM_RatFuncNormalize);

void BM_BernoulliTable(benchmark::State& state) {
  const int rows = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(BernoulliTable(rows));
  }
}
BENCHMARK(BM_BernoulliTable)->Arg(6)->Arg(10);

void BM_StirlingSecond(benchmark::State& state) {
  const int rows = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(StirlingTable::second(rows));
  }
}
BENCHMARK(BM_StirlingSecond)->Arg(6)->Arg(8);

void BM_SeriesExpand(benchmark::State& state) {
  const BernoulliTable betas(8);
  const RatFunc& target = betas.beta(8);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        TruncSeries::expand(target, SeriesVar::Q, 30));
  }
}
BENCHMARK(BM_SeriesExpand);

void BM_RiemannLevel(benchmark::State& state) {
  const int level = static_cast<int>(state.range(0));
  const QPoint qp(5, 25, 6);
  const auto f = [&qp](long x) {
    PadicInt bracket(5, 25, Int(0));
    PadicInt qpow(5, 25, Int(1));
    const PadicInt q = qp.q();
    for (long i = 0; i < x; ++i) {
      bracket += qpow;
      qpow *= q;
    }
    return bracket * bracket;
  };
  for (auto _ : state) {
    benchmark::DoNotOptimize(riemann_sum(f, level, qp));
  }
}
BENCHMARK(BM_RiemannLevel)->Arg(2)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
