#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "hcube/homogeneity.hpp"
#include "hcube/schedule.hpp"
#include "hcube/twist.hpp"

using namespace hcube;

namespace {

std::vector<PointRep> sample_points(int count, int prefix_len) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> den(1, 255);
  std::vector<PointRep> out;
  for (int i = 0; i < count; ++i) {
    std::vector<Rational> prefix;
    for (int j = 0; j < prefix_len; ++j) {
      const long d = den(rng);
      Rational r(std::uniform_int_distribution<long>(-d, d)(rng), d);
      r.canonicalize();
      prefix.push_back(r);
    }
    out.emplace_back(std::move(prefix), Rational(0));
  }
  return out;
}

void BM_TwistCellApply(benchmark::State& state) {
  const auto points = sample_points(256, 16);
  const CellMap map = state.range(0) ? CellMap::phi_cubed(3, 12) : CellMap::phi(3, 12);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(twist_cell_apply(map, points[i++ % points.size()]));
  }
}
BENCHMARK(BM_TwistCellApply)->Arg(0)->Arg(1);

void BM_MetricD(benchmark::State& state) {
  const auto points = sample_points(256, static_cast<int>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(metric_d(points[i % points.size()], points[(i + 1) % points.size()]));
    ++i;
  }
}
BENCHMARK(BM_MetricD)->Arg(8)->Arg(64)->Arg(256);

void BM_ForwardPartialEval(benchmark::State& state) {
  const int stages = static_cast<int>(state.range(0));
  const Schedule s = build_schedule(PointRep::constant(1), stages);
  const auto points = sample_points(64, 4 * stages + 4);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(forward_partial_eval(s, points[i++ % points.size()], stages));
  }
}
BENCHMARK(BM_ForwardPartialEval)->Arg(4)->Arg(16)->Arg(32);

void BM_Solve(benchmark::State& state) {
  const Rational tau = pow2(-state.range(0));
  const PointRep p = PointRep::constant(1);
  const PointRep q({Rational(-1), Rational(1, 2)}, Rational(-1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve(p, q, tau));
  }
}
BENCHMARK(BM_Solve)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
