#include <benchmark/benchmark.h>

#include "parabola/char_sums.hpp"
#include "parabola/projections.hpp"
#include "parabola/reference.hpp"
#include "parabola/symmetry.hpp"

using namespace parabola;

namespace {

ColumnIntervalSet parabola_below(std::uint64_t p) {
  const auto m = make_field(p);
  return build_parabola_set(m, QuadraticPoly(Elem{1}, Elem{0}, Elem{1}), Variant::lt);
}

void BM_ProjectionNaive(benchmark::State& state) {
  const auto s = parabola_below(static_cast<std::uint64_t>(state.range(0)));
  const auto dirs = all_directions(s.p());
  for (auto _ : state) {
    for (const auto& d : dirs) benchmark::DoNotOptimize(reference::projection_naive(s, d));
  }
}

void BM_ProjectionSerial(benchmark::State& state) {
  const auto s = parabola_below(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(projection_all(s, Exec::serial));
}

void BM_ProjectionParallel(benchmark::State& state) {
  const auto s = parabola_below(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(projection_all(s, Exec::parallel));
}

void BM_ProjectionBitset(benchmark::State& state) {
  const auto s = parabola_below(static_cast<std::uint64_t>(state.range(0))).to_bitset();
  for (auto _ : state) benchmark::DoNotOptimize(projection_all(s, Exec::parallel));
}

void BM_IntervalSumNaive(benchmark::State& state) {
  const auto m = make_field(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reference::max_abs_interval_naive(m));
}

void BM_IntervalSumPrefix(benchmark::State& state) {
  const auto m = make_field(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(char_sum_profile(m));
}

void BM_StabilizerNaive(benchmark::State& state) {
  const auto m = make_field(5);
  const auto s = parabola_below(5).to_bitset();
  for (auto _ : state) benchmark::DoNotOptimize(reference::stabilizer_naive(m, s));
}

void stabilizer(benchmark::State& state, Exec exec) {
  const auto p = static_cast<std::uint64_t>(state.range(0));
  const auto m = make_field(p);
  const auto s = parabola_below(p).to_bitset();
  SearchOptions o;
  o.exec = exec;
  for (auto _ : state) benchmark::DoNotOptimize(stabilizer_bruteforce(m, s, o));
}

void BM_StabilizerSerial(benchmark::State& state) { stabilizer(state, Exec::serial); }
void BM_StabilizerParallel(benchmark::State& state) { stabilizer(state, Exec::parallel); }

void BM_StabilizerStructured(benchmark::State& state) {
  const auto p = static_cast<std::uint64_t>(state.range(0));
  const auto m = make_field(p);
  const auto s = parabola_below(p);
  for (auto _ : state) benchmark::DoNotOptimize(stabilizer_structured(m, s));
}

}  // namespace

BENCHMARK(BM_ProjectionNaive)->Arg(101)->Arg(401)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ProjectionSerial)->Arg(101)->Arg(401)->Arg(1601)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ProjectionParallel)->Arg(101)->Arg(401)->Arg(1601)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ProjectionBitset)->Arg(101)->Arg(401)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IntervalSumNaive)->Arg(499)->Arg(1999)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_IntervalSumPrefix)->Arg(499)->Arg(1999)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_StabilizerNaive)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StabilizerSerial)->Arg(5)->Arg(7)->Arg(11)->Arg(13)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StabilizerParallel)->Arg(5)->Arg(7)->Arg(11)->Arg(13)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StabilizerStructured)->Arg(101)->Arg(1009)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
