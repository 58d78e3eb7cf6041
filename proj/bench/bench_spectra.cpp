// Serial reference vs OpenMP kernels for trace synthesis and Welch averaging.
// Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include "sqwva/spectra.hpp"

namespace {

using namespace sqwva::spectra;

TraceConfig trace(std::int64_t averages) {
  TraceConfig t;
  t.signal_frequency = 500e3;
  t.sample_rate = 3e6;
  t.rbw = 30e3;
  t.duration = duration_for_averages(t.sample_rate, t.rbw, static_cast<std::size_t>(averages));
  return t;
}

void BM_SimulateSerial(benchmark::State& state) {
  const TraceConfig t = trace(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(serial::simulate_photocurrent(t));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(t.sample_count()));
}

void BM_SimulateParallel(benchmark::State& state) {
  const TraceConfig t = trace(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(simulate_photocurrent(t));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(t.sample_count()));
}

void BM_WelchSerial(benchmark::State& state) {
  const TraceConfig t = trace(state.range(0));
  const TimeSeries ts = simulate_photocurrent(t);
  for (auto _ : state) benchmark::DoNotOptimize(serial::welch_psd(ts, t.rbw, t.window));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_WelchParallel(benchmark::State& state) {
  const TraceConfig t = trace(state.range(0));
  const TimeSeries ts = simulate_photocurrent(t);
  for (auto _ : state) benchmark::DoNotOptimize(welch_psd(ts, t.rbw, t.window));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_SimulateSerial)->Arg(256)->Arg(4096)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SimulateParallel)->Arg(256)->Arg(4096)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WelchSerial)->Arg(256)->Arg(4096)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WelchParallel)->Arg(256)->Arg(4096)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
