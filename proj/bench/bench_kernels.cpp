// Copyright 2026 The threelines Authors
// SPDX-License-Identifier: Apache-2.0

// OpenMP kernels against their serial twins. On a single core the pairs should
// time alike; the gap grows with THREADS on larger machines.

#include <benchmark/benchmark.h>

#include <cmath>

#include "threelines/optimizers.hpp"
#include "threelines/parallel.hpp"
#include "threelines/quadrature.hpp"

using namespace threelines;

namespace {

// Real part of phi along Im z = alpha for a fixed (p, q): the expensive
// per-point quadrature the verification grid is built from.
RealPhiParts phi_at(std::size_t i, std::size_t n) {
  const double x = -4.0 + 8.0 * static_cast<double>(i) / static_cast<double>(n - 1);
  return phi_real_parts(Alpha(0.3), StripPoint(x, 0.3), Tolerance{1e-10, 1e-10, 4000});
}

void BM_PhiGrid(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto v = parallel::map_indices<RealPhiParts>(n, [&](std::size_t i) { return phi_at(i, n); });
    benchmark::DoNotOptimize(v.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_PhiGridSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto v = parallel::map_indices_serial<RealPhiParts>(n, [&](std::size_t i) { return phi_at(i, n); });
    benchmark::DoNotOptimize(v.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

LineFunction bumpy() {
  LineFunction f;
  f.eval = [](double x) { return std::exp(-x * x / 8.0) * (1.0 + 0.3 * std::cos(5.0 * x)) / std::cosh(0.1 * x); };
  f.envelope = Envelope{0.0, 0.0, 0.0, 1.3, 0.0};
  return f;
}

void BM_SupScan(benchmark::State& state) {
  const LineFunction f = bumpy();
  for (auto _ : state) benchmark::DoNotOptimize(sup_scan_interval(f, -20.0, 20.0));
}

void BM_SupScanSerial(benchmark::State& state) {
  const LineFunction f = bumpy();
  for (auto _ : state) benchmark::DoNotOptimize(sup_scan_interval_serial(f, -20.0, 20.0));
}

}  // namespace

BENCHMARK(BM_PhiGrid)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PhiGridSerial)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SupScan)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_SupScanSerial)->Unit(benchmark::kMicrosecond);

int main(int argc, char** argv) {
  parallel::apply_env_thread_cap();
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
