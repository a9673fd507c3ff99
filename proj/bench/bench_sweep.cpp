// Copyright 2026 The absep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial reference versus OpenMP region sweep.

#include <benchmark/benchmark.h>

#include "absep/thresholds.hpp"

namespace {

using absep::SweepMode;

void run_sweep(benchmark::State& state, SweepMode mode, bool parallel) {
  const auto res = static_cast<std::size_t>(state.range(0));
  const auto [axis1, axis2] = absep::default_axes(mode, res);
  for (auto _ : state) {
    auto grid = parallel ? absep::sweep_region(mode, axis1, axis2)
                         : absep::sweep_region_serial(mode, axis1, axis2);
    benchmark::DoNotOptimize(grid.cells.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(res * res));
}

void BM_SweepSerial_DPC(benchmark::State& s) { run_sweep(s, SweepMode::DPC, false); }
void BM_SweepParallel_DPC(benchmark::State& s) { run_sweep(s, SweepMode::DPC, true); }
void BM_SweepSerial_ADC(benchmark::State& s) { run_sweep(s, SweepMode::ADC, false); }
void BM_SweepParallel_ADC(benchmark::State& s) { run_sweep(s, SweepMode::ADC, true); }
void BM_SweepSerial_WernerPDC(benchmark::State& s) { run_sweep(s, SweepMode::WernerPDC, false); }
void BM_SweepParallel_WernerPDC(benchmark::State& s) { run_sweep(s, SweepMode::WernerPDC, true); }

}  // namespace

BENCHMARK(BM_SweepSerial_DPC)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel_DPC)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepSerial_ADC)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel_ADC)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepSerial_WernerPDC)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel_WernerPDC)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
