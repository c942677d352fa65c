/*
   Copyright 2026 The divfield Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include "divfield/frobenius.hpp"
#include "divfield/gl2.hpp"
#include "divfield/obstruction.hpp"

namespace {

using namespace divfield;

void BM_ScanSerial(benchmark::State& state) {
    const FrobeniusDatum d(2, 1, 1);
    for (auto _ : state) benchmark::DoNotOptimize(reference::scan(d, static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(BM_ScanSerial)->Arg(999)->Arg(20000)->Unit(benchmark::kMillisecond);

void BM_ScanParallel(benchmark::State& state) {
    const FrobeniusDatum d(2, 1, 1);
    for (auto _ : state) benchmark::DoNotOptimize(scan(d, static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(BM_ScanParallel)->Arg(999)->Arg(20000)->Unit(benchmark::kMillisecond);

void BM_TableSerial(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(reference::full_table(static_cast<std::uint64_t>(state.range(0)), 999));
}
BENCHMARK(BM_TableSerial)->Arg(11)->Unit(benchmark::kMillisecond);

void BM_TableParallel(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(full_table(static_cast<std::uint64_t>(state.range(0)), 999));
}
BENCHMARK(BM_TableParallel)->Arg(11)->Unit(benchmark::kMillisecond);

// Local-order method against repeated multiplication.
void BM_OrderLocal(benchmark::State& state) {
    const MatModN m(sigma(FrobeniusDatum(11, 1, 1)), static_cast<std::uint64_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(order_mod(m));
}
BENCHMARK(BM_OrderLocal)->Arg(997)->Arg(9973);

void BM_OrderIteration(benchmark::State& state) {
    const MatModN m(sigma(FrobeniusDatum(11, 1, 1)), static_cast<std::uint64_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(reference::order_by_iteration(m));
}
BENCHMARK(BM_OrderIteration)->Arg(997)->Arg(9973);

}  // namespace

BENCHMARK_MAIN();
