// Copyright 2026 The LatticeQS Authors
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

#include <benchmark/benchmark.h>

#include "lqs/evolution.hpp"
#include "lqs/models.hpp"
#include "lqs/state.hpp"

namespace {

void BM_ApplySum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto h = lqs::build_schwinger({n, 0.5});
  const auto s = lqs::bare_vacuum(n);
  for (auto _ : state) benchmark::DoNotOptimize(lqs::apply(h, s));
}
BENCHMARK(BM_ApplySum)->Arg(8)->Arg(12)->Arg(16);

void BM_CompiledApply(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const lqs::CompiledPauliSum h(lqs::build_schwinger({n, 0.5}));
  const auto s = lqs::bare_vacuum(n);
  auto out = s;
  for (auto _ : state) {
    h.apply(s, out);
    benchmark::ClobberMemory();
  }
}
BENCHMARK(BM_CompiledApply)->Arg(8)->Arg(12)->Arg(16);

void BM_ExpTerm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const lqs::PauliTerm xx(std::string(n - 2, 'I') + "XX");
  auto s = lqs::bare_vacuum(n);
  for (auto _ : state) {
    lqs::exp_term_apply_inplace(0.01, xx, s);
    benchmark::ClobberMemory();
  }
}
BENCHMARK(BM_ExpTerm)->Arg(12)->Arg(16)->Arg(20);

void BM_TrotterSweep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const lqs::EvolutionPlan plan(lqs::build_schwinger({n, 0.5}), 1.0, 100);
  auto s = lqs::bare_vacuum(n);
  for (auto _ : state) {
    plan.apply_sweep(s);
    benchmark::ClobberMemory();
  }
}
BENCHMARK(BM_TrotterSweep)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
