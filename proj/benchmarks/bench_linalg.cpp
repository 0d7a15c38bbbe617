// Copyright 2026 The tlhad Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "tlhad/hadamard.hpp"
#include "tlhad/linalg.hpp"

namespace tlhad {
namespace {

void BM_Kron(benchmark::State& state) {
  const auto n = state.range(0);
  const Matrix a = fourier(n), b = fourier(n);
  for (auto _ : state) benchmark::DoNotOptimize(kron(a, b));
}
BENCHMARK(BM_Kron)->Arg(3)->Arg(6)->Arg(9);

void BM_MatMul(benchmark::State& state) {
  const auto n = state.range(0);
  const Matrix a = fourier(n);
  for (auto _ : state) benchmark::DoNotOptimize(a * a);
  state.SetComplexityN(n);
}
BENCHMARK(BM_MatMul)->RangeMultiplier(2)->Range(8, 128)->Complexity(benchmark::oNCubed);

void BM_Inverse(benchmark::State& state) {
  const Matrix a = fourier(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(inverse(a));
}
BENCHMARK(BM_Inverse)->Arg(8)->Arg(64);

}  // namespace
}  // namespace tlhad
