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

#include "tlhad/baxter.hpp"
#include "tlhad/hadamard.hpp"
#include "tlhad/master.hpp"
#include "tlhad/tlrep.hpp"

namespace tlhad {
namespace {

TLAnsatz fourier_ansatz(std::int64_t n, std::size_t sites) {
  const MasterSpec spec = fourier_master(n);
  const Matrix m = reconstruct_m(master_matrix(spec), fourier(n), spec.lambdas());
  return TLAnsatz(m, {spec.exponents().begin(), spec.exponents().end()}, {}, {}, sites);
}

void BM_BuildLocalGenerator(benchmark::State& state) {
  const TLAnsatz a = fourier_ansatz(state.range(0), 3);
  for (auto _ : state) benchmark::DoNotOptimize(build_local_generator(a));
}
BENCHMARK(BM_BuildLocalGenerator)->DenseRange(2, 6);

void BM_VerifyTL(benchmark::State& state) {
  const TLAnsatz a = fourier_ansatz(state.range(0), static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_tl(a));
}
BENCHMARK(BM_VerifyTL)->Args({2, 3})->Args({3, 3})->Args({5, 3})->Args({3, 4})->Unit(benchmark::kMillisecond);

// Dense embedding then multiply, against the structured apply.
void BM_EmbedThenMultiply(benchmark::State& state) {
  const std::size_t n = 3, sites = 4;
  const Matrix t = build_local_generator(fourier_ansatz(3, sites));
  const Matrix x = Matrix::identity(81);
  for (auto _ : state) benchmark::DoNotOptimize(embed(t, 2, sites, n) * x);
}
BENCHMARK(BM_EmbedThenMultiply)->Unit(benchmark::kMicrosecond);

void BM_ApplyEmbedded(benchmark::State& state) {
  const std::size_t n = 3, sites = 4;
  const Matrix t = build_local_generator(fourier_ansatz(3, sites));
  const Matrix x = Matrix::identity(81);
  for (auto _ : state) benchmark::DoNotOptimize(apply_embedded(t, 2, sites, n, x));
}
BENCHMARK(BM_ApplyEmbedded)->Unit(benchmark::kMicrosecond);

void BM_SpectralYBE(benchmark::State& state) {
  const TLAnsatz a = fixture_u2_ansatz();
  const BraidData b = braid_from_tl(build_local_generator(a), a.alpha());
  const auto samples = default_spectral_samples();
  for (auto _ : state) benchmark::DoNotOptimize(check_spectral_ybe(b, samples));
}
BENCHMARK(BM_SpectralYBE)->Unit(benchmark::kMillisecond);

void BM_SearchH0(benchmark::State& state) {
  const Matrix u = h0();
  for (auto _ : state) benchmark::DoNotOptimize(search_master_representation(u, 12, 12));
}
BENCHMARK(BM_SearchH0)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace tlhad

BENCHMARK_MAIN();
