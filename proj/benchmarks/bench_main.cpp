/*
 * Copyright 2026 The hodgemhd Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <benchmark/benchmark.h>

#include "hodgemhd/exterior_algebra.hpp"
#include "hodgemhd/hodge.hpp"
#include "hodgemhd/mhd.hpp"
#include "hodgemhd/norms.hpp"

using namespace hodgemhd;

namespace {

void BM_TransformRoundTrip(benchmark::State& state) {
  const GridSpec grid{3, static_cast<int>(state.range(0))};
  const FormField f = random_field(grid, 1, 1.0, 1);
  for (auto _ : state) benchmark::DoNotOptimize(to_spectral(to_physical(f)));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(grid.points() * f.components()));
}
BENCHMARK(BM_TransformRoundTrip)->Arg(16)->Arg(32)->Arg(64);

void BM_NonlinearTerms(benchmark::State& state) {
  const GridSpec grid{3, static_cast<int>(state.range(0))};
  const MhdState s = project_state(dealias(random_field(grid, 1, 2.0, 1)), dealias(random_field(grid, 2, 2.0, 2))).state;
  for (auto _ : state) benchmark::DoNotOptimize(nonlinear_terms(s));
}
BENCHMARK(BM_NonlinearTerms)->Arg(16)->Arg(32);

void BM_ExteriorDerivative(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const GridSpec grid{n, 8};
  const FormField f = random_field(grid, 2, 1.0, 3);
  for (auto _ : state) benchmark::DoNotOptimize(ext_deriv(f));
}
BENCHMARK(BM_ExteriorDerivative)->DenseRange(3, 5);

void BM_DenseWedge(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Multivector a(n), b(n);
  for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
    a[BladeIndex{bits}] = 0.5 + bits;
    b[BladeIndex{bits}] = 1.0 / (1.0 + bits);
  }
  for (auto _ : state) benchmark::DoNotOptimize(wedge(a, b));
}
BENCHMARK(BM_DenseWedge)->DenseRange(3, 8);

void BM_PicardSmallData(benchmark::State& state) {
  const GridSpec grid{3, 16};
  const FormField u = 0.05 * leray_project(dealias(random_field(grid, 1, 2.0, 4)));
  const FormField b = 0.05 * exact_part(dealias(random_field(grid, 2, 2.0, 5)));
  const TimeGrid time{0.0, 0.1, static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(picard_solve(u, b, time));
}
BENCHMARK(BM_PicardSmallData)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_BesovNorm(benchmark::State& state) {
  const GridSpec grid{3, 16};
  const FormField f = leray_project(random_field(grid, 1, 1.0, 6));
  for (auto _ : state) benchmark::DoNotOptimize(besov_norm(f, -0.5, 6.0, 4.0));
}
BENCHMARK(BM_BesovNorm)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
