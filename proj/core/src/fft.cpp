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

#include "fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <tuple>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hodgemhd::detail {

namespace {

// FFTW plans keyed by (n, N, sign). The planner is not thread-safe, so plan
// creation is serialized; executing an existing plan on new arrays is safe.
class PlanCache {
 public:
  ~PlanCache() {
    for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
  }

  fftw_plan get(const GridSpec& grid, int sign) {
    const auto key = std::make_tuple(grid.n, grid.N, sign);
    std::lock_guard lock(mutex_);
    if (auto it = plans_.find(key); it != plans_.end()) return it->second;
    std::vector<int> dims(static_cast<std::size_t>(grid.n), grid.N);
    std::vector<Complex> scratch(grid.points());
    auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
    fftw_plan plan = fftw_plan_dft(grid.n, dims.data(), buf, buf, sign,
                                   FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (plan == nullptr) throw std::runtime_error("fftw plan creation failed");
    plans_.emplace(key, plan);
    return plan;
  }

 private:
  std::mutex mutex_;
  std::map<std::tuple<int, int, int>, fftw_plan> plans_;
};

PlanCache& plan_cache() {
  static PlanCache cache;
  return cache;
}

void execute(const GridSpec& grid, std::span<Complex> data, int sign) {
  if (data.size() != grid.points()) throw std::invalid_argument("fft buffer size mismatch");
  auto* buf = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(plan_cache().get(grid, sign), buf, buf);
}

}  // namespace

void fft_forward(const GridSpec& grid, std::span<Complex> data) { execute(grid, data, FFTW_FORWARD); }

void fft_backward(const GridSpec& grid, std::span<Complex> data) { execute(grid, data, FFTW_BACKWARD); }

}  // namespace hodgemhd::detail
