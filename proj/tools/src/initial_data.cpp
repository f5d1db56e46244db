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

#include "hodgemhd/experiments/initial_data.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "hodgemhd/hodge.hpp"
#include "hodgemhd/mhd.hpp"

namespace hodgemhd::experiments {

namespace {

FormField sampled(const GridSpec& grid, int grade, const auto& value) {
  FormField f(grid, grade, Representation::kPhysical);
  const std::size_t N = static_cast<std::size_t>(grid.N);
  std::vector<double> x(static_cast<std::size_t>(grid.n));
  for (std::size_t p = 0; p < grid.points(); ++p) {
    std::size_t rest = p;
    for (int j = grid.n - 1; j >= 0; --j) {
      x[static_cast<std::size_t>(j)] = grid.spacing() * static_cast<double>(rest % N);
      rest /= N;
    }
    for (std::size_t c = 0; c < f.components(); ++c) f.values(c)[p] = value(c, x);
  }
  return to_spectral(f);
}

}  // namespace

FormField band_limited(FormField f, int band) {
  const auto& waves = wave_table(f.grid());
  for (std::size_t p = 0; p < f.grid().points(); ++p) {
    bool outside = false;
    for (const auto& axis : waves.index) outside |= std::abs(axis[p]) > band;
    if (!outside) continue;
    for (std::size_t c = 0; c < f.components(); ++c) f.modes(c)[p] = Complex{};
  }
  return f;
}

InitialData make_data(DataFamily family, const GridSpec& grid, int band, std::uint64_t seed) {
  grid.validate();
  switch (family) {
    case DataFamily::kRandom: {
      const FormField u = band_limited(random_field(grid, 1, 1.0, seed), band);
      const FormField b = band_limited(random_field(grid, 2, 1.0, seed ^ 0x9e3779b97f4a7c15ull), band);
      return {project_state(u, b).state.u, exact_part(b)};
    }
    case DataFamily::kTaylorGreen: {
      if (grid.n != 3) throw std::invalid_argument("Taylor-Green data needs n = 3");
      FormField u = sampled(grid, 1, [](std::size_t c, const std::vector<double>& x) {
        if (c == 0) return std::sin(x[0]) * std::cos(x[1]) * std::cos(x[2]);
        if (c == 1) return -std::cos(x[0]) * std::sin(x[1]) * std::cos(x[2]);
        return 0.0;
      });
      FormField b = ext_deriv(band_limited(random_field(grid, 1, 1.0, seed), 1));
      b *= 0.1 * l2_norm_spectral(u) / l2_norm_spectral(b);
      return {std::move(u), std::move(b)};
    }
    case DataFamily::kSingleMode: {
      const double k = band;
      FormField u = sampled(grid, 1, [k](std::size_t c, const std::vector<double>& x) {
        return c == 0 ? std::sin(k * x[1]) : 0.0;
      });
      FormField a = sampled(grid, 1, [k](std::size_t c, const std::vector<double>& x) {
        return c == 1 ? std::cos(k * x[0]) / k : 0.0;
      });
      return {std::move(u), ext_deriv(a)};
    }
  }
  throw std::invalid_argument("unknown data family");
}

double critical_size(const InitialData& data) {
  const double n = data.u.grid().n;
  return lp_norm(to_physical(data.u), n) + lp_norm(to_physical(data.b), n);
}

InitialData normalized(const InitialData& data, double size) {
  const double current = critical_size(data);
  if (current == 0.0) throw std::invalid_argument("cannot normalize zero data");
  const double s = size / current;
  return {s * data.u, s * data.b};
}

}  // namespace hodgemhd::experiments
