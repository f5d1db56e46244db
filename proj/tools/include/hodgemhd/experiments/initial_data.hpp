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

#pragma once

// Initial-data families for the experiments. All returned pairs are
// spectral, with u δ-free and b exact (both mean-zero).

#include <cstdint>

#include "hodgemhd/experiments/config.hpp"
#include "hodgemhd/form_field.hpp"

namespace hodgemhd::experiments {

struct InitialData {
  FormField u;
  FormField b;
};

// Zeroes every mode with some |index_j| > band.
FormField band_limited(FormField f, int band);

// kRandom: seeded spectra with modes up to `band`, projected.
// kTaylorGreen: (sin x1 cos x2 cos x3, -cos x1 sin x2 cos x3, 0) with
//   b = d(a) for a seeded 1-form with modes up to 1, ‖b‖₂ = ‖u‖₂ / 10.
// kSingleMode: u = sin(band x2) e1, b = d(cos(band x1) e2) / band.
InitialData make_data(DataFamily family, const GridSpec& grid, int band, std::uint64_t seed);

// ‖u‖_n + ‖b‖_n, the size of the data in the critical Lebesgue space.
double critical_size(const InitialData& data);

// Scales both fields by one factor so that critical_size = size.
InitialData normalized(const InitialData& data, double size);

}  // namespace hodgemhd::experiments
