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

#include <complex>
#include <span>

#include "hodgemhd/form_field.hpp"

namespace hodgemhd::detail {

// In-place unnormalized n-dimensional DFTs over a grid's N^n points.
// forward: sum_x f(x) e^{-ikx};  backward: sum_k F(k) e^{+ikx}.
void fft_forward(const GridSpec& grid, std::span<Complex> data);
void fft_backward(const GridSpec& grid, std::span<Complex> data);

}  // namespace hodgemhd::detail
