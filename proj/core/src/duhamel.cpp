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

#include "hodgemhd/duhamel.hpp"

#include <cmath>
#include <stdexcept>

namespace hodgemhd {

void TimeGrid::validate() const {
  if (M < 1) throw std::invalid_argument("time grid needs at least one step");
  if (!(T > t0)) throw std::invalid_argument("time grid horizon must exceed its start");
}

void FieldSeries::validate() const {
  time.validate();
  if (values.size() != time.nodes()) {
    throw std::invalid_argument("series has " + std::to_string(values.size()) + " samples for " +
                                std::to_string(time.nodes()) + " nodes");
  }
  for (const FormField& f : values) values.front().require_compatible(f, "field series");
}

double phi1(double z) {
  if (std::abs(z) < 1e-3) return 1.0 + z * (1.0 / 2.0 + z * (1.0 / 6.0 + z / 24.0));
  return std::expm1(z) / z;
}

double phi2(double z) {
  if (std::abs(z) < 1e-3) return 1.0 / 2.0 + z * (1.0 / 6.0 + z * (1.0 / 24.0 + z / 120.0));
  return (std::expm1(z) - z) / (z * z);
}

DuhamelStepper::DuhamelStepper(const GridSpec& grid, int grade, double dt)
    : dt_(dt), integral_(grid, grade, Representation::kSpectral) {
  if (!(dt > 0.0)) throw std::invalid_argument("Duhamel step must be positive");
  const auto& k2 = wave_table(grid).k_squared;
  decay_.resize(k2.size());
  weight_left_.resize(k2.size());
  weight_right_.resize(k2.size());
  for (std::size_t p = 0; p < k2.size(); ++p) {
    const double z = -dt * k2[p];
    const double p1 = phi1(z);
    const double p2 = phi2(z);
    decay_[p] = std::exp(z);
    weight_left_[p] = dt * (p1 - p2);
    weight_right_[p] = dt * p2;
  }
}

void DuhamelStepper::advance(const FormField& left, const FormField& right) {
  integral_.require_compatible(left, "Duhamel forcing");
  integral_.require_compatible(right, "Duhamel forcing");
  for (std::size_t c = 0; c < integral_.components(); ++c) {
    Complex* acc = integral_.modes(c).data();
    const Complex* a = left.modes(c).data();
    const Complex* b = right.modes(c).data();
    for (std::size_t p = 0; p < decay_.size(); ++p) {
      acc[p] = decay_[p] * acc[p] + weight_left_[p] * a[p] + weight_right_[p] * b[p];
    }
  }
}

FieldSeries duhamel(OperatorKind kind, const FieldSeries& forcing) {
  forcing.validate();
  const FormField& first = forcing.values.front();
  if (!first.is_spectral()) throw std::invalid_argument("duhamel expects spectral forcing");
  for (const FormField& f : forcing.values) require_constraint(f, kind);

  FieldSeries out{forcing.time, {}};
  out.values.reserve(forcing.time.nodes());
  DuhamelStepper stepper(first.grid(), first.grade(), forcing.time.dt());
  out.values.push_back(stepper.value());
  for (int m = 0; m < forcing.time.M; ++m) {
    stepper.advance(forcing.values[static_cast<std::size_t>(m)], forcing.values[static_cast<std::size_t>(m) + 1]);
    out.values.push_back(stepper.value());
  }
  return out;
}

}  // namespace hodgemhd
