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

// Duhamel integrals I(t) = ∫_0^t e^{-(t-s)A} F(s) ds for A one of the Hodge
// Laplacian, Stokes or Maxwell operators, with F sampled on a uniform time
// grid. The kernel is applied exactly per Fourier mode and F is interpolated
// linearly between nodes (second-order exponential product integration).

#include <cstddef>
#include <vector>

#include "hodgemhd/form_field.hpp"
#include "hodgemhd/hodge.hpp"

namespace hodgemhd {

struct TimeGrid {
  double t0 = 0.0;
  double T = 1.0;
  int M = 1;

  void validate() const;  // M >= 1, T > t0
  double dt() const { return (T - t0) / M; }
  double node(int m) const { return t0 + m * dt(); }
  std::size_t nodes() const { return static_cast<std::size_t>(M) + 1; }

  bool operator==(const TimeGrid&) const = default;
};

// A form field sampled at every node of a time grid.
struct FieldSeries {
  TimeGrid time;
  std::vector<FormField> values;  // size time.nodes()

  void validate() const;
};

// φ1(z) = (e^z - 1)/z, φ2(z) = (e^z - 1 - z)/z², Taylor series for |z| < 1e-3.
double phi1(double z);
double phi2(double z);

// Streaming form of the quadrature: advance(F_m, F_{m+1}) maps I(t_m) to
// I(t_{m+1}). Inputs are spectral fields on one grid and grade.
class DuhamelStepper {
 public:
  DuhamelStepper(const GridSpec& grid, int grade, double dt);

  const FormField& value() const { return integral_; }
  void advance(const FormField& left, const FormField& right);

 private:
  double dt_;
  FormField integral_;
  std::vector<double> decay_;         // e^{-dt|k|²}
  std::vector<double> weight_left_;   // dt (φ1 - φ2)
  std::vector<double> weight_right_;  // dt φ2
};

// I(t_m) at every node. The forcing must satisfy the constraint of `kind`
// (relative tolerance kConstraintTolerance) at every node.
FieldSeries duhamel(OperatorKind kind, const FieldSeries& forcing);

}  // namespace hodgemhd
