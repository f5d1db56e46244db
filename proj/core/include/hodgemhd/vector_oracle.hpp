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

// Three-dimensional vector-calculus formulation of the MHD right-hand sides,
//
//   ∂t u - Δu + ∇π = u × curl u + (curl B) × B,   ∂t B - ΔB = curl(u × B),
//
// written independently of the exterior-calculus code (own cross products,
// curls and projection) so that the two can be compared. A 1-form u maps to
// the vector (u_1, u_2, u_3); a 2-form b maps to B = ⋆b = (b_23, -b_13, b_12).

#include <array>
#include <vector>

#include "hodgemhd/form_field.hpp"

namespace hodgemhd::oracle {

// Spectral vector field on a 3-dimensional grid.
struct VectorField {
  GridSpec grid;
  std::array<std::vector<Complex>, 3> modes;

  explicit VectorField(const GridSpec& grid);
};

VectorField from_one_form(const FormField& u);
VectorField from_two_form(const FormField& b);
FormField to_one_form(const VectorField& v);
FormField to_two_form(const VectorField& v);

VectorField curl(const VectorField& v);
VectorField cross(const VectorField& a, const VectorField& b);  // dealiased product
VectorField project(const VectorField& v);                       // divergence-free part
VectorField gradient_of_poisson_solution(const VectorField& v);  // ∇Δ^{-1} div v

struct Rhs {
  VectorField velocity;  // ℙ(u × curl u + (curl B) × B)
  VectorField magnetic;  // curl(u × B)
};
Rhs rhs(const VectorField& u, const VectorField& B);

// ∇π = -∇Δ^{-1} div(u × curl u + (curl B) × B) is not needed by the solver;
// this returns the gradient removed by the projection, -∇Δ^{-1}div(w) with
// w = -u × curl u - (curl B) × B.
VectorField pressure_gradient(const VectorField& u, const VectorField& B);

// Integrating-factor Euler step of the vector system, with re-projection of
// u and B onto divergence-free fields.
void step(VectorField& u, VectorField& B, double dt);

double l2_norm(const VectorField& v);
VectorField difference(const VectorField& a, const VectorField& b);

}  // namespace hodgemhd::oracle
