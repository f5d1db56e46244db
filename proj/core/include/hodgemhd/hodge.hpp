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

// Spectral realizations of the first-order operators d and δ = d*, the Hodge
// Laplacian and its powers, the Hodge decomposition, the Leray projection and
// the heat semigroups of the Laplacian, Stokes and Maxwell operators.
//
// Every operator is a diagonal Fourier multiplier and acts on spectral
// fields. On the torus the harmonic forms are the constants, i.e. the k = 0
// coefficients.

#include <string_view>

#include "hodgemhd/form_field.hpp"

namespace hodgemhd {

enum class OperatorKind { kLaplacian, kStokes, kMaxwell };

std::string_view to_string(OperatorKind kind);

// Relative tolerance for the constraint checks on semigroup inputs.
inline constexpr double kConstraintTolerance = 1e-10;

// (d f)^(k) = i k ^ f^(k). Throws for grade n.
FormField ext_deriv(const FormField& f);
// (δ f)^(k) = -i k ⌟ f^(k). Throws for grade 0.
FormField codifferential(const FormField& f);

// Multiplier |k|^(2 theta); the k = 0 output is zero. For theta <= 0 the
// input must have zero mean, otherwise std::domain_error ("harmonic
// component").
FormField frac_power(const FormField& f, double theta);
// The positive Hodge Laplacian dδ + δd = |k|^2.
FormField laplacian(const FormField& f);

// f - k <k, f>/|k|^2 per mode on 1-forms; identity at k = 0.
FormField leray_project(const FormField& f);

struct HodgeParts {
  FormField exact;     // in the range of d
  FormField coexact;   // in the range of δ
  FormField harmonic;  // the k = 0 coefficients
};

HodgeParts hodge_decompose(const FormField& f);

// Exact part of a field (k ^ (k ⌟ f)/|k|^2 per mode, zero mean).
FormField exact_part(const FormField& f);

// e^{-t|k|^2} per mode. For kStokes the input must be a δ-free 1-form, for
// kMaxwell a d-free 2-form (relative tolerance kConstraintTolerance);
// violations and t < 0 throw std::domain_error.
FormField heat_semigroup(const FormField& f, double t, OperatorKind kind);

// ‖δf‖₂ / ‖f‖₂ (0 for the zero field) and ‖df‖₂ / ‖f‖₂, via Parseval.
double coclosed_defect(const FormField& f);
double closed_defect(const FormField& f);

// Throws std::domain_error unless `f` satisfies the constraint of `kind`.
void require_constraint(const FormField& f, OperatorKind kind, double rel_tol = kConstraintTolerance);

}  // namespace hodgemhd
