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

// Mild solutions of the incompressible MHD system written with differential
// forms: velocity u is a δ-free 1-form, the magnetic field b an exact 2-form,
//
//   u(t) = e^{-tS}u0 + ∫_0^t e^{-(t-s)S} ℙ(-u⌟du - δb⌟b) ds
//   b(t) = e^{-tM}b0 + ∫_0^t e^{-(t-s)M} (-d(u⌟b)) ds,
//
// computed by Picard iteration of the integral equations, plus an
// integrating-factor Euler stepper used as an independent cross-check.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hodgemhd/duhamel.hpp"
#include "hodgemhd/form_field.hpp"
#include "hodgemhd/norms.hpp"

namespace hodgemhd {

struct MhdState {
  double t = 0.0;
  FormField u;  // spectral 1-form
  FormField b;  // spectral 2-form
};

// δu = 0 to 1e-10 relative, db = 0 to 1e-10 relative, zero-mean b.
// Throws std::domain_error otherwise.
void validate_state(const MhdState& state);

// Leray-projects u and replaces b by its exact part (both then have zero
// mean). `u_change` / `b_change` are the relative L² changes.
struct Projection {
  MhdState state;
  double u_change = 0.0;
  double b_change = 0.0;
};
Projection project_state(const FormField& u, const FormField& b, double t = 0.0);

struct Trajectory {
  TimeGrid time;
  std::vector<MhdState> states;

  FieldSeries velocity() const;
  FieldSeries magnetic() const;
};

// Right-hand sides of the evolution equations after the linear part:
// velocity = ℙ(-u⌟du - δb⌟b), magnetic = -d(u⌟b). Products are formed in
// physical space and dealiased.
struct NonlinearTerms {
  FormField velocity;
  FormField magnetic;
};
NonlinearTerms nonlinear_terms(const MhdState& state);
FormField nonlinear_u(const MhdState& state);
FormField nonlinear_b(const MhdState& state);

// dπ = -(I - ℙ)(u⌟du + δb⌟b), the gradient part removed by the projection.
FormField pressure_gradient(const MhdState& state);

// Duhamel bilinear terms on a common time grid:
//   B1(u, v) = ∫ e^{-(t-s)S} ℙ(-u⌟dv),  B2(b, c) = ∫ e^{-(t-s)S} ℙ(-(δb)⌟c),
//   B3(u, b) = ∫ e^{-(t-s)M} (-d(u⌟b)).
FieldSeries B1(const FieldSeries& u, const FieldSeries& v);
FieldSeries B2(const FieldSeries& b, const FieldSeries& c);
FieldSeries B3(const FieldSeries& u, const FieldSeries& b);

// Discrete norm of L^q_t L^p_x solution pairs:
// ‖u‖_{L^q L^p} + ‖du‖_{L^{q/2} L^{p/2}} + ‖b‖_{L^q L^p} + ‖d*b‖_{L^{q/2} L^{p/2}}.
double solution_norm(const FieldSeries& u, const FieldSeries& b, const CriticalExponents& exps);

struct PicardOptions {
  double tol = 1e-10;
  int max_iter = 50;
  // Exponents of the residual norm; p = 2n, q = 4 when left unset.
  std::optional<CriticalExponents> exponents;
};

struct PicardReport {
  std::vector<double> residuals;           // ‖U^{m+1} - U^m‖ per iteration
  std::vector<double> contraction_ratios;  // residuals[m+1] / residuals[m]
  int iterations = 0;
  bool converged = false;
  double data_norm = 0.0;  // solution_norm of the linear evolution a
  std::vector<std::string> warnings;
};

class PicardDivergence : public std::runtime_error {
 public:
  PicardDivergence(const std::string& what, PicardReport report)
      : std::runtime_error(what), report_(std::move(report)) {}
  const PicardReport& report() const { return report_; }

 private:
  PicardReport report_;
};

struct PicardResult {
  Trajectory trajectory;
  PicardReport report;
};

// U^0 = a = (e^{-tS}u0, e^{-tM}b0), U^{m+1} = a + 𝓑(U^m, U^m) until the
// residual drops below tol. Inputs are projected onto their constraint
// spaces first (a warning is recorded when that changes them by more than
// 1e-8 relative). Throws PicardDivergence after three consecutive residual
// increases or a non-finite residual.
PicardResult picard_solve(const FormField& u0, const FormField& b0, const TimeGrid& time,
                          const PicardOptions& options = {});

// ‖U - a - 𝓑(U, U)‖ for a computed trajectory, evaluated from scratch.
double fixed_point_defect(const Trajectory& trajectory, const CriticalExponents& exps);

// One integrating-factor Euler step: û ← e^{-dt|k|²}(û + dt N̂_u), same for
// b, then re-projection onto the constraint spaces.
MhdState step_semi_implicit(const MhdState& state, double dt);
Trajectory integrate_semi_implicit(const FormField& u0, const FormField& b0, const TimeGrid& time);

// Writes u_MMMM.hmhd and b_MMMM.hmhd snapshots for every node plus
// manifest.json {n, N, L, t0, T, M, tol, iterations} into `directory`
// (created if missing).
void write_trajectory(const std::string& directory, const Trajectory& trajectory, double tol, int iterations);

}  // namespace hodgemhd
