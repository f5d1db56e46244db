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

// The verification scenarios. Each returns a report whose checks encode the
// scenario-internal assertions; solver failures become rows and warnings.

#include <vector>

#include "hodgemhd/experiments/config.hpp"
#include "hodgemhd/experiments/initial_data.hpp"
#include "hodgemhd/experiments/report.hpp"
#include "hodgemhd/mhd.hpp"

namespace hodgemhd::experiments {

// Picard ratios per ε and the sampled bilinear bound K̂.
Report run_contraction(const ScenarioConfig& cfg);
// Base run against the λ-dilated run on T/λ²; throws std::invalid_argument
// unless λ times the data band limit is below N/3.
Report run_scaling(const ScenarioConfig& cfg);
// Picard against semi-implicit stepping at M, 2M and 4M steps.
Report run_uniqueness(const ScenarioConfig& cfg);
// Besov smallness measures and the longest horizon (by halving T) on which
// Picard converges, per ε.
Report run_smallness_sweep(const ScenarioConfig& cfg);
// Forms against vector-calculus right-hand sides and trajectories (n = 3).
Report run_oracle3d(const ScenarioConfig& cfg);
// Monte-Carlo maxima of the maximal-regularity and Leibniz ratios.
Report run_inequality_lab(const ScenarioConfig& cfg);

Report run(const ScenarioConfig& cfg);

// ‖𝓑(U, U')‖ / (‖U‖ ‖U'‖) in the solution norm, with
// 𝓑(U, U') = (B1(u, u') + B2(b, b'), B3(u, b')).
double bilinear_ratio(const Trajectory& first, const Trajectory& second, const CriticalExponents& exps);

// Linear evolution (e^{-tS}u0, e^{-tM}b0) on the nodes of `time`.
Trajectory linear_evolution(const InitialData& data, const TimeGrid& time);

// Picard solution against semi-implicit stepping on the same grid.
struct CrossValidation {
  int M = 0;
  double state_gap = 0.0;  // max over nodes of the relative L² gap of (u, b)
  double du_gap = 0.0;     // ‖du_P - du_S‖ in L^r_t L^{n/2}_x
  double db_gap = 0.0;     // ‖δb_P - δb_S‖ in L^r_t L^{n/2}_x
  int iterations = 0;
};
CrossValidation cross_validate(const InitialData& data, const TimeGrid& time, const PicardOptions& options, double r);

// Least-squares slope of log y against log x.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace hodgemhd::experiments
