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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "hodgemhd/experiments/scenarios.hpp"
#include "hodgemhd/vector_oracle.hpp"

namespace hodgemhd::experiments {

namespace {

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(6);
  s << v;
  return s.str();
}

double rel_gap(const oracle::VectorField& a, const oracle::VectorField& b) {
  const double scale = std::max(oracle::l2_norm(a), oracle::l2_norm(b));
  const double gap = oracle::l2_norm(oracle::difference(a, b));
  return scale == 0.0 ? gap : gap / scale;
}

FieldSeries oscillating_series(const GridSpec& grid, const TimeGrid& time, int band, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> frequency(0.0, 20.0), phase(0.0, 2.0 * std::numbers::pi);
  std::array<FormField, 2> g = {band_limited(random_field(grid, 1, 1.0, rng()), band),
                                band_limited(random_field(grid, 1, 1.0, rng()), band)};
  const std::array<double, 2> w = {frequency(rng), frequency(rng)};
  const std::array<double, 2> phi = {phase(rng), phase(rng)};
  FieldSeries f{time, {}};
  for (int m = 0; m <= time.M; ++m) {
    FormField value = std::cos(w[0] * time.node(m) + phi[0]) * g[0];
    value.axpy(std::cos(w[1] * time.node(m) + phi[1]), g[1]);
    f.values.push_back(std::move(value));
  }
  return f;
}

}  // namespace

Report run_oracle3d(const ScenarioConfig& cfg) {
  cfg.validate();
  if (cfg.n != 3) throw std::invalid_argument("oracle3d needs n = 3");
  Report report{cfg, {}, {}, {}};
  const GridSpec grid = cfg.grid();

  double worst_rhs = 0.0, worst_pressure = 0.0;
  for (int i = 0; i < cfg.samples; ++i) {
    const InitialData data = make_data(DataFamily::kRandom, grid, grid.dealias_cutoff(),
                                       cfg.seed + static_cast<std::uint64_t>(i));
    const MhdState state{0.0, data.u, data.b};
    const oracle::VectorField u = oracle::from_one_form(state.u);
    const oracle::VectorField B = oracle::from_two_form(state.b);
    const NonlinearTerms forms = nonlinear_terms(state);
    const oracle::Rhs vectors = oracle::rhs(u, B);
    const double gap_u = rel_gap(oracle::from_one_form(forms.velocity), vectors.velocity);
    const double gap_b = rel_gap(oracle::from_two_form(forms.magnetic), vectors.magnetic);
    const double gap_p = rel_gap(oracle::from_one_form(pressure_gradient(state)), oracle::pressure_gradient(u, B));
    const std::map<std::string, double> params = {{"sample", static_cast<double>(i)}};
    report.add("rhs_gap_u", gap_u, params);
    report.add("rhs_gap_b", gap_b, params);
    report.add("pressure_gap", gap_p, params);
    worst_rhs = std::max({worst_rhs, gap_u, gap_b});
    worst_pressure = std::max(worst_pressure, gap_p);
  }
  if (cfg.samples > 0) {
    report.check("right-hand sides agree to 1e-10", worst_rhs < 1e-10, "max " + fmt(worst_rhs));
    report.check("pressure gradients agree to 1e-10", worst_pressure < 1e-10, "max " + fmt(worst_pressure));
  }

  // Same stepping scheme in both formulations.
  const InitialData data = cfg.amplitude == 0.0
                               ? InitialData{FormField(grid, 1, Representation::kSpectral),
                                             FormField(grid, 2, Representation::kSpectral)}
                               : normalized(make_data(cfg.family, grid, cfg.band, cfg.seed), cfg.amplitude);
  const TimeGrid time{0.0, cfg.T, cfg.M};
  const Trajectory forms = integrate_semi_implicit(data.u, data.b, time);
  oracle::VectorField u = oracle::from_one_form(forms.states.front().u);
  oracle::VectorField B = oracle::from_two_form(forms.states.front().b);
  double worst = 0.0;
  for (int m = 1; m <= time.M; ++m) {
    oracle::step(u, B, time.dt());
    const MhdState& s = forms.states[static_cast<std::size_t>(m)];
    const double gap = std::max(rel_gap(oracle::from_one_form(s.u), u), rel_gap(oracle::from_two_form(s.b), B));
    report.add("trajectory_gap", gap, {{"node", static_cast<double>(m)}, {"t", time.node(m)}});
    worst = std::max(worst, gap);
  }
  report.check("trajectories agree to 1e-8", worst < 1e-8, "max " + fmt(worst));
  return report;
}

Report run_inequality_lab(const ScenarioConfig& cfg) {
  cfg.validate();
  Report report{cfg, {}, {}, {}};
  if (cfg.samples == 0) return report;
  const GridSpec grid = cfg.grid();
  std::mt19937_64 rng(cfg.seed);

  const double q = cfg.q > 0.0 ? cfg.q : 2.0;
  const double p = cfg.p > 0.0 ? cfg.p : 2.0;
  const TimeGrid time{0.0, cfg.T, cfg.M};
  double maxreg = 0.0;
  for (int i = 0; i < cfg.samples; ++i) {
    const double ratio = maxreg_ratio(oscillating_series(grid, time, cfg.band, rng), q, p);
    report.add("maxreg_ratio", ratio, {{"sample", static_cast<double>(i)}, {"q", q}, {"p", p}});
    maxreg = std::max(maxreg, ratio);
  }
  report.add("maxreg_max", maxreg, {{"q", q}, {"p", p}});
  if (q == 2.0 && p == 2.0) report.check("maximal regularity ratio <= 1 at q = p = 2", maxreg <= 1.0 + 1e-6, "max " + fmt(maxreg));

  const double n = cfg.n;
  const LeibnizExponents exps{2 * n, 2 * n, 2 * n, 2 * n, n};
  const int leibniz_band = grid.N / 4;
  double half = 0.0, full = 0.0;
  for (int i = 0; i < 2 * cfg.samples; ++i) {
    const FormField w1 = band_limited(random_field(grid, 1, 3.0, rng()), leibniz_band);
    const FormField w2 = band_limited(random_field(grid, 2, 3.0, rng()), leibniz_band);
    const double ratio = leibniz_ratio(w1, w2, exps);
    report.add("leibniz_ratio", ratio, {{"sample", static_cast<double>(i)}});
    if (i < cfg.samples) half = std::max(half, ratio);
    full = std::max(full, ratio);
  }
  report.add("leibniz_max", full, {{"samples", 2.0 * cfg.samples}});
  report.add("leibniz_max_half", half, {{"samples", static_cast<double>(cfg.samples)}});
  report.check("Leibniz maximum is finite", std::isfinite(full));
  report.check("Leibniz maximum stable under doubling the sample count (10%)", std::abs(full / half - 1.0) <= 0.1,
               "ratio " + fmt(full / half));
  return report;
}

}  // namespace hodgemhd::experiments
