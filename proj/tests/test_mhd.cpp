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

#include <doctest.h>

#include <cmath>

#include "hodgemhd/hodge.hpp"
#include "hodgemhd/mhd.hpp"
#include "test_support.hpp"

using namespace hodgemhd;
using hodgemhd::testing::rel_l2;
using hodgemhd::testing::single_component;

namespace {

double norm(const FormField& f) { return l2_norm_spectral(f); }

FormField random_velocity(const GridSpec& grid, std::uint64_t seed, double amplitude = 1.0) {
  FormField u = leray_project(dealias(random_field(grid, 1, 2.0, seed)));
  u *= amplitude / norm(u);
  return u;
}

FormField random_magnetic(const GridSpec& grid, std::uint64_t seed, double amplitude = 1.0) {
  FormField b = exact_part(dealias(random_field(grid, 2, 2.0, seed)));
  b *= amplitude / norm(b);
  return b;
}

// u = sin(x2) e1: a δ-free shear whose self-interaction is a pure gradient.
FormField shear(const GridSpec& grid, double amplitude = 1.0) {
  return to_spectral(single_component(grid, BladeIndex::basis(1),
                                      [&](const std::vector<double>& x) { return amplitude * std::sin(x[1]); }));
}

FieldSeries constant_series(const TimeGrid& time, const FormField& f) {
  return FieldSeries{time, std::vector<FormField>(time.nodes(), f)};
}

}  // namespace

TEST_CASE("state validation and projection") {
  const GridSpec grid{3, 8};
  const FormField u = random_velocity(grid, 1);
  const FormField b = random_magnetic(grid, 2);
  CHECK_NOTHROW(validate_state({0.0, u, b}));
  CHECK_THROWS_AS(validate_state({0.0, random_field(grid, 1, 1.0, 3), b}), std::domain_error);
  CHECK_THROWS_AS(validate_state({0.0, u, random_field(grid, 2, 1.0, 4)}), std::domain_error);
  FormField harmonic = b;
  harmonic.modes(0)[0] = 1.0;
  CHECK_THROWS_AS(validate_state({0.0, u, harmonic}), std::domain_error);
  CHECK_THROWS_AS(validate_state({0.0, b, u}), std::invalid_argument);

  const Projection p = project_state(random_field(grid, 1, 1.0, 3), random_field(grid, 2, 1.0, 4));
  CHECK_NOTHROW(validate_state(p.state));
  CHECK(p.u_change > 0.1);
  CHECK(p.b_change > 0.1);
  const Projection q = project_state(u, b);
  CHECK(q.u_change < 1e-14);
  CHECK(q.b_change < 1e-14);
}

TEST_CASE("nonlinear terms: zero and exact cases") {
  const GridSpec grid{3, 16};
  const FormField zero_u(grid, 1, Representation::kSpectral);
  const FormField zero_b(grid, 2, Representation::kSpectral);
  const NonlinearTerms z = nonlinear_terms({0.0, zero_u, zero_b});
  CHECK(norm(z.velocity) == 0.0);
  CHECK(norm(z.magnetic) == 0.0);
  CHECK(norm(pressure_gradient({0.0, zero_u, zero_b})) == 0.0);
  CHECK(norm(nonlinear_b({0.0, random_velocity(grid, 1), zero_b})) == 0.0);

  // sin(x2) e1: u⌟du = -½ sin(2x2) e2 is a gradient, so ℙ removes it and dπ = ½ sin(2x2) e2.
  const MhdState s{0.0, shear(grid), zero_b};
  CHECK(norm(nonlinear_u(s)) < 1e-14);
  const FormField expected = to_spectral(single_component(
      grid, BladeIndex::basis(2), [](const std::vector<double>& x) { return 0.5 * std::sin(2 * x[1]); }));
  CHECK(rel_l2(pressure_gradient(s), expected) < 1e-14);
}

TEST_CASE("nonlinear terms preserve the constraints") {
  for (int n = 3; n <= 5; ++n) {
    const GridSpec grid{n, n == 3 ? 16 : 8};
    const MhdState s{0.0, random_velocity(grid, 10 + n), random_magnetic(grid, 20 + n)};
    const NonlinearTerms r = nonlinear_terms(s);
    CHECK(norm(codifferential(r.velocity)) < 1e-12 * norm(r.velocity));
    CHECK(norm(ext_deriv(r.magnetic)) < 1e-12 * norm(r.magnetic));
    CHECK(mean_magnitude(r.magnetic) == 0.0);
    CHECK(rel_l2(r.velocity, nonlinear_u(s)) == 0.0);
    CHECK(rel_l2(r.magnetic, nonlinear_b(s)) == 0.0);
    const FormField g = pressure_gradient(s);
    CHECK(norm(leray_project(g)) < 1e-12 * norm(g));
    CHECK(rel_l2(exact_part(g), g) < 1e-12);
  }
}

TEST_CASE("bilinear operators") {
  const GridSpec grid{3, 16};
  const TimeGrid time{0.0, 0.05, 4};
  const FieldSeries u = constant_series(time, random_velocity(grid, 1));
  const FieldSeries v = constant_series(time, random_velocity(grid, 2));
  const FieldSeries b = constant_series(time, random_magnetic(grid, 3));
  const FieldSeries c = constant_series(time, random_magnetic(grid, 4));
  const FieldSeries zero_u = constant_series(time, FormField(grid, 1, Representation::kSpectral));
  const FieldSeries zero_b = constant_series(time, FormField(grid, 2, Representation::kSpectral));

  for (const FormField& f : B1(zero_u, v).values) CHECK(norm(f) == 0.0);
  for (const FormField& f : B1(u, zero_u).values) CHECK(norm(f) == 0.0);
  for (const FormField& f : B3(u, zero_b).values) CHECK(norm(f) == 0.0);

  FieldSeries u3 = u;
  for (FormField& f : u3.values) f *= 3.0;
  const FieldSeries base1 = B1(u, v), scaled1 = B1(u3, v);
  const FieldSeries base3 = B3(u, c), scaled3 = B3(u3, c);
  const FieldSeries base2 = B2(b, c);
  for (std::size_t m = 1; m < time.nodes(); ++m) {
    CHECK(rel_l2(scaled1.values[m], 3.0 * base1.values[m]) < 1e-15);
    CHECK(rel_l2(scaled3.values[m], 3.0 * base3.values[m]) < 1e-15);
    CHECK(norm(codifferential(base1.values[m])) < 1e-12 * norm(base1.values[m]));
    CHECK(norm(codifferential(base2.values[m])) < 1e-12 * norm(base2.values[m]));
    CHECK(norm(ext_deriv(base3.values[m])) < 1e-12 * norm(base3.values[m]));
  }
  CHECK_THROWS_AS(B1(u, constant_series(TimeGrid{0.0, 0.1, 4}, v.values.front())), std::invalid_argument);
}

TEST_CASE("Picard iteration with zero data") {
  const GridSpec grid{3, 8};
  const TimeGrid time{0.0, 0.1, 4};
  const PicardResult r = picard_solve(FormField(grid, 1, Representation::kSpectral),
                                      FormField(grid, 2, Representation::kSpectral), time);
  CHECK(r.report.iterations == 1);
  CHECK(r.report.converged);
  CHECK(r.report.residuals == std::vector<double>{0.0});
  CHECK(r.report.contraction_ratios.empty());
  CHECK(r.report.data_norm == 0.0);
  CHECK(r.trajectory.states.size() == time.nodes());
  for (const MhdState& s : r.trajectory.states) {
    CHECK(norm(s.u) == 0.0);
    CHECK(norm(s.b) == 0.0);
  }
}

TEST_CASE("Picard iteration with small data contracts") {
  const GridSpec grid{3, 16};
  const TimeGrid time{0.0, 0.1, 16};
  PicardOptions options;
  options.tol = 1e-11;
  const PicardResult r = picard_solve(random_velocity(grid, 5, 0.5), random_magnetic(grid, 6, 0.5), time, options);
  CHECK(r.report.converged);
  CHECK(r.report.residuals.back() < options.tol);
  CHECK(r.report.warnings.empty());
  for (std::size_t i = 1; i < r.report.contraction_ratios.size(); ++i) CHECK(r.report.contraction_ratios[i] < 0.5);
  for (std::size_t i = 0; i < r.report.contraction_ratios.size(); ++i) {
    CHECK(r.report.contraction_ratios[i] ==
          doctest::Approx(r.report.residuals[i + 1] / r.report.residuals[i]).epsilon(1e-15));
  }
  for (std::size_t m = 0; m < time.nodes(); ++m) {
    const MhdState& s = r.trajectory.states[m];
    CHECK(s.t == time.node(static_cast<int>(m)));
    CHECK(coclosed_defect(s.u) < 1e-10);
    CHECK(closed_defect(s.b) < 1e-12);
  }
  const double defect = fixed_point_defect(r.trajectory, CriticalExponents::lq_lp_default(3));
  CHECK(defect < 10 * options.tol);
  CHECK(solution_norm(r.trajectory.velocity(), r.trajectory.magnetic(), CriticalExponents::lq_lp_default(3)) > 0.0);
}

TEST_CASE("Picard projects unconstrained data and reports it") {
  const GridSpec grid{3, 8};
  const TimeGrid time{0.0, 0.05, 4};
  const PicardResult r = picard_solve(0.01 * random_field(grid, 1, 2.0, 1), 0.01 * random_field(grid, 2, 2.0, 2), time);
  CHECK(r.report.warnings.size() == 2);
  CHECK(r.report.converged);
}

TEST_CASE("Picard iteration detects divergence") {
  const GridSpec grid{3, 16};
  const TimeGrid time{0.0, 1.0, 8};
  PicardOptions options;
  options.max_iter = 40;
  bool diverged = false;
  try {
    picard_solve(random_velocity(grid, 7, 400.0), random_magnetic(grid, 8, 400.0), time, options);
  } catch (const PicardDivergence& e) {
    diverged = true;
    CHECK(e.report().iterations >= 1);
    CHECK_FALSE(e.report().converged);
  }
  CHECK(diverged);
  CHECK_THROWS_AS(picard_solve(FormField(grid, 1, Representation::kSpectral), FormField(grid, 2, Representation::kSpectral),
                               time, PicardOptions{1e-10, 0, std::nullopt}),
                  std::invalid_argument);
}

TEST_CASE("semi-implicit stepping") {
  const GridSpec grid{3, 16};
  const FormField zero_b(grid, 2, Representation::kSpectral);
  const MhdState zero = step_semi_implicit({0.0, FormField(grid, 1, Representation::kSpectral), zero_b}, 0.1);
  CHECK(norm(zero.u) == 0.0);
  CHECK(norm(zero.b) == 0.0);
  CHECK(zero.t == doctest::Approx(0.1));

  // Shear flow: the nonlinearity vanishes and the step is exact heat decay.
  const FormField u = shear(grid, 2.0);
  const Trajectory t = integrate_semi_implicit(u, zero_b, TimeGrid{0.0, 0.5, 5});
  for (std::size_t m = 0; m < t.states.size(); ++m) {
    CHECK(rel_l2(t.states[m].u, std::exp(-0.1 * static_cast<double>(m)) * u) < 1e-14);
  }
  CHECK_THROWS_AS(step_semi_implicit({0.0, u, zero_b}, 0.0), std::invalid_argument);
}

TEST_CASE("semi-implicit and Picard solutions converge to each other") {
  const GridSpec grid{3, 16};
  const FormField u0 = random_velocity(grid, 11, 0.5);
  const FormField b0 = random_magnetic(grid, 12, 0.5);
  const TimeGrid reference{0.0, 0.1, 64};
  const PicardResult picard = picard_solve(u0, b0, reference);
  const MhdState& target = picard.trajectory.states.back();
  std::vector<double> gaps;
  for (int M : {8, 16, 32}) {
    const Trajectory t = integrate_semi_implicit(u0, b0, TimeGrid{0.0, 0.1, M});
    gaps.push_back(std::hypot(norm(t.states.back().u - target.u), norm(t.states.back().b - target.b)));
  }
  for (std::size_t i = 1; i < gaps.size(); ++i) CHECK(std::log2(gaps[i - 1] / gaps[i]) > 0.8);
}
