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

#include "hodgemhd/mhd.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>

#include <json.hpp>

#include "hodgemhd/hodge.hpp"

namespace hodgemhd {

namespace {

double relative_change(const FormField& before, const FormField& after) {
  const double base = l2_norm_spectral(before);
  const double diff = l2_norm_spectral(after - before);
  return base == 0.0 ? diff : diff / base;
}

void require_spectral_pair(const FormField& u, const FormField& b) {
  if (!u.is_spectral() || !b.is_spectral()) throw std::invalid_argument("MHD fields must be spectral");
  if (u.grade() != 1 || b.grade() != 2) throw std::invalid_argument("MHD state needs a 1-form u and a 2-form b");
  if (!(u.grid() == b.grid())) throw std::invalid_argument("u and b live on different grids");
}

FormField zero_mean(FormField f) {
  for (std::size_t c = 0; c < f.components(); ++c) f.modes(c)[0] = Complex{};
  return f;
}

// ℙ(-w) after dealiasing, for a physical 1-form w.
FormField project_negated(const FormField& w_physical) {
  FormField w = leray_project(dealias(to_spectral(w_physical)));
  w *= -1.0;
  return w;
}

// -d(dealias(w)) for a physical 1-form w.
FormField exterior_negated(const FormField& w_physical) {
  FormField w = ext_deriv(dealias(to_spectral(w_physical)));
  w *= -1.0;
  return w;
}

void require_same_time(const FieldSeries& a, const FieldSeries& b) {
  a.validate();
  b.validate();
  if (!(a.time == b.time)) throw std::invalid_argument("bilinear operands live on different time grids");
}

FieldSeries integrate(OperatorKind kind, const TimeGrid& time, std::vector<FormField> forcing) {
  return duhamel(kind, FieldSeries{time, std::move(forcing)});
}

FormField heat(const FormField& f, double t) {
  // Constraints were checked when the data was projected.
  return heat_semigroup(f, t, OperatorKind::kLaplacian);
}

struct ResidualParts {
  std::vector<double> u, du, b, db;

  void add(const FormField& delta_u, const FormField& delta_b, double p) {
    u.push_back(lp_norm(to_physical(delta_u), p));
    du.push_back(lp_norm(to_physical(ext_deriv(delta_u)), p / 2.0));
    b.push_back(lp_norm(to_physical(delta_b), p));
    db.push_back(lp_norm(to_physical(codifferential(delta_b)), p / 2.0));
  }

  double total(const TimeGrid& time, const CriticalExponents& exps) const {
    return time_norm(time, u, exps.q()) + time_norm(time, du, exps.q() / 2.0) + time_norm(time, b, exps.q()) +
           time_norm(time, db, exps.q() / 2.0);
  }
};

CriticalExponents resolve_exponents(const PicardOptions& options, int n) {
  return options.exponents ? *options.exponents : CriticalExponents::lq_lp_default(n);
}

}  // namespace

void validate_state(const MhdState& state) {
  require_spectral_pair(state.u, state.b);
  if (coclosed_defect(state.u) > 1e-10) throw std::domain_error("velocity is not δ-free");
  if (closed_defect(state.b) > 1e-10) throw std::domain_error("magnetic field is not d-free");
  if (mean_magnitude(state.b) > 1e-12 * std::max(max_abs_spectral(state.b), 1e-300)) {
    throw std::domain_error("magnetic field has a harmonic component");
  }
}

Projection project_state(const FormField& u, const FormField& b, double t) {
  require_spectral_pair(u, b);
  Projection out{MhdState{t, zero_mean(leray_project(u)), exact_part(b)}, 0.0, 0.0};
  out.u_change = relative_change(u, out.state.u);
  out.b_change = relative_change(b, out.state.b);
  return out;
}

FieldSeries Trajectory::velocity() const {
  FieldSeries s{time, {}};
  for (const MhdState& state : states) s.values.push_back(state.u);
  return s;
}

FieldSeries Trajectory::magnetic() const {
  FieldSeries s{time, {}};
  for (const MhdState& state : states) s.values.push_back(state.b);
  return s;
}

NonlinearTerms nonlinear_terms(const MhdState& state) {
  validate_state(state);
  const FormField u = to_physical(state.u);
  const FormField b = to_physical(state.b);
  const FormField du = to_physical(ext_deriv(state.u));
  const FormField delta_b = to_physical(codifferential(state.b));
  FormField momentum = pointwise_contract(u, du);
  momentum += pointwise_contract(delta_b, b);
  return {project_negated(momentum), exterior_negated(pointwise_contract(u, b))};
}

FormField nonlinear_u(const MhdState& state) { return nonlinear_terms(state).velocity; }

FormField nonlinear_b(const MhdState& state) {
  validate_state(state);
  return exterior_negated(pointwise_contract(to_physical(state.u), to_physical(state.b)));
}

FormField pressure_gradient(const MhdState& state) {
  validate_state(state);
  const FormField u = to_physical(state.u);
  FormField momentum = pointwise_contract(u, to_physical(ext_deriv(state.u)));
  momentum += pointwise_contract(to_physical(codifferential(state.b)), to_physical(state.b));
  const FormField w = dealias(to_spectral(momentum));
  FormField gradient = leray_project(w);
  gradient -= w;  // ℙw - w = -(I - ℙ)w
  return gradient;
}

FieldSeries B1(const FieldSeries& u, const FieldSeries& v) {
  require_same_time(u, v);
  std::vector<FormField> forcing;
  for (std::size_t m = 0; m < u.values.size(); ++m) {
    forcing.push_back(project_negated(
        pointwise_contract(to_physical(u.values[m]), to_physical(ext_deriv(v.values[m])))));
  }
  return integrate(OperatorKind::kStokes, u.time, std::move(forcing));
}

FieldSeries B2(const FieldSeries& b, const FieldSeries& c) {
  require_same_time(b, c);
  std::vector<FormField> forcing;
  for (std::size_t m = 0; m < b.values.size(); ++m) {
    forcing.push_back(project_negated(
        pointwise_contract(to_physical(codifferential(b.values[m])), to_physical(c.values[m]))));
  }
  return integrate(OperatorKind::kStokes, b.time, std::move(forcing));
}

FieldSeries B3(const FieldSeries& u, const FieldSeries& b) {
  require_same_time(u, b);
  std::vector<FormField> forcing;
  for (std::size_t m = 0; m < u.values.size(); ++m) {
    forcing.push_back(exterior_negated(pointwise_contract(to_physical(u.values[m]), to_physical(b.values[m]))));
  }
  return integrate(OperatorKind::kMaxwell, u.time, std::move(forcing));
}

double solution_norm(const FieldSeries& u, const FieldSeries& b, const CriticalExponents& exps) {
  return lq_lp_pair_u(u, exps).total() + lq_lp_pair_b(b, exps).total();
}

PicardResult picard_solve(const FormField& u0, const FormField& b0, const TimeGrid& time,
                          const PicardOptions& options) {
  time.validate();
  if (options.max_iter < 1) throw std::invalid_argument("picard_solve needs max_iter >= 1");
  const CriticalExponents exps = resolve_exponents(options, u0.grid().n);
  const Projection projected = project_state(u0, b0, time.t0);
  PicardReport report;
  if (projected.u_change > 1e-8) {
    report.warnings.push_back("initial velocity projected onto δ-free fields (relative change " +
                              std::to_string(projected.u_change) + ")");
  }
  if (projected.b_change > 1e-8) {
    report.warnings.push_back("initial magnetic field projected onto exact fields (relative change " +
                              std::to_string(projected.b_change) + ")");
  }
  const FormField& u_init = projected.state.u;
  const FormField& b_init = projected.state.b;
  const GridSpec grid = u_init.grid();

  // U^0 = a.
  Trajectory current{time, {}};
  current.states.reserve(time.nodes());
  {
    ResidualParts norms;
    for (int m = 0; m <= time.M; ++m) {
      const double t = time.node(m) - time.t0;
      current.states.push_back({time.node(m), heat(u_init, t), heat(b_init, t)});
      norms.add(current.states.back().u, current.states.back().b, exps.p());
    }
    report.data_norm = norms.total(time, exps);
  }

  int increases = 0;
  for (int iter = 0; iter < options.max_iter; ++iter) {
    Trajectory next{time, {}};
    next.states.reserve(time.nodes());
    DuhamelStepper velocity(grid, 1, time.dt());
    DuhamelStepper magnetic(grid, 2, time.dt());
    ResidualParts residual;

    NonlinearTerms left = nonlinear_terms(current.states.front());
    next.states.push_back(current.states.front());
    residual.add(FormField(grid, 1, Representation::kSpectral), FormField(grid, 2, Representation::kSpectral),
                 exps.p());
    for (int m = 1; m <= time.M; ++m) {
      const auto idx = static_cast<std::size_t>(m);
      NonlinearTerms right = nonlinear_terms(current.states[idx]);
      velocity.advance(left.velocity, right.velocity);
      magnetic.advance(left.magnetic, right.magnetic);
      const double t = time.node(m) - time.t0;
      MhdState state{time.node(m), heat(u_init, t), heat(b_init, t)};
      state.u += velocity.value();
      state.b += magnetic.value();
      residual.add(state.u - current.states[idx].u, state.b - current.states[idx].b, exps.p());
      next.states.push_back(std::move(state));
      left = std::move(right);
    }
    current = std::move(next);

    const double r = residual.total(time, exps);
    report.iterations = iter + 1;
    if (!report.residuals.empty()) {
      const double prev = report.residuals.back();
      report.contraction_ratios.push_back(prev == 0.0 ? 0.0 : r / prev);
      increases = r > prev ? increases + 1 : 0;
    }
    report.residuals.push_back(r);
    if (!std::isfinite(r)) throw PicardDivergence("Picard residual is not finite", report);
    if (r < options.tol) {
      report.converged = true;
      break;
    }
    if (increases >= 3) {
      throw PicardDivergence("Picard iteration diverges (three consecutive residual increases); shrink T",
                             report);
    }
  }
  return {std::move(current), std::move(report)};
}

double fixed_point_defect(const Trajectory& trajectory, const CriticalExponents& exps) {
  const TimeGrid& time = trajectory.time;
  const MhdState& initial = trajectory.states.front();
  const GridSpec grid = initial.u.grid();
  DuhamelStepper velocity(grid, 1, time.dt());
  DuhamelStepper magnetic(grid, 2, time.dt());
  ResidualParts defect;
  defect.add(FormField(grid, 1, Representation::kSpectral), FormField(grid, 2, Representation::kSpectral), exps.p());
  NonlinearTerms left = nonlinear_terms(initial);
  for (int m = 1; m <= time.M; ++m) {
    const MhdState& state = trajectory.states[static_cast<std::size_t>(m)];
    NonlinearTerms right = nonlinear_terms(state);
    velocity.advance(left.velocity, right.velocity);
    magnetic.advance(left.magnetic, right.magnetic);
    const double t = time.node(m) - time.t0;
    FormField du = state.u - heat(initial.u, t) - velocity.value();
    FormField db = state.b - heat(initial.b, t) - magnetic.value();
    defect.add(du, db, exps.p());
    left = std::move(right);
  }
  return defect.total(time, exps);
}

MhdState step_semi_implicit(const MhdState& state, double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("step size must be positive");
  const NonlinearTerms rhs = nonlinear_terms(state);
  FormField u = state.u;
  FormField b = state.b;
  u.axpy(dt, rhs.velocity);
  b.axpy(dt, rhs.magnetic);
  u = heat(u, dt);
  b = heat(b, dt);
  return project_state(u, b, state.t + dt).state;
}

Trajectory integrate_semi_implicit(const FormField& u0, const FormField& b0, const TimeGrid& time) {
  time.validate();
  Trajectory out{time, {}};
  out.states.reserve(time.nodes());
  out.states.push_back(project_state(u0, b0, time.t0).state);
  for (int m = 1; m <= time.M; ++m) {
    MhdState next = step_semi_implicit(out.states.back(), time.dt());
    next.t = time.node(m);
    out.states.push_back(std::move(next));
  }
  return out;
}

void write_trajectory(const std::string& directory, const Trajectory& trajectory, double tol, int iterations) {
  if (trajectory.states.empty()) throw std::invalid_argument("cannot write an empty trajectory");
  const std::filesystem::path dir(directory);
  std::filesystem::create_directories(dir);
  char name[32];
  for (std::size_t m = 0; m < trajectory.states.size(); ++m) {
    std::snprintf(name, sizeof name, "u_%04zu.hmhd", m);
    write_snapshot((dir / name).string(), to_physical(trajectory.states[m].u));
    std::snprintf(name, sizeof name, "b_%04zu.hmhd", m);
    write_snapshot((dir / name).string(), to_physical(trajectory.states[m].b));
  }
  const GridSpec& grid = trajectory.states.front().u.grid();
  nlohmann::json manifest = {{"n", grid.n},          {"N", grid.N},          {"L", grid.L},
                             {"t0", trajectory.time.t0}, {"T", trajectory.time.T}, {"M", trajectory.time.M},
                             {"tol", tol},           {"iterations", iterations}};
  std::ofstream out(dir / "manifest.json");
  if (!out) throw std::runtime_error("cannot write manifest in " + directory);
  out << manifest.dump(2) << '\n';
}

}  // namespace hodgemhd
