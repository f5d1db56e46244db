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

#include "hodgemhd/hodge.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hodgemhd {

namespace {

void require_spectral(const FormField& f, const char* what) {
  if (!f.is_spectral()) throw std::invalid_argument(std::string(what) + " expects a spectral field");
}

// out += factor(p) * (k ^ f) or (k ⌟ f) per mode, with the 1-form k built from
// the grid wavenumbers.
enum class WithWave { kWedge, kContract };

void accumulate_wave_product(WithWave op, const FormField& f, FormField& out, Complex factor) {
  const GridSpec& grid = f.grid();
  const auto& waves = wave_table(grid);
  const ProductTable& table = op == WithWave::kWedge ? wedge_table(grid.n, 1, f.grade())
                                                     : contract_table(grid.n, 1, f.grade());
  const std::size_t total = grid.points();
  for (const ProductTerm& term : table.terms) {
    const double* k = waves.k[term.lhs].data();
    const Complex* in = f.modes(term.rhs).data();
    Complex* o = out.modes(term.out).data();
    const Complex s = factor * term.sign;
    for (std::size_t p = 0; p < total; ++p) o[p] += s * k[p] * in[p];
  }
}

FormField multiply_by(const FormField& f, auto&& multiplier) {
  FormField out = f;
  const auto& k2 = wave_table(f.grid()).k_squared;
  std::vector<double> factor(k2.size());
  for (std::size_t p = 0; p < k2.size(); ++p) factor[p] = multiplier(k2[p]);
  for (std::size_t c = 0; c < out.components(); ++c) {
    auto m = out.modes(c);
    for (std::size_t p = 0; p < m.size(); ++p) m[p] *= factor[p];
  }
  return out;
}

double relative(double num, double den) { return den == 0.0 ? (num == 0.0 ? 0.0 : num) : num / den; }

}  // namespace

std::string_view to_string(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::kLaplacian: return "laplacian";
    case OperatorKind::kStokes: return "stokes";
    case OperatorKind::kMaxwell: return "maxwell";
  }
  return "unknown";
}

FormField ext_deriv(const FormField& f) {
  require_spectral(f, "ext_deriv");
  if (f.grade() >= f.grid().n) {
    throw std::invalid_argument("ext_deriv of a top-degree form (grade " + std::to_string(f.grade()) + ")");
  }
  FormField out(f.grid(), f.grade() + 1, Representation::kSpectral);
  accumulate_wave_product(WithWave::kWedge, f, out, Complex(0.0, 1.0));
  return out;
}

FormField codifferential(const FormField& f) {
  require_spectral(f, "codifferential");
  if (f.grade() == 0) throw std::invalid_argument("codifferential of a 0-form");
  FormField out(f.grid(), f.grade() - 1, Representation::kSpectral);
  accumulate_wave_product(WithWave::kContract, f, out, Complex(0.0, -1.0));
  return out;
}

FormField frac_power(const FormField& f, double theta) {
  require_spectral(f, "frac_power");
  if (theta <= 0.0 && mean_magnitude(f) > 1e-12 * std::max(max_abs_spectral(f), 1e-300)) {
    throw std::domain_error("frac_power with theta <= 0 on a field with a harmonic component");
  }
  if (theta == 1.0) return multiply_by(f, [](double k2) { return k2; });
  return multiply_by(f, [theta](double k2) { return k2 == 0.0 ? 0.0 : std::pow(k2, theta); });
}

FormField laplacian(const FormField& f) { return frac_power(f, 1.0); }

FormField leray_project(const FormField& f) {
  require_spectral(f, "leray_project");
  if (f.grade() != 1) throw std::invalid_argument("leray_project acts on 1-forms");
  FormField out = f;
  const auto& waves = wave_table(f.grid());
  const std::size_t total = f.grid().points();
  const auto n = static_cast<std::size_t>(f.grid().n);
  for (std::size_t p = 0; p < total; ++p) {
    const double k2 = waves.k_squared[p];
    if (k2 == 0.0) continue;
    Complex dot{};
    for (std::size_t j = 0; j < n; ++j) dot += waves.k[j][p] * f.modes(j)[p];
    dot /= k2;
    for (std::size_t j = 0; j < n; ++j) out.modes(j)[p] -= waves.k[j][p] * dot;
  }
  return out;
}

FormField exact_part(const FormField& f) {
  require_spectral(f, "exact_part");
  FormField out(f.grid(), f.grade(), Representation::kSpectral);
  if (f.grade() == 0) return out;
  // k ^ (k ⌟ f), then divide by |k|^2.
  FormField inner(f.grid(), f.grade() - 1, Representation::kSpectral);
  accumulate_wave_product(WithWave::kContract, f, inner, Complex(1.0, 0.0));
  accumulate_wave_product(WithWave::kWedge, inner, out, Complex(1.0, 0.0));
  return multiply_by(out, [](double k2) { return k2 == 0.0 ? 0.0 : 1.0 / k2; });
}

HodgeParts hodge_decompose(const FormField& f) {
  require_spectral(f, "hodge_decompose");
  FormField exact = exact_part(f);
  FormField coexact(f.grid(), f.grade(), Representation::kSpectral);
  if (f.grade() < f.grid().n) {
    FormField outer(f.grid(), f.grade() + 1, Representation::kSpectral);
    accumulate_wave_product(WithWave::kWedge, f, outer, Complex(1.0, 0.0));
    accumulate_wave_product(WithWave::kContract, outer, coexact, Complex(1.0, 0.0));
    coexact = multiply_by(coexact, [](double k2) { return k2 == 0.0 ? 0.0 : 1.0 / k2; });
  }
  FormField harmonic(f.grid(), f.grade(), Representation::kSpectral);
  for (std::size_t c = 0; c < f.components(); ++c) harmonic.modes(c)[0] = f.modes(c)[0];
  return {std::move(exact), std::move(coexact), std::move(harmonic)};
}

double coclosed_defect(const FormField& f) {
  if (f.grade() == 0) return 0.0;
  return relative(l2_norm_spectral(codifferential(f)), l2_norm_spectral(f));
}

double closed_defect(const FormField& f) {
  if (f.grade() == f.grid().n) return 0.0;
  return relative(l2_norm_spectral(ext_deriv(f)), l2_norm_spectral(f));
}

void require_constraint(const FormField& f, OperatorKind kind, double rel_tol) {
  switch (kind) {
    case OperatorKind::kLaplacian:
      return;
    case OperatorKind::kStokes:
      if (f.grade() != 1) throw std::domain_error("Stokes operator acts on 1-forms");
      if (coclosed_defect(f) > rel_tol) throw std::domain_error("Stokes input is not δ-free");
      return;
    case OperatorKind::kMaxwell:
      if (f.grade() != 2) throw std::domain_error("Maxwell operator acts on 2-forms");
      if (closed_defect(f) > rel_tol) throw std::domain_error("Maxwell input is not d-free");
      return;
  }
}

FormField heat_semigroup(const FormField& f, double t, OperatorKind kind) {
  require_spectral(f, "heat_semigroup");
  if (!(t >= 0.0)) throw std::domain_error("heat_semigroup requires t >= 0");
  require_constraint(f, kind);
  if (t == 0.0) return f;
  return multiply_by(f, [t](double k2) { return std::exp(-t * k2); });
}

}  // namespace hodgemhd
