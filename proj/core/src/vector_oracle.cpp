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

#include "hodgemhd/vector_oracle.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "fft.hpp"

namespace hodgemhd::oracle {

namespace {

constexpr Complex kI{0.0, 1.0};

void require_three_dimensional(const GridSpec& grid) {
  if (grid.n != 3) throw std::invalid_argument("the vector oracle is three-dimensional");
}

using Physical = std::array<std::vector<double>, 3>;

Physical to_physical(const VectorField& v) {
  Physical out;
  std::vector<Complex> buffer;
  for (int c = 0; c < 3; ++c) {
    buffer = v.modes[c];
    detail::fft_backward(v.grid, buffer);
    out[c].resize(buffer.size());
    for (std::size_t p = 0; p < buffer.size(); ++p) out[c][p] = buffer[p].real();
  }
  return out;
}

VectorField to_spectral_dealiased(const GridSpec& grid, const Physical& v) {
  VectorField out(grid);
  const auto& waves = wave_table(grid);
  const int cutoff = grid.N / 3;
  const double scale = 1.0 / static_cast<double>(grid.points());
  for (int c = 0; c < 3; ++c) {
    auto& m = out.modes[c];
    for (std::size_t p = 0; p < m.size(); ++p) m[p] = Complex(v[c][p], 0.0);
    detail::fft_forward(grid, m);
    for (std::size_t p = 0; p < m.size(); ++p) {
      const bool outside = std::abs(waves.index[0][p]) > cutoff || std::abs(waves.index[1][p]) > cutoff ||
                           std::abs(waves.index[2][p]) > cutoff;
      m[p] = outside ? Complex{} : m[p] * scale;
    }
  }
  return out;
}

VectorField add(const VectorField& a, const VectorField& b) {
  VectorField out = a;
  for (int c = 0; c < 3; ++c) {
    for (std::size_t p = 0; p < out.modes[c].size(); ++p) out.modes[c][p] += b.modes[c][p];
  }
  return out;
}

}  // namespace

VectorField::VectorField(const GridSpec& g) : grid(g) {
  require_three_dimensional(g);
  for (auto& m : modes) m.assign(g.points(), Complex{});
}

VectorField from_one_form(const FormField& u) {
  if (!u.is_spectral() || u.grade() != 1) throw std::invalid_argument("from_one_form expects a spectral 1-form");
  VectorField v(u.grid());
  for (int c = 0; c < 3; ++c) {
    const auto src = u.modes(u.component_of(BladeIndex::basis(c + 1)));
    v.modes[c].assign(src.begin(), src.end());
  }
  return v;
}

VectorField from_two_form(const FormField& b) {
  if (!b.is_spectral() || b.grade() != 2) throw std::invalid_argument("from_two_form expects a spectral 2-form");
  VectorField v(b.grid());
  const auto b23 = b.modes(b.component_of(BladeIndex{0b110}));
  const auto b13 = b.modes(b.component_of(BladeIndex{0b101}));
  const auto b12 = b.modes(b.component_of(BladeIndex{0b011}));
  for (std::size_t p = 0; p < v.modes[0].size(); ++p) {
    v.modes[0][p] = b23[p];
    v.modes[1][p] = -b13[p];
    v.modes[2][p] = b12[p];
  }
  return v;
}

FormField to_one_form(const VectorField& v) {
  FormField u(v.grid, 1, Representation::kSpectral);
  for (int c = 0; c < 3; ++c) {
    auto dst = u.modes(u.component_of(BladeIndex::basis(c + 1)));
    std::copy(v.modes[c].begin(), v.modes[c].end(), dst.begin());
  }
  return u;
}

FormField to_two_form(const VectorField& v) {
  FormField b(v.grid, 2, Representation::kSpectral);
  auto b23 = b.modes(b.component_of(BladeIndex{0b110}));
  auto b13 = b.modes(b.component_of(BladeIndex{0b101}));
  auto b12 = b.modes(b.component_of(BladeIndex{0b011}));
  for (std::size_t p = 0; p < v.modes[0].size(); ++p) {
    b23[p] = v.modes[0][p];
    b13[p] = -v.modes[1][p];
    b12[p] = v.modes[2][p];
  }
  return b;
}

VectorField curl(const VectorField& v) {
  VectorField out(v.grid);
  const auto& k = wave_table(v.grid).k;
  for (std::size_t p = 0; p < v.modes[0].size(); ++p) {
    const Complex x = v.modes[0][p], y = v.modes[1][p], z = v.modes[2][p];
    out.modes[0][p] = kI * (k[1][p] * z - k[2][p] * y);
    out.modes[1][p] = kI * (k[2][p] * x - k[0][p] * z);
    out.modes[2][p] = kI * (k[0][p] * y - k[1][p] * x);
  }
  return out;
}

VectorField cross(const VectorField& a, const VectorField& b) {
  const Physical pa = to_physical(a);
  const Physical pb = to_physical(b);
  Physical out;
  const std::size_t total = a.grid.points();
  for (auto& c : out) c.resize(total);
  for (std::size_t p = 0; p < total; ++p) {
    out[0][p] = pa[1][p] * pb[2][p] - pa[2][p] * pb[1][p];
    out[1][p] = pa[2][p] * pb[0][p] - pa[0][p] * pb[2][p];
    out[2][p] = pa[0][p] * pb[1][p] - pa[1][p] * pb[0][p];
  }
  return to_spectral_dealiased(a.grid, out);
}

VectorField gradient_of_poisson_solution(const VectorField& v) {
  VectorField out(v.grid);
  const auto& waves = wave_table(v.grid);
  for (std::size_t p = 0; p < v.modes[0].size(); ++p) {
    const double k2 = waves.k_squared[p];
    if (k2 == 0.0) continue;
    // Δφ = div v  =>  φ^ = -i k.v^ / |k|²,  ∇φ^ = i k φ^ = k (k.v^)/|k|².
    const Complex divergence =
        kI * (waves.k[0][p] * v.modes[0][p] + waves.k[1][p] * v.modes[1][p] + waves.k[2][p] * v.modes[2][p]);
    const Complex phi = -divergence / k2;
    for (int c = 0; c < 3; ++c) out.modes[c][p] = kI * waves.k[c][p] * phi;
  }
  return out;
}

VectorField project(const VectorField& v) {
  VectorField out = v;
  const VectorField grad = gradient_of_poisson_solution(v);
  for (int c = 0; c < 3; ++c) {
    for (std::size_t p = 0; p < out.modes[c].size(); ++p) out.modes[c][p] -= grad.modes[c][p];
  }
  return out;
}

Rhs rhs(const VectorField& u, const VectorField& B) {
  const VectorField lorentz = cross(curl(B), B);
  const VectorField inertia = cross(u, curl(u));
  return {project(add(inertia, lorentz)), curl(cross(u, B))};
}

VectorField pressure_gradient(const VectorField& u, const VectorField& B) {
  // w = -(u × curl u) - (curl B) × B; the removed gradient is -∇Δ^{-1}div w,
  // i.e. +∇Δ^{-1}div(u × curl u + (curl B) × B).
  return gradient_of_poisson_solution(add(cross(u, curl(u)), cross(curl(B), B)));
}

void step(VectorField& u, VectorField& B, double dt) {
  const Rhs r = rhs(u, B);
  const auto& k2 = wave_table(u.grid).k_squared;
  for (int c = 0; c < 3; ++c) {
    for (std::size_t p = 0; p < k2.size(); ++p) {
      const double decay = std::exp(-dt * k2[p]);
      u.modes[c][p] = decay * (u.modes[c][p] + dt * r.velocity.modes[c][p]);
      B.modes[c][p] = decay * (B.modes[c][p] + dt * r.magnetic.modes[c][p]);
    }
  }
  u = project(u);
  B = project(B);
  for (int c = 0; c < 3; ++c) {
    u.modes[c][0] = Complex{};
    B.modes[c][0] = Complex{};
  }
}

double l2_norm(const VectorField& v) {
  double sum = 0.0;
  for (const auto& m : v.modes) {
    for (const Complex& z : m) sum += std::norm(z);
  }
  return std::sqrt(sum * std::pow(v.grid.L, 3));
}

VectorField difference(const VectorField& a, const VectorField& b) {
  VectorField out = a;
  for (int c = 0; c < 3; ++c) {
    for (std::size_t p = 0; p < out.modes[c].size(); ++p) out.modes[c][p] -= b.modes[c][p];
  }
  return out;
}

}  // namespace hodgemhd::oracle
