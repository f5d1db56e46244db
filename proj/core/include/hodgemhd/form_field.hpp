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

// Differential forms of fixed grade sampled on the periodic torus [0, L)^n.
//
// A FormField holds one array of N^n samples per blade of its grade (blade
// order as in blades_of_grade). In physical representation the samples are
// real; in spectral representation they are the complex DFT coefficients
//
//   f^(k) = N^-n * sum_x f(x) exp(-i k.x),   k in (2 pi / L) {-N/2, ..., N/2 - 1}^n,
//
// stored unpacked (all N^n modes). Grid points are ordered row-major with
// axis 1 slowest.

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "hodgemhd/exterior_algebra.hpp"

namespace hodgemhd {

using Complex = std::complex<double>;

struct GridSpec {
  int n = 3;
  int N = 32;
  double L = 2.0 * std::numbers::pi;

  // Throws std::invalid_argument unless 1 <= n <= 16, N >= 4 is a power of two
  // and L > 0. Fields and operators accept any valid n; the solver is sized
  // for 3 <= n <= 5.
  void validate() const;

  std::size_t points() const;
  double spacing() const { return L / N; }
  double cell_volume() const;
  double wave_unit() const { return 2.0 * std::numbers::pi / L; }
  // Largest retained integer mode index under the 2/3 rule.
  int dealias_cutoff() const { return N / 3; }

  bool operator==(const GridSpec&) const = default;
};

// Per-point wavenumber data for a grid, built once per grid and shared.
struct WaveTable {
  GridSpec grid;
  // index[j][p]: signed integer mode index along axis j at flat position p.
  std::vector<std::vector<std::int32_t>> index;
  // k[j][p] = wave_unit * index[j][p].
  std::vector<std::vector<double>> k;
  // |k|^2 at each flat position.
  std::vector<double> k_squared;
};

const WaveTable& wave_table(const GridSpec& grid);

// Flat position of the mode with the given signed integer indices.
std::size_t mode_position(const GridSpec& grid, std::span<const int> mode_index);

enum class Representation { kPhysical, kSpectral };

class FormField {
 public:
  // Zero field.
  FormField(GridSpec grid, int grade, Representation rep);

  const GridSpec& grid() const { return grid_; }
  int grade() const { return grade_; }
  Representation rep() const { return rep_; }
  bool is_spectral() const { return rep_ == Representation::kSpectral; }
  std::size_t components() const { return blades_->size(); }
  const std::vector<BladeIndex>& blades() const { return *blades_; }
  std::size_t component_of(BladeIndex blade) const;

  // Physical samples of component c. Throws if the field is spectral.
  std::span<double> values(std::size_t c);
  std::span<const double> values(std::size_t c) const;
  // Spectral coefficients of component c. Throws if the field is physical.
  std::span<Complex> modes(std::size_t c);
  std::span<const Complex> modes(std::size_t c) const;

  FormField& operator+=(const FormField& other);
  FormField& operator-=(const FormField& other);
  FormField& operator*=(double s);
  // this += s * other
  FormField& axpy(double s, const FormField& other);

  friend FormField operator+(FormField a, const FormField& b) { return a += b; }
  friend FormField operator-(FormField a, const FormField& b) { return a -= b; }
  friend FormField operator*(double s, FormField a) { return a *= s; }

  // Throws std::invalid_argument if grids, grades or representations differ.
  void require_compatible(const FormField& other, const char* what) const;

 private:
  GridSpec grid_;
  int grade_;
  Representation rep_;
  const std::vector<BladeIndex>* blades_;
  std::vector<double> real_;
  std::vector<Complex> spectral_;
};

FormField to_spectral(const FormField& f);
FormField to_physical(const FormField& f);

// Pointwise interior product of a grade-k field into a grade-l field (l >= k).
// Both fields must be physical on the same grid.
FormField pointwise_contract(const FormField& u, const FormField& w);
FormField pointwise_wedge(const FormField& u, const FormField& w);

// Zeroes every mode with some |index_j| > N/3. Spectral input only.
FormField dealias(const FormField& f);

// (sum_x |f(x)|^p (L/N)^n)^(1/p) with |f(x)| the Euclidean norm of the blade
// coefficients; p = infinity gives the maximum. Physical input, p >= 1.
double lp_norm(const FormField& f, double p);
// Lp norm of the pointwise norm of the direct sum of several fields on the
// same grid (e.g. the grade-0 and grade-2 parts of a Dirac image).
double lp_norm(std::span<const FormField* const> parts, double p);

// Parseval quantities on spectral fields: sum_k <f^(k), g^(k)> L^n.
double l2_inner_spectral(const FormField& f, const FormField& g);
double l2_norm_spectral(const FormField& f);
// Largest coefficient modulus.
double max_abs_spectral(const FormField& f);
// Magnitude of the k = 0 coefficients (Euclidean over components).
double mean_magnitude(const FormField& f);
// Largest max_j |index_j| over modes with modulus above rel_tol * max modulus.
int band_limit(const FormField& f, double rel_tol = 1e-13);

// Reproducible random field in spectral representation: coefficient moduli
// scale like (1 + |k|)^-decay, Hermitian symmetric, zero mean, no Nyquist
// content. Throws std::invalid_argument for decay <= 0.
FormField random_field(const GridSpec& grid, int grade, double decay, std::uint64_t seed);

// Physical-space dilation x -> lambda x (indices taken mod N), scaled by
// `amplitude`. Output has the input's representation.
FormField dilate(const FormField& f, int lambda, double amplitude);

// Binary snapshot: "HMHD", u32 version, u32 n, u32 grade, u32 N, f64 L, then
// one N^n array of f64 per component in blade order; little endian, physical
// samples, row-major with axis 1 slowest.
inline constexpr std::uint32_t kSnapshotVersion = 1;
void write_snapshot(std::ostream& out, const FormField& f);
void write_snapshot(const std::string& path, const FormField& f);
FormField read_snapshot(std::istream& in);
FormField read_snapshot(const std::string& path);

}  // namespace hodgemhd
