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

#include "hodgemhd/form_field.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <stdexcept>
#include <tuple>

#include "fft.hpp"

namespace hodgemhd {

void GridSpec::validate() const {
  if (n < 1 || n > kMaxDimension) throw std::invalid_argument("grid dimension must lie in [1, 16]");
  if (N < 4 || (N & (N - 1)) != 0) {
    throw std::invalid_argument("points per axis must be a power of two >= 4, got " + std::to_string(N));
  }
  if (!(L > 0.0) || !std::isfinite(L)) throw std::invalid_argument("period length must be positive");
}

std::size_t GridSpec::points() const {
  std::size_t total = 1;
  for (int j = 0; j < n; ++j) total *= static_cast<std::size_t>(N);
  return total;
}

double GridSpec::cell_volume() const { return std::pow(spacing(), n); }

const WaveTable& wave_table(const GridSpec& grid) {
  grid.validate();
  static std::mutex mutex;
  static std::map<std::tuple<int, int, double>, std::unique_ptr<WaveTable>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[std::make_tuple(grid.n, grid.N, grid.L)];
  if (!slot) {
    auto table = std::make_unique<WaveTable>();
    table->grid = grid;
    const std::size_t total = grid.points();
    const auto n = static_cast<std::size_t>(grid.n);
    table->index.assign(n, std::vector<std::int32_t>(total));
    table->k.assign(n, std::vector<double>(total));
    table->k_squared.assign(total, 0.0);
    std::size_t stride = total;
    for (std::size_t j = 0; j < n; ++j) {
      stride /= static_cast<std::size_t>(grid.N);
      for (std::size_t p = 0; p < total; ++p) {
        const auto i = static_cast<std::int32_t>((p / stride) % static_cast<std::size_t>(grid.N));
        const std::int32_t m = i < grid.N / 2 ? i : i - grid.N;
        table->index[j][p] = m;
        table->k[j][p] = grid.wave_unit() * m;
        table->k_squared[p] += table->k[j][p] * table->k[j][p];
      }
    }
    slot = std::move(table);
  }
  return *slot;
}

std::size_t mode_position(const GridSpec& grid, std::span<const int> mode_index) {
  if (mode_index.size() != static_cast<std::size_t>(grid.n)) throw std::invalid_argument("mode index rank mismatch");
  std::size_t p = 0;
  for (int m : mode_index) {
    const int i = ((m % grid.N) + grid.N) % grid.N;
    p = p * static_cast<std::size_t>(grid.N) + static_cast<std::size_t>(i);
  }
  return p;
}

FormField::FormField(GridSpec grid, int grade, Representation rep)
    : grid_(grid), grade_(grade), rep_(rep), blades_(&blades_of_grade(grid.n, grade)) {
  grid_.validate();
  if (grade < 0 || grade > grid.n) {
    throw std::invalid_argument("form grade " + std::to_string(grade) + " outside [0, " +
                                std::to_string(grid.n) + "]");
  }
  const std::size_t size = blades_->size() * grid_.points();
  if (rep_ == Representation::kPhysical) {
    real_.assign(size, 0.0);
  } else {
    spectral_.assign(size, Complex{});
  }
}

std::size_t FormField::component_of(BladeIndex blade) const {
  if (blade.grade() != grade_) throw std::invalid_argument("blade grade does not match field grade");
  return component_index(grid_.n, blade);
}

std::span<double> FormField::values(std::size_t c) {
  if (rep_ != Representation::kPhysical) throw std::logic_error("field is in spectral representation");
  return std::span<double>(real_).subspan(c * grid_.points(), grid_.points());
}

std::span<const double> FormField::values(std::size_t c) const {
  if (rep_ != Representation::kPhysical) throw std::logic_error("field is in spectral representation");
  return std::span<const double>(real_).subspan(c * grid_.points(), grid_.points());
}

std::span<Complex> FormField::modes(std::size_t c) {
  if (rep_ != Representation::kSpectral) throw std::logic_error("field is in physical representation");
  return std::span<Complex>(spectral_).subspan(c * grid_.points(), grid_.points());
}

std::span<const Complex> FormField::modes(std::size_t c) const {
  if (rep_ != Representation::kSpectral) throw std::logic_error("field is in physical representation");
  return std::span<const Complex>(spectral_).subspan(c * grid_.points(), grid_.points());
}

void FormField::require_compatible(const FormField& other, const char* what) const {
  if (!(grid_ == other.grid_) || grade_ != other.grade_ || rep_ != other.rep_) {
    throw std::invalid_argument(std::string(what) + ": fields differ in grid, grade or representation");
  }
}

FormField& FormField::operator+=(const FormField& other) { return axpy(1.0, other); }

FormField& FormField::operator-=(const FormField& other) { return axpy(-1.0, other); }

FormField& FormField::operator*=(double s) {
  for (double& v : real_) v *= s;
  for (Complex& v : spectral_) v *= s;
  return *this;
}

FormField& FormField::axpy(double s, const FormField& other) {
  require_compatible(other, "axpy");
  for (std::size_t i = 0; i < real_.size(); ++i) real_[i] += s * other.real_[i];
  for (std::size_t i = 0; i < spectral_.size(); ++i) spectral_[i] += s * other.spectral_[i];
  return *this;
}

FormField to_spectral(const FormField& f) {
  if (f.rep() != Representation::kPhysical) throw std::invalid_argument("to_spectral expects a physical field");
  FormField out(f.grid(), f.grade(), Representation::kSpectral);
  const double scale = 1.0 / static_cast<double>(f.grid().points());
  for (std::size_t c = 0; c < f.components(); ++c) {
    auto in = f.values(c);
    if (std::all_of(in.begin(), in.end(), [](double v) { return v == 0.0; })) continue;
    auto dst = out.modes(c);
    std::transform(in.begin(), in.end(), dst.begin(), [](double v) { return Complex(v, 0.0); });
    detail::fft_forward(f.grid(), dst);
    for (Complex& v : dst) v *= scale;
  }
  return out;
}

FormField to_physical(const FormField& f) {
  if (f.rep() != Representation::kSpectral) throw std::invalid_argument("to_physical expects a spectral field");
  FormField out(f.grid(), f.grade(), Representation::kPhysical);
  std::vector<Complex> buffer(f.grid().points());
  for (std::size_t c = 0; c < f.components(); ++c) {
    auto in = f.modes(c);
    if (std::all_of(in.begin(), in.end(), [](Complex v) { return v == Complex{}; })) continue;
    std::copy(in.begin(), in.end(), buffer.begin());
    detail::fft_backward(f.grid(), buffer);
    auto dst = out.values(c);
    std::transform(buffer.begin(), buffer.end(), dst.begin(), [](Complex v) { return v.real(); });
  }
  return out;
}

namespace {

void require_physical_pair(const FormField& u, const FormField& w, const char* what) {
  if (u.rep() != Representation::kPhysical || w.rep() != Representation::kPhysical) {
    throw std::invalid_argument(std::string(what) + " expects physical fields");
  }
  if (!(u.grid() == w.grid())) throw std::invalid_argument(std::string(what) + ": grid mismatch");
}

FormField apply_pointwise(const ProductTable& table, const FormField& u, const FormField& w) {
  FormField out(u.grid(), table.out_grade, Representation::kPhysical);
  const std::size_t total = u.grid().points();
  for (const ProductTerm& term : table.terms) {
    const double* a = u.values(term.lhs).data();
    const double* b = w.values(term.rhs).data();
    double* o = out.values(term.out).data();
    const double s = term.sign;
    for (std::size_t p = 0; p < total; ++p) o[p] += s * a[p] * b[p];
  }
  return out;
}

}  // namespace

FormField pointwise_contract(const FormField& u, const FormField& w) {
  require_physical_pair(u, w, "pointwise_contract");
  if (w.grade() < u.grade()) throw std::invalid_argument("pointwise_contract: negative output grade");
  return apply_pointwise(contract_table(u.grid().n, u.grade(), w.grade()), u, w);
}

FormField pointwise_wedge(const FormField& u, const FormField& w) {
  require_physical_pair(u, w, "pointwise_wedge");
  if (u.grade() + w.grade() > u.grid().n) throw std::invalid_argument("pointwise_wedge: output grade exceeds n");
  return apply_pointwise(wedge_table(u.grid().n, u.grade(), w.grade()), u, w);
}

FormField dealias(const FormField& f) {
  if (!f.is_spectral()) throw std::invalid_argument("dealias expects a spectral field");
  FormField out = f;
  const auto& waves = wave_table(f.grid());
  const int cutoff = f.grid().dealias_cutoff();
  const std::size_t total = f.grid().points();
  std::vector<char> keep(total, 1);
  for (const auto& axis : waves.index) {
    for (std::size_t p = 0; p < total; ++p) {
      if (std::abs(axis[p]) > cutoff) keep[p] = 0;
    }
  }
  for (std::size_t c = 0; c < out.components(); ++c) {
    auto m = out.modes(c);
    for (std::size_t p = 0; p < total; ++p) {
      if (!keep[p]) m[p] = Complex{};
    }
  }
  return out;
}

double lp_norm(std::span<const FormField* const> parts, double p) {
  if (parts.empty()) throw std::invalid_argument("lp_norm needs at least one field");
  if (!(p >= 1.0)) throw std::invalid_argument("lp_norm requires p >= 1");
  const GridSpec& grid = parts.front()->grid();
  for (const FormField* f : parts) {
    if (f->rep() != Representation::kPhysical) throw std::invalid_argument("lp_norm expects physical fields");
    if (!(f->grid() == grid)) throw std::invalid_argument("lp_norm: grid mismatch");
  }
  const std::size_t total = grid.points();
  std::vector<double> sq(total, 0.0);
  for (const FormField* f : parts) {
    for (std::size_t c = 0; c < f->components(); ++c) {
      auto v = f->values(c);
      for (std::size_t i = 0; i < total; ++i) sq[i] += v[i] * v[i];
    }
  }
  if (std::isinf(p)) {
    double m = 0.0;
    for (double s : sq) m = std::max(m, s);
    return std::sqrt(m);
  }
  double sum = 0.0;
  if (p == 2.0) {
    for (double s : sq) sum += s;
  } else if (const double half = 0.5 * p; half == std::floor(half) && half <= 64.0) {
    const int e = static_cast<int>(half);
    for (double s : sq) {
      double r = 1.0, b = s;
      for (int k = e; k > 0; k >>= 1, b *= b) {
        if (k & 1) r *= b;
      }
      sum += r;
    }
  } else {
    for (double s : sq) sum += std::pow(s, half);
  }
  return std::pow(sum * grid.cell_volume(), 1.0 / p);
}

double lp_norm(const FormField& f, double p) {
  const FormField* parts[] = {&f};
  return lp_norm(parts, p);
}

double l2_inner_spectral(const FormField& f, const FormField& g) {
  f.require_compatible(g, "l2_inner_spectral");
  if (!f.is_spectral()) throw std::invalid_argument("l2_inner_spectral expects spectral fields");
  double sum = 0.0;
  for (std::size_t c = 0; c < f.components(); ++c) {
    auto a = f.modes(c);
    auto b = g.modes(c);
    for (std::size_t i = 0; i < a.size(); ++i) sum += (std::conj(a[i]) * b[i]).real();
  }
  return sum * std::pow(f.grid().L, f.grid().n);
}

double l2_norm_spectral(const FormField& f) { return std::sqrt(std::max(0.0, l2_inner_spectral(f, f))); }

double max_abs_spectral(const FormField& f) {
  double m = 0.0;
  for (std::size_t c = 0; c < f.components(); ++c) {
    for (const Complex& v : f.modes(c)) m = std::max(m, std::abs(v));
  }
  return m;
}

double mean_magnitude(const FormField& f) {
  if (!f.is_spectral()) throw std::invalid_argument("mean_magnitude expects a spectral field");
  double s = 0.0;
  for (std::size_t c = 0; c < f.components(); ++c) s += std::norm(f.modes(c)[0]);
  return std::sqrt(s);
}

int band_limit(const FormField& f, double rel_tol) {
  if (!f.is_spectral()) throw std::invalid_argument("band_limit expects a spectral field");
  const double threshold = rel_tol * max_abs_spectral(f);
  const auto& waves = wave_table(f.grid());
  int limit = 0;
  for (std::size_t c = 0; c < f.components(); ++c) {
    auto m = f.modes(c);
    for (std::size_t p = 0; p < m.size(); ++p) {
      if (std::abs(m[p]) <= threshold || m[p] == Complex{}) continue;
      for (const auto& axis : waves.index) limit = std::max(limit, std::abs(axis[p]));
    }
  }
  return limit;
}

FormField random_field(const GridSpec& grid, int grade, double decay, std::uint64_t seed) {
  if (!(decay > 0.0)) throw std::invalid_argument("random_field requires a positive spectral decay");
  FormField out(grid, grade, Representation::kSpectral);
  const auto& waves = wave_table(grid);
  const std::size_t total = grid.points();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);

  std::vector<std::size_t> mirror(total);
  std::vector<int> idx(static_cast<std::size_t>(grid.n));
  std::vector<char> active(total, 1);
  for (std::size_t p = 0; p < total; ++p) {
    bool zero = true;
    for (std::size_t j = 0; j < idx.size(); ++j) {
      idx[j] = -waves.index[j][p];
      if (waves.index[j][p] == -grid.N / 2) active[p] = 0;
      if (waves.index[j][p] != 0) zero = false;
    }
    if (zero) active[p] = 0;
    mirror[p] = mode_position(grid, idx);
  }

  std::vector<double> weight(total);
  for (std::size_t p = 0; p < total; ++p) weight[p] = std::pow(1.0 + std::sqrt(waves.k_squared[p]), -decay);

  std::vector<Complex> raw(total);
  for (std::size_t c = 0; c < out.components(); ++c) {
    auto m = out.modes(c);
    std::fill(raw.begin(), raw.end(), Complex{});
    for (std::size_t p = 0; p < total; ++p) {
      const double re = normal(rng);
      const double im = normal(rng);
      if (!active[p]) continue;
      raw[p] = Complex(re, im) * weight[p];
    }
    for (std::size_t p = 0; p < total; ++p) m[p] = 0.5 * (raw[p] + std::conj(raw[mirror[p]]));
  }
  return out;
}

FormField dilate(const FormField& f, int lambda, double amplitude) {
  if (lambda < 1) throw std::invalid_argument("dilation factor must be a positive integer");
  if (f.is_spectral()) return to_spectral(dilate(to_physical(f), lambda, amplitude));
  const GridSpec& grid = f.grid();
  FormField out(grid, f.grade(), Representation::kPhysical);
  const std::size_t total = grid.points();
  const auto N = static_cast<std::size_t>(grid.N);
  std::vector<std::size_t> source(total);
  for (std::size_t p = 0; p < total; ++p) {
    std::size_t rest = p;
    std::size_t q = 0;
    std::size_t stride = 1;
    for (int j = 0; j < grid.n; ++j) {
      const std::size_t i = rest % N;
      rest /= N;
      q += ((static_cast<std::size_t>(lambda) * i) % N) * stride;
      stride *= N;
    }
    source[p] = q;
  }
  for (std::size_t c = 0; c < f.components(); ++c) {
    auto in = f.values(c);
    auto dst = out.values(c);
    for (std::size_t p = 0; p < total; ++p) dst[p] = amplitude * in[source[p]];
  }
  return out;
}

namespace {

void put_u32(std::ostream& out, std::uint32_t v) {
  char bytes[4];
  for (int i = 0; i < 4; ++i) bytes[i] = static_cast<char>((v >> (8 * i)) & 0xffu);
  out.write(bytes, 4);
}

void put_f64(std::ostream& out, double v) {
  const auto bits = std::bit_cast<std::uint64_t>(v);
  char bytes[8];
  for (int i = 0; i < 8; ++i) bytes[i] = static_cast<char>((bits >> (8 * i)) & 0xffu);
  out.write(bytes, 8);
}

std::uint32_t get_u32(std::istream& in) {
  unsigned char bytes[4];
  if (!in.read(reinterpret_cast<char*>(bytes), 4)) throw std::runtime_error("snapshot truncated");
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(bytes[i]) << (8 * i);
  return v;
}

double get_f64(std::istream& in) {
  unsigned char bytes[8];
  if (!in.read(reinterpret_cast<char*>(bytes), 8)) throw std::runtime_error("snapshot truncated");
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(bytes[i]) << (8 * i);
  return std::bit_cast<double>(v);
}

}  // namespace

void write_snapshot(std::ostream& out, const FormField& f) {
  const FormField phys = f.is_spectral() ? to_physical(f) : f;
  out.write("HMHD", 4);
  put_u32(out, kSnapshotVersion);
  put_u32(out, static_cast<std::uint32_t>(phys.grid().n));
  put_u32(out, static_cast<std::uint32_t>(phys.grade()));
  put_u32(out, static_cast<std::uint32_t>(phys.grid().N));
  put_f64(out, phys.grid().L);
  for (std::size_t c = 0; c < phys.components(); ++c) {
    for (double v : phys.values(c)) put_f64(out, v);
  }
  if (!out) throw std::runtime_error("failed writing snapshot");
}

void write_snapshot(const std::string& path, const FormField& f) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_snapshot(out, f);
}

FormField read_snapshot(std::istream& in) {
  char magic[4];
  if (!in.read(magic, 4) || std::string(magic, 4) != "HMHD") throw std::runtime_error("not an HMHD snapshot");
  const std::uint32_t version = get_u32(in);
  if (version != kSnapshotVersion) throw std::runtime_error("unsupported snapshot version " + std::to_string(version));
  GridSpec grid;
  grid.n = static_cast<int>(get_u32(in));
  const int grade = static_cast<int>(get_u32(in));
  grid.N = static_cast<int>(get_u32(in));
  grid.L = get_f64(in);
  FormField f(grid, grade, Representation::kPhysical);
  for (std::size_t c = 0; c < f.components(); ++c) {
    for (double& v : f.values(c)) v = get_f64(in);
  }
  return f;
}

FormField read_snapshot(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_snapshot(in);
}

}  // namespace hodgemhd
