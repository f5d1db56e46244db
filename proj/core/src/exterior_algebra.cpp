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

#include "hodgemhd/exterior_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace hodgemhd {

namespace {

void check_dimension(int n) {
  if (n < 0 || n > kMaxDimension) {
    throw std::invalid_argument("exterior algebra dimension must lie in [0, 16], got " +
                                std::to_string(n));
  }
}

void check_same_dimension(const Multivector& a, const Multivector& b) {
  if (a.dimension() != b.dimension()) {
    throw std::invalid_argument("multivector dimension mismatch: " +
                                std::to_string(a.dimension()) + " vs " +
                                std::to_string(b.dimension()));
  }
}

}  // namespace

BladeIndex BladeIndex::from_indices(std::span<const int> one_based) {
  BladeIndex b;
  for (int j : one_based) {
    if (j < 1 || j > kMaxDimension) throw std::invalid_argument("blade index out of range");
    const std::uint32_t bit = 1u << (j - 1);
    if (b.bits & bit) throw std::invalid_argument("repeated index in blade");
    b.bits |= bit;
  }
  return b;
}

std::vector<int> BladeIndex::indices() const {
  std::vector<int> out;
  for (int j = 0; j < 32; ++j) {
    if (bits & (1u << j)) out.push_back(j + 1);
  }
  return out;
}

std::string BladeIndex::name() const {
  if (bits == 0) return "1";
  std::string s = "e";
  for (int j : indices()) s += std::to_string(j);
  return s;
}

int wedge_sign(BladeIndex a, BladeIndex b) {
  if (a.bits & b.bits) return 0;
  // For each factor of b, count the factors of a with a larger index.
  int inversions = 0;
  std::uint32_t rest = b.bits;
  while (rest) {
    const int j = __builtin_ctz(rest);
    rest &= rest - 1;
    const std::uint32_t above = j >= 31 ? 0u : ~((2u << j) - 1u);
    inversions += __builtin_popcount(a.bits & above);
  }
  return (inversions & 1) ? -1 : 1;
}

int contract_sign(BladeIndex a, BladeIndex b) {
  if (!b.contains(a)) return 0;
  return wedge_sign(a, BladeIndex{b.bits & ~a.bits});
}

int hodge_sign(int n, BladeIndex blade) {
  const std::uint32_t full = n == 32 ? ~0u : ((1u << n) - 1u);
  return wedge_sign(blade, BladeIndex{full & ~blade.bits});
}

std::size_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return r;
}

const std::vector<BladeIndex>& blades_of_grade(int n, int grade) {
  check_dimension(n);
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::vector<BladeIndex>> cache;
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.try_emplace({n, grade});
  if (inserted && grade >= 0 && grade <= n) {
    auto& list = it->second;
    for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
      if (__builtin_popcount(bits) == grade) list.push_back(BladeIndex{bits});
    }
    std::sort(list.begin(), list.end(), [](BladeIndex x, BladeIndex y) {
      return x.indices() < y.indices();
    });
  }
  return it->second;
}

std::size_t component_index(int n, BladeIndex blade) {
  const auto& list = blades_of_grade(n, blade.grade());
  auto it = std::find(list.begin(), list.end(), blade);
  if (it == list.end()) throw std::invalid_argument("blade " + blade.name() + " not in dimension " + std::to_string(n));
  return static_cast<std::size_t>(it - list.begin());
}

Multivector::Multivector(int n) : n_(n) {
  check_dimension(n);
  coeffs_.assign(std::size_t{1} << n, 0.0);
}

Multivector Multivector::blade(int n, BladeIndex b, double coefficient) {
  Multivector m(n);
  if (b.bits >= (1u << n)) throw std::invalid_argument("blade outside dimension");
  m.coeffs_[b.bits] = coefficient;
  return m;
}

Multivector Multivector::vector(std::span<const double> components) {
  Multivector m(static_cast<int>(components.size()));
  for (std::size_t j = 0; j < components.size(); ++j) m.coeffs_[std::size_t{1} << j] = components[j];
  return m;
}

Multivector Multivector::grade_part(int grade) const {
  Multivector out(n_);
  for (std::uint32_t bits = 0; bits < coeffs_.size(); ++bits) {
    if (__builtin_popcount(bits) == grade) out.coeffs_[bits] = coeffs_[bits];
  }
  return out;
}

double Multivector::norm() const { return std::sqrt(inner(*this, *this)); }

Multivector& Multivector::operator+=(const Multivector& other) {
  check_same_dimension(*this, other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& other) {
  check_same_dimension(*this, other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

Multivector& Multivector::operator*=(double s) {
  for (double& c : coeffs_) c *= s;
  return *this;
}

Multivector wedge(const Multivector& a, const Multivector& b) {
  check_same_dimension(a, b);
  Multivector out(a.dimension());
  const auto ca = a.coefficients();
  const auto cb = b.coefficients();
  for (std::uint32_t i = 0; i < ca.size(); ++i) {
    if (ca[i] == 0.0) continue;
    for (std::uint32_t j = 0; j < cb.size(); ++j) {
      if (cb[j] == 0.0 || (i & j)) continue;
      out[BladeIndex{i | j}] += wedge_sign(BladeIndex{i}, BladeIndex{j}) * ca[i] * cb[j];
    }
  }
  return out;
}

Multivector contract(const Multivector& a, const Multivector& b) {
  check_same_dimension(a, b);
  Multivector out(a.dimension());
  const auto ca = a.coefficients();
  const auto cb = b.coefficients();
  for (std::uint32_t i = 0; i < ca.size(); ++i) {
    if (ca[i] == 0.0) continue;
    for (std::uint32_t j = 0; j < cb.size(); ++j) {
      if (cb[j] == 0.0 || (i & j) != i) continue;
      out[BladeIndex{j & ~i}] += contract_sign(BladeIndex{i}, BladeIndex{j}) * ca[i] * cb[j];
    }
  }
  return out;
}

double inner(const Multivector& a, const Multivector& b) {
  check_same_dimension(a, b);
  const auto ca = a.coefficients();
  const auto cb = b.coefficients();
  double s = 0.0;
  for (std::size_t i = 0; i < ca.size(); ++i) s += ca[i] * cb[i];
  return s;
}

Multivector hodge_star(const Multivector& a) {
  const int n = a.dimension();
  const std::uint32_t full = (1u << n) - 1u;
  Multivector out(n);
  const auto ca = a.coefficients();
  for (std::uint32_t i = 0; i < ca.size(); ++i) {
    if (ca[i] == 0.0) continue;
    out[BladeIndex{full & ~i}] += hodge_sign(n, BladeIndex{i}) * ca[i];
  }
  return out;
}

namespace {

enum class ProductKind { kWedge, kContract };

ProductTable build_table(ProductKind kind, int n, int lhs_grade, int rhs_grade) {
  ProductTable table;
  table.n = n;
  table.lhs_grade = lhs_grade;
  table.rhs_grade = rhs_grade;
  table.out_grade = kind == ProductKind::kWedge ? lhs_grade + rhs_grade : rhs_grade - lhs_grade;
  if (lhs_grade < 0 || lhs_grade > n || rhs_grade < 0 || rhs_grade > n || table.out_grade < 0 ||
      table.out_grade > n) {
    throw std::invalid_argument("product grades (" + std::to_string(lhs_grade) + ", " +
                                std::to_string(rhs_grade) + ") invalid in dimension " +
                                std::to_string(n));
  }
  const auto& lhs = blades_of_grade(n, lhs_grade);
  const auto& rhs = blades_of_grade(n, rhs_grade);
  for (std::uint32_t i = 0; i < lhs.size(); ++i) {
    for (std::uint32_t j = 0; j < rhs.size(); ++j) {
      int sign = 0;
      BladeIndex result;
      if (kind == ProductKind::kWedge) {
        sign = wedge_sign(lhs[i], rhs[j]);
        result = BladeIndex{lhs[i].bits | rhs[j].bits};
      } else {
        sign = contract_sign(lhs[i], rhs[j]);
        result = BladeIndex{rhs[j].bits & ~lhs[i].bits};
      }
      if (sign == 0) continue;
      table.terms.push_back({i, j, static_cast<std::uint32_t>(component_index(n, result)),
                             static_cast<double>(sign)});
    }
  }
  return table;
}

const ProductTable& cached_table(ProductKind kind, int n, int lhs_grade, int rhs_grade) {
  check_dimension(n);
  static std::mutex mutex;
  static std::map<std::tuple<int, int, int, int>, std::unique_ptr<ProductTable>> cache;
  const auto key = std::make_tuple(static_cast<int>(kind), n, lhs_grade, rhs_grade);
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return *it->second;
  }
  auto table = std::make_unique<ProductTable>(build_table(kind, n, lhs_grade, rhs_grade));
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.try_emplace(key, std::move(table));
  return *it->second;
}

}  // namespace

const ProductTable& wedge_table(int n, int lhs_grade, int rhs_grade) {
  return cached_table(ProductKind::kWedge, n, lhs_grade, rhs_grade);
}

const ProductTable& contract_table(int n, int lhs_grade, int rhs_grade) {
  return cached_table(ProductKind::kContract, n, lhs_grade, rhs_grade);
}

}  // namespace hodgemhd
