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

// Exterior algebra of R^n with the Euclidean inner product.
//
// A basis blade e_I = e_{j1} ^ ... ^ e_{jl} (j1 < ... < jl) is encoded as a
// bitmask: bit (j - 1) is set iff e_j is a factor. Multivectors store all 2^n
// coefficients densely, indexed by the bitmask.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace hodgemhd {

inline constexpr int kMaxDimension = 16;

struct BladeIndex {
  std::uint32_t bits = 0;

  constexpr int grade() const { return __builtin_popcount(bits); }
  constexpr bool contains(BladeIndex other) const {
    return (bits & other.bits) == other.bits;
  }
  constexpr auto operator<=>(const BladeIndex&) const = default;

  // 1-based basis vector e_j.
  static constexpr BladeIndex basis(int j) { return {1u << (j - 1)}; }
  static BladeIndex from_indices(std::span<const int> one_based);

  std::vector<int> indices() const;  // 1-based, increasing
  std::string name() const;          // "1", "e12", "e134", ...
};

// (-1)^(number of pairs (i in a, j in b) with i > j): the sign picked up when
// sorting the concatenation of a and b. Returns 0 if a and b overlap.
int wedge_sign(BladeIndex a, BladeIndex b);

// Sign of e_a ⌟ e_b = sign * e_{b \ a}; 0 unless a ⊆ b. Fixed by the adjoint
// relation <e_a ⌟ e_b, c> = <e_b, e_a ^ c>.
int contract_sign(BladeIndex a, BladeIndex b);

// Sign s with e_I ^ (s e_{I^c}) = e_{1..n}.
int hodge_sign(int n, BladeIndex blade);

// Blades of the given grade in lexicographic order of their index lists.
// Empty for grade < 0 or grade > n.
const std::vector<BladeIndex>& blades_of_grade(int n, int grade);

// Position of `blade` in blades_of_grade(n, blade.grade()).
std::size_t component_index(int n, BladeIndex blade);

std::size_t binomial(int n, int k);

class Multivector {
 public:
  explicit Multivector(int n);

  static Multivector blade(int n, BladeIndex b, double coefficient = 1.0);
  // Grade-1 element sum_j v[j-1] e_j.
  static Multivector vector(std::span<const double> components);

  int dimension() const { return n_; }
  double operator[](BladeIndex b) const { return coeffs_[b.bits]; }
  double& operator[](BladeIndex b) { return coeffs_[b.bits]; }
  std::span<const double> coefficients() const { return coeffs_; }

  Multivector grade_part(int grade) const;
  double norm() const;

  Multivector& operator+=(const Multivector& other);
  Multivector& operator-=(const Multivector& other);
  Multivector& operator*=(double s);

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator*(double s, Multivector a) { return a *= s; }
  friend Multivector operator*(Multivector a, double s) { return a *= s; }

 private:
  int n_;
  std::vector<double> coeffs_;
};

Multivector wedge(const Multivector& a, const Multivector& b);
Multivector contract(const Multivector& a, const Multivector& b);
double inner(const Multivector& a, const Multivector& b);
Multivector hodge_star(const Multivector& a);

// Sparse structure constants of a bilinear product restricted to homogeneous
// grades: out[term.out] += term.sign * lhs[term.lhs] * rhs[term.rhs], with
// component positions as in blades_of_grade. Used by the field-level
// pointwise products and the spectral derivative operators.
struct ProductTerm {
  std::uint32_t lhs;
  std::uint32_t rhs;
  std::uint32_t out;
  double sign;
};

struct ProductTable {
  int n = 0;
  int lhs_grade = 0;
  int rhs_grade = 0;
  int out_grade = 0;
  std::vector<ProductTerm> terms;
};

// Tables are built once per (n, lhs grade, rhs grade) and live for the
// program lifetime. Throws std::invalid_argument when the output grade is
// outside [0, n].
const ProductTable& wedge_table(int n, int lhs_grade, int rhs_grade);
const ProductTable& contract_table(int n, int lhs_grade, int rhs_grade);

}  // namespace hodgemhd
