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

#include <algorithm>
#include <random>
#include <vector>

#include "hodgemhd/exterior_algebra.hpp"

using namespace hodgemhd;

namespace {

// Independent sign oracle: bubble-sort the concatenated index lists and count
// transpositions.
int brute_force_wedge_sign(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> seq = a;
  seq.insert(seq.end(), b.begin(), b.end());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      if (seq[i] == seq[j]) return 0;
    }
  }
  int swaps = 0;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t j = 0; j + 1 < seq.size() - i; ++j) {
      if (seq[j] > seq[j + 1]) {
        std::swap(seq[j], seq[j + 1]);
        ++swaps;
      }
    }
  }
  return swaps % 2 ? -1 : 1;
}

Multivector e(int n, std::vector<int> idx, double c = 1.0) {
  return Multivector::blade(n, BladeIndex::from_indices(idx), c);
}

Multivector random_multivector(int n, std::mt19937_64& rng, int grade = -1) {
  std::normal_distribution<double> normal;
  Multivector m(n);
  for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
    if (grade < 0 || __builtin_popcount(bits) == grade) m[BladeIndex{bits}] = normal(rng);
  }
  return m;
}

double max_diff(const Multivector& a, const Multivector& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.coefficients().size(); ++i) {
    m = std::max(m, std::abs(a.coefficients()[i] - b.coefficients()[i]));
  }
  return m;
}

// ⟨a ⌟ b, c⟩ solved for by enumerating basis blades c: the adjoint oracle.
Multivector contract_by_adjoint(const Multivector& a, const Multivector& b) {
  const int n = a.dimension();
  Multivector out(n);
  for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
    out[BladeIndex{bits}] = inner(b, wedge(a, Multivector::blade(n, BladeIndex{bits})));
  }
  return out;
}

}  // namespace

TEST_CASE("wedge sign matches brute-force inversion counting") {
  for (int n = 1; n <= 6; ++n) {
    for (std::uint32_t a = 0; a < (1u << n); ++a) {
      for (std::uint32_t b = 0; b < (1u << n); ++b) {
        CHECK(wedge_sign(BladeIndex{a}, BladeIndex{b}) ==
              brute_force_wedge_sign(BladeIndex{a}.indices(), BladeIndex{b}.indices()));
      }
    }
  }
}

TEST_CASE("wedge on basis blades") {
  CHECK(max_diff(wedge(e(3, {1}), e(3, {2})), e(3, {1, 2})) == 0.0);
  CHECK(wedge(e(3, {1}), e(3, {1})).norm() == 0.0);
  CHECK(max_diff(wedge(e(4, {1, 2}), e(4, {3, 4})), e(4, {1, 2, 3, 4})) == 0.0);
  CHECK(max_diff(wedge(e(4, {1, 3}), e(4, {2, 4})), e(4, {1, 2, 3, 4}, -1.0)) == 0.0);
}

TEST_CASE("contract on basis blades") {
  CHECK(max_diff(contract(e(3, {1}), e(3, {1, 2})), e(3, {2})) == 0.0);
  CHECK(contract(e(3, {3}), e(3, {1, 2})).norm() == 0.0);
  CHECK(max_diff(contract(e(3, {1}), e(3, {1, 2})), contract_by_adjoint(e(3, {1}), e(3, {1, 2}))) == 0.0);
}

TEST_CASE("contract equals the adjoint of wedge on every blade pair") {
  for (int n = 1; n <= 5; ++n) {
    for (std::uint32_t a = 0; a < (1u << n); ++a) {
      for (std::uint32_t b = 0; b < (1u << n); ++b) {
        const auto lhs = Multivector::blade(n, BladeIndex{a});
        const auto rhs = Multivector::blade(n, BladeIndex{b});
        CHECK(max_diff(contract(lhs, rhs), contract_by_adjoint(lhs, rhs)) == 0.0);
      }
    }
  }
}

TEST_CASE("inner product: orthonormal blades") {
  CHECK(inner(e(3, {1, 2}), e(3, {1, 2})) == 1.0);
  CHECK(inner(e(3, {1, 2}), e(3, {1, 3})) == 0.0);
  std::mt19937_64 rng(7);
  const Multivector a = random_multivector(4, rng);
  double sq = 0.0;
  for (double c : a.coefficients()) sq += c * c;
  CHECK(inner(a, a) == doctest::Approx(sq).epsilon(1e-15));
}

TEST_CASE("hodge star") {
  CHECK(max_diff(hodge_star(e(3, {1})), e(3, {2, 3})) == 0.0);
  CHECK(max_diff(hodge_star(e(3, {1, 2})), e(3, {3})) == 0.0);
  CHECK(max_diff(hodge_star(e(3, {2})), e(3, {1, 3}, -1.0)) == 0.0);
  for (int n = 1; n <= 6; ++n) {
    const Multivector volume = Multivector::blade(n, BladeIndex{(1u << n) - 1u});
    for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
      const auto blade = Multivector::blade(n, BladeIndex{bits});
      // e_I ^ ⋆e_I = e_{1..n}
      CHECK(max_diff(wedge(blade, hodge_star(blade)), volume) == 0.0);
      const int l = __builtin_popcount(bits);
      const double expected_sign = ((l * (n - l)) % 2) ? -1.0 : 1.0;
      CHECK(max_diff(hodge_star(hodge_star(blade)), expected_sign * blade) == 0.0);
    }
  }
  // n = 4, grade 2: ⋆⋆ = +1 on all six blades.
  for (BladeIndex b : blades_of_grade(4, 2)) {
    const auto blade = Multivector::blade(4, b);
    CHECK(max_diff(hodge_star(hodge_star(blade)), blade) == 0.0);
  }
}

TEST_CASE("R^3 dictionary") {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> normal;
  for (int trial = 0; trial < 20; ++trial) {
    const double u[3] = {normal(rng), normal(rng), normal(rng)};
    const double v[3] = {normal(rng), normal(rng), normal(rng)};
    const double phi = normal(rng);
    const double cross[3] = {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
    const double dot = u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
    const Multivector U = Multivector::vector(u);
    const Multivector V1 = Multivector::vector(v);
    const Multivector V2 = hodge_star(V1);  // v as a 2-form
    const Multivector scalar = Multivector::blade(3, BladeIndex{}, phi);
    const Multivector volume = Multivector::blade(3, BladeIndex{0b111}, phi);

    // φ as a 0-form: u ^ φ = φu, u ⌟ φ = 0.
    CHECK(max_diff(wedge(U, scalar), phi * U) < 1e-15);
    CHECK(contract(U, scalar).norm() == 0.0);
    // φ as a 3-form: u ^ φ = 0, u ⌟ φ = φu (as a 2-form, i.e. ⋆(φu)).
    CHECK(wedge(U, volume).norm() == 0.0);
    CHECK(max_diff(contract(U, volume), hodge_star(phi * U)) < 1e-15);
    // v a 1-form: u ^ v = u × v, u ⌟ v = u·v.
    const Multivector cross_as_two_form = hodge_star(Multivector::vector(cross));
    CHECK(max_diff(wedge(U, V1), cross_as_two_form) < 1e-14);
    CHECK(contract(U, V1)[BladeIndex{}] == doctest::Approx(dot).epsilon(1e-14));
    // v a 2-form: u ^ v = u·v (volume), u ⌟ v = -u × v.
    CHECK(wedge(U, V2)[BladeIndex{0b111}] == doctest::Approx(dot).epsilon(1e-14));
    CHECK(max_diff(contract(U, V2), -1.0 * Multivector::vector(cross)) < 1e-14);
  }
}

TEST_CASE("algebraic properties on random multivectors") {
  std::mt19937_64 rng(2024);
  for (int n = 2; n <= 6; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      const int k = static_cast<int>(rng() % static_cast<unsigned>(n + 1));
      const int l = static_cast<int>(rng() % static_cast<unsigned>(n + 1));
      const Multivector a = random_multivector(n, rng, k);
      const Multivector b = random_multivector(n, rng, l);
      const Multivector c = random_multivector(n, rng);
      const double sign = ((k * l) % 2) ? -1.0 : 1.0;
      CHECK(max_diff(wedge(a, b), sign * wedge(b, a)) < 1e-12);

      const Multivector x = random_multivector(n, rng);
      const Multivector y = random_multivector(n, rng);
      const Multivector z = random_multivector(n, rng);
      CHECK(max_diff(wedge(wedge(x, y), z), wedge(x, wedge(y, z))) < 1e-11);

      const double lhs = inner(contract(x, y), z);
      const double rhs = inner(y, wedge(x, z));
      CHECK(std::abs(lhs - rhs) <= 1e-13 * std::max(1.0, std::abs(rhs)) * 10);
      (void)c;
    }
  }
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(wedge(Multivector(3), Multivector(4)), std::invalid_argument);
  CHECK_THROWS_AS(contract(Multivector(3), Multivector(4)), std::invalid_argument);
  CHECK_THROWS_AS(inner(Multivector(3), Multivector(2)), std::invalid_argument);
  CHECK_THROWS_AS(Multivector(17), std::invalid_argument);
  CHECK_THROWS_AS(contract_table(3, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(wedge_table(3, 2, 2), std::invalid_argument);
}

TEST_CASE("product tables agree with the dense products") {
  std::mt19937_64 rng(5);
  const int n = 4;
  for (int k = 0; k <= n; ++k) {
    for (int l = k; l <= n; ++l) {
      const Multivector a = random_multivector(n, rng, k);
      const Multivector b = random_multivector(n, rng, l);
      const auto& lhs = blades_of_grade(n, k);
      const auto& rhs = blades_of_grade(n, l);
      const auto& out = blades_of_grade(n, l - k);
      std::vector<double> result(out.size(), 0.0);
      for (const ProductTerm& t : contract_table(n, k, l).terms) {
        result[t.out] += t.sign * a[lhs[t.lhs]] * b[rhs[t.rhs]];
      }
      const Multivector dense = contract(a, b);
      for (std::size_t i = 0; i < out.size(); ++i) CHECK(result[i] == doctest::Approx(dense[out[i]]));
    }
  }
}

TEST_CASE("blade ordering is lexicographic") {
  const auto& g2 = blades_of_grade(4, 2);
  std::vector<std::string> names;
  for (BladeIndex b : g2) names.push_back(b.name());
  CHECK(names == std::vector<std::string>{"e12", "e13", "e14", "e23", "e24", "e34"});
  CHECK(blades_of_grade(3, 4).empty());
  CHECK(blades_of_grade(3, -1).empty());
}
