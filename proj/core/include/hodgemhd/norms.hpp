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

// Critical-space norms of time-dependent forms and empirical estimators for
// the constants of the Leibniz and maximal-regularity inequalities.

#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "hodgemhd/duhamel.hpp"
#include "hodgemhd/form_field.hpp"

namespace hodgemhd {

// (n, p, q) on the scaling line n/p + 2/q = 1; alpha = 1 - n/p.
class CriticalExponents {
 public:
  // q is derived from the scaling relation; requires p > n.
  static CriticalExponents from_p(int n, double p);
  // Throws std::invalid_argument if n/p + 2/q differs from 1 by more than 1e-12.
  CriticalExponents(int n, double p, double q);

  // p = 2n, q = 4: the default point for the L^q_t L^p_x theory.
  static CriticalExponents lq_lp_default(int n);
  // p = 3n/2 (alpha = 1/3): the default point for the weighted sup-norm theory.
  static CriticalExponents weighted_default(int n);

  int n() const { return n_; }
  double p() const { return p_; }
  double q() const { return q_; }
  double alpha() const { return 1.0 - n_ / p_; }

  // p > n and q > 3.
  bool in_lq_lp_regime() const;
  // n < p < 2n, hence 0 < alpha < 1/2.
  bool in_weighted_regime() const;

 private:
  int n_;
  double p_;
  double q_;
};

// Time quadrature for discrete L^q_t norms on a uniform grid.
enum class TimeRule {
  kRectangle,  // dt * sum over nodes 1..M
  kTrapezoid,  // dt * (½ f_0 + f_1 + ... + f_{M-1} + ½ f_M)
};

// (quadrature of values^q)^(1/q); q = infinity takes the max over all nodes.
// `values` holds one spatial norm per node of `time`.
double time_norm(const TimeGrid& time, std::span<const double> values, double q,
                 TimeRule rule = TimeRule::kRectangle);

// ‖f‖_{L^q_t L^p_x} over the series (spectral or physical samples).
double lq_lp_norm(const FieldSeries& f, double q, double p, TimeRule rule = TimeRule::kRectangle);

// sup over nodes t > t0 of t^{α/2}‖u(t)‖_p + t^{(1+α)/2}‖du(t)‖_p, with t
// measured from t0. ut_norm takes 1-forms, bt_norm 2-forms with d*b in
// place of du.
double ut_norm(const FieldSeries& u, const CriticalExponents& exps);
double bt_norm(const FieldSeries& b, const CriticalExponents& exps);

// The two parts of the L^q_t L^p_x solution-space norms:
// ‖u‖_{L^q L^p} and ‖du‖_{L^{q/2} L^{p/2}} (d*b for 2-forms).
struct SpaceTimeNorm {
  double field = 0.0;
  double derivative = 0.0;
  double total() const { return field + derivative; }
};
SpaceTimeNorm lq_lp_pair_u(const FieldSeries& u, const CriticalExponents& exps);
SpaceTimeNorm lq_lp_pair_b(const FieldSeries& b, const CriticalExponents& exps);

// Heat characterization of the homogeneous Besov norm, s < 0:
//   ( ∫ (t^{-s/2} ‖e^{tΔ}f0‖_p)^q dt/t )^{1/q},
// trapezoid in log t with 64 points per decade on [t_min, t_max] plus the
// analytic head ∫_0^{t_min} evaluated with ‖e^{t_min Δ} f0‖_p frozen.
// f0 is spectral with zero mean.
struct BesovQuadrature {
  double t_min = 0.0;  // 0 selects 1e-6 / max|k|² of the grid
  double t_max = 0.0;  // 0 selects 50 / min nonzero |k|² present in f0
  int points_per_decade = 64;
};
double besov_norm(const FormField& f0, double s, double p, double q, const BesovQuadrature& quad = {});

// Exponents of the Leibniz inequality with 1/alpha + 1/beta = 1/alpha' +
// 1/beta' = 1/gamma.
struct LeibnizExponents {
  double alpha;
  double beta;
  double alpha_prime;
  double beta_prime;
  double gamma;

  void validate() const;
};

// ‖d(ω1 ⌟ ω2)‖_γ / (‖𝔇ω1‖_α ‖ω2‖_β + ‖ω1‖_α' ‖𝔇ω2‖_β'), 𝔇 = d + δ.
// 0 when numerator and denominator both vanish. ω1 is a spectral 1-form, ω2
// a spectral 2-form; the product is formed on the grid without dealiasing,
// so the inputs should be band-limited to N/4 for it to be resolved.
double leibniz_ratio(const FormField& omega1, const FormField& omega2, const LeibnizExponents& exps);

// ‖L R f‖_{L^q L^p} / ‖f‖_{L^q L^p} with R f = ∫_0^t e^{(t-s)L} f(s) ds.
// f is a spectral series with zero mean at every node; throws for f = 0.
double maxreg_ratio(const FieldSeries& f, double q, double p, TimeRule rule = TimeRule::kRectangle);

struct NormReport {
  std::string name;
  double value = 0.0;
  std::map<std::string, double> parameters;  // exponents, truncation, grid
};

// One JSON object per report and a CSV with columns
// name,n,N,p,q,value,params (params as key=value pairs joined by ';').
std::string to_json_rows(std::span<const NormReport> reports);
void write_csv(std::ostream& out, std::span<const NormReport> reports);

}  // namespace hodgemhd
