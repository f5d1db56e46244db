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

#include "hodgemhd/norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "hodgemhd/hodge.hpp"

namespace hodgemhd {

CriticalExponents CriticalExponents::from_p(int n, double p) {
  if (!(p > n)) throw std::invalid_argument("critical exponents need p > n");
  return CriticalExponents(n, p, 2.0 / (1.0 - n / p));
}

CriticalExponents::CriticalExponents(int n, double p, double q) : n_(n), p_(p), q_(q) {
  if (n < 1 || !(p >= 1.0) || !(q >= 1.0)) throw std::invalid_argument("critical exponents out of range");
  if (std::abs(n / p + 2.0 / q - 1.0) > 1e-12) {
    throw std::invalid_argument("exponents violate n/p + 2/q = 1");
  }
}

CriticalExponents CriticalExponents::lq_lp_default(int n) { return CriticalExponents(n, 2.0 * n, 4.0); }

CriticalExponents CriticalExponents::weighted_default(int n) { return from_p(n, 1.5 * n); }

bool CriticalExponents::in_lq_lp_regime() const { return p_ > n_ && q_ > 3.0; }

bool CriticalExponents::in_weighted_regime() const { return p_ > n_ && p_ < 2.0 * n_; }

double time_norm(const TimeGrid& time, std::span<const double> values, double q, TimeRule rule) {
  time.validate();
  if (values.size() != time.nodes()) throw std::invalid_argument("time_norm: one value per node required");
  if (!(q >= 1.0)) throw std::invalid_argument("time_norm requires q >= 1");
  if (std::isinf(q)) return *std::max_element(values.begin(), values.end());
  const auto power = [q](double v) { return q == 1.0 ? v : std::pow(v, q); };
  double sum = 0.0;
  for (std::size_t m = 1; m < values.size(); ++m) sum += power(values[m]);
  if (rule == TimeRule::kTrapezoid) sum += 0.5 * (power(values.front()) - power(values.back()));
  return std::pow(sum * time.dt(), 1.0 / q);
}

namespace {

double spatial_norm(const FormField& f, double p) {
  return f.is_spectral() ? lp_norm(to_physical(f), p) : lp_norm(f, p);
}

FormField as_spectral(const FormField& f) { return f.is_spectral() ? f : to_spectral(f); }

template <typename Derivative>
double weighted_sup(const FieldSeries& f, const CriticalExponents& exps, Derivative&& derivative) {
  f.validate();
  const double a = exps.alpha();
  const double p = exps.p();
  double best = 0.0;
  for (int m = 1; m <= f.time.M; ++m) {
    const double t = f.time.node(m) - f.time.t0;
    const FormField& value = f.values[static_cast<std::size_t>(m)];
    const double field = spatial_norm(value, p);
    const double deriv = lp_norm(to_physical(derivative(as_spectral(value))), p);
    best = std::max(best, std::pow(t, 0.5 * a) * field + std::pow(t, 0.5 * (1.0 + a)) * deriv);
  }
  return best;
}

template <typename Derivative>
SpaceTimeNorm space_time_pair(const FieldSeries& f, const CriticalExponents& exps, Derivative&& derivative) {
  f.validate();
  std::vector<double> field;
  std::vector<double> deriv;
  for (const FormField& value : f.values) {
    field.push_back(spatial_norm(value, exps.p()));
    deriv.push_back(lp_norm(to_physical(derivative(as_spectral(value))), exps.p() / 2.0));
  }
  return {time_norm(f.time, field, exps.q()), time_norm(f.time, deriv, exps.q() / 2.0)};
}

void require_grade(const FieldSeries& f, int grade, const char* what) {
  if (f.values.empty() || f.values.front().grade() != grade) {
    throw std::invalid_argument(std::string(what) + ": expected a series of " + std::to_string(grade) + "-forms");
  }
}

}  // namespace

double lq_lp_norm(const FieldSeries& f, double q, double p, TimeRule rule) {
  if (f.values.empty()) throw std::invalid_argument("lq_lp_norm of an empty series");
  f.validate();
  std::vector<double> norms;
  norms.reserve(f.values.size());
  for (const FormField& value : f.values) norms.push_back(spatial_norm(value, p));
  return time_norm(f.time, norms, q, rule);
}

double ut_norm(const FieldSeries& u, const CriticalExponents& exps) {
  require_grade(u, 1, "ut_norm");
  return weighted_sup(u, exps, [](const FormField& f) { return ext_deriv(f); });
}

double bt_norm(const FieldSeries& b, const CriticalExponents& exps) {
  require_grade(b, 2, "bt_norm");
  return weighted_sup(b, exps, [](const FormField& f) { return codifferential(f); });
}

SpaceTimeNorm lq_lp_pair_u(const FieldSeries& u, const CriticalExponents& exps) {
  require_grade(u, 1, "lq_lp_pair_u");
  return space_time_pair(u, exps, [](const FormField& f) { return ext_deriv(f); });
}

SpaceTimeNorm lq_lp_pair_b(const FieldSeries& b, const CriticalExponents& exps) {
  require_grade(b, 2, "lq_lp_pair_b");
  return space_time_pair(b, exps, [](const FormField& f) { return codifferential(f); });
}

double besov_norm(const FormField& f0, double s, double p, double q, const BesovQuadrature& quad) {
  if (!f0.is_spectral()) throw std::invalid_argument("besov_norm expects a spectral field");
  if (!(s < 0.0)) throw std::invalid_argument("besov_norm requires s < 0");
  if (!(p >= 1.0) || !(q >= 1.0) || std::isinf(q)) throw std::invalid_argument("besov_norm requires p, q >= 1, q finite");
  const double scale = max_abs_spectral(f0);
  if (scale == 0.0) return 0.0;
  if (mean_magnitude(f0) > 1e-12 * scale) throw std::domain_error("besov_norm of a field with nonzero mean");

  const auto& k2 = wave_table(f0.grid()).k_squared;
  double lambda_min = std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < f0.components(); ++c) {
    auto m = f0.modes(c);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (k2[i] > 0.0 && std::abs(m[i]) > 1e-14 * scale) lambda_min = std::min(lambda_min, k2[i]);
    }
  }
  const double lambda_max = *std::max_element(k2.begin(), k2.end());
  const double t_min = quad.t_min > 0.0 ? quad.t_min : 1e-6 / lambda_max;
  const double t_max = quad.t_max > 0.0 ? quad.t_max : 50.0 / lambda_min;
  if (!(t_max > t_min) || quad.points_per_decade < 1) throw std::invalid_argument("besov_norm: bad quadrature window");

  // g(t) = (t^{-s/2} ‖e^{tΔ}f0‖_p)^q; integrate g dt/t = g d(ln t).
  const double a = -0.5 * s * q;
  const auto integrand = [&](double t) {
    const double heat = lp_norm(to_physical(heat_semigroup(f0, t, OperatorKind::kLaplacian)), p);
    return std::pow(t, a) * std::pow(heat, q);
  };
  const double decades = std::log10(t_max / t_min);
  const int intervals = std::max(1, static_cast<int>(std::ceil(decades * quad.points_per_decade)));
  const double h = std::log(t_max / t_min) / intervals;
  double sum = 0.0;
  double head_value = 0.0;
  for (int i = 0; i <= intervals; ++i) {
    const double t = t_min * std::exp(h * i);
    const double g = integrand(t);
    if (i == 0) head_value = g;
    sum += (i == 0 || i == intervals) ? 0.5 * g : g;
  }
  // ∫_0^{t_min} t^{a-1} dt ‖e^{t_min Δ}f0‖^q = g(t_min)/a.
  const double total = sum * h + head_value / a;
  return std::pow(total, 1.0 / q);
}

void LeibnizExponents::validate() const {
  for (double e : {alpha, beta, alpha_prime, beta_prime, gamma}) {
    if (!(e >= 1.0)) throw std::invalid_argument("Leibniz exponents must be >= 1");
  }
  const auto inv = [](double e) { return std::isinf(e) ? 0.0 : 1.0 / e; };
  if (std::abs(inv(alpha) + inv(beta) - inv(gamma)) > 1e-12 ||
      std::abs(inv(alpha_prime) + inv(beta_prime) - inv(gamma)) > 1e-12) {
    throw std::invalid_argument("Leibniz exponents violate 1/alpha + 1/beta = 1/gamma");
  }
}

double leibniz_ratio(const FormField& omega1, const FormField& omega2, const LeibnizExponents& exps) {
  exps.validate();
  if (!omega1.is_spectral() || !omega2.is_spectral()) throw std::invalid_argument("leibniz_ratio expects spectral fields");
  if (omega1.grade() != 1 || omega2.grade() != 2) throw std::invalid_argument("leibniz_ratio expects a 1-form and a 2-form");
  if (!(omega1.grid() == omega2.grid())) throw std::invalid_argument("leibniz_ratio: grid mismatch");

  const FormField w1 = to_physical(omega1);
  const FormField w2 = to_physical(omega2);
  const FormField product = to_spectral(pointwise_contract(w1, w2));
  const double numerator = lp_norm(to_physical(ext_deriv(product)), exps.gamma);

  // 𝔇ω = dω + δω, pointwise norm over the direct sum of grades.
  const FormField d1 = to_physical(ext_deriv(omega1));
  const FormField delta1 = to_physical(codifferential(omega1));
  const FormField delta2 = to_physical(codifferential(omega2));
  const FormField* dirac1[] = {&d1, &delta1};
  std::vector<const FormField*> dirac2 = {&delta2};
  FormField d2(omega2.grid(), 0, Representation::kPhysical);
  if (omega2.grid().n > 2) {
    d2 = to_physical(ext_deriv(omega2));
    dirac2.push_back(&d2);
  }
  const double denominator = lp_norm(dirac1, exps.alpha) * lp_norm(w2, exps.beta) +
                             lp_norm(w1, exps.alpha_prime) * lp_norm(dirac2, exps.beta_prime);
  if (denominator == 0.0) {
    if (numerator == 0.0) return 0.0;
    return std::numeric_limits<double>::infinity();
  }
  return numerator / denominator;
}

double maxreg_ratio(const FieldSeries& f, double q, double p, TimeRule rule) {
  f.validate();
  for (const FormField& value : f.values) {
    if (!value.is_spectral()) throw std::invalid_argument("maxreg_ratio expects spectral samples");
    if (mean_magnitude(value) > 1e-12 * std::max(max_abs_spectral(value), 1e-300)) {
      throw std::domain_error("maxreg_ratio requires zero-mean samples");
    }
  }
  const double denominator = lq_lp_norm(f, q, p, rule);
  if (denominator == 0.0) throw std::invalid_argument("maxreg_ratio of a zero forcing");
  FieldSeries response = duhamel(OperatorKind::kLaplacian, f);
  for (FormField& value : response.values) value = laplacian(value);
  return lq_lp_norm(response, q, p, rule) / denominator;
}

std::string to_json_rows(std::span<const NormReport> reports) {
  std::ostringstream out;
  for (const NormReport& r : reports) {
    nlohmann::json row;
    row["name"] = r.name;
    row["value"] = r.value;
    row["parameters"] = r.parameters;
    out << row.dump() << '\n';
  }
  return out.str();
}

void write_csv(std::ostream& out, std::span<const NormReport> reports) {
  out << "name,n,N,p,q,value,params\n";
  const auto get = [](const NormReport& r, const char* key) -> std::string {
    auto it = r.parameters.find(key);
    if (it == r.parameters.end()) return "";
    std::ostringstream s;
    s.precision(17);
    s << it->second;
    return s.str();
  };
  for (const NormReport& r : reports) {
    std::string params;
    for (const auto& [key, value] : r.parameters) {
      if (key == "n" || key == "N" || key == "p" || key == "q") continue;
      std::ostringstream s;
      s.precision(17);
      s << key << '=' << value;
      if (!params.empty()) params += ';';
      params += s.str();
    }
    std::ostringstream value;
    value.precision(17);
    value << r.value;
    out << r.name << ',' << get(r, "n") << ',' << get(r, "N") << ',' << get(r, "p") << ',' << get(r, "q") << ','
        << value.str() << ',' << params << '\n';
  }
}

}  // namespace hodgemhd
