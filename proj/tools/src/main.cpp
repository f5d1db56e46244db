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

#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "hodgemhd/experiments/scenarios.hpp"

namespace ex = hodgemhd::experiments;

int main(int argc, char** argv) {
  CLI::App app{"hodgemhd: exterior-calculus MHD scenarios"};
  std::string config_path, scenario, family, out;
  std::optional<int> n, N, M, lambda, samples, band;
  std::optional<double> T, p, q, tol, amplitude;
  std::optional<std::uint64_t> seed;
  std::vector<double> eps;
  bool snapshots = false;

  app.add_option("--config", config_path, "JSON configuration file")->check(CLI::ExistingFile);
  app.add_option("--scenario", scenario,
                 "contraction | scaling | uniqueness | smallness_sweep | oracle3d | inequality_lab");
  app.add_option("--n", n, "dimension");
  app.add_option("--N", N, "points per axis (power of two)");
  app.add_option("--T", T, "final time");
  app.add_option("--M", M, "time steps");
  app.add_option("--p", p, "space exponent");
  app.add_option("--q", q, "time exponent");
  app.add_option("--seed", seed, "random seed");
  app.add_option("--out", out, "output directory");
  app.add_option("--lambda", lambda, "integer dilation factor");
  app.add_option("--tol", tol, "Picard tolerance");
  app.add_option("--eps", eps, "data sizes")->expected(1, -1);
  app.add_option("--samples", samples, "Monte-Carlo sample count");
  app.add_option("--family", family, "random | taylor_green | single_mode");
  app.add_option("--band", band, "largest mode index of the data");
  app.add_option("--amplitude", amplitude, "data size for single-size scenarios");
  app.add_flag("--snapshots", snapshots, "write trajectory snapshots under --out");
  CLI11_PARSE(app, argc, argv);

  try {
    ex::ScenarioConfig cfg = config_path.empty() ? ex::ScenarioConfig{} : ex::load_config(config_path);
    if (!scenario.empty()) cfg.scenario = ex::scenario_from_string(scenario);
    if (!family.empty()) cfg.family = ex::family_from_string(family);
    if (!out.empty()) cfg.out = out;
    if (n) cfg.n = *n;
    if (N) cfg.N = *N;
    if (M) cfg.M = *M;
    if (T) cfg.T = *T;
    if (p) cfg.p = *p;
    if (q) cfg.q = *q;
    if (seed) cfg.seed = *seed;
    if (lambda) cfg.lambda = *lambda;
    if (tol) cfg.tol = *tol;
    if (samples) cfg.samples = *samples;
    if (band) cfg.band = *band;
    if (amplitude) cfg.amplitude = *amplitude;
    if (!eps.empty()) cfg.epsilons = eps;
    if (snapshots) cfg.snapshots = true;
    cfg.validate();

    const ex::Report report = ex::run(cfg);
    std::cout << "scenario " << ex::to_string(cfg.scenario) << "  config " << ex::config_hash(cfg) << '\n';
    for (const std::string& w : report.warnings) std::cout << "warning: " << w << '\n';
    for (const ex::Check& c : report.checks) {
      std::cout << (c.passed ? "PASS " : "FAIL ") << c.name;
      if (!c.detail.empty()) std::cout << "  (" << c.detail << ')';
      std::cout << '\n';
    }
    if (!cfg.out.empty()) {
      ex::write_report(cfg.out, report);
      std::cout << "report written to " << cfg.out << '\n';
    }
    return report.passed() ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
