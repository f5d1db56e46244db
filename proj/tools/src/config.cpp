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

#include "hodgemhd/experiments/config.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace hodgemhd::experiments {

namespace {

constexpr std::array<std::pair<Scenario, std::string_view>, 6> kScenarioNames = {{
    {Scenario::kContraction, "contraction"},
    {Scenario::kScaling, "scaling"},
    {Scenario::kUniqueness, "uniqueness"},
    {Scenario::kSmallnessSweep, "smallness_sweep"},
    {Scenario::kOracle3d, "oracle3d"},
    {Scenario::kInequalityLab, "inequality_lab"},
}};

constexpr std::array<std::pair<DataFamily, std::string_view>, 3> kFamilyNames = {{
    {DataFamily::kRandom, "random"},
    {DataFamily::kTaylorGreen, "taylor_green"},
    {DataFamily::kSingleMode, "single_mode"},
}};

template <typename Table, typename Value>
std::string_view name_of(const Table& table, Value v) {
  for (const auto& [value, name] : table) {
    if (value == v) return name;
  }
  return "unknown";
}

template <typename Table>
auto value_of(const Table& table, std::string_view name, const char* what) {
  for (const auto& [value, n] : table) {
    if (n == name) return value;
  }
  throw std::invalid_argument(std::string("unknown ") + what + " '" + std::string(name) + "'");
}

}  // namespace

std::string_view to_string(Scenario s) { return name_of(kScenarioNames, s); }
Scenario scenario_from_string(std::string_view name) { return value_of(kScenarioNames, name, "scenario"); }
std::string_view to_string(DataFamily f) { return name_of(kFamilyNames, f); }
DataFamily family_from_string(std::string_view name) { return value_of(kFamilyNames, name, "data family"); }

GridSpec ScenarioConfig::grid() const { return GridSpec{n, N, L > 0.0 ? L : 2.0 * std::numbers::pi}; }

CriticalExponents ScenarioConfig::exponents() const {
  if (p > 0.0 && q > 0.0) return CriticalExponents(n, p, q);
  if (p > 0.0) return CriticalExponents::from_p(n, p);
  if (q > 0.0) return CriticalExponents(n, n / (1.0 - 2.0 / q), q);
  return CriticalExponents::lq_lp_default(n);
}

void ScenarioConfig::validate() const {
  grid().validate();
  if (!(T > 0.0)) throw std::invalid_argument("T must be positive");
  if (M < 1) throw std::invalid_argument("M must be at least 1");
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
  if (max_iter < 1) throw std::invalid_argument("max_iter must be at least 1");
  if (lambda < 1) throw std::invalid_argument("lambda must be a positive integer");
  if (band < 1 || band >= N / 2) throw std::invalid_argument("band must lie in [1, N/2)");
  if (samples < 0) throw std::invalid_argument("samples must be nonnegative");
  if (!(r >= 1.0)) throw std::invalid_argument("r must be >= 1");
  for (double e : epsilons) {
    if (!(e >= 0.0) || !std::isfinite(e)) throw std::invalid_argument("epsilons must be finite and nonnegative");
  }
  if (scenario != Scenario::kInequalityLab) (void)exponents();
  if (family == DataFamily::kTaylorGreen && n != 3) throw std::invalid_argument("Taylor-Green data needs n = 3");
}

nlohmann::json to_json(const ScenarioConfig& cfg) {
  return {
      {"scenario", std::string(to_string(cfg.scenario))},
      {"n", cfg.n},
      {"N", cfg.N},
      {"L", cfg.grid().L},
      {"T", cfg.T},
      {"M", cfg.M},
      {"p", cfg.p},
      {"q", cfg.q},
      {"seed", cfg.seed},
      {"epsilons", cfg.epsilons},
      {"tol", cfg.tol},
      {"max_iter", cfg.max_iter},
      {"out", cfg.out},
      {"lambda", cfg.lambda},
      {"family", std::string(to_string(cfg.family))},
      {"band", cfg.band},
      {"amplitude", cfg.amplitude},
      {"samples", cfg.samples},
      {"r", cfg.r},
      {"snapshots", cfg.snapshots},
  };
}

ScenarioConfig config_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
  ScenarioConfig cfg;
  for (const auto& [key, value] : j.items()) {
    if (key == "scenario") cfg.scenario = scenario_from_string(value.get<std::string>());
    else if (key == "n") cfg.n = value.get<int>();
    else if (key == "N") cfg.N = value.get<int>();
    else if (key == "L") cfg.L = value.get<double>();
    else if (key == "T") cfg.T = value.get<double>();
    else if (key == "M") cfg.M = value.get<int>();
    else if (key == "p") cfg.p = value.get<double>();
    else if (key == "q") cfg.q = value.get<double>();
    else if (key == "seed") cfg.seed = value.get<std::uint64_t>();
    else if (key == "epsilons") cfg.epsilons = value.get<std::vector<double>>();
    else if (key == "tol") cfg.tol = value.get<double>();
    else if (key == "max_iter") cfg.max_iter = value.get<int>();
    else if (key == "out") cfg.out = value.get<std::string>();
    else if (key == "lambda") cfg.lambda = value.get<int>();
    else if (key == "family") cfg.family = family_from_string(value.get<std::string>());
    else if (key == "band") cfg.band = value.get<int>();
    else if (key == "amplitude") cfg.amplitude = value.get<double>();
    else if (key == "samples") cfg.samples = value.get<int>();
    else if (key == "r") cfg.r = value.get<double>();
    else if (key == "snapshots") cfg.snapshots = value.get<bool>();
    else throw std::invalid_argument("unknown config key '" + key + "'");
  }
  return cfg;
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config " + path);
  return config_from_json(nlohmann::json::parse(in));
}

std::string config_hash(const ScenarioConfig& cfg) {
  nlohmann::json j = to_json(cfg);
  j.erase("out");  // where results go does not change them
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : j.dump()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace hodgemhd::experiments
