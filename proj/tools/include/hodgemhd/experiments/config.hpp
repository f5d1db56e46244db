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

// Scenario configuration: JSON file keys, overridable from the command line.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hodgemhd/form_field.hpp"
#include "hodgemhd/norms.hpp"

namespace hodgemhd::experiments {

enum class Scenario { kContraction, kScaling, kUniqueness, kSmallnessSweep, kOracle3d, kInequalityLab };

std::string_view to_string(Scenario s);
// Throws std::invalid_argument for unknown names.
Scenario scenario_from_string(std::string_view name);

enum class DataFamily { kRandom, kTaylorGreen, kSingleMode };

std::string_view to_string(DataFamily f);
DataFamily family_from_string(std::string_view name);

struct ScenarioConfig {
  Scenario scenario = Scenario::kContraction;
  int n = 3;
  int N = 16;
  double L = 0.0;  // 0 selects 2π
  double T = 0.1;
  int M = 16;
  double p = 0.0;  // 0 selects the scenario default
  double q = 0.0;  // 0 derives q from n/p + 2/q = 1
  std::uint64_t seed = 1;
  std::vector<double> epsilons = {1e-1, 1e-2, 1e-3};
  double tol = 1e-10;
  int max_iter = 50;
  std::string out;  // output directory; empty writes nothing
  int lambda = 2;
  DataFamily family = DataFamily::kRandom;
  int band = 2;           // largest mode index of generated data
  double amplitude = 0.1;  // data size where no epsilon list applies
  int samples = 20;       // Monte-Carlo / random-state count
  double r = 2.0;         // time exponent of the uniqueness norms
  bool snapshots = false;  // write trajectories of the primary run

  GridSpec grid() const;
  // p = 2n, q = 4 unless overridden; q follows from p when only p is set.
  CriticalExponents exponents() const;
  // Throws std::invalid_argument on inconsistent values.
  void validate() const;
};

nlohmann::json to_json(const ScenarioConfig& cfg);
// Unknown keys are rejected.
ScenarioConfig config_from_json(const nlohmann::json& j);
ScenarioConfig load_config(const std::string& path);

// FNV-1a 64 of the canonical JSON dump, as 16 hex digits.
std::string config_hash(const ScenarioConfig& cfg);

}  // namespace hodgemhd::experiments
