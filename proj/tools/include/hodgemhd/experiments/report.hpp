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

// Scenario reports: measurement rows, named pass/fail checks and warnings,
// serialized to report.json and report.csv.

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "hodgemhd/experiments/config.hpp"

namespace hodgemhd::experiments {

struct Row {
  std::string name;
  double value = 0.0;
  std::map<std::string, double> params;
};

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Report {
  ScenarioConfig config;
  std::vector<Row> rows;
  std::vector<Check> checks;
  std::vector<std::string> warnings;

  void add(std::string name, double value, std::map<std::string, double> params = {});
  void check(std::string name, bool passed, std::string detail = {});
  bool passed() const;
};

nlohmann::json to_json(const Report& report);
// Columns: config_hash,scenario,name,value,params with params as key=value
// pairs joined by ';'. Non-finite values print as nan / inf.
void write_csv(std::ostream& out, const Report& report);
// report.json and report.csv in `directory` (created if missing).
void write_report(const std::string& directory, const Report& report);

}  // namespace hodgemhd::experiments
