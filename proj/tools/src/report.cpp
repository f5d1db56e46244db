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

#include "hodgemhd/experiments/report.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

namespace hodgemhd::experiments {

namespace {

std::string format(double v) {
  std::ostringstream s;
  s.precision(17);
  s << v;
  return s.str();
}

nlohmann::json number(double v) { return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr); }

}  // namespace

void Report::add(std::string name, double value, std::map<std::string, double> params) {
  rows.push_back({std::move(name), value, std::move(params)});
}

void Report::check(std::string name, bool ok, std::string detail) {
  checks.push_back({std::move(name), ok, std::move(detail)});
}

bool Report::passed() const {
  for (const Check& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

nlohmann::json to_json(const Report& report) {
  const std::string hash = config_hash(report.config);
  nlohmann::json rows = nlohmann::json::array();
  for (const Row& r : report.rows) {
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [k, v] : r.params) params[k] = number(v);
    rows.push_back({{"config_hash", hash}, {"name", r.name}, {"value", number(r.value)}, {"params", params}});
  }
  nlohmann::json checks = nlohmann::json::array();
  for (const Check& c : report.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return {
      {"scenario", std::string(to_string(report.config.scenario))},
      {"config", to_json(report.config)},
      {"config_hash", hash},
      {"passed", report.passed()},
      {"checks", checks},
      {"rows", rows},
      {"warnings", report.warnings},
  };
}

void write_csv(std::ostream& out, const Report& report) {
  const std::string hash = config_hash(report.config);
  const std::string_view scenario = to_string(report.config.scenario);
  out << "config_hash,scenario,name,value,params\n";
  for (const Row& r : report.rows) {
    std::string params;
    for (const auto& [k, v] : r.params) {
      if (!params.empty()) params += ';';
      params += k + '=' + format(v);
    }
    out << hash << ',' << scenario << ',' << r.name << ',' << format(r.value) << ',' << params << '\n';
  }
}

void write_report(const std::string& directory, const Report& report) {
  const std::filesystem::path dir(directory);
  std::filesystem::create_directories(dir);
  std::ofstream json(dir / "report.json");
  std::ofstream csv(dir / "report.csv");
  if (!json || !csv) throw std::runtime_error("cannot write report in " + directory);
  json << to_json(report).dump(2) << '\n';
  write_csv(csv, report);
}

}  // namespace hodgemhd::experiments
