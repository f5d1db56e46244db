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

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hodgemhd/experiments/scenarios.hpp"
#include "hodgemhd/hodge.hpp"

using namespace hodgemhd;
using namespace hodgemhd::experiments;

namespace {

ScenarioConfig small_config(Scenario s) {
  ScenarioConfig cfg;
  cfg.scenario = s;
  cfg.N = 8;
  cfg.M = 4;
  cfg.band = 1;
  cfg.samples = 2;
  return cfg;
}

const Row* find_row(const Report& r, const std::string& name) {
  for (const Row& row : r.rows) {
    if (row.name == name) return &row;
  }
  return nullptr;
}

int count_rows(const Report& r, const std::string& name) {
  int count = 0;
  for (const Row& row : r.rows) count += row.name == name;
  return count;
}

}  // namespace

TEST_CASE("scenario and family names round trip") {
  for (Scenario s : {Scenario::kContraction, Scenario::kScaling, Scenario::kUniqueness, Scenario::kSmallnessSweep,
                     Scenario::kOracle3d, Scenario::kInequalityLab}) {
    CHECK(scenario_from_string(to_string(s)) == s);
  }
  for (DataFamily f : {DataFamily::kRandom, DataFamily::kTaylorGreen, DataFamily::kSingleMode}) {
    CHECK(family_from_string(to_string(f)) == f);
  }
  CHECK(to_string(Scenario::kSmallnessSweep) == "smallness_sweep");
  CHECK_THROWS_AS(scenario_from_string("bisection"), std::invalid_argument);
  CHECK_THROWS_AS(family_from_string("abc"), std::invalid_argument);
}

TEST_CASE("config JSON round trip") {
  ScenarioConfig cfg;
  cfg.scenario = Scenario::kUniqueness;
  cfg.n = 4;
  cfg.N = 8;
  cfg.T = 0.25;
  cfg.M = 12;
  cfg.p = 10.0;
  cfg.seed = 77;
  cfg.epsilons = {0.5, 0.05};
  cfg.family = DataFamily::kSingleMode;
  cfg.out = "some/dir";
  cfg.snapshots = true;
  const ScenarioConfig back = config_from_json(to_json(cfg));
  CHECK(to_json(back) == to_json(cfg));
  CHECK(back.grid() == cfg.grid());
  CHECK(config_hash(back) == config_hash(cfg));
}

TEST_CASE("config from JSON: partial files keep defaults, unknown keys fail") {
  const ScenarioConfig cfg = config_from_json(nlohmann::json::parse(R"({"scenario": "scaling", "lambda": 3})"));
  CHECK(cfg.scenario == Scenario::kScaling);
  CHECK(cfg.lambda == 3);
  CHECK(cfg.N == ScenarioConfig{}.N);
  CHECK_THROWS_AS(config_from_json(nlohmann::json::parse(R"({"scenaro": "scaling"})")), std::invalid_argument);
  CHECK_THROWS(config_from_json(nlohmann::json::parse(R"({"scenario": "none"})")));
}

TEST_CASE("load_config reads a file") {
  const auto path = std::filesystem::temp_directory_path() / "hodgemhd_cfg_test.json";
  {
    std::ofstream f(path);
    f << R"({"scenario": "oracle3d", "N": 32, "samples": 5})";
  }
  const ScenarioConfig cfg = load_config(path.string());
  CHECK(cfg.scenario == Scenario::kOracle3d);
  CHECK(cfg.N == 32);
  CHECK(cfg.samples == 5);
  std::filesystem::remove(path);
  CHECK_THROWS(load_config(path.string()));
}

TEST_CASE("config hash") {
  ScenarioConfig a;
  const std::string h = config_hash(a);
  CHECK(h.size() == 16);
  CHECK(h.find_first_not_of("0123456789abcdef") == std::string::npos);
  CHECK(config_hash(a) == h);
  ScenarioConfig b = a;
  b.out = "elsewhere";
  CHECK(config_hash(b) == h);
  b.seed = 2;
  CHECK(config_hash(b) != h);
}

TEST_CASE("config validation and exponents") {
  ScenarioConfig cfg;
  CHECK(cfg.exponents().p() == doctest::Approx(6.0));
  CHECK(cfg.exponents().q() == doctest::Approx(4.0));
  cfg.p = 9.0;
  CHECK(cfg.exponents().q() == doctest::Approx(3.0));
  cfg.p = 0.0;
  cfg.q = 6.0;
  CHECK(cfg.exponents().p() == doctest::Approx(4.5));

  ScenarioConfig bad;
  bad.N = 12;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = {};
  bad.M = 0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = {};
  bad.band = 8;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = {};
  bad.epsilons = {-1.0};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = {};
  bad.p = 2.0;  // p <= n
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = {};
  bad.n = 4;
  bad.family = DataFamily::kTaylorGreen;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("report CSV and JSON format") {
  ScenarioConfig cfg;
  Report r{cfg, {}, {}, {}};
  r.add("ratio", 0.25, {{"eps", 0.5}, {"iteration", 2}});
  r.add("missing", std::nan(""));
  r.check("ok", true);
  const std::string h = config_hash(cfg);

  std::ostringstream csv;
  write_csv(csv, r);
  CHECK(csv.str() == "config_hash,scenario,name,value,params\n" + h + ",contraction,ratio,0.25,eps=0.5;iteration=2\n" +
                         h + ",contraction,missing,nan,\n");

  const nlohmann::json j = to_json(r);
  CHECK(j["passed"] == true);
  CHECK(j["config_hash"] == h);
  CHECK(j["rows"].size() == 2);
  for (const auto& row : j["rows"]) CHECK(row["config_hash"] == h);
  CHECK(j["rows"][1]["value"].is_null());
  r.check("bad", false);
  CHECK_FALSE(r.passed());
  CHECK(to_json(r)["passed"] == false);
}

TEST_CASE("write_report creates both files") {
  const auto dir = std::filesystem::temp_directory_path() / "hodgemhd_report_test";
  std::filesystem::remove_all(dir);
  Report r{ScenarioConfig{}, {}, {}, {}};
  r.add("x", 1.0);
  write_report(dir.string(), r);
  CHECK(std::filesystem::exists(dir / "report.json"));
  CHECK(std::filesystem::exists(dir / "report.csv"));
  std::ifstream in(dir / "report.json");
  CHECK(nlohmann::json::parse(in)["rows"].size() == 1);
  std::filesystem::remove_all(dir);
}

TEST_CASE("initial data satisfies the constraints and is normalized") {
  const GridSpec grid{3, 16};
  for (DataFamily f : {DataFamily::kRandom, DataFamily::kTaylorGreen, DataFamily::kSingleMode}) {
    const InitialData data = make_data(f, grid, 2, 5);
    CHECK(coclosed_defect(data.u) < 1e-12);
    CHECK(closed_defect(data.b) < 1e-12);
    CHECK(mean_magnitude(data.b) < 1e-14);
    CHECK(critical_size(normalized(data, 0.3)) == doctest::Approx(0.3).epsilon(1e-12));
  }
  const InitialData a = make_data(DataFamily::kRandom, grid, 2, 5);
  const InitialData b = make_data(DataFamily::kRandom, grid, 2, 5);
  CHECK(l2_norm_spectral(a.u - b.u) == 0.0);
  CHECK(band_limit(a.u) <= 2);
  CHECK(band_limit(make_data(DataFamily::kSingleMode, grid, 3, 1).u) == 3);
  CHECK_THROWS_AS(normalized({FormField(grid, 1, Representation::kSpectral), FormField(grid, 2, Representation::kSpectral)}, 1.0),
                  std::invalid_argument);
}

TEST_CASE("single-mode data matches its formula") {
  const GridSpec grid{3, 8};
  const InitialData data = make_data(DataFamily::kSingleMode, grid, 1, 0);
  const FormField u = to_physical(data.u);
  const FormField b = to_physical(data.b);
  // b = d(cos x1 e2) = -sin x1 e12.
  const std::size_t e12 = b.component_of(BladeIndex{0b011u});
  double worst = 0.0;
  for (std::size_t p = 0; p < grid.points(); ++p) {
    const double x1 = grid.spacing() * static_cast<double>(p / 64);
    const double x2 = grid.spacing() * static_cast<double>((p / 8) % 8);
    worst = std::max(worst, std::abs(u.values(0)[p] - std::sin(x2)));
    worst = std::max(worst, std::abs(b.values(e12)[p] + std::sin(x1)));
  }
  CHECK(worst < 1e-14);
}

TEST_CASE("loglog_slope") {
  CHECK(loglog_slope({1.0, 10.0, 100.0}, {3.0, 30.0, 300.0}) == doctest::Approx(1.0));
  CHECK(loglog_slope({1.0, 2.0, 4.0}, {1.0, 0.25, 0.0625}) == doctest::Approx(-2.0));
  CHECK_THROWS_AS(loglog_slope({1.0}, {1.0}), std::invalid_argument);
}

TEST_CASE("bilinear ratio is invariant under rescaling either argument") {
  const GridSpec grid{3, 8};
  const TimeGrid time{0.0, 0.1, 4};
  const InitialData a = make_data(DataFamily::kRandom, grid, 1, 3);
  const InitialData b = make_data(DataFamily::kRandom, grid, 1, 4);
  const CriticalExponents exps = CriticalExponents::lq_lp_default(3);
  const double base = bilinear_ratio(linear_evolution(a, time), linear_evolution(b, time), exps);
  CHECK(base > 0.0);
  const double scaled = bilinear_ratio(linear_evolution({2.5 * a.u, 2.5 * a.b}, time), linear_evolution(b, time), exps);
  CHECK(scaled == doctest::Approx(base).epsilon(1e-12));
}

TEST_CASE("linear evolution is the heat flow of the data") {
  const GridSpec grid{3, 8};
  const TimeGrid time{0.0, 0.5, 2};
  const InitialData data = make_data(DataFamily::kSingleMode, grid, 1, 0);
  const Trajectory t = linear_evolution(data, time);
  REQUIRE(t.states.size() == 3);
  CHECK(l2_norm_spectral(t.states[2].u) == doctest::Approx(std::exp(-0.5) * l2_norm_spectral(data.u)).epsilon(1e-12));
  CHECK(l2_norm_spectral(t.states[1].b) == doctest::Approx(std::exp(-0.25) * l2_norm_spectral(data.b)).epsilon(1e-12));
}

TEST_CASE("contraction: zero data gives the zero solution without ratios") {
  ScenarioConfig cfg = small_config(Scenario::kContraction);
  cfg.epsilons = {0.0};
  cfg.samples = 0;
  const Report r = run(cfg);
  CHECK(r.passed());
  CHECK(count_rows(r, "ratio") == 0);
  REQUIRE(count_rows(r, "residual") == 1);
  CHECK(find_row(r, "residual")->value == 0.0);
}

TEST_CASE("contraction: one residual row per iteration and one ratio per later iteration") {
  ScenarioConfig cfg = small_config(Scenario::kContraction);
  cfg.epsilons = {1e-1, 1e-2};
  const Report r = run(cfg);
  CHECK(r.passed());
  const int iterations = static_cast<int>(find_row(r, "iterations")->value);
  CHECK(count_rows(r, "residual") >= iterations);
  CHECK(count_rows(r, "ratio") == count_rows(r, "residual") - 2);
  CHECK(count_rows(r, "bilinear_ratio") == 2);
  CHECK(find_row(r, "epsilon_threshold")->value > 0.0);
}

TEST_CASE("contraction: divergence becomes a row and a warning") {
  ScenarioConfig cfg = small_config(Scenario::kContraction);
  cfg.N = 16;
  cfg.T = 1.0;
  cfg.band = 2;
  cfg.epsilons = {400.0};
  cfg.samples = 0;
  const Report r = run(cfg);
  CHECK_FALSE(r.passed());
  CHECK_FALSE(r.warnings.empty());
  CHECK(find_row(r, "converged")->value == 0.0);
}

TEST_CASE("reruns are bit-identical") {
  ScenarioConfig cfg = small_config(Scenario::kContraction);
  std::ostringstream a, b;
  write_csv(a, run(cfg));
  write_csv(b, run(cfg));
  CHECK(a.str() == b.str());
}

TEST_CASE("scaling: band-limit precondition and zero data") {
  ScenarioConfig cfg = small_config(Scenario::kScaling);
  cfg.N = 16;
  cfg.band = 2;
  cfg.lambda = 3;
  CHECK_THROWS_AS(run(cfg), std::invalid_argument);
  cfg.amplitude = 0.0;
  const Report zero = run(cfg);
  CHECK(find_row(zero, "max_discrepancy")->value == 0.0);
  CHECK(zero.passed());
}

TEST_CASE("scaling: small grid covariance") {
  ScenarioConfig cfg = small_config(Scenario::kScaling);
  cfg.N = 32;
  cfg.lambda = 2;
  cfg.band = 1;
  const Report r = run(cfg);
  CHECK(r.passed());
  CHECK(count_rows(r, "discrepancy") == cfg.M + 1);
}

TEST_CASE("uniqueness: zero data and row layout") {
  ScenarioConfig cfg = small_config(Scenario::kUniqueness);
  cfg.amplitude = 0.0;
  const Report zero = run(cfg);
  CHECK(zero.passed());
  CHECK(count_rows(zero, "du_gap") == 3);
  CHECK(find_row(zero, "du_gap")->value == 0.0);
  CHECK(find_row(zero, "identical_method_gap")->value == 0.0);
}

TEST_CASE("uniqueness: gaps shrink with the step") {
  ScenarioConfig cfg = small_config(Scenario::kUniqueness);
  cfg.M = 8;
  const Report r = run(cfg);
  std::vector<double> gaps;
  for (const Row& row : r.rows) {
    if (row.name == "du_gap") gaps.push_back(row.value);
  }
  REQUIRE(gaps.size() == 3);
  CHECK(gaps[1] < gaps[0]);
  CHECK(gaps[2] < gaps[1]);
}

TEST_CASE("smallness sweep: Besov measures scale linearly in eps") {
  ScenarioConfig cfg = small_config(Scenario::kSmallnessSweep);
  cfg.q = 3.5;
  cfg.epsilons = {0.1, 0.2};
  const Report r = run(cfg);
  std::vector<double> u, du;
  for (const Row& row : r.rows) {
    if (row.name == "besov_u") u.push_back(row.value);
    if (row.name == "besov_du_part") du.push_back(row.value);
  }
  REQUIRE(u.size() == 2);
  CHECK(u[1] == doctest::Approx(2.0 * u[0]).epsilon(1e-10));
  REQUIRE(du.size() == 2);
  CHECK(std::isfinite(du[0]));
  CHECK(r.warnings.empty());
  CHECK(count_rows(r, "converged_horizon") == 2);

  cfg.q = 0.0;
  const Report nulls = run(cfg);
  CHECK(std::isnan(find_row(nulls, "besov_du_part")->value));
  CHECK_FALSE(nulls.warnings.empty());
}

TEST_CASE("oracle3d: dimension and zero state") {
  ScenarioConfig cfg = small_config(Scenario::kOracle3d);
  cfg.n = 4;
  CHECK_THROWS_AS(run(cfg), std::invalid_argument);
  cfg.n = 3;
  cfg.samples = 0;
  cfg.amplitude = 0.0;
  const Report zero = run(cfg);
  CHECK(zero.passed());
  for (const Row& row : zero.rows) CHECK(row.value == 0.0);
}

TEST_CASE("oracle3d: random states agree") {
  ScenarioConfig cfg = small_config(Scenario::kOracle3d);
  cfg.N = 16;
  const Report r = run(cfg);
  CHECK(r.passed());
  CHECK(count_rows(r, "rhs_gap_u") == 2);
}

TEST_CASE("inequality lab: empty corpus and small corpus") {
  ScenarioConfig cfg = small_config(Scenario::kInequalityLab);
  cfg.samples = 0;
  const Report empty = run(cfg);
  CHECK(empty.rows.empty());
  CHECK(empty.checks.empty());

  cfg.samples = 4;
  const Report r = run(cfg);
  CHECK(count_rows(r, "maxreg_ratio") == 4);
  CHECK(count_rows(r, "leibniz_ratio") == 8);
  CHECK(find_row(r, "maxreg_max")->value <= 1.0 + 1e-6);
}
