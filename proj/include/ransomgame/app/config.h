// Copyright 2026 The ransomgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RANSOMGAME_APP_CONFIG_H_
#define RANSOMGAME_APP_CONFIG_H_

// JSON run configurations. Every config carries "version": 1; keys not in the
// schema are rejected, missing keys take the defaults below. The serialized
// form written into output headers is complete, so a run is reproducible from
// it alone.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "ransomgame/game.h"
#include "ransomgame/optimizer.h"

namespace ransomgame::app {

inline constexpr int kConfigVersion = 1;
inline constexpr std::uint64_t kDefaultSeed = 42;

struct EnvironmentConfig {
  double i_fifty = 0.02;
  std::string value_model = "fixed";  // "fixed" | "population_mean"
  double value = 1.0;

  GameEnvironment build() const;
};

struct StrategyConfig {
  double a = 4.68;
  double i_beta = 0.091;
  double i_sigma = 0.104;

  AttackerStrategy build() const;
};

struct SimulateConfig {
  StrategyConfig strategy;
  EnvironmentConfig environment;
  std::uint64_t n_runs = 10000;
  std::uint64_t seed = kDefaultSeed;
};

struct OptimizeConfig {
  EnvironmentConfig environment;
  SearchBox box;
  double tolerance = 1e-5;
  std::uint64_t max_evaluations = 20000;
};

struct SweepConfig {
  EnvironmentConfig environment;
  SweepAxis x_axis{StrategyParameter::kReliabilityInvestment,
                   {0.001, 0.5, 200, Spacing::kLinear}};
  SweepAxis y_axis{StrategyParameter::kEstimationInvestment,
                   {0.001, 0.5, 200, Spacing::kLinear}};
  StrategyConfig fixed;
  // Agent-based runs per grid node; 0 skips the simulated surface.
  std::uint64_t monte_carlo_runs = 0;
  std::uint64_t seed = kDefaultSeed;
};

struct TableConfig {
  std::string table = "strategies";
  EnvironmentConfig environment;
};

// Strategy-space curves: beta against I_beta for each I_50.
struct BetaCurveParams {
  std::vector<double> i_fifty_values{0.01, 0.02, 0.05};
  double i_beta_max = 0.5;
  std::uint64_t points = 501;
};

// Estimate densities for x and several I_sigma.
struct EstimatePdfParams {
  double x = 1.0;
  double i_fifty = 0.02;
  std::vector<double> i_sigma_values{0.0, 0.01, 0.02, 0.05, 0.1};
  double x_tilde_max = 3.0;
  std::uint64_t points = 300;
};

// alpha against C/R for several aggressions.
struct AlphaCurveParams {
  std::vector<double> a_values{0.5, 1.0, 2.0, 5.0, 10.0};
  std::uint64_t points = 101;
};

// Defender utility against the demand R when the defender never offers more
// than C_max. The optimal C_max = a beta x / (1 + a) is always added.
struct UtilityVsDemandParams {
  double a = 10.0;
  double i_beta = 0.1;
  double i_fifty = 0.02;
  double x = 1.0;
  std::vector<double> c_max_values{0.55, 0.65, 0.85, 0.95};
  double r_max = 1.5;
  std::uint64_t points = 300;
};

// Optimal-play attacker profit against the estimate for several aggressions.
struct ProfitVsEstimateParams {
  double x = 1.0;
  double i_beta = 0.1;
  double i_sigma = 0.1;
  double i_fifty = 0.02;
  std::vector<double> a_values{1.0, 2.0, 5.0, 10.0, 20.0};
  double x_tilde_max = 3.0;
  std::uint64_t points = 300;
};

// Expected-profit surfaces over each pair of strategy parameters, with the
// third held at the optimum.
struct ProfitHeatmapsParams {
  EnvironmentConfig environment;
  AxisRange a{0.1, 20.0, 200, Spacing::kLinear};
  AxisRange investment{0.001, 0.5, 200, Spacing::kLinear};
  std::uint64_t monte_carlo_runs = 0;
  std::uint64_t seed = kDefaultSeed;
};

struct FigureConfig {
  std::string figure;  // beta_curve, estimate_pdf, alpha_curve,
                       // utility_vs_demand, profit_vs_estimate,
                       // profit_heatmaps
  BetaCurveParams beta_curve;
  EstimatePdfParams estimate_pdf;
  AlphaCurveParams alpha_curve;
  UtilityVsDemandParams utility_vs_demand;
  ProfitVsEstimateParams profit_vs_estimate;
  ProfitHeatmapsParams profit_heatmaps;
};

const std::vector<std::string>& figure_names();

// Parsing throws ConfigError with a message naming the offending key.
SimulateConfig parse_simulate_config(const nlohmann::json& j);
OptimizeConfig parse_optimize_config(const nlohmann::json& j);
SweepConfig parse_sweep_config(const nlohmann::json& j);
TableConfig parse_table_config(const nlohmann::json& j);
// `name` selects the figure when the config does not; a config naming a
// different figure is an error.
FigureConfig parse_figure_config(const nlohmann::json& j, const std::string& name);

nlohmann::json to_json(const SimulateConfig& c);
nlohmann::json to_json(const OptimizeConfig& c);
nlohmann::json to_json(const SweepConfig& c);
nlohmann::json to_json(const TableConfig& c);
// Only the selected figure's parameters are serialized.
nlohmann::json to_json(const FigureConfig& c);

}  // namespace ransomgame::app

#endif  // RANSOMGAME_APP_CONFIG_H_
