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

// Command-line front end: figure data, the strategy table, simulations,
// optimisation and parameter sweeps.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ransomgame/app/commands.h"
#include "ransomgame/app/config.h"
#include "ransomgame/app/document.h"
#include "ransomgame/errors.h"

namespace {

using ransomgame::ConfigError;
using ransomgame::DomainError;
using ransomgame::NumericalError;
namespace app = ransomgame::app;

constexpr int kExitConfigError = 2;
constexpr int kExitNumericalFailure = 3;

nlohmann::json load_config(const std::string& path) {
  if (path.empty()) return {{"version", app::kConfigVersion}};
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("config file " + path + " is not valid JSON: " + e.what());
  }
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw ConfigError("cannot write output file " + out_path);
  out << text;
  if (!out.flush()) throw ConfigError("failed writing output file " + out_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App cli{"Targeted ransomware negotiation game: analysis, simulation and "
               "optimisation"};
  cli.require_subcommand(1);

  std::optional<std::uint64_t> seed;
  std::string out_path;
  std::string format_name = "csv";
  std::string config_path;
  unsigned workers = 1;
  cli.add_option("--seed", seed, "Master seed (overrides the config)");
  cli.add_option("--out", out_path, "Output file (default: stdout)");
  cli.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cli.add_option("--config", config_path, "JSON run configuration");
  cli.add_option("--workers", workers, "Worker threads")->check(CLI::Range(1u, 1024u));
  cli.fallthrough();

  std::string figure_name;
  auto* figure = cli.add_subcommand("figure", "Data series for one figure");
  figure->add_option("name", figure_name, "Figure name")->required();

  std::string table_name;
  auto* table = cli.add_subcommand("table", "Strategy comparison table");
  table->add_option("name", table_name, "Table name")->required();

  std::string trace_path;
  auto* simulate = cli.add_subcommand("simulate", "Agent-based Monte Carlo run");
  simulate->add_option("--trace", trace_path, "Per-run trace CSV");

  auto* optimize = cli.add_subcommand("optimize", "Maximise expected profit");
  auto* sweep = cli.add_subcommand("sweep", "Expected-profit surface over two parameters");

  try {
    cli.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return cli.exit(e);
  } catch (const CLI::ParseError& e) {
    cli.exit(e);
    return kExitConfigError;
  }

  try {
    const nlohmann::json raw = load_config(config_path);
    const auto format = app::parse_output_format(format_name).value();
    app::Document doc;
    if (*figure) {
      app::FigureConfig c = app::parse_figure_config(raw, figure_name);
      if (seed) c.profit_heatmaps.seed = *seed;
      doc = app::figure_command(c, workers);
    } else if (*table) {
      nlohmann::json j = raw;
      if (!j.contains("table")) j["table"] = table_name;
      app::TableConfig c = app::parse_table_config(j);
      if (c.table != table_name) {
        throw ConfigError("config is for table '" + c.table + "', not '" +
                          table_name + "'");
      }
      doc = app::table_command(c);
    } else if (*simulate) {
      app::SimulateConfig c = app::parse_simulate_config(raw);
      if (seed) c.seed = *seed;
      std::ostringstream trace;
      doc = app::simulate_command(c, workers, trace_path.empty() ? nullptr : &trace);
      if (!trace_path.empty()) emit(trace.str(), trace_path);
    } else if (*optimize) {
      doc = app::optimize_command(app::parse_optimize_config(raw), workers);
    } else if (*sweep) {
      app::SweepConfig c = app::parse_sweep_config(raw);
      if (seed) c.seed = *seed;
      doc = app::sweep_command(c, workers);
    }
    std::ostringstream text;
    app::write_document(text, doc, format);
    emit(text.str(), out_path);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const DomainError& e) {
    std::cerr << "invalid parameter: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumericalFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
