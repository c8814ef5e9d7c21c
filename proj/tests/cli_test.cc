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

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>

#include <doctest.h>
#include <json.hpp>

#include "ransomgame/app/commands.h"
#include "ransomgame/app/config.h"
#include "ransomgame/app/document.h"
#include "ransomgame/errors.h"
#include "ransomgame/expected_profit.h"
#include "ransomgame/game.h"

namespace ransomgame::app {
namespace {

using nlohmann::json;

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string csv(const Document& doc) {
  std::ostringstream out;
  write_csv(out, doc);
  return out.str();
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("ransomgame_cli_test_" + std::to_string(std::rand()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

int run_cli(const std::string& args) {
  const std::string cmd = std::string(RANSOMGAME_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST_CASE("config parsing is strict") {
  CHECK_THROWS_AS(parse_simulate_config(json::object()), ConfigError);
  CHECK_THROWS_AS(parse_simulate_config({{"version", 2}}), ConfigError);
  CHECK_THROWS_AS(parse_simulate_config({{"version", 1}, {"n_run", 5}}), ConfigError);
  CHECK_THROWS_AS(parse_simulate_config({{"version", 1}, {"n_runs", -5}}), ConfigError);
  CHECK_THROWS_AS(parse_simulate_config({{"version", 1}, {"n_runs", "5"}}), ConfigError);
  CHECK_THROWS_AS(parse_simulate_config({{"version", 1}, {"command", "optimize"}}), ConfigError);
  CHECK_THROWS_AS(
      parse_simulate_config({{"version", 1}, {"strategy", {{"a", 1}, {"beta", 1}}}}),
      ConfigError);
  CHECK_THROWS_AS(parse_sweep_config({{"version", 1},
                                      {"x_axis", {{"parameter", "a"}}},
                                      {"y_axis", {{"parameter", "a"}}}}),
                  ConfigError);
  CHECK_THROWS_AS(parse_figure_config({{"version", 1}}, "fig7"), ConfigError);
  CHECK_THROWS_AS(
      parse_figure_config({{"version", 1}, {"params", {{"i_beta_max", 1}}}}, "alpha_curve"),
      ConfigError);

  const SimulateConfig c = parse_simulate_config(
      {{"version", 1}, {"n_runs", 77}, {"strategy", {{"a", 2.0}}}});
  CHECK(c.n_runs == 77);
  CHECK(c.strategy.a == 2.0);
  CHECK(c.strategy.i_beta == 0.091);
  CHECK(c.seed == kDefaultSeed);
  CHECK(c.environment.i_fifty == 0.02);
}

TEST_CASE("configs round-trip through JSON") {
  SweepConfig s;
  s.x_axis = {StrategyParameter::kAggression, {0.5, 9.0, 7, Spacing::kLog}};
  s.monte_carlo_runs = 12;
  s.seed = 9;
  const SweepConfig back = parse_sweep_config(to_json(s));
  CHECK(to_json(back) == to_json(s));
  CHECK(back.x_axis.range.spacing == Spacing::kLog);

  OptimizeConfig o;
  o.tolerance = 1e-7;
  CHECK(to_json(parse_optimize_config(to_json(o))) == to_json(o));

  FigureConfig f;
  f.figure = "profit_vs_estimate";
  f.profit_vs_estimate.a_values = {3.0};
  CHECK(to_json(parse_figure_config(to_json(f), f.figure)) == to_json(f));
}

TEST_CASE("figure defaults match the reference parameters") {
  // Reference parameters for each figure.
  struct {
    double i_fifty = 0.02;
    double utility_a = 10.0, utility_i_beta = 0.1;
    double estimate_x = 1.0, estimate_i_beta = 0.1, estimate_i_sigma = 0.1;
    double heatmap_mean_value = 1.0;
  } constexpr k;

  const FigureConfig d;
  CHECK(d.estimate_pdf.i_fifty == k.i_fifty);
  CHECK(d.utility_vs_demand.i_fifty == k.i_fifty);
  CHECK(d.utility_vs_demand.a == k.utility_a);
  CHECK(d.utility_vs_demand.i_beta == k.utility_i_beta);
  CHECK(d.profit_vs_estimate.i_fifty == k.i_fifty);
  CHECK(d.profit_vs_estimate.x == k.estimate_x);
  CHECK(d.profit_vs_estimate.i_beta == k.estimate_i_beta);
  CHECK(d.profit_vs_estimate.i_sigma == k.estimate_i_sigma);
  CHECK(d.profit_heatmaps.environment.i_fifty == k.i_fifty);
  CHECK(d.profit_heatmaps.environment.value == k.heatmap_mean_value);
  CHECK(std::find(d.beta_curve.i_fifty_values.begin(), d.beta_curve.i_fifty_values.end(),
                  k.i_fifty) != d.beta_curve.i_fifty_values.end());
  CHECK(figure_names().size() == 6);

  // The parser fills the same defaults.
  for (const std::string& name : figure_names()) {
    const FigureConfig parsed = parse_figure_config({{"version", 1}}, name);
    FigureConfig expected;
    expected.figure = name;
    CHECK(to_json(parsed) == to_json(expected));
  }
}

TEST_CASE("beta curve passes through its midpoint") {
  FigureConfig f;
  f.figure = "beta_curve";
  const Document doc = figure_command(f, 1);
  CHECK(doc.rows.size() >= 3 * 501);
  for (double i_fifty : f.beta_curve.i_fifty_values) {
    bool found = false;
    for (std::size_t r = 0; r < doc.rows.size(); ++r) {
      if (doc.number(r, "i_fifty") == i_fifty && doc.number(r, "i_beta") == i_fifty) {
        CHECK(doc.number(r, "beta") == 0.5);
        found = true;
      }
    }
    CHECK(found);
  }
}

TEST_CASE("estimate pdf rows integrate to one") {
  FigureConfig f;
  f.figure = "estimate_pdf";
  f.estimate_pdf.points = 4000;
  f.estimate_pdf.x_tilde_max = 12.0;
  const Document doc = figure_command(f, 1);
  for (double i_sigma : {0.01, 0.1}) {
    double area = 0.0, prev_x = 0.0, prev_pdf = 0.0;
    for (std::size_t r = 0; r < doc.rows.size(); ++r) {
      if (doc.number(r, "i_sigma") != i_sigma) continue;
      const double x = doc.number(r, "x_tilde"), pdf = doc.number(r, "pdf");
      area += 0.5 * (pdf + prev_pdf) * (x - prev_x);
      prev_x = x;
      prev_pdf = pdf;
    }
    CHECK(area == doctest::Approx(1.0).epsilon(2e-3));
  }
}

TEST_CASE("alpha curve endpoints") {
  FigureConfig f;
  f.figure = "alpha_curve";
  const Document doc = figure_command(f, 1);
  for (std::size_t r = 0; r < doc.rows.size(); ++r) {
    const double ratio = doc.number(r, "c_over_r");
    if (ratio == 0.0) CHECK(doc.number(r, "alpha") == 1.0);
    if (ratio == 1.0) CHECK(doc.number(r, "alpha") == 0.0);
  }
}

TEST_CASE("utility curve kinks at the optimal counteroffer") {
  FigureConfig f;
  f.figure = "utility_vs_demand";
  const Document doc = figure_command(f, 1);
  // Last demand the defender meets in full on the optimal-play curve.
  double kink = -1.0;
  for (std::size_t r = 0; r < doc.rows.size(); ++r) {
    if (doc.number(r, "optimal") == 1.0 && doc.number(r, "c") == doc.number(r, "r")) {
      kink = std::max(kink, doc.number(r, "r"));
    }
  }
  CHECK(std::abs(kink - 25.0 / 33.0) <= 1e-6);
  CHECK(std::round(kink * 1e4) / 1e4 == doctest::Approx(0.7576));

  // Optimal play dominates every capped curve at each demand.
  for (std::size_t r = 0; r < doc.rows.size(); ++r) {
    if (doc.number(r, "optimal") != 1.0) continue;
    for (std::size_t q = 0; q < doc.rows.size(); ++q) {
      if (doc.number(q, "optimal") == 0.0 && doc.number(q, "r") == doc.number(r, "r")) {
        CHECK(doc.number(r, "utility") >= doc.number(q, "utility") - 1e-12);
      }
    }
  }
}

TEST_CASE("profit versus estimate peaks at the true value") {
  FigureConfig f;
  f.figure = "profit_vs_estimate";
  const Document doc = figure_command(f, 1);
  const double beta = 0.1 / 0.12;
  for (double a : f.profit_vs_estimate.a_values) {
    double best = -1e300, at = -1.0;
    for (std::size_t r = 0; r < doc.rows.size(); ++r) {
      if (doc.number(r, "a") != a) continue;
      if (doc.number(r, "profit") > best) {
        best = doc.number(r, "profit");
        at = doc.number(r, "x_tilde");
      }
    }
    CHECK(at == 1.0);
    CHECK(best == doctest::Approx(a * beta / (1 + a) - 0.2).epsilon(1e-12));
  }
  // The a = 10 curve tops out at 0.55758.
  CHECK(10 * beta / 11 - 0.2 == doctest::Approx(0.55758).epsilon(1e-5));
}

TEST_CASE("profit heatmaps carry argmax, optimum and zero contours") {
  FigureConfig f;
  f.figure = "profit_heatmaps";
  f.profit_heatmaps.a.points = 60;
  f.profit_heatmaps.investment.points = 60;
  const Document doc = figure_command(f, 1);
  for (const char* panel : {"a_vs_i_beta", "a_vs_i_sigma", "i_beta_vs_i_sigma"}) {
    std::size_t nodes = 0, contour = 0, argmax = 0;
    bool pos = false, neg = false;
    for (std::size_t r = 0; r < doc.rows.size(); ++r) {
      if (doc.text(r, "surface") != panel) continue;
      const std::string kind = doc.text(r, "kind");
      if (kind == "node") {
        ++nodes;
        (doc.number(r, "profit") > 0 ? pos : neg) = true;
      }
      contour += kind == "contour";
      argmax += kind == "argmax";
    }
    CHECK(nodes == 3600);
    CHECK(argmax == 1);
    CHECK(contour > 0);
    CHECK(pos);
    CHECK(neg);
  }
}

TEST_CASE("strategy table") {
  const Document doc = table_command(TableConfig{});
  REQUIRE(doc.rows.size() == 7);
  CHECK(doc.text(0, "strategy") == "optimal");
  CHECK(std::abs(doc.number(0, "counteroffer") - 0.675) <= 0.001);
  CHECK(std::abs(doc.number(0, "expected_profit") - 0.304) <= 0.005);
  CHECK(doc.text(6, "strategy") == "high_accuracy");
  CHECK(std::abs(doc.number(6, "counteroffer") - 0.675) <= 0.001);
  CHECK(std::abs(doc.number(6, "expected_profit") - 0.267) <= 0.005);
  CHECK(doc.text(3, "strategy") == "low_reliability");
  CHECK(doc.number(3, "i_beta") == 0.041);
  CHECK(std::abs(doc.number(3, "counteroffer") - 0.554) <= 0.001);
  CHECK(std::abs(doc.number(3, "expected_profit") - 0.265) <= 0.005);
  CHECK_THROWS_AS(parse_table_config({{"version", 1}, {"table", "other"}}), ConfigError);
}

TEST_CASE("sweep on a 2x2 grid equals direct evaluation") {
  SweepConfig c;
  c.x_axis = {StrategyParameter::kAggression, {2.0, 6.0, 2}};
  c.y_axis = {StrategyParameter::kEstimationInvestment, {0.05, 0.2, 2}};
  const Document doc = sweep_command(c, 1);
  const GameEnvironment env = c.environment.build();
  std::size_t nodes = 0;
  for (std::size_t r = 0; r < doc.rows.size(); ++r) {
    if (doc.text(r, "kind") != "node") continue;
    ++nodes;
    const AttackerStrategy s(doc.number(r, "x"), c.fixed.i_beta, doc.number(r, "y"));
    CHECK(doc.number(r, "profit") == expected_profit(s, env).value);
  }
  CHECK(nodes == 4);
}

TEST_CASE("sweep with simulated nodes is worker independent") {
  SweepConfig c;
  c.x_axis = {StrategyParameter::kReliabilityInvestment, {0.05, 0.2, 3}};
  c.y_axis = {StrategyParameter::kEstimationInvestment, {0.05, 0.2, 3}};
  c.monte_carlo_runs = 5000;
  const std::string one = csv(sweep_command(c, 1));
  CHECK(one == csv(sweep_command(c, 4)));
  const Document doc = sweep_command(c, 2);
  std::size_t simulated = 0;
  for (std::size_t r = 0; r < doc.rows.size(); ++r) {
    if (doc.text(r, "kind") == "simulated_node") ++simulated;
  }
  CHECK(simulated == 9);
}

TEST_CASE("simulate reports the default run") {
  const Document doc = simulate_command(SimulateConfig{}, 2);
  auto metric = [&](const std::string& name) {
    for (std::size_t r = 0; r < doc.rows.size(); ++r) {
      if (doc.text(r, "metric") == name) return doc.number(r, "value");
    }
    FAIL("missing metric " << name);
    return 0.0;
  };
  CHECK(metric("n_runs") == 10000);
  const double se = metric("std_error_attacker_profit");
  CHECK(std::abs(metric("mean_attacker_profit") - 0.304) <= 3 * se);
  double total = 0;
  for (std::size_t k = 0; k < kOutcomeKindCount; ++k) {
    total += metric("count_" + std::string(to_string(static_cast<OutcomeKind>(k))));
  }
  CHECK(total == 10000);
}

TEST_CASE("output embeds a config that reproduces it") {
  SimulateConfig c;
  c.n_runs = 500;
  c.seed = 1234;
  const Document doc = simulate_command(c, 1);
  const std::string text = csv(doc);
  const json embedded = extract_config(text);
  CHECK(embedded == to_json(c));
  CHECK(csv(simulate_command(parse_simulate_config(embedded), 3)) == text);

  std::ostringstream js;
  write_json(js, doc);
  CHECK(extract_config(js.str()) == to_json(c));
  const json parsed = json::parse(js.str());
  CHECK(parsed["command"] == "simulate");
  CHECK(parsed["rows"].size() == doc.rows.size());

  FigureConfig f;
  f.figure = "alpha_curve";
  f.alpha_curve.points = 11;
  const std::string fig = csv(figure_command(f, 1));
  CHECK(csv(figure_command(parse_figure_config(extract_config(fig), "alpha_curve"), 1)) == fig);
}

TEST_CASE("csv layout") {
  Document doc;
  doc.command = "demo";
  doc.config = {{"version", 1}};
  doc.columns = {"name", "n", "v"};
  doc.rows = {{std::string("x"), std::int64_t{3}, 0.1 + 0.2}};
  CHECK(csv(doc) == "# ransomgame demo\n# config: {\"version\":1}\nname,n,v\nx,3,0.3\n");
  CHECK(parse_output_format("json") == OutputFormat::kJson);
  CHECK(!parse_output_format("xml"));
}

TEST_CASE("command line binary") {
  TempDir tmp;
  const auto out = tmp.path / "t.csv";
  const auto cfg = tmp.path / "c.json";

  CHECK(run_cli("table strategies --out " + out.string()) == 0);
  CHECK(read_file(out).rfind("# ransomgame table strategies\n", 0) == 0);

  CHECK(run_cli("figure nonsense") == 2);
  CHECK(run_cli("--bogus table strategies") == 2);
  CHECK(run_cli("--config " + (tmp.path / "missing.json").string() + " optimize") == 2);

  std::ofstream(cfg) << R"({"version": 1, "n_runs": 0})";
  CHECK(run_cli("--config " + cfg.string() + " simulate") == 2);
  std::ofstream(cfg) << R"({"version": 1, "strategy": {"a": -1}})";
  CHECK(run_cli("--config " + cfg.string() + " simulate") == 2);
  std::ofstream(cfg) << R"({"version": 1, "command": "sweep"})";
  CHECK(run_cli("--config " + cfg.string() + " simulate") == 2);
  std::ofstream(cfg) << "{not json";
  CHECK(run_cli("--config " + cfg.string() + " simulate") == 2);
  CHECK(run_cli("table strategies --out " + (tmp.path / "no/such/dir.csv").string()) == 2);

  // Global flags after the subcommand, seed override, JSON output.
  std::ofstream(cfg) << R"({"version": 1, "n_runs": 300})";
  const auto a = tmp.path / "a.json", b = tmp.path / "b.json";
  CHECK(run_cli("simulate --config " + cfg.string() + " --seed 5 --format json --out " +
                a.string()) == 0);
  CHECK(run_cli("--workers 3 --config " + cfg.string() + " --seed 5 --format json simulate --out " +
                b.string()) == 0);
  CHECK(read_file(a) == read_file(b));
  const json doc = json::parse(read_file(a));
  CHECK(doc["config"]["seed"] == 5);
  CHECK(doc["config"]["n_runs"] == 300);

  // Re-running from the embedded config reproduces the output.
  std::ofstream(cfg) << extract_config(read_file(a)).dump();
  CHECK(run_cli("--config " + cfg.string() + " --format json simulate --out " + b.string()) == 0);
  CHECK(read_file(a) == read_file(b));

  const auto trace = tmp.path / "trace.csv";
  CHECK(run_cli("--config " + cfg.string() + " simulate --trace " + trace.string()) == 0);
  std::ifstream tin(trace);
  std::string header;
  std::getline(tin, header);
  CHECK(header ==
        "run_index,x,x_tilde,R,C,alpha,aggressive,decrypted,attacker_payoff,defender_payoff");
}

}  // namespace
}  // namespace ransomgame::app
