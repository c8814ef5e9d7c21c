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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "ransomgame/app/commands.h"
#include "ransomgame/app/config.h"
#include "ransomgame/expected_profit.h"
#include "ransomgame/game.h"
#include "ransomgame/optimizer.h"
#include "ransomgame/simulation.h"
#include "ransomgame/stochastics.h"

namespace {

using namespace ransomgame;
namespace fs = std::filesystem;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

std::string fmt(const char* f, double a, double b = 0, double c = 0, double d = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c, d);
  return buf;
}

unsigned workers() { return std::max(1u, std::thread::hardware_concurrency()); }

// Strategy table: counteroffer within 0.001 and profit within 0.005.
Outcome strategy_table() {
  struct Row {
    const char* name;
    double c, p;
  };
  const Row expected[] = {{"optimal", 0.675, 0.304},          {"low_aggression", 0.574, 0.276},
                          {"high_aggression", 0.741, 0.284},  {"low_reliability", 0.554, 0.265},
                          {"high_reliability", 0.742, 0.264}, {"low_accuracy", 0.675, 0.283},
                          {"high_accuracy", 0.675, 0.267}};
  const app::Document doc = app::table_command(app::TableConfig{});
  Outcome out;
  out.require(doc.rows.size() == 7, "expected 7 rows");
  double worst_c = 0, worst_p = 0;
  for (std::size_t i = 0; i < 7 && i < doc.rows.size(); ++i) {
    out.require(doc.text(i, "strategy") == expected[i].name, "row order");
    const double dc = std::abs(doc.number(i, "counteroffer") - expected[i].c);
    const double dp = std::abs(doc.number(i, "expected_profit") - expected[i].p);
    worst_c = std::max(worst_c, dc);
    worst_p = std::max(worst_p, dp);
    out.require(dc <= 0.001, fmt("C off by %.4g", dc) + " for " + expected[i].name);
    out.require(dp <= 0.005, fmt("P off by %.4g", dp) + " for " + expected[i].name);
  }
  out.detail = fmt("max |dC| = %.2e, max |dP| = %.2e", worst_c, worst_p) +
               (out.detail.empty() ? "" : "; " + out.detail);
  return out;
}

Outcome optimum_recovery() {
  const StrategyOptimum best = maximize_profit(reference_environment(), OptimizerOptions{});
  const AttackerStrategy& s = best.strategy;
  Outcome out;
  out.require(std::abs(s.aggression() - 4.68) <= 0.25, "a out of range");
  out.require(std::abs(s.reliability_investment() - 0.091) <= 0.010, "i_beta out of range");
  out.require(std::abs(s.estimation_investment() - 0.104) <= 0.010, "i_sigma out of range");
  out.require(std::abs(best.profit - 0.304) <= 0.005, "profit out of range");
  out.detail = fmt("a = %.4f, i_beta = %.5f, i_sigma = %.5f, profit = %.6f", s.aggression(),
                   s.reliability_investment(), s.estimation_investment(), best.profit) +
               (out.detail.empty() ? "" : "; " + out.detail);
  return out;
}

Outcome oracle_agreement() {
  std::mt19937_64 rng(31337);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = 0;
  for (int i = 0; i < 1000; ++i) {
    const double a = 0.1 + 29.9 * unit(rng);
    const double sigma = 1.0 - 0.99 * unit(rng);  // (0.01, 1]
    worst = std::max(worst, std::abs(gross_multiplier_closed_form(a, sigma) -
                                     gross_multiplier_quadrature(a, sigma)));
  }
  Outcome out;
  out.require(worst <= 1e-6, "tolerance exceeded");
  out.detail = fmt("1000 tuples, max |closed form - quadrature| = %.3e", worst) +
               (out.pass ? "" : "; " + out.detail);
  return out;
}

Outcome monte_carlo_consistency() {
  const GameEnvironment env = reference_environment();
  std::mt19937_64 rng(8675309);
  std::uniform_real_distribution<double> a_dist(0.5, 20.0), inv(0.01, 0.5);
  Outcome out;
  double worst_z = 0;
  for (int i = 0; i < 20; ++i) {
    const AttackerStrategy s(a_dist(rng), inv(rng), inv(rng));
    const SimulationConfig c{s, env, 1'000'000, derive_seed(2026, i)};
    const SimulationReport r = run_batch(c, workers());
    const double exact = expected_profit(c.strategy, env).value;
    const double z = std::abs(r.mean_attacker_profit - exact) / *r.std_error_attacker_profit;
    worst_z = std::max(worst_z, z);
    out.require(z <= 3.0, fmt("strategy %.0f off by %.2f SE", i, z));
  }

  const SimulationConfig c{AttackerStrategy(4.68, 0.091, 0.104), env, 10000, app::kDefaultSeed};
  const SimulationReport r = run_batch(c, workers());
  const double se = *r.std_error_attacker_profit;
  const double z = std::abs(r.mean_attacker_profit - 0.304) / se;
  out.require(z <= 3.0, "reference run too far from 0.304");
  out.detail = fmt("20 x 1e6 runs: max %.2f SE; reference n = 10000: mean %.5f, SE %.5f (%.2f SE)",
                   worst_z, r.mean_attacker_profit, se, z) +
               (out.detail.empty() ? "" : "; " + out.detail);
  return out;
}

Outcome defender_optimality() {
  std::mt19937_64 rng(4242);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int violations = 0;
  double worst = 0;
  for (int t = 0; t < 1000; ++t) {
    const double x = 0.1 + 10.0 * unit(rng);
    const double a = 0.1 + 30.0 * unit(rng);
    const double beta = 0.001 + 0.999 * unit(rng);
    const double threshold = counteroffer_threshold(x, a, beta);
    const double r = threshold * (1.0 + 4.0 * unit(rng)) + 1e-9;
    const double c_hat = optimal_counteroffer(r, x, a, beta);
    const double best = defender_utility(c_hat, r, x, a, beta);
    for (int k = 0; k < 1000; ++k) {
      const double gain = defender_utility(r * unit(rng), r, x, a, beta) - best;
      worst = std::max(worst, gain);
      // Rounding slack only: 1e-12 relative to the utility scale.
      if (gain > 1e-12 * (1.0 + std::abs(best))) ++violations;
    }
  }
  Outcome out;
  out.require(violations == 0, fmt("%.0f violations", violations));
  out.detail = fmt("1000 x 1000 alternatives, largest gain over C-hat = %.3e", worst) +
               (out.pass ? "" : "; " + out.detail);
  return out;
}

Outcome figure_data() {
  Outcome out;
  std::ostringstream info;

  app::FigureConfig f;
  f.figure = "beta_curve";
  app::Document d = app::figure_command(f, 1);
  bool midpoint = false;
  for (std::size_t r = 0; r < d.rows.size(); ++r) {
    if (d.number(r, "i_fifty") == 0.02 && d.number(r, "i_beta") == 0.02) {
      midpoint = d.number(r, "beta") == 0.5;
    }
  }
  out.require(midpoint, "beta curve misses (0.02, 0.5)");

  f.figure = "utility_vs_demand";
  d = app::figure_command(f, 1);
  double kink = -1;
  for (std::size_t r = 0; r < d.rows.size(); ++r) {
    if (d.number(r, "optimal") == 1.0 && d.number(r, "c") == d.number(r, "r")) {
      kink = std::max(kink, d.number(r, "r"));
    }
  }
  // a beta x / (1 + a) with a = 10, beta = 5/6, x = 1.
  const double kink_exact = 25.0 / 33.0;
  out.require(std::abs(kink - kink_exact) <= 1e-6, "utility kink misplaced");
  out.require(std::abs(kink - 0.7576) <= 5e-5, "utility kink does not round to 0.7576");
  info << fmt("kink R = %.9f", kink);

  f.figure = "profit_vs_estimate";
  d = app::figure_command(f, 1);
  const double beta = 0.1 / 0.12;
  double worst_peak = 0;
  for (double a : f.profit_vs_estimate.a_values) {
    double best = -1e300, at = -1;
    for (std::size_t r = 0; r < d.rows.size(); ++r) {
      if (d.number(r, "a") == a && d.number(r, "profit") > best) {
        best = d.number(r, "profit");
        at = d.number(r, "x_tilde");
      }
    }
    out.require(at == 1.0, fmt("a = %g peaks at x_tilde = %g", a, at));
    worst_peak = std::max(worst_peak, std::abs(best - (a * beta / (1 + a) - 0.2)));
  }
  out.require(worst_peak <= 1e-12, "profit peak value mismatch");
  info << fmt(", profit peaks off by <= %.1e", worst_peak);

  f.figure = "profit_heatmaps";
  d = app::figure_command(f, workers());
  const StrategyOptimum best = maximize_profit(reference_environment(), OptimizerOptions{});
  const double a_cell = (f.profit_heatmaps.a.max - f.profit_heatmaps.a.min) /
                        (f.profit_heatmaps.a.points - 1);
  const double i_cell = (f.profit_heatmaps.investment.max - f.profit_heatmaps.investment.min) /
                        (f.profit_heatmaps.investment.points - 1);
  struct Target {
    double value, cell;
    const AxisRange& range;
  };
  auto target = [&](const std::string& parameter) {
    if (parameter == "a") return Target{best.strategy.aggression(), a_cell, f.profit_heatmaps.a};
    const double v = parameter == "i_beta" ? best.strategy.reliability_investment()
                                           : best.strategy.estimation_investment();
    return Target{v, i_cell, f.profit_heatmaps.investment};
  };
  for (const char* panel : {"a_vs_i_beta", "a_vs_i_sigma", "i_beta_vs_i_sigma"}) {
    bool pos = false, neg = false, contour = false, argmax_ok = false;
    for (std::size_t r = 0; r < d.rows.size(); ++r) {
      if (d.text(r, "surface") != panel) continue;
      const std::string kind = d.text(r, "kind");
      if (kind == "node") (d.number(r, "profit") > 0 ? pos : neg) = true;
      if (kind == "contour") contour = true;
      if (kind == "argmax") {
        const Target tx = target(d.text(r, "x_parameter"));
        const Target ty = target(d.text(r, "y_parameter"));
        const double x = d.number(r, "x"), y = d.number(r, "y");
        const bool interior = x > tx.range.min && x < tx.range.max && y > ty.range.min &&
                              y < ty.range.max;
        argmax_ok = interior && std::abs(x - tx.value) <= tx.cell &&
                    std::abs(y - ty.value) <= ty.cell;
      }
    }
    out.require(pos && neg && contour, std::string(panel) + " lacks a zero contour");
    out.require(argmax_ok, std::string(panel) + " argmax not within one cell of the optimum");
  }
  info << ", 3 heatmaps with zero contours and argmax within one cell";
  out.detail = info.str() + (out.detail.empty() ? "" : "; " + out.detail);
  return out;
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Outcome determinism() {
  const fs::path dir = fs::temp_directory_path() / "ransomgame_acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);
  std::ofstream(dir / "sweep.json")
      << R"({"version": 1, "command": "sweep", "monte_carlo_runs": 3000, "seed": 7,)"
         R"( "x_axis": {"parameter": "a", "min": 1, "max": 10, "points": 12},)"
         R"( "y_axis": {"parameter": "i_sigma", "min": 0.01, "max": 0.3, "points": 10}})";

  struct Job {
    std::string name, args;
  };
  std::vector<Job> jobs;
  for (const std::string& fig : app::figure_names()) jobs.push_back({fig, "figure " + fig});
  jobs.push_back({"table", "table strategies --format json"});
  jobs.push_back({"simulate", "--seed 99 simulate --trace {dir}/trace_{w}.csv"});
  jobs.push_back({"optimize", "optimize"});
  jobs.push_back({"sweep", "sweep"});
  jobs.push_back({"sweep_mc", "--config {dir}/sweep.json sweep"});

  auto expand = [&](std::string s, const std::string& w) {
    for (std::size_t p; (p = s.find("{dir}")) != std::string::npos;) s.replace(p, 5, dir.string());
    for (std::size_t p; (p = s.find("{w}")) != std::string::npos;) s.replace(p, 3, w);
    return s;
  };

  Outcome out;
  std::size_t files = 0;
  for (const Job& job : jobs) {
    std::vector<std::string> outputs;
    for (const char* w : {"1", "4", "16", "4b"}) {
      const std::string workers_flag = std::string(w) == "4b" ? "4" : w;
      const fs::path file = dir / (job.name + "_" + w + ".out");
      const std::string cmd = std::string(RANSOMGAME_CLI_PATH) + " --workers " + workers_flag +
                              " --out " + file.string() + " " + expand(job.args, w) +
                              " 2>/dev/null";
      if (std::system(cmd.c_str()) != 0) {
        out.require(false, job.name + " failed with workers " + workers_flag);
        continue;
      }
      std::string text = read_file(file);
      if (job.name == "simulate") text += read_file(dir / ("trace_" + std::string(w) + ".csv"));
      outputs.push_back(std::move(text));
      ++files;
    }
    for (const std::string& o : outputs) {
      out.require(o == outputs.front() && !o.empty(), job.name + " output differs");
    }
  }
  fs::remove_all(dir);
  out.detail = fmt("%.0f commands x workers {1, 4, 16} plus a repeat, %.0f files compared",
                   jobs.size(), files) +
               (out.detail.empty() ? "" : "; " + out.detail);
  return out;
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> check;
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "strategy table reproduction", 1.0, strategy_table},
      {2, "optimum recovery", 30.0, optimum_recovery},
      {3, "closed form vs quadrature", 60.0, oracle_agreement},
      {4, "Monte Carlo consistency", 300.0, monte_carlo_consistency},
      {5, "defender optimality", 30.0, defender_optimality},
      {6, "figure data", 0.0, figure_data},
      {7, "determinism across worker counts", 0.0, determinism},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::string timing = fmt("%.2f s", secs);
    if (c.limit_seconds > 0) {
      timing += fmt(" / limit %.0f s", c.limit_seconds);
      if (secs > c.limit_seconds) {
        o.pass = false;
        o.detail += "; runtime limit exceeded";
      }
    }
    std::printf("%s criterion %d: %s [%s] %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name,
                timing.c_str(), o.detail.c_str());
    std::fflush(stdout);
    failures += !o.pass;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures,
              std::size(criteria));
  return failures == 0 ? 0 : 1;
}
