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

#include "ransomgame/app/commands.h"

#include <algorithm>
#include <array>
#include <limits>
#include <ostream>

#include "ransomgame/errors.h"
#include "ransomgame/expected_profit.h"
#include "ransomgame/parallel.h"
#include "ransomgame/simulation.h"
#include "ransomgame/stochastics.h"

namespace ransomgame::app {
namespace {

std::int64_t as_int(std::uint64_t v) { return static_cast<std::int64_t>(v); }

std::vector<double> sorted_unique(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// points evenly spaced nodes on (0, max], plus `extra`.
std::vector<double> open_grid(double max, std::uint64_t points, double extra) {
  if (!(max > 0.0)) throw ConfigError("grid maximum must be positive");
  std::vector<double> v;
  for (std::uint64_t i = 1; i <= points; ++i) {
    v.push_back(max * static_cast<double>(i) / static_cast<double>(points));
  }
  if (extra > 0.0 && extra <= max) v.push_back(extra);
  return sorted_unique(std::move(v));
}

Document beta_curve(const BetaCurveParams& p) {
  Document doc;
  doc.columns = {"i_fifty", "i_beta", "beta"};
  const std::vector<double> base =
      AxisRange{0.0, p.i_beta_max, static_cast<std::size_t>(p.points)}.values();
  for (double i_fifty : p.i_fifty_values) {
    std::vector<double> grid = base;
    if (i_fifty <= p.i_beta_max) grid.push_back(i_fifty);
    for (double i_beta : sorted_unique(std::move(grid))) {
      doc.rows.push_back({i_fifty, i_beta, reliability(i_beta, i_fifty)});
    }
  }
  return doc;
}

Document estimate_pdf(const EstimatePdfParams& p) {
  Document doc;
  doc.columns = {"i_sigma", "sigma", "x_tilde", "pdf"};
  const std::vector<double> grid = open_grid(p.x_tilde_max, p.points, p.x);
  for (double i_sigma : p.i_sigma_values) {
    const LognormalEstimator est(p.x, estimate_scale(i_sigma, p.i_fifty));
    for (double x_tilde : grid) {
      doc.rows.push_back({i_sigma, est.sigma(), x_tilde, est.pdf(x_tilde)});
    }
  }
  return doc;
}

Document alpha_curve(const AlphaCurveParams& p) {
  Document doc;
  doc.columns = {"a", "c_over_r", "alpha"};
  const std::vector<double> ratios =
      AxisRange{0.0, 1.0, static_cast<std::size_t>(p.points)}.values();
  for (double a : p.a_values) {
    for (double ratio : ratios) {
      doc.rows.push_back({a, ratio, aggression_probability(ratio, 1.0, a)});
    }
  }
  return doc;
}

Document utility_vs_demand(const UtilityVsDemandParams& p) {
  Document doc;
  doc.columns = {"c_max", "optimal", "r", "c", "utility"};
  const double beta = reliability(p.i_beta, p.i_fifty);
  const double optimal = counteroffer_threshold(p.x, p.a, beta);
  std::vector<double> caps = p.c_max_values;
  caps.push_back(optimal);
  for (double c_max : sorted_unique(std::move(caps))) {
    if (!(c_max >= 0.0)) throw ConfigError("c_max values must be non-negative");
    for (double r : open_grid(p.r_max, p.points, c_max)) {
      const double c = std::min(r, c_max);
      doc.rows.push_back({c_max, std::int64_t{c_max == optimal ? 1 : 0}, r, c,
                          defender_utility(c, r, p.x, p.a, beta)});
    }
  }
  return doc;
}

Document profit_vs_estimate(const ProfitVsEstimateParams& p) {
  Document doc;
  doc.columns = {"a", "x_tilde", "profit"};
  const GameEnvironment env(p.i_fifty, FixedValue{p.x});
  const std::vector<double> grid = open_grid(p.x_tilde_max, p.points, p.x);
  for (double a : p.a_values) {
    const AttackerStrategy s(a, p.i_beta, p.i_sigma);
    for (double x_tilde : grid) {
      doc.rows.push_back({a, x_tilde, optimal_play_profit(x_tilde, p.x, s, env)});
    }
  }
  return doc;
}

Document profit_heatmaps(const ProfitHeatmapsParams& p, unsigned workers) {
  const GameEnvironment env = p.environment.build();
  OptimizerOptions options;
  options.workers = workers;
  const StrategyOptimum best = maximize_profit(env, options);

  Document doc;
  doc.columns = surface_columns();
  struct Panel {
    const char* name;
    StrategyParameter x;
    StrategyParameter y;
  };
  const Panel panels[] = {
      {"a_vs_i_beta", StrategyParameter::kAggression,
       StrategyParameter::kReliabilityInvestment},
      {"a_vs_i_sigma", StrategyParameter::kAggression,
       StrategyParameter::kEstimationInvestment},
      {"i_beta_vs_i_sigma", StrategyParameter::kReliabilityInvestment,
       StrategyParameter::kEstimationInvestment},
  };
  for (std::size_t k = 0; k < std::size(panels); ++k) {
    const Panel& panel = panels[k];
    auto range = [&](StrategyParameter s) {
      return s == StrategyParameter::kAggression ? p.a : p.investment;
    };
    const SweepGrid grid{{panel.x, range(panel.x)}, {panel.y, range(panel.y)},
                         best.strategy};
    const ProfitSurface surface = profit_surface(env, grid, workers);
    std::vector<double> simulated;
    if (p.monte_carlo_runs > 0) {
      simulated = simulated_surface(env, grid, p.monte_carlo_runs,
                                    derive_seed(p.seed, k), workers);
    }
    append_surface_rows(doc, panel.name, grid, surface,
                        p.monte_carlo_runs > 0 ? &simulated : nullptr);
    const std::array<double, 3> opt{best.strategy.aggression(),
                                    best.strategy.reliability_investment(),
                                    best.strategy.estimation_investment()};
    doc.rows.push_back({std::string(panel.name), std::string(to_string(panel.x)),
                        std::string(to_string(panel.y)), std::string("optimum"),
                        std::int64_t{0}, opt[static_cast<std::size_t>(panel.x)],
                        opt[static_cast<std::size_t>(panel.y)], best.profit});
  }
  return doc;
}

}  // namespace

const std::vector<NamedStrategy>& reference_strategies() {
  static const std::vector<NamedStrategy> rows{
      {"optimal", AttackerStrategy(4.68, 0.091, 0.104)},
      {"low_aggression", AttackerStrategy(2.34, 0.091, 0.104)},
      {"high_aggression", AttackerStrategy(9.36, 0.091, 0.104)},
      {"low_reliability", AttackerStrategy(4.68, 0.041, 0.104)},
      {"high_reliability", AttackerStrategy(4.68, 0.182, 0.104)},
      {"low_accuracy", AttackerStrategy(4.68, 0.091, 0.052)},
      {"high_accuracy", AttackerStrategy(4.68, 0.091, 0.208)},
  };
  return rows;
}

Document table_command(const TableConfig& config) {
  const GameEnvironment env = config.environment.build();
  Document doc;
  doc.command = "table strategies";
  doc.config = to_json(config);
  doc.columns = {"strategy", "a",           "i_beta",        "i_sigma",
                 "beta",     "sigma",       "counteroffer",  "expected_profit"};
  const double m = env.mean_value();
  for (const NamedStrategy& row : reference_strategies()) {
    const AttackerStrategy& s = row.strategy;
    const DerivedParameters p = derive_parameters(s, env);
    const double demand = counteroffer_threshold(m, s.aggression(), p.beta);
    doc.rows.push_back({row.name, s.aggression(), s.reliability_investment(),
                        s.estimation_investment(), p.beta, p.sigma,
                        optimal_counteroffer(demand, m, s.aggression(), p.beta),
                        expected_profit(s, env).value});
  }
  return doc;
}

Document simulate_command(const SimulateConfig& config, unsigned workers,
                          std::ostream* trace_out) {
  const AttackerStrategy strategy = config.strategy.build();
  const GameEnvironment env = config.environment.build();
  const SimulationConfig sim{strategy, env, config.n_runs, config.seed,
                             trace_out != nullptr};
  const SimulationReport report = run_batch(sim, workers);
  if (trace_out) write_trace_csv(*trace_out, report.per_run_records);

  Document doc;
  doc.command = "simulate";
  doc.config = to_json(config);
  doc.columns = {"metric", "value"};
  auto add = [&doc](const std::string& name, Cell value) {
    doc.rows.push_back({name, std::move(value)});
  };
  add("n_runs", as_int(report.n_runs));
  add("mean_attacker_profit", report.mean_attacker_profit);
  add("std_error_attacker_profit",
      report.std_error_attacker_profit.value_or(
          std::numeric_limits<double>::quiet_NaN()));
  add("mean_defender_utility", report.mean_defender_utility);
  add("expected_profit_closed_form", expected_profit(strategy, env).value);
  for (int k = 0; k < kOutcomeKindCount; ++k) {
    const auto kind = static_cast<OutcomeKind>(k);
    add("count_" + std::string(to_string(kind)), as_int(report.count(kind)));
  }
  add("contested_runs", as_int(report.contested_runs));
  add("aggressive_runs", as_int(report.aggressive_runs));
  add("expected_aggressive_runs", report.alpha_sum);
  add("paid_runs", as_int(report.paid_runs));
  add("decrypted_runs", as_int(report.decrypted_runs));
  return doc;
}

Document optimize_command(const OptimizeConfig& config, unsigned workers) {
  const GameEnvironment env = config.environment.build();
  OptimizerOptions options;
  options.box = config.box;
  options.tolerance = config.tolerance;
  options.max_evaluations = static_cast<std::size_t>(config.max_evaluations);
  options.workers = workers;
  const StrategyOptimum best = maximize_profit(env, options);
  const DerivedParameters p = derive_parameters(best.strategy, env);

  Document doc;
  doc.command = "optimize";
  doc.config = to_json(config);
  doc.columns = {"a",     "i_beta", "i_sigma",     "beta",
                 "sigma", "profit", "evaluations", "converged"};
  doc.rows.push_back({best.strategy.aggression(),
                      best.strategy.reliability_investment(),
                      best.strategy.estimation_investment(), p.beta, p.sigma,
                      best.profit, static_cast<std::int64_t>(best.evaluations),
                      std::int64_t{best.converged ? 1 : 0}});
  return doc;
}

Document sweep_command(const SweepConfig& config, unsigned workers) {
  const GameEnvironment env = config.environment.build();
  const SweepGrid grid{config.x_axis, config.y_axis, config.fixed.build()};
  const ProfitSurface surface = profit_surface(env, grid, workers);
  std::vector<double> simulated;
  if (config.monte_carlo_runs > 0) {
    simulated =
        simulated_surface(env, grid, config.monte_carlo_runs, config.seed, workers);
  }
  Document doc;
  doc.command = "sweep";
  doc.config = to_json(config);
  doc.columns = surface_columns();
  append_surface_rows(doc, "sweep", grid, surface,
                      config.monte_carlo_runs > 0 ? &simulated : nullptr);
  return doc;
}

Document figure_command(const FigureConfig& config, unsigned workers) {
  Document doc;
  const std::string& name = config.figure;
  if (name == "beta_curve") {
    doc = beta_curve(config.beta_curve);
  } else if (name == "estimate_pdf") {
    doc = estimate_pdf(config.estimate_pdf);
  } else if (name == "alpha_curve") {
    doc = alpha_curve(config.alpha_curve);
  } else if (name == "utility_vs_demand") {
    doc = utility_vs_demand(config.utility_vs_demand);
  } else if (name == "profit_vs_estimate") {
    doc = profit_vs_estimate(config.profit_vs_estimate);
  } else if (name == "profit_heatmaps") {
    doc = profit_heatmaps(config.profit_heatmaps, workers);
  } else {
    throw ConfigError("unknown figure '" + name + "'");
  }
  doc.command = "figure " + name;
  doc.config = to_json(config);
  return doc;
}

std::vector<std::string> surface_columns() {
  return {"surface", "x_parameter", "y_parameter", "kind",
          "index",   "x",           "y",           "profit"};
}

void append_surface_rows(Document& doc, const std::string& name,
                         const SweepGrid& grid, const ProfitSurface& surface,
                         const std::vector<double>* simulated) {
  const std::string xp(to_string(grid.x_axis.parameter));
  const std::string yp(to_string(grid.y_axis.parameter));
  const std::size_t nx = surface.xs.size();
  auto row = [&](const char* kind, std::size_t index, double x, double y, double v) {
    doc.rows.push_back({name, xp, yp, std::string(kind),
                        static_cast<std::int64_t>(index), x, y, v});
  };
  for (std::size_t iy = 0; iy < surface.ys.size(); ++iy) {
    for (std::size_t ix = 0; ix < nx; ++ix) {
      row("node", iy * nx + ix, surface.xs[ix], surface.ys[iy], surface.at(ix, iy));
    }
  }
  const GridNode& m = surface.argmax;
  row("argmax", m.iy * nx + m.ix, m.x, m.y, m.profit);
  for (std::size_t k = 0; k < surface.zero_contours.size(); ++k) {
    for (const Point2& pt : surface.zero_contours[k]) row("contour", k, pt.x, pt.y, 0.0);
  }
  if (simulated) {
    for (std::size_t iy = 0; iy < surface.ys.size(); ++iy) {
      for (std::size_t ix = 0; ix < nx; ++ix) {
        row("simulated_node", iy * nx + ix, surface.xs[ix], surface.ys[iy],
            (*simulated)[iy * nx + ix]);
      }
    }
  }
}

std::vector<double> simulated_surface(const GameEnvironment& env,
                                      const SweepGrid& grid, std::uint64_t runs,
                                      std::uint64_t seed, unsigned workers) {
  grid.validate();
  const std::vector<double> xs = grid.x_axis.range.values();
  const std::vector<double> ys = grid.y_axis.range.values();
  std::vector<double> out(xs.size() * ys.size());
  parallel_for(out.size(), workers, [&](std::size_t k) {
    const SimulationConfig sim{grid.strategy_at(xs[k % xs.size()], ys[k / xs.size()]),
                               env, runs, derive_seed(seed, k), false};
    out[k] = run_batch(sim, 1).mean_attacker_profit;
  });
  return out;
}

}  // namespace ransomgame::app
