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

#include "ransomgame/app/config.h"

#include <set>
#include <string_view>

#include "ransomgame/errors.h"

namespace ransomgame::app {
namespace {

using nlohmann::json;

// Reads one JSON object, remembering which keys were consumed so that
// anything left over can be reported as unknown.
class ObjectReader {
 public:
  ObjectReader(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) throw ConfigError(path_ + ": expected a JSON object");
  }

  bool has(const std::string& key) const { return j_.contains(key); }

  void read(const std::string& key, double& out) {
    if (const json* v = take(key)) {
      if (!v->is_number()) fail(key, "expected a number");
      out = v->get<double>();
    }
  }

  void read(const std::string& key, std::uint64_t& out) {
    if (const json* v = take(key)) {
      if (v->is_number_integer() && v->get<std::int64_t>() >= 0) {
        out = v->get<std::uint64_t>();
      } else {
        fail(key, "expected a non-negative integer");
      }
    }
  }

  void read(const std::string& key, std::string& out) {
    if (const json* v = take(key)) {
      if (!v->is_string()) fail(key, "expected a string");
      out = v->get<std::string>();
    }
  }

  void read(const std::string& key, std::vector<double>& out) {
    if (const json* v = take(key)) {
      if (!v->is_array()) fail(key, "expected an array of numbers");
      std::vector<double> values;
      for (const json& e : *v) {
        if (!e.is_number()) fail(key, "expected an array of numbers");
        values.push_back(e.get<double>());
      }
      out = std::move(values);
    }
  }

  // nullptr if the key is absent.
  const json* child(const std::string& key) { return take(key); }

  std::string path(const std::string& key) const { return path_ + "." + key; }

  void finish() const {
    for (const auto& [key, value] : j_.items()) {
      if (!seen_.contains(key)) fail(key, "unknown key");
    }
  }

  [[noreturn]] void fail(const std::string& key, const std::string& what) const {
    throw ConfigError(path_ + "." + key + ": " + what);
  }

 private:
  const json* take(const std::string& key) {
    seen_.insert(key);
    const auto it = j_.find(key);
    return it == j_.end() ? nullptr : &*it;
  }

  const json& j_;
  std::string path_;
  std::set<std::string> seen_;
};

// Top-level header: version must be 1, command (if given) must match.
ObjectReader open_top(const json& j, std::string_view command) {
  ObjectReader r(j, "config");
  if (!r.has("version")) throw ConfigError("config.version: missing");
  std::uint64_t version = 0;
  if (!j.at("version").is_number_integer()) {
    throw ConfigError("config.version: expected an integer");
  }
  r.read("version", version);
  if (version != kConfigVersion) {
    throw ConfigError("config.version: unsupported version " + std::to_string(version));
  }
  std::string cmd(command);
  r.read("command", cmd);
  if (cmd != command) {
    throw ConfigError("config.command: config is for '" + cmd + "', not '" +
                      std::string(command) + "'");
  }
  return r;
}

json header(std::string_view command) {
  return {{"version", kConfigVersion}, {"command", std::string(command)}};
}

void read_environment(ObjectReader& parent, const std::string& key,
                      EnvironmentConfig& out) {
  const json* v = parent.child(key);
  if (!v) return;
  ObjectReader r(*v, parent.path(key));
  r.read("i_fifty", out.i_fifty);
  r.read("value_model", out.value_model);
  r.read("value", out.value);
  r.finish();
  if (out.value_model != "fixed" && out.value_model != "population_mean") {
    r.fail("value_model", "expected 'fixed' or 'population_mean'");
  }
}

json environment_json(const EnvironmentConfig& e) {
  return {{"i_fifty", e.i_fifty}, {"value_model", e.value_model}, {"value", e.value}};
}

void read_strategy(ObjectReader& parent, const std::string& key, StrategyConfig& out) {
  const json* v = parent.child(key);
  if (!v) return;
  ObjectReader r(*v, parent.path(key));
  r.read("a", out.a);
  r.read("i_beta", out.i_beta);
  r.read("i_sigma", out.i_sigma);
  r.finish();
}

json strategy_json(const StrategyConfig& s) {
  return {{"a", s.a}, {"i_beta", s.i_beta}, {"i_sigma", s.i_sigma}};
}

void read_axis_fields(ObjectReader& r, AxisRange& out) {
  r.read("min", out.min);
  r.read("max", out.max);
  std::uint64_t points = out.points;
  r.read("points", points);
  out.points = static_cast<std::size_t>(points);
  std::string spacing(to_string(out.spacing));
  r.read("spacing", spacing);
  const auto parsed = parse_spacing(spacing);
  if (!parsed) r.fail("spacing", "expected 'linear' or 'log'");
  out.spacing = *parsed;
}

void read_range(ObjectReader& parent, const std::string& key, AxisRange& out) {
  const json* v = parent.child(key);
  if (!v) return;
  ObjectReader r(*v, parent.path(key));
  read_axis_fields(r, out);
  r.finish();
}

json range_json(const AxisRange& a) {
  return {{"min", a.min},
          {"max", a.max},
          {"points", static_cast<std::uint64_t>(a.points)},
          {"spacing", std::string(to_string(a.spacing))}};
}

void read_sweep_axis(ObjectReader& parent, const std::string& key, SweepAxis& out) {
  const json* v = parent.child(key);
  if (!v) return;
  ObjectReader r(*v, parent.path(key));
  std::string name(to_string(out.parameter));
  r.read("parameter", name);
  const auto parsed = parse_strategy_parameter(name);
  if (!parsed) r.fail("parameter", "expected 'a', 'i_beta' or 'i_sigma'");
  out.parameter = *parsed;
  read_axis_fields(r, out.range);
  r.finish();
}

json sweep_axis_json(const SweepAxis& a) {
  json j = range_json(a.range);
  j["parameter"] = std::string(to_string(a.parameter));
  return j;
}

void validate_positive_points(ObjectReader& r, const std::string& key,
                              std::uint64_t points, std::uint64_t minimum) {
  if (points < minimum) {
    r.fail(key, "must be at least " + std::to_string(minimum));
  }
}

}  // namespace

GameEnvironment EnvironmentConfig::build() const {
  if (value_model == "population_mean") {
    return GameEnvironment(i_fifty, PopulationMean{value});
  }
  return GameEnvironment(i_fifty, FixedValue{value});
}

AttackerStrategy StrategyConfig::build() const {
  return AttackerStrategy(a, i_beta, i_sigma);
}

const std::vector<std::string>& figure_names() {
  static const std::vector<std::string> names{
      "beta_curve",        "estimate_pdf",       "alpha_curve",
      "utility_vs_demand", "profit_vs_estimate", "profit_heatmaps"};
  return names;
}

SimulateConfig parse_simulate_config(const json& j) {
  SimulateConfig c;
  ObjectReader r = open_top(j, "simulate");
  read_strategy(r, "strategy", c.strategy);
  read_environment(r, "environment", c.environment);
  r.read("n_runs", c.n_runs);
  r.read("seed", c.seed);
  r.finish();
  validate_positive_points(r, "n_runs", c.n_runs, 1);
  return c;
}

json to_json(const SimulateConfig& c) {
  json j = header("simulate");
  j["strategy"] = strategy_json(c.strategy);
  j["environment"] = environment_json(c.environment);
  j["n_runs"] = c.n_runs;
  j["seed"] = c.seed;
  return j;
}

OptimizeConfig parse_optimize_config(const json& j) {
  OptimizeConfig c;
  ObjectReader r = open_top(j, "optimize");
  read_environment(r, "environment", c.environment);
  if (const json* box = r.child("box")) {
    ObjectReader b(*box, r.path("box"));
    read_range(b, "a", c.box.a);
    read_range(b, "i_beta", c.box.i_beta);
    read_range(b, "i_sigma", c.box.i_sigma);
    b.finish();
  }
  r.read("tolerance", c.tolerance);
  r.read("max_evaluations", c.max_evaluations);
  r.finish();
  if (!(c.tolerance > 0.0)) r.fail("tolerance", "must be positive");
  return c;
}

json to_json(const OptimizeConfig& c) {
  json j = header("optimize");
  j["environment"] = environment_json(c.environment);
  j["box"] = {{"a", range_json(c.box.a)},
              {"i_beta", range_json(c.box.i_beta)},
              {"i_sigma", range_json(c.box.i_sigma)}};
  j["tolerance"] = c.tolerance;
  j["max_evaluations"] = c.max_evaluations;
  return j;
}

SweepConfig parse_sweep_config(const json& j) {
  SweepConfig c;
  ObjectReader r = open_top(j, "sweep");
  read_environment(r, "environment", c.environment);
  read_sweep_axis(r, "x_axis", c.x_axis);
  read_sweep_axis(r, "y_axis", c.y_axis);
  read_strategy(r, "fixed", c.fixed);
  r.read("monte_carlo_runs", c.monte_carlo_runs);
  r.read("seed", c.seed);
  r.finish();
  SweepGrid{c.x_axis, c.y_axis, c.fixed.build()}.validate();
  return c;
}

json to_json(const SweepConfig& c) {
  json j = header("sweep");
  j["environment"] = environment_json(c.environment);
  j["x_axis"] = sweep_axis_json(c.x_axis);
  j["y_axis"] = sweep_axis_json(c.y_axis);
  j["fixed"] = strategy_json(c.fixed);
  j["monte_carlo_runs"] = c.monte_carlo_runs;
  j["seed"] = c.seed;
  return j;
}

TableConfig parse_table_config(const json& j) {
  TableConfig c;
  ObjectReader r = open_top(j, "table");
  r.read("table", c.table);
  read_environment(r, "environment", c.environment);
  r.finish();
  if (c.table != "strategies") r.fail("table", "unknown table '" + c.table + "'");
  return c;
}

json to_json(const TableConfig& c) {
  json j = header("table");
  j["table"] = c.table;
  j["environment"] = environment_json(c.environment);
  return j;
}

FigureConfig parse_figure_config(const json& j, const std::string& name) {
  FigureConfig c;
  c.figure = name;
  ObjectReader r = open_top(j, "figure");
  std::string named = name;
  r.read("figure", named);
  if (!name.empty() && named != name) {
    r.fail("figure", "config is for figure '" + named + "', not '" + name + "'");
  }
  c.figure = named;
  bool known = false;
  for (const auto& n : figure_names()) known = known || n == c.figure;
  if (!known) throw ConfigError("unknown figure '" + c.figure + "'");

  const json* params = r.child("params");
  r.finish();
  if (!params) return c;
  ObjectReader p(*params, "config.params");
  if (c.figure == "beta_curve") {
    auto& f = c.beta_curve;
    p.read("i_fifty_values", f.i_fifty_values);
    p.read("i_beta_max", f.i_beta_max);
    p.read("points", f.points);
    validate_positive_points(p, "points", f.points, 2);
  } else if (c.figure == "estimate_pdf") {
    auto& f = c.estimate_pdf;
    p.read("x", f.x);
    p.read("i_fifty", f.i_fifty);
    p.read("i_sigma_values", f.i_sigma_values);
    p.read("x_tilde_max", f.x_tilde_max);
    p.read("points", f.points);
    validate_positive_points(p, "points", f.points, 1);
  } else if (c.figure == "alpha_curve") {
    auto& f = c.alpha_curve;
    p.read("a_values", f.a_values);
    p.read("points", f.points);
    validate_positive_points(p, "points", f.points, 2);
  } else if (c.figure == "utility_vs_demand") {
    auto& f = c.utility_vs_demand;
    p.read("a", f.a);
    p.read("i_beta", f.i_beta);
    p.read("i_fifty", f.i_fifty);
    p.read("x", f.x);
    p.read("c_max_values", f.c_max_values);
    p.read("r_max", f.r_max);
    p.read("points", f.points);
    validate_positive_points(p, "points", f.points, 1);
  } else if (c.figure == "profit_vs_estimate") {
    auto& f = c.profit_vs_estimate;
    p.read("x", f.x);
    p.read("i_beta", f.i_beta);
    p.read("i_sigma", f.i_sigma);
    p.read("i_fifty", f.i_fifty);
    p.read("a_values", f.a_values);
    p.read("x_tilde_max", f.x_tilde_max);
    p.read("points", f.points);
    validate_positive_points(p, "points", f.points, 1);
  } else {
    auto& f = c.profit_heatmaps;
    read_environment(p, "environment", f.environment);
    read_range(p, "a", f.a);
    read_range(p, "investment", f.investment);
    p.read("monte_carlo_runs", f.monte_carlo_runs);
    p.read("seed", f.seed);
  }
  p.finish();
  return c;
}

json to_json(const FigureConfig& c) {
  json j = header("figure");
  j["figure"] = c.figure;
  json p;
  if (c.figure == "beta_curve") {
    const auto& f = c.beta_curve;
    p = {{"i_fifty_values", f.i_fifty_values},
         {"i_beta_max", f.i_beta_max},
         {"points", f.points}};
  } else if (c.figure == "estimate_pdf") {
    const auto& f = c.estimate_pdf;
    p = {{"x", f.x},
         {"i_fifty", f.i_fifty},
         {"i_sigma_values", f.i_sigma_values},
         {"x_tilde_max", f.x_tilde_max},
         {"points", f.points}};
  } else if (c.figure == "alpha_curve") {
    const auto& f = c.alpha_curve;
    p = {{"a_values", f.a_values}, {"points", f.points}};
  } else if (c.figure == "utility_vs_demand") {
    const auto& f = c.utility_vs_demand;
    p = {{"a", f.a},
         {"i_beta", f.i_beta},
         {"i_fifty", f.i_fifty},
         {"x", f.x},
         {"c_max_values", f.c_max_values},
         {"r_max", f.r_max},
         {"points", f.points}};
  } else if (c.figure == "profit_vs_estimate") {
    const auto& f = c.profit_vs_estimate;
    p = {{"x", f.x},
         {"i_beta", f.i_beta},
         {"i_sigma", f.i_sigma},
         {"i_fifty", f.i_fifty},
         {"a_values", f.a_values},
         {"x_tilde_max", f.x_tilde_max},
         {"points", f.points}};
  } else {
    const auto& f = c.profit_heatmaps;
    p = {{"environment", environment_json(f.environment)},
         {"a", range_json(f.a)},
         {"investment", range_json(f.investment)},
         {"monte_carlo_runs", f.monte_carlo_runs},
         {"seed", f.seed}};
  }
  j["params"] = std::move(p);
  return j;
}

}  // namespace ransomgame::app
