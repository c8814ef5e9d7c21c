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

#ifndef RANSOMGAME_OPTIMIZER_H_
#define RANSOMGAME_OPTIMIZER_H_

// Search for the attacker's most profitable strategy (a, I_beta, I_sigma) and
// profit surfaces over two of the three strategy parameters. Everything here
// evaluates the closed-form expected profit; simulation never enters the
// search loop.

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ransomgame/game.h"

namespace ransomgame {

enum class StrategyParameter { kAggression, kReliabilityInvestment, kEstimationInvestment };

// "a", "i_beta", "i_sigma".
std::string_view to_string(StrategyParameter p);
std::optional<StrategyParameter> parse_strategy_parameter(std::string_view name);

enum class Spacing { kLinear, kLog };

std::string_view to_string(Spacing s);
std::optional<Spacing> parse_spacing(std::string_view name);

struct AxisRange {
  double min = 0.0;
  double max = 1.0;
  std::size_t points = 2;
  Spacing spacing = Spacing::kLinear;

  // Throws ConfigError unless min < max, both finite, points >= 2 and, for
  // log spacing, min > 0.
  void validate() const;
  // Node coordinates; the first and last equal min and max exactly.
  std::vector<double> values() const;
  // Distance between the first two nodes.
  double first_step() const;
};

// Search region and coarse-grid resolution for maximize_profit. Defaults: a
// log-spaced over [0.1, 20], both investments linear over [0.001, 0.5], 64
// points per axis.
struct SearchBox {
  AxisRange a{0.1, 20.0, 64, Spacing::kLog};
  AxisRange i_beta{0.001, 0.5, 64, Spacing::kLinear};
  AxisRange i_sigma{0.001, 0.5, 64, Spacing::kLinear};

  void validate() const;
  const AxisRange& axis(StrategyParameter p) const;
  bool contains(const AttackerStrategy& s) const;
};

struct OptimizerOptions {
  SearchBox box;
  // Simplex refinement stops once every coordinate's spread across the
  // simplex vertices is below this.
  double tolerance = 1e-5;
  std::size_t max_evaluations = 20000;
  unsigned workers = 1;
  bool keep_trace = false;
};

struct SearchStep {
  std::array<double, 3> point;  // (a, I_beta, I_sigma)
  double profit;
};

struct StrategyOptimum {
  AttackerStrategy strategy;
  double profit;
  std::size_t evaluations;
  bool converged;
  // Best vertex after each simplex iteration, when requested.
  std::vector<SearchStep> trace;
};

// Coarse grid scan of the box, then simplex refinement from the best node.
// Grid ties go to the lexicographically smallest (a, I_beta, I_sigma).
// Throws ConfigError for a degenerate box.
StrategyOptimum maximize_profit(const GameEnvironment& env,
                                const OptimizerOptions& options = {});

// Simplex refinement only, started at `start` (clamped into the box).
StrategyOptimum refine_from(const GameEnvironment& env,
                            const AttackerStrategy& start,
                            const OptimizerOptions& options = {});

struct NelderMeadOptions {
  double tolerance = 1e-5;
  std::size_t max_evaluations = 20000;
  bool keep_trace = false;
};

struct NelderMeadResult {
  std::vector<double> point;
  double value;
  std::size_t evaluations;
  bool converged;
  std::vector<std::pair<std::vector<double>, double>> trace;
};

// Box-constrained Nelder-Mead minimisation with reflection 1, expansion 2,
// contraction 0.5 and shrink 0.5. Trial points are projected onto the box.
// The initial simplex is `start` plus `step[i]` along each axis i.
NelderMeadResult nelder_mead_minimize(
    const std::function<double(std::span<const double>)>& objective,
    std::vector<double> start, std::span<const double> step,
    std::span<const double> lower, std::span<const double> upper,
    const NelderMeadOptions& options);

struct SweepAxis {
  StrategyParameter parameter = StrategyParameter::kAggression;
  AxisRange range;
};

// A two-parameter grid; the third parameter is taken from `base`.
struct SweepGrid {
  SweepAxis x_axis;
  SweepAxis y_axis;
  AttackerStrategy base;

  void validate() const;
  AttackerStrategy strategy_at(double x, double y) const;
};

struct Point2 {
  double x;
  double y;
  friend bool operator==(const Point2&, const Point2&) = default;
};

using Polyline = std::vector<Point2>;

struct GridNode {
  std::size_t ix = 0;
  std::size_t iy = 0;
  double x = 0.0;
  double y = 0.0;
  double profit = 0.0;
};

struct ProfitSurface {
  std::vector<double> xs;
  std::vector<double> ys;
  std::vector<double> values;  // row-major: values[iy * xs.size() + ix]
  GridNode argmax;
  std::vector<Polyline> zero_contours;

  double at(std::size_t ix, std::size_t iy) const {
    return values[iy * xs.size() + ix];
  }
};

ProfitSurface profit_surface(const GameEnvironment& env, const SweepGrid& grid,
                             unsigned workers = 1);

// Marching squares on a rectilinear grid: polylines along which the linearly
// interpolated field equals `level`. Saddle cells are resolved by the mean of
// their four corners. Open polylines end on the grid boundary; closed ones
// repeat their first point at the end.
std::vector<Polyline> contour_lines(std::span<const double> xs,
                                    std::span<const double> ys,
                                    std::span<const double> values, double level);

}  // namespace ransomgame

#endif  // RANSOMGAME_OPTIMIZER_H_
