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

#ifndef RANSOMGAME_APP_COMMANDS_H_
#define RANSOMGAME_APP_COMMANDS_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ransomgame/app/config.h"
#include "ransomgame/app/document.h"
#include "ransomgame/game.h"
#include "ransomgame/optimizer.h"

namespace ransomgame::app {

struct NamedStrategy {
  std::string name;
  AttackerStrategy strategy;
};

// The optimal strategy (4.68, 0.091, 0.104) and six variants that halve or
// double one component.
const std::vector<NamedStrategy>& reference_strategies();

// Columns: strategy, a, i_beta, i_sigma, beta, sigma, counteroffer,
// expected_profit. The counteroffer is the defender's reply to the optimal
// demand at the mean value.
Document table_command(const TableConfig& config);

// Columns: metric, value.
Document simulate_command(const SimulateConfig& config, unsigned workers,
                          std::ostream* trace_out = nullptr);

// Columns: a, i_beta, i_sigma, beta, sigma, profit, evaluations, converged.
Document optimize_command(const OptimizeConfig& config, unsigned workers);

// Long-format surface rows; see append_surface_rows.
Document sweep_command(const SweepConfig& config, unsigned workers);

Document figure_command(const FigureConfig& config, unsigned workers);

// Columns shared by sweep and profit_heatmaps output.
std::vector<std::string> surface_columns();

// Appends one surface to `doc`:
//   kind=node            one row per grid node, index = iy * nx + ix
//   kind=argmax          the best node
//   kind=contour         zero-profit polylines in order, index = polyline id
//   kind=simulated_node  per-node Monte Carlo mean, when `simulated` is given
void append_surface_rows(Document& doc, const std::string& name,
                         const SweepGrid& grid, const ProfitSurface& surface,
                         const std::vector<double>* simulated);

// Agent-based mean profit at every node of `grid`, row-major like
// ProfitSurface::values. Node k uses master seed derive_seed(seed, k).
std::vector<double> simulated_surface(const GameEnvironment& env,
                                      const SweepGrid& grid, std::uint64_t runs,
                                      std::uint64_t seed, unsigned workers);

}  // namespace ransomgame::app

#endif  // RANSOMGAME_APP_COMMANDS_H_
