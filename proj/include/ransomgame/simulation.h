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

#ifndef RANSOMGAME_SIMULATION_H_
#define RANSOMGAME_SIMULATION_H_

// Agent-based Monte Carlo of the negotiation game. Each run:
//   1. the attacker pays I_beta + I_sigma, draws an estimate x_est of the data
//      value and demands R = a beta x_est / (1 + a);
//   2. the defender, who knows x, counteroffers C = min(R, a beta x / (1 + a));
//   3. if C < R the attacker walks away with probability 1 - (C/R)^a;
//   4. otherwise C is paid and the decryptor handed over;
//   5. decryption succeeds with probability beta.
// Aggression and decryption are Bernoulli draws, not expectations.

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "ransomgame/expected_profit.h"
#include "ransomgame/game.h"
#include "ransomgame/stochastics.h"

namespace ransomgame {

// Everything drawn or decided during one run.
struct RunRecord {
  std::uint64_t run_index = 0;
  double x = 0.0;
  double x_tilde = 0.0;
  double alpha = 0.0;  // aggression probability at the counteroffer played
  bool aggressive = false;
  bool decrypted = false;
  NegotiationOutcome outcome;
};

// Plays one game on the stream identified by `seed`. The data value is the
// environment's mean value (x for FixedValue, M for PopulationMean). Every run
// consumes exactly three uniforms, in the order: estimate, aggression,
// decryption.
RunRecord play_single(const AttackerStrategy& strategy,
                      const GameEnvironment& env, SeedSpec seed);

NegotiationOutcome run_single(const AttackerStrategy& strategy,
                              const GameEnvironment& env, SeedSpec seed);

struct SimulationConfig {
  AttackerStrategy strategy;
  GameEnvironment environment;
  std::uint64_t n_runs = 10000;
  std::uint64_t master_seed = 0;
  bool keep_trace = false;
};

struct SimulationReport {
  std::uint64_t n_runs = 0;
  double mean_attacker_profit = 0.0;
  // Absent for a single run.
  std::optional<double> std_error_attacker_profit;
  double mean_defender_utility = 0.0;
  std::array<std::uint64_t, kOutcomeKindCount> outcome_counts{};

  // Runs with C < R, the aggressive rejections among them, and the sum of
  // alpha and alpha (1 - alpha) over them.
  std::uint64_t contested_runs = 0;
  std::uint64_t aggressive_runs = 0;
  double alpha_sum = 0.0;
  double alpha_variance_sum = 0.0;
  // Runs where a payment was made, and how many of those decrypted.
  std::uint64_t paid_runs = 0;
  std::uint64_t decrypted_runs = 0;

  std::vector<RunRecord> per_run_records;

  std::uint64_t count(OutcomeKind kind) const {
    return outcome_counts[static_cast<std::size_t>(kind)];
  }
};

// Runs config.n_runs independent games; run i uses stream
// (config.master_seed, i). Results are bit-identical for any worker count:
// runs are grouped into fixed blocks whose statistics are merged in block
// order.
SimulationReport run_batch(const SimulationConfig& config, unsigned workers = 1);

// Mean attacker profit tagged as a Monte Carlo estimate.
ProfitEstimate to_profit_estimate(const SimulationReport& report);

// Writes the per-run trace with columns run_index, x, x_tilde, R, C, alpha,
// aggressive, decrypted, attacker_payoff, defender_payoff.
void write_trace_csv(std::ostream& out, const std::vector<RunRecord>& records);

}  // namespace ransomgame

#endif  // RANSOMGAME_SIMULATION_H_
