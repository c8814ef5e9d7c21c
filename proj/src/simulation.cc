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

#include "ransomgame/simulation.h"

#include <cmath>
#include <limits>
#include <ostream>

#include "ransomgame/errors.h"
#include "ransomgame/format.h"
#include "ransomgame/parallel.h"

namespace ransomgame {
namespace {

// Fixed so that the merge tree, and hence every floating-point sum, does not
// depend on the number of workers.
constexpr std::uint64_t kBlockSize = 4096;

// Running mean / sum of squared deviations (Welford), mergeable (Chan et al.).
struct Moments {
  double n = 0.0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double v) {
    n += 1.0;
    const double delta = v - mean;
    mean += delta / n;
    m2 += delta * (v - mean);
  }

  void merge(const Moments& other) {
    if (other.n == 0.0) return;
    const double total = n + other.n;
    const double delta = other.mean - mean;
    mean += delta * other.n / total;
    m2 += other.m2 + delta * delta * n * other.n / total;
    n = total;
  }
};

struct BlockStats {
  Moments attacker;
  Moments defender;
  std::array<std::uint64_t, kOutcomeKindCount> counts{};
  std::uint64_t contested = 0;
  std::uint64_t aggressive = 0;
  double alpha_sum = 0.0;
  double alpha_variance_sum = 0.0;
  std::uint64_t paid = 0;
  std::uint64_t decrypted = 0;

  void add(const RunRecord& r) {
    attacker.add(r.outcome.attacker_payoff);
    defender.add(r.outcome.defender_payoff);
    ++counts[static_cast<std::size_t>(r.outcome.kind)];
    if (r.outcome.counteroffer < r.outcome.demand) {
      ++contested;
      alpha_sum += r.alpha;
      alpha_variance_sum += r.alpha * (1.0 - r.alpha);
      if (r.aggressive) ++aggressive;
    }
    if (!r.aggressive) {
      ++paid;
      if (r.decrypted) ++decrypted;
    }
  }

  void merge(const BlockStats& other) {
    attacker.merge(other.attacker);
    defender.merge(other.defender);
    for (std::size_t k = 0; k < counts.size(); ++k) counts[k] += other.counts[k];
    contested += other.contested;
    aggressive += other.aggressive;
    alpha_sum += other.alpha_sum;
    alpha_variance_sum += other.alpha_variance_sum;
    paid += other.paid;
    decrypted += other.decrypted;
  }
};

}  // namespace

RunRecord play_single(const AttackerStrategy& strategy,
                      const GameEnvironment& env, SeedSpec seed) {
  const DerivedParameters p = derive_parameters(strategy, env);
  const double a = strategy.aggression();
  const double x = env.mean_value();

  RandomStream stream(seed);
  RunRecord rec;
  rec.run_index = seed.stream_index;
  rec.x = x;
  rec.x_tilde = sample_estimate(x, p.sigma, stream);
  const double aggression_draw = stream.uniform();
  const double decryption_draw = stream.uniform();

  const double demand = counteroffer_threshold(rec.x_tilde, a, p.beta);
  const double counter = optimal_counteroffer(demand, x, a, p.beta);

  OutcomeKind kind;
  if (counter < demand) {
    rec.alpha = aggression_probability(counter, demand, a);
    rec.aggressive = aggression_draw < rec.alpha;
    if (rec.aggressive) {
      kind = OutcomeKind::kAggressiveRejection;
    } else {
      rec.decrypted = decryption_draw < p.beta;
      kind = rec.decrypted ? OutcomeKind::kDecryptionSuccess
                           : OutcomeKind::kDecryptionFailure;
    }
  } else {
    rec.decrypted = decryption_draw < p.beta;
    kind = rec.decrypted ? OutcomeKind::kFullPaymentSuccess
                         : OutcomeKind::kFullPaymentFailure;
  }
  rec.outcome = make_outcome(demand, counter, kind, x, strategy);
  return rec;
}

NegotiationOutcome run_single(const AttackerStrategy& strategy,
                              const GameEnvironment& env, SeedSpec seed) {
  return play_single(strategy, env, seed).outcome;
}

SimulationReport run_batch(const SimulationConfig& config, unsigned workers) {
  if (config.n_runs < 1) throw DomainError("run_batch: n_runs must be >= 1");

  const std::uint64_t n = config.n_runs;
  const std::uint64_t blocks = (n + kBlockSize - 1) / kBlockSize;
  std::vector<BlockStats> partial(blocks);

  SimulationReport report;
  if (config.keep_trace) report.per_run_records.resize(n);

  parallel_for(blocks, workers, [&](std::size_t b) {
    const std::uint64_t begin = b * kBlockSize;
    const std::uint64_t end = std::min(n, begin + kBlockSize);
    BlockStats stats;
    for (std::uint64_t i = begin; i < end; ++i) {
      RunRecord rec = play_single(config.strategy, config.environment,
                                  {config.master_seed, i});
      stats.add(rec);
      if (config.keep_trace) report.per_run_records[i] = rec;
    }
    partial[b] = stats;
  });

  BlockStats total;
  for (const BlockStats& s : partial) total.merge(s);

  report.n_runs = n;
  report.mean_attacker_profit = total.attacker.mean;
  if (n > 1) {
    const double variance = total.attacker.m2 / (total.attacker.n - 1.0);
    report.std_error_attacker_profit = std::sqrt(variance / total.attacker.n);
  }
  report.mean_defender_utility = total.defender.mean;
  report.outcome_counts = total.counts;
  report.contested_runs = total.contested;
  report.aggressive_runs = total.aggressive;
  report.alpha_sum = total.alpha_sum;
  report.alpha_variance_sum = total.alpha_variance_sum;
  report.paid_runs = total.paid;
  report.decrypted_runs = total.decrypted;
  return report;
}

ProfitEstimate to_profit_estimate(const SimulationReport& report) {
  ProfitEstimate est;
  est.value = report.mean_attacker_profit;
  est.method = ProfitMethod::kMonteCarlo;
  est.abs_uncertainty = report.std_error_attacker_profit.value_or(
      std::numeric_limits<double>::infinity());
  return est;
}

void write_trace_csv(std::ostream& out, const std::vector<RunRecord>& records) {
  out << "run_index,x,x_tilde,R,C,alpha,aggressive,decrypted,attacker_payoff,"
         "defender_payoff\n";
  for (const RunRecord& r : records) {
    out << r.run_index << ',' << format_float(r.x) << ','
        << format_float(r.x_tilde) << ',' << format_float(r.outcome.demand)
        << ',' << format_float(r.outcome.counteroffer) << ','
        << format_float(r.alpha) << ',' << (r.aggressive ? 1 : 0) << ','
        << (r.decrypted ? 1 : 0) << ','
        << format_float(r.outcome.attacker_payoff) << ','
        << format_float(r.outcome.defender_payoff) << '\n';
  }
}

}  // namespace ransomgame
