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

#include "ransomgame/game.h"

#include <cmath>
#include <string>

#include "ransomgame/errors.h"

namespace ransomgame {
namespace {

void require(bool ok, const char* what) {
  if (!ok) throw DomainError(what);
}

bool finite_nonnegative(double v) { return std::isfinite(v) && v >= 0.0; }
bool finite_positive(double v) { return std::isfinite(v) && v > 0.0; }

// (c/r)^a with 0^a = 0.
double ratio_power(double c, double r, double a) {
  if (c == 0.0) return 0.0;
  return std::pow(c / r, a);
}

void check_common(double x, double a, double beta) {
  require(finite_positive(x), "data value x must be positive and finite");
  require(finite_positive(a), "aggression a must be positive and finite");
  require(std::isfinite(beta) && beta >= 0.0 && beta <= 1.0,
          "reliability beta must lie in [0, 1]");
}

}  // namespace

AttackerStrategy::AttackerStrategy(double aggression,
                                   double reliability_investment,
                                   double estimation_investment)
    : aggression_(aggression),
      reliability_investment_(reliability_investment),
      estimation_investment_(estimation_investment) {
  require(finite_positive(aggression), "aggression a must be positive and finite");
  require(finite_nonnegative(reliability_investment),
          "reliability investment must be finite and non-negative");
  require(finite_nonnegative(estimation_investment),
          "estimation investment must be finite and non-negative");
}

GameEnvironment::GameEnvironment(double i_fifty, TargetValueModel value_model)
    : i_fifty_(i_fifty), value_model_(value_model) {
  require(finite_positive(i_fifty), "I_50 must be positive and finite");
  require(finite_positive(mean_value()),
          "target value must be positive and finite");
}

double GameEnvironment::mean_value() const {
  if (const auto* fixed = std::get_if<FixedValue>(&value_model_)) {
    return fixed->x;
  }
  return std::get<PopulationMean>(value_model_).mean;
}

GameEnvironment reference_environment() {
  return GameEnvironment(0.02, FixedValue{1.0});
}

DerivedParameters derive_parameters(const AttackerStrategy& strategy,
                                    const GameEnvironment& env) {
  return {reliability(strategy.reliability_investment(), env.i_fifty()),
          estimate_scale(strategy.estimation_investment(), env.i_fifty())};
}

double reliability(double i_beta, double i_fifty) {
  require(finite_nonnegative(i_beta), "I_beta must be finite and non-negative");
  require(finite_positive(i_fifty), "I_50 must be positive and finite");
  return i_beta / (i_beta + i_fifty);
}

double estimate_scale(double i_sigma, double i_fifty) {
  require(finite_nonnegative(i_sigma),
          "I_sigma must be finite and non-negative");
  require(finite_positive(i_fifty), "I_50 must be positive and finite");
  // Algebraically 1 - I_sigma/(I_50 + I_sigma); this form stays positive for
  // very large investments instead of cancelling to zero.
  return i_fifty / (i_fifty + i_sigma);
}

double aggression_probability(double c, double r, double a) {
  require(finite_positive(r), "demand r must be positive and finite");
  require(finite_positive(a), "aggression a must be positive and finite");
  require(finite_nonnegative(c) && c <= r,
          "counteroffer c must lie in [0, r]");
  return 1.0 - ratio_power(c, r, a);
}

double counteroffer_threshold(double x, double a, double beta) {
  check_common(x, a, beta);
  return a * beta * x / (1.0 + a);
}

double optimal_counteroffer(double r, double x, double a, double beta) {
  require(finite_nonnegative(r), "demand r must be finite and non-negative");
  const double threshold = counteroffer_threshold(x, a, beta);
  return r <= threshold ? r : threshold;
}

double defender_utility(double c, double r, double x, double a, double beta) {
  require(finite_positive(r), "demand r must be positive and finite");
  require(finite_nonnegative(c) && c <= r,
          "counteroffer c must lie in [0, r]");
  check_common(x, a, beta);
  return -ratio_power(c, r, a) * (c - beta * x) - x;
}

double attacker_profit_piecewise(double r, double x,
                                 const AttackerStrategy& strategy,
                                 const GameEnvironment& env) {
  require(finite_nonnegative(r), "demand r must be finite and non-negative");
  const double a = strategy.aggression();
  const double beta = derive_parameters(strategy, env).beta;
  const double threshold = counteroffer_threshold(x, a, beta);
  const double cost = strategy.total_investment();
  if (r <= threshold) return r - cost;
  return std::pow(threshold / r, a) * threshold - cost;
}

double gross_profit(double x_est, double x, double a, double beta) {
  require(finite_positive(x_est), "estimate must be positive and finite");
  check_common(x, a, beta);
  const double scale = a * beta / (1.0 + a);
  if (x_est <= x) return scale * x_est;
  return scale * x * std::pow(x / x_est, a);
}

double optimal_play_profit(double x_est, double x,
                           const AttackerStrategy& strategy,
                           const GameEnvironment& env) {
  const double beta = derive_parameters(strategy, env).beta;
  return gross_profit(x_est, x, strategy.aggression(), beta) -
         strategy.total_investment();
}

std::string_view to_string(OutcomeKind kind) {
  switch (kind) {
    case OutcomeKind::kAggressiveRejection:
      return "aggressive_rejection";
    case OutcomeKind::kDecryptionSuccess:
      return "decryption_success";
    case OutcomeKind::kDecryptionFailure:
      return "decryption_failure";
    case OutcomeKind::kFullPaymentSuccess:
      return "full_payment_success";
    case OutcomeKind::kFullPaymentFailure:
      return "full_payment_failure";
  }
  return "unknown";
}

NegotiationOutcome make_outcome(double demand, double counteroffer,
                                OutcomeKind kind, double x,
                                const AttackerStrategy& strategy) {
  require(finite_nonnegative(counteroffer) && counteroffer <= demand,
          "counteroffer must lie in [0, demand]");
  require(finite_positive(x), "data value x must be positive and finite");
  const double cost = strategy.total_investment();
  NegotiationOutcome out{demand, counteroffer, kind, 0.0, 0.0};
  switch (kind) {
    case OutcomeKind::kAggressiveRejection:
      out.attacker_payoff = -cost;
      out.defender_payoff = -x;
      break;
    case OutcomeKind::kDecryptionSuccess:
    case OutcomeKind::kFullPaymentSuccess:
      out.attacker_payoff = counteroffer - cost;
      out.defender_payoff = -counteroffer;
      break;
    case OutcomeKind::kDecryptionFailure:
    case OutcomeKind::kFullPaymentFailure:
      out.attacker_payoff = counteroffer - cost;
      out.defender_payoff = -x - counteroffer;
      break;
  }
  return out;
}

}  // namespace ransomgame
