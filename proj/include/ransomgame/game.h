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

#ifndef RANSOMGAME_GAME_H_
#define RANSOMGAME_GAME_H_

// Closed-form mathematics of the one-round targeted ransomware negotiation.
//
// All monetary quantities are dimensionless fractions of a notional data
// value. The attacker picks an aggression `a` and two investments: one in the
// reliability of the decryptor, one in estimating the value of the victim's
// data. The defender answers a demand R with a counteroffer C <= R; a low
// counteroffer provokes abandonment with probability 1 - (C/R)^a.

#include <string_view>
#include <variant>

namespace ransomgame {

// The attacker's play (a, I_beta, I_sigma).
class AttackerStrategy {
 public:
  // Throws DomainError unless a > 0 and both investments are finite and >= 0.
  AttackerStrategy(double aggression, double reliability_investment,
                   double estimation_investment);

  double aggression() const { return aggression_; }
  double reliability_investment() const { return reliability_investment_; }
  double estimation_investment() const { return estimation_investment_; }

  // I_beta + I_sigma, paid whatever the outcome.
  double total_investment() const {
    return reliability_investment_ + estimation_investment_;
  }

  friend bool operator==(const AttackerStrategy&,
                         const AttackerStrategy&) = default;

 private:
  double aggression_;
  double reliability_investment_;
  double estimation_investment_;
};

// The victim's data is worth exactly x.
struct FixedValue {
  double x;
};

// Victims are drawn from a population whose data values have mean M. Only the
// mean enters the expected profit.
struct PopulationMean {
  double mean;
};

using TargetValueModel = std::variant<FixedValue, PopulationMean>;

class GameEnvironment {
 public:
  // Throws DomainError unless i_fifty > 0 and the value parameter is positive
  // and finite.
  GameEnvironment(double i_fifty, TargetValueModel value_model);

  // The investment that buys a 50% reliable decryptor.
  double i_fifty() const { return i_fifty_; }
  const TargetValueModel& value_model() const { return value_model_; }

  // x for FixedValue, M for PopulationMean.
  double mean_value() const;

  friend bool operator==(const GameEnvironment&,
                         const GameEnvironment&) = default;

 private:
  double i_fifty_;
  TargetValueModel value_model_;
};

// I_50 = 0.02 with x = 1, the reference economy used throughout.
GameEnvironment reference_environment();

struct DerivedParameters {
  double beta;   // decryption success probability, in [0, 1)
  double sigma;  // lognormal scale of the value estimate, in (0, 1]
};

DerivedParameters derive_parameters(const AttackerStrategy& strategy,
                                    const GameEnvironment& env);

// beta = I_beta / (I_beta + I_50). Zero investment gives a decryptor that
// never works; this is allowed but makes the game degenerate (C = 0).
double reliability(double i_beta, double i_fifty);

// sigma = 1 - I_sigma / (I_50 + I_sigma).
double estimate_scale(double i_sigma, double i_fifty);

// alpha = 1 - (c/r)^a for 0 <= c <= r, with 0^a = 0 so alpha(0, r, a) = 1 and
// alpha(r, r, a) = 0.
double aggression_probability(double c, double r, double a);

// a*beta*x / (1 + a): the largest counteroffer the defender will make.
double counteroffer_threshold(double x, double a, double beta);

// min(r, a*beta*x/(1+a)).
double optimal_counteroffer(double r, double x, double a, double beta);

// Defender's expected utility -(c/r)^a (c - beta*x) - x for c in [0, r].
double defender_utility(double c, double r, double x, double a, double beta);

// Attacker's expected profit for a demand r when the defender plays the
// optimal counteroffer.
double attacker_profit_piecewise(double r, double x,
                                 const AttackerStrategy& strategy,
                                 const GameEnvironment& env);

// Revenue (before investment) when the attacker demands
// a*beta*x_est/(1+a) and the defender replies optimally.
double gross_profit(double x_est, double x, double a, double beta);

// gross_profit minus I_beta + I_sigma.
double optimal_play_profit(double x_est, double x,
                           const AttackerStrategy& strategy,
                           const GameEnvironment& env);

enum class OutcomeKind {
  kAggressiveRejection,
  kDecryptionSuccess,
  kDecryptionFailure,
  kFullPaymentSuccess,
  kFullPaymentFailure,
};

inline constexpr int kOutcomeKindCount = 5;

std::string_view to_string(OutcomeKind kind);

struct NegotiationOutcome {
  double demand = 0.0;
  double counteroffer = 0.0;
  OutcomeKind kind = OutcomeKind::kAggressiveRejection;
  double attacker_payoff = 0.0;
  double defender_payoff = 0.0;
};

// Assembles an outcome with payoffs taken from the payoff table:
//   aggressive rejection   (-I, -x)
//   decryption successful  (C - I, -C)
//   decryption failed      (C - I, -x - C)
// where I = I_beta + I_sigma. Full-payment kinds use the decryption rows.
NegotiationOutcome make_outcome(double demand, double counteroffer,
                                OutcomeKind kind, double x,
                                const AttackerStrategy& strategy);

}  // namespace ransomgame

#endif  // RANSOMGAME_GAME_H_
