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

#ifndef RANSOMGAME_EXPECTED_PROFIT_H_
#define RANSOMGAME_EXPECTED_PROFIT_H_

#include <string_view>

#include "ransomgame/game.h"

namespace ransomgame {

enum class ProfitMethod { kClosedForm, kQuadrature, kMonteCarlo };

std::string_view to_string(ProfitMethod method);

struct ProfitEstimate {
  double value = 0.0;
  ProfitMethod method = ProfitMethod::kClosedForm;
  // Error bound for deterministic methods, standard error for Monte Carlo.
  double abs_uncertainty = 0.0;
};

// The gross multiplier
//
//   G(a, sigma) = int_0^1 y f(y; 0, sigma) dy + int_1^inf y^-a f(y; 0, sigma) dy
//
// with f the lognormal density: the expected fraction of a*beta*x/(1+a) the
// attacker collects when demands are based on an estimate x_est = x * y.
// Underestimates (y <= 1) are paid in full; overestimates are paid
// (1/y)^a of the optimal demand.
//
// Adaptive Gauss-Kronrod evaluation of the two integrals after substituting
// y = exp(sigma * u), which turns both into Gaussian-weighted integrals over
// u in [-12, 0] and [0, 12]. Throws NumericalError if the estimated error
// exceeds the relative tolerance 1e-9.
double gross_multiplier_quadrature(double a, double sigma);

// Same quantity through lognormal partial expectations:
//
//   G(a, sigma) = e^{sigma^2/2} Phi(-sigma) + e^{a^2 sigma^2/2} Phi(-a sigma)
//
// The second product is evaluated as a scaled normal tail so it stays finite
// for any a*sigma.
double gross_multiplier_closed_form(double a, double sigma);

// P(a, I_beta, I_sigma) = a beta / (a + 1) * M * G(a, sigma) - I_beta - I_sigma,
// with M the mean target value. Accepts kClosedForm and kQuadrature; Monte
// Carlo estimates come from the simulation module.
ProfitEstimate expected_profit(const AttackerStrategy& strategy,
                               const GameEnvironment& env,
                               ProfitMethod method = ProfitMethod::kClosedForm);

// Gross part of expected_profit, i.e. before investment is subtracted.
double expected_gross_profit(const AttackerStrategy& strategy,
                             const GameEnvironment& env,
                             ProfitMethod method = ProfitMethod::kClosedForm);

}  // namespace ransomgame

#endif  // RANSOMGAME_EXPECTED_PROFIT_H_
