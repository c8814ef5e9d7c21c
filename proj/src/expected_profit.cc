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

#include "ransomgame/expected_profit.h"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "ransomgame/errors.h"
#include "ransomgame/stochastics.h"

namespace ransomgame {
namespace {

// Standard-normal mass beyond 12 is below 2e-33.
constexpr double kTruncation = 12.0;
constexpr double kRelativeTolerance = 1e-9;
// Requested from the integrator; tighter than the acceptance check so the
// check only trips on genuine trouble.
constexpr double kRequestedTolerance = 1e-12;
constexpr unsigned kMaxDepth = 20;

const double kInvSqrtTwoPi = 1.0 / std::sqrt(2.0 * std::numbers::pi);

void check_inputs(double a, double sigma) {
  if (!std::isfinite(a) || !(a > 0.0)) {
    throw DomainError("gross multiplier: aggression must be positive");
  }
  if (!(sigma > 0.0 && sigma <= 1.0)) {
    throw DomainError("gross multiplier: sigma must lie in (0, 1]");
  }
}

double standard_normal_density(double u) {
  return kInvSqrtTwoPi * std::exp(-0.5 * u * u);
}

struct QuadratureResult {
  double value;
  double error;
};

QuadratureResult integrate_gross_multiplier(double a, double sigma) {
  using Integrator = boost::math::quadrature::gauss_kronrod<double, 15>;
  double err_under = 0.0;
  double err_over = 0.0;
  // y <= 1: the demand is below the defender's limit and is paid in full.
  const double under = Integrator::integrate(
      [sigma](double u) { return std::exp(sigma * u) * standard_normal_density(u); },
      -kTruncation, 0.0, kMaxDepth, kRequestedTolerance, &err_under);
  // y > 1: only the optimal counteroffer is paid, with probability y^-a.
  const double over = Integrator::integrate(
      [a, sigma](double u) {
        return std::exp(-a * sigma * u) * standard_normal_density(u);
      },
      0.0, kTruncation, kMaxDepth, kRequestedTolerance, &err_over);
  return {under + over, err_under + err_over};
}

}  // namespace

std::string_view to_string(ProfitMethod method) {
  switch (method) {
    case ProfitMethod::kClosedForm:
      return "closed_form";
    case ProfitMethod::kQuadrature:
      return "quadrature";
    case ProfitMethod::kMonteCarlo:
      return "monte_carlo";
  }
  return "unknown";
}

double gross_multiplier_quadrature(double a, double sigma) {
  check_inputs(a, sigma);
  const QuadratureResult r = integrate_gross_multiplier(a, sigma);
  if (!std::isfinite(r.value) || r.error > kRelativeTolerance * std::abs(r.value)) {
    std::ostringstream msg;
    msg << "gross multiplier quadrature did not converge: a=" << a
        << " sigma=" << sigma << " value=" << r.value
        << " error_estimate=" << r.error << " max_depth=" << kMaxDepth;
    throw NumericalError(msg.str());
  }
  return r.value;
}

double gross_multiplier_closed_form(double a, double sigma) {
  check_inputs(a, sigma);
  return scaled_normal_tail(sigma) + scaled_normal_tail(a * sigma);
}

double expected_gross_profit(const AttackerStrategy& strategy,
                             const GameEnvironment& env, ProfitMethod method) {
  const double a = strategy.aggression();
  const DerivedParameters p = derive_parameters(strategy, env);
  double multiplier = 0.0;
  switch (method) {
    case ProfitMethod::kClosedForm:
      multiplier = gross_multiplier_closed_form(a, p.sigma);
      break;
    case ProfitMethod::kQuadrature:
      multiplier = gross_multiplier_quadrature(a, p.sigma);
      break;
    case ProfitMethod::kMonteCarlo:
      throw DomainError(
          "expected_profit: Monte Carlo estimates come from run_batch");
  }
  return a * p.beta / (a + 1.0) * env.mean_value() * multiplier;
}

ProfitEstimate expected_profit(const AttackerStrategy& strategy,
                               const GameEnvironment& env,
                               ProfitMethod method) {
  const double gross = expected_gross_profit(strategy, env, method);
  ProfitEstimate out;
  out.value = gross - strategy.total_investment();
  out.method = method;
  const double rounding = 8.0 * std::numeric_limits<double>::epsilon() *
                          (gross + strategy.total_investment());
  out.abs_uncertainty = method == ProfitMethod::kQuadrature
                            ? kRelativeTolerance * gross + rounding
                            : rounding;
  return out;
}

}  // namespace ransomgame
