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

#include "ransomgame/optimizer.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ransomgame/errors.h"
#include "ransomgame/expected_profit.h"
#include "ransomgame/parallel.h"

namespace ransomgame {
namespace {

constexpr double kReflection = 1.0;
constexpr double kExpansion = 2.0;
constexpr double kContraction = 0.5;
constexpr double kShrink = 0.5;

double clamp_to(double v, double lo, double hi) { return std::clamp(v, lo, hi); }

std::array<double, 3> as_point(const AttackerStrategy& s) {
  return {s.aggression(), s.reliability_investment(), s.estimation_investment()};
}

// Lexicographic order on (a, I_beta, I_sigma).
bool lexicographically_less(const AttackerStrategy& l, const AttackerStrategy& r) {
  return as_point(l) < as_point(r);
}

double closed_form_profit(const GameEnvironment& env, const AttackerStrategy& s) {
  return expected_profit(s, env, ProfitMethod::kClosedForm).value;
}

StrategyOptimum run_refinement(const GameEnvironment& env,
                               const AttackerStrategy& start,
                               const std::array<double, 3>& step,
                               const OptimizerOptions& options,
                               std::size_t prior_evaluations) {
  const SearchBox& box = options.box;
  const std::array<double, 3> lower{box.a.min, box.i_beta.min, box.i_sigma.min};
  const std::array<double, 3> upper{box.a.max, box.i_beta.max, box.i_sigma.max};

  NelderMeadOptions nm;
  nm.tolerance = options.tolerance;
  nm.max_evaluations = options.max_evaluations;
  nm.keep_trace = options.keep_trace;

  const auto start_point = as_point(start);
  const NelderMeadResult r = nelder_mead_minimize(
      [&env](std::span<const double> p) {
        return -closed_form_profit(env, AttackerStrategy(p[0], p[1], p[2]));
      },
      {start_point.begin(), start_point.end()}, step, lower, upper, nm);

  AttackerStrategy best(r.point[0], r.point[1], r.point[2]);
  StrategyOptimum out{best, closed_form_profit(env, best),
                      prior_evaluations + r.evaluations, r.converged, {}};
  for (const auto& [point, value] : r.trace) {
    out.trace.push_back({{point[0], point[1], point[2]}, -value});
  }
  return out;
}

}  // namespace

std::string_view to_string(StrategyParameter p) {
  switch (p) {
    case StrategyParameter::kAggression:
      return "a";
    case StrategyParameter::kReliabilityInvestment:
      return "i_beta";
    case StrategyParameter::kEstimationInvestment:
      return "i_sigma";
  }
  return "unknown";
}

std::optional<StrategyParameter> parse_strategy_parameter(std::string_view name) {
  if (name == "a") return StrategyParameter::kAggression;
  if (name == "i_beta") return StrategyParameter::kReliabilityInvestment;
  if (name == "i_sigma") return StrategyParameter::kEstimationInvestment;
  return std::nullopt;
}

std::string_view to_string(Spacing s) {
  return s == Spacing::kLog ? "log" : "linear";
}

std::optional<Spacing> parse_spacing(std::string_view name) {
  if (name == "linear") return Spacing::kLinear;
  if (name == "log") return Spacing::kLog;
  return std::nullopt;
}

void AxisRange::validate() const {
  if (!std::isfinite(min) || !std::isfinite(max) || !(min < max)) {
    throw ConfigError("axis range requires finite min < max");
  }
  if (points < 2) throw ConfigError("axis range requires at least 2 points");
  if (spacing == Spacing::kLog && !(min > 0.0)) {
    throw ConfigError("log-spaced axis requires min > 0");
  }
}

std::vector<double> AxisRange::values() const {
  validate();
  std::vector<double> out(points);
  const double last = static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) {
    const double t = static_cast<double>(i) / last;
    out[i] = spacing == Spacing::kLog
                 ? std::exp(std::log(min) + t * (std::log(max) - std::log(min)))
                 : min + t * (max - min);
  }
  out.front() = min;
  out.back() = max;
  return out;
}

double AxisRange::first_step() const {
  const auto v = values();
  return v[1] - v[0];
}

void SearchBox::validate() const {
  a.validate();
  i_beta.validate();
  i_sigma.validate();
  if (!(a.min > 0.0)) throw ConfigError("search box: a must be positive");
  if (i_beta.min < 0.0 || i_sigma.min < 0.0) {
    throw ConfigError("search box: investments must be non-negative");
  }
}

const AxisRange& SearchBox::axis(StrategyParameter p) const {
  switch (p) {
    case StrategyParameter::kAggression:
      return a;
    case StrategyParameter::kReliabilityInvestment:
      return i_beta;
    case StrategyParameter::kEstimationInvestment:
      return i_sigma;
  }
  return a;
}

bool SearchBox::contains(const AttackerStrategy& s) const {
  auto in = [](const AxisRange& r, double v) { return v >= r.min && v <= r.max; };
  return in(a, s.aggression()) && in(i_beta, s.reliability_investment()) &&
         in(i_sigma, s.estimation_investment());
}

NelderMeadResult nelder_mead_minimize(
    const std::function<double(std::span<const double>)>& objective,
    std::vector<double> start, std::span<const double> step,
    std::span<const double> lower, std::span<const double> upper,
    const NelderMeadOptions& options) {
  const std::size_t n = start.size();
  if (n == 0 || step.size() != n || lower.size() != n || upper.size() != n) {
    throw ConfigError("nelder_mead: dimension mismatch");
  }
  if (!(options.tolerance > 0.0)) {
    throw ConfigError("nelder_mead: tolerance must be positive");
  }

  using Point = std::vector<double>;
  std::size_t evaluations = 0;
  auto project = [&](Point p) {
    for (std::size_t i = 0; i < n; ++i) p[i] = clamp_to(p[i], lower[i], upper[i]);
    return p;
  };
  auto evaluate = [&](const Point& p) {
    ++evaluations;
    return objective(p);
  };
  // c + coeff * (p - c)
  auto along = [n](const Point& c, const Point& p, double coeff) {
    Point out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = c[i] + coeff * (p[i] - c[i]);
    return out;
  };

  std::vector<Point> vertex;
  vertex.push_back(project(std::move(start)));
  for (std::size_t i = 0; i < n; ++i) {
    Point p = vertex.front();
    p[i] += step[i];
    p = project(p);
    if (p[i] == vertex.front()[i]) {
      p[i] = vertex.front()[i] - step[i];
      p = project(p);
    }
    vertex.push_back(p);
  }
  std::vector<double> value(n + 1);
  for (std::size_t i = 0; i <= n; ++i) value[i] = evaluate(vertex[i]);

  NelderMeadResult result;
  std::vector<std::size_t> order(n + 1);
  bool converged = false;
  while (true) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t l, std::size_t r) { return value[l] < value[r]; });
    {
      std::vector<Point> v2;
      std::vector<double> f2;
      for (std::size_t k : order) {
        v2.push_back(vertex[k]);
        f2.push_back(value[k]);
      }
      vertex.swap(v2);
      value.swap(f2);
    }
    if (options.keep_trace) result.trace.emplace_back(vertex.front(), value.front());

    converged = true;
    for (std::size_t i = 0; i < n && converged; ++i) {
      double lo = vertex[0][i], hi = vertex[0][i];
      for (const Point& p : vertex) {
        lo = std::min(lo, p[i]);
        hi = std::max(hi, p[i]);
      }
      converged = hi - lo < options.tolerance;
    }
    if (converged || evaluations >= options.max_evaluations) break;

    Point centroid(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) centroid[i] += vertex[k][i];
    }
    for (double& c : centroid) c /= static_cast<double>(n);

    const Point& worst = vertex[n];
    const Point reflected = project(along(centroid, worst, -kReflection));
    const double f_reflected = evaluate(reflected);

    if (f_reflected < value[0]) {
      const Point expanded = project(along(centroid, worst, -kExpansion));
      const double f_expanded = evaluate(expanded);
      if (f_expanded < f_reflected) {
        vertex[n] = expanded;
        value[n] = f_expanded;
      } else {
        vertex[n] = reflected;
        value[n] = f_reflected;
      }
      continue;
    }
    if (f_reflected < value[n - 1]) {
      vertex[n] = reflected;
      value[n] = f_reflected;
      continue;
    }

    bool accepted = false;
    if (f_reflected < value[n]) {
      const Point outside = project(along(centroid, reflected, kContraction));
      const double f_outside = evaluate(outside);
      if (f_outside <= f_reflected) {
        vertex[n] = outside;
        value[n] = f_outside;
        accepted = true;
      }
    } else {
      const Point inside = project(along(centroid, worst, kContraction));
      const double f_inside = evaluate(inside);
      if (f_inside < value[n]) {
        vertex[n] = inside;
        value[n] = f_inside;
        accepted = true;
      }
    }
    if (!accepted) {
      for (std::size_t k = 1; k <= n; ++k) {
        vertex[k] = along(vertex[0], vertex[k], kShrink);
        value[k] = evaluate(vertex[k]);
      }
    }
  }

  result.point = vertex.front();
  result.value = value.front();
  result.evaluations = evaluations;
  result.converged = converged;
  return result;
}

StrategyOptimum maximize_profit(const GameEnvironment& env,
                                const OptimizerOptions& options) {
  options.box.validate();
  const auto as = options.box.a.values();
  const auto bs = options.box.i_beta.values();
  const auto ss = options.box.i_sigma.values();
  const std::size_t nb = bs.size(), ns = ss.size();

  std::vector<double> grid(as.size() * nb * ns);
  parallel_for(as.size(), options.workers, [&](std::size_t ia) {
    for (std::size_t ib = 0; ib < nb; ++ib) {
      for (std::size_t is = 0; is < ns; ++is) {
        grid[(ia * nb + ib) * ns + is] =
            closed_form_profit(env, AttackerStrategy(as[ia], bs[ib], ss[is]));
      }
    }
  });

  // Axes ascend, so the first maximum in index order is the lexicographically
  // smallest strategy among ties.
  std::size_t best = 0;
  for (std::size_t k = 1; k < grid.size(); ++k) {
    if (grid[k] > grid[best]) best = k;
  }
  const std::size_t ia = best / (nb * ns);
  const std::size_t ib = (best / ns) % nb;
  const std::size_t is = best % ns;

  auto cell = [](const std::vector<double>& axis, std::size_t i) {
    return i + 1 < axis.size() ? axis[i + 1] - axis[i] : axis[i - 1] - axis[i];
  };
  const std::array<double, 3> step{cell(as, ia), cell(bs, ib), cell(ss, is)};

  return run_refinement(env, AttackerStrategy(as[ia], bs[ib], ss[is]), step,
                        options, grid.size());
}

StrategyOptimum refine_from(const GameEnvironment& env,
                            const AttackerStrategy& start,
                            const OptimizerOptions& options) {
  options.box.validate();
  const SearchBox& box = options.box;
  const AttackerStrategy clamped(
      clamp_to(start.aggression(), box.a.min, box.a.max),
      clamp_to(start.reliability_investment(), box.i_beta.min, box.i_beta.max),
      clamp_to(start.estimation_investment(), box.i_sigma.min, box.i_sigma.max));
  const std::array<double, 3> step{box.a.first_step(), box.i_beta.first_step(),
                                   box.i_sigma.first_step()};
  return run_refinement(env, clamped, step, options, 0);
}

void SweepGrid::validate() const {
  x_axis.range.validate();
  y_axis.range.validate();
  if (x_axis.parameter == y_axis.parameter) {
    throw ConfigError("sweep grid axes must vary different parameters");
  }
  auto check = [](const SweepAxis& axis) {
    if (axis.parameter == StrategyParameter::kAggression && !(axis.range.min > 0.0)) {
      throw ConfigError("sweep axis a must be positive");
    }
    if (axis.parameter != StrategyParameter::kAggression && axis.range.min < 0.0) {
      throw ConfigError("sweep axis investments must be non-negative");
    }
  };
  check(x_axis);
  check(y_axis);
}

AttackerStrategy SweepGrid::strategy_at(double x, double y) const {
  auto p = as_point(base);
  p[static_cast<std::size_t>(x_axis.parameter)] = x;
  p[static_cast<std::size_t>(y_axis.parameter)] = y;
  return AttackerStrategy(p[0], p[1], p[2]);
}

ProfitSurface profit_surface(const GameEnvironment& env, const SweepGrid& grid,
                             unsigned workers) {
  grid.validate();
  ProfitSurface s;
  s.xs = grid.x_axis.range.values();
  s.ys = grid.y_axis.range.values();
  const std::size_t nx = s.xs.size();
  s.values.resize(nx * s.ys.size());
  parallel_for(s.ys.size(), workers, [&](std::size_t iy) {
    for (std::size_t ix = 0; ix < nx; ++ix) {
      s.values[iy * nx + ix] =
          closed_form_profit(env, grid.strategy_at(s.xs[ix], s.ys[iy]));
    }
  });

  bool have = false;
  for (std::size_t iy = 0; iy < s.ys.size(); ++iy) {
    for (std::size_t ix = 0; ix < nx; ++ix) {
      const double v = s.at(ix, iy);
      const bool better =
          !have || v > s.argmax.profit ||
          (v == s.argmax.profit &&
           lexicographically_less(grid.strategy_at(s.xs[ix], s.ys[iy]),
                                  grid.strategy_at(s.argmax.x, s.argmax.y)));
      if (better) {
        s.argmax = {ix, iy, s.xs[ix], s.ys[iy], v};
        have = true;
      }
    }
  }
  s.zero_contours = contour_lines(s.xs, s.ys, s.values, 0.0);
  return s;
}

}  // namespace ransomgame
