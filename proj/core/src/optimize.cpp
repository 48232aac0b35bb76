// Copyright 2026 The LatticeQS Authors
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

#include "lqs/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <string>

#include "lqs/errors.hpp"

namespace lqs {

namespace {

constexpr double kInvPhi = 0.6180339887498949;

class Evaluator {
 public:
  Evaluator(const Objective& f, int budget, OptimizeResult& result)
      : f_(f), budget_(budget), result_(result) {}

  bool exhausted() const { return result_.evaluations >= budget_; }

  double operator()(std::span<const double> x) {
    const double v = f_(x);
    if (!std::isfinite(v)) throw InvariantError("objective returned a non-finite value");
    ++result_.evaluations;
    if (result_.trace.empty() || v < result_.best_value) {
      result_.best_value = v;
      result_.best_params.assign(x.begin(), x.end());
    }
    result_.trace.push_back({result_.evaluations, v, result_.best_value, {x.begin(), x.end()}});
    return v;
  }

 private:
  const Objective& f_;
  int budget_;
  OptimizeResult& result_;
};

// Golden-section search on coordinate i over [x_i - w, x_i + w]. Moves x_i
// only when the bracket found a strictly lower value. Returns false when the
// budget ran out.
bool golden_coordinate(Evaluator& eval, std::vector<double>& x, double& fx, std::size_t i,
                       double w, double tol) {
  const double center = x[i];
  double a = center - w;
  double b = center + w;
  auto at = [&](double v) {
    std::vector<double> y = x;
    y[i] = v;
    return eval(y);
  };
  if (eval.exhausted()) return false;
  double c = b - kInvPhi * (b - a);
  double fc = at(c);
  if (eval.exhausted()) return false;
  double d = a + kInvPhi * (b - a);
  double fd = at(d);
  double best_v = center;
  double best_f = fx;
  auto keep = [&](double v, double fv) {
    if (fv < best_f) {
      best_f = fv;
      best_v = v;
    }
  };
  keep(c, fc);
  keep(d, fd);
  while (b - a > tol) {
    if (eval.exhausted()) break;
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = at(c);
      keep(c, fc);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = at(d);
      keep(d, fd);
    }
  }
  x[i] = best_v;
  fx = best_f;
  return !eval.exhausted();
}

// Returns true when the simplex collapsed below the tolerances.
bool nelder_mead(Evaluator& eval, std::vector<double>& x, double& fx, double step,
                 const OptimizerOptions& opt) {
  const std::size_t n = x.size();
  std::vector<std::vector<double>> simplex(n + 1, x);
  std::vector<double> values(n + 1, fx);
  for (std::size_t i = 0; i < n; ++i) {
    if (eval.exhausted()) return false;
    simplex[i + 1][i] += step;
    values[i + 1] = eval(simplex[i + 1]);
  }
  std::vector<std::size_t> order(n + 1);
  auto point = [&](const std::vector<double>& from, const std::vector<double>& to, double t) {
    std::vector<double> p(n);
    for (std::size_t k = 0; k < n; ++k) p[k] = from[k] + t * (to[k] - from[k]);
    return p;
  };
  bool collapsed = false;
  while (!eval.exhausted()) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    const auto best = order.front();
    const auto worst = order.back();
    const auto second = order[n - 1];

    double diameter = 0.0;
    for (const auto& p : simplex) {
      for (std::size_t k = 0; k < n; ++k) {
        diameter = std::max(diameter, std::abs(p[k] - simplex[best][k]));
      }
    }
    if (diameter < opt.param_tolerance ||
        (values[worst] - values[best] < 1e-3 * opt.value_tolerance && diameter < 1e-6)) {
      collapsed = true;
      break;
    }

    std::vector<double> centroid(n, 0.0);
    for (std::size_t j = 0; j <= n; ++j) {
      if (j == worst) continue;
      for (std::size_t k = 0; k < n; ++k) centroid[k] += simplex[j][k] / static_cast<double>(n);
    }
    const auto reflected = point(centroid, simplex[worst], -1.0);
    const double fr = eval(reflected);
    if (fr < values[best]) {
      if (eval.exhausted()) {
        simplex[worst] = reflected;
        values[worst] = fr;
        break;
      }
      const auto expanded = point(centroid, simplex[worst], -2.0);
      const double fe = eval(expanded);
      if (fe < fr) {
        simplex[worst] = expanded;
        values[worst] = fe;
      } else {
        simplex[worst] = reflected;
        values[worst] = fr;
      }
      continue;
    }
    if (fr < values[second]) {
      simplex[worst] = reflected;
      values[worst] = fr;
      continue;
    }
    if (eval.exhausted()) break;
    const bool outside = fr < values[worst];
    const auto contracted = point(centroid, outside ? reflected : simplex[worst], 0.5);
    const double fk = eval(contracted);
    if (fk < std::min(fr, values[worst])) {
      simplex[worst] = contracted;
      values[worst] = fk;
      continue;
    }
    for (std::size_t j = 0; j <= n && !eval.exhausted(); ++j) {
      if (j == best) continue;
      simplex[j] = point(simplex[best], simplex[j], 0.5);
      values[j] = eval(simplex[j]);
    }
  }
  const auto best = static_cast<std::size_t>(
      std::min_element(values.begin(), values.end()) - values.begin());
  if (values[best] < fx) {
    x = simplex[best];
    fx = values[best];
  }
  return collapsed;
}

bool local_search(Evaluator& eval, std::vector<double> x, const OptimizerOptions& opt) {
  if (eval.exhausted()) return false;
  double fx = eval(x);
  double w = opt.initial_step;
  bool settled = false;
  for (int cycle = 0; cycle < 64 && !eval.exhausted(); ++cycle) {
    const double before = fx;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (!golden_coordinate(eval, x, fx, i, w, 1e-3 * w)) break;
    }
    if (before - fx < opt.value_tolerance) {
      if (w < 1e-3) {
        settled = true;
        break;
      }
      w *= 0.25;
    } else {
      w = std::max(w * 0.5, 1e-3);
    }
  }
  if (eval.exhausted()) return false;
  const bool collapsed = nelder_mead(eval, x, fx, std::max(w, 1e-3), opt);
  return collapsed || settled;
}

}  // namespace

OptimizeResult minimize(const Objective& f, std::vector<double> initial,
                        const OptimizerOptions& options) {
  if (initial.empty()) throw ContractError("optimizer needs at least one parameter");
  for (double v : initial) {
    if (!std::isfinite(v)) throw ContractError("optimizer initial point must be finite");
  }
  if (options.budget < static_cast<int>(initial.size()) + 1) {
    throw ContractError("optimizer budget " + std::to_string(options.budget) +
                        " is below parameter_count + 1");
  }
  if (options.restarts < 0) throw ContractError("restart count must be non-negative");

  OptimizeResult result;
  Evaluator eval(f, options.budget, result);
  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> spread(-options.restart_spread, options.restart_spread);

  bool all_converged = local_search(eval, initial, options);
  for (int r = 0; r < options.restarts && !eval.exhausted(); ++r) {
    std::vector<double> start = initial;
    for (double& v : start) v += spread(rng);
    all_converged = local_search(eval, start, options) && all_converged;
  }
  // Polish the overall best point when restarts moved elsewhere.
  if (options.restarts > 0 && !eval.exhausted()) {
    all_converged = local_search(eval, result.best_params, options) && all_converged;
  }
  result.converged = all_converged;
  return result;
}

}  // namespace lqs
