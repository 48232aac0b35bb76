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

#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace lqs {

using Objective = std::function<double(std::span<const double>)>;

struct OptimizerOptions {
  /// Maximum number of objective evaluations, including the initial point.
  int budget = 500;
  /// Additional starts drawn uniformly from initial +- restart_spread.
  int restarts = 0;
  double restart_spread = 3.141592653589793;
  /// Half-width of the first golden-section bracket and the first simplex size.
  double initial_step = 0.5;
  /// Stop a local search once a full cycle improves the value by less than this.
  double value_tolerance = 1e-8;
  /// Nelder-Mead stops when the simplex diameter falls below this.
  double param_tolerance = 1e-9;
  std::uint64_t seed = 0;
};

struct OptimizerSample {
  int evaluation = 0;  // 1-based
  double value = 0.0;
  double best_value = 0.0;
  std::vector<double> params;
};

struct OptimizeResult {
  std::vector<double> best_params;
  double best_value = 0.0;
  int evaluations = 0;
  /// True when every local search ended on tolerance rather than budget.
  bool converged = false;
  std::vector<OptimizerSample> trace;
};

/// Coordinate-wise golden-section cycles followed by a Nelder-Mead polish,
/// repeated from (1 + restarts) seeded starting points. The result is the
/// best evaluated point, so it is never worse than the initial one.
OptimizeResult minimize(const Objective& f, std::vector<double> initial,
                        const OptimizerOptions& options = {});

}  // namespace lqs
