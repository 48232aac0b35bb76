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

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "lqs/errors.hpp"
#include "lqs/optimize.hpp"
#include "lqs/parallel.hpp"

namespace {

TEST(Minimize, QuadraticConvergesToMinimum) {
  const auto f = [](std::span<const double> p) { return (p[0] - 0.3) * (p[0] - 0.3); };
  const auto r = lqs::minimize(f, {0.0});
  EXPECT_NEAR(r.best_params[0], 0.3, 1e-6);
  EXPECT_TRUE(r.converged);
  EXPECT_LE(r.evaluations, 500);
}

TEST(Minimize, RosenbrockInTwoDimensions) {
  const auto f = [](std::span<const double> p) {
    return 100.0 * std::pow(p[1] - p[0] * p[0], 2) + std::pow(1.0 - p[0], 2);
  };
  lqs::OptimizerOptions o;
  o.budget = 4000;
  o.value_tolerance = 1e-14;
  const auto r = lqs::minimize(f, {-1.2, 1.0}, o);
  EXPECT_NEAR(r.best_params[0], 1.0, 1e-3);
  EXPECT_NEAR(r.best_params[1], 1.0, 2e-3);
}

TEST(Minimize, TraceIsMonotoneAndBudgetRespected) {
  const auto f = [](std::span<const double> p) {
    return std::sin(3.0 * p[0]) + std::cos(2.0 * p[1]) + 0.1 * (p[0] * p[0] + p[1] * p[1]);
  };
  lqs::OptimizerOptions o;
  o.budget = 150;
  o.restarts = 3;
  o.seed = 42;
  const auto r = lqs::minimize(f, {0.5, 0.5}, o);
  EXPECT_LE(r.evaluations, 150);
  ASSERT_FALSE(r.trace.empty());
  for (std::size_t i = 1; i < r.trace.size(); ++i) {
    EXPECT_LE(r.trace[i].best_value, r.trace[i - 1].best_value);
    EXPECT_EQ(r.trace[i].evaluation, r.trace[i - 1].evaluation + 1);
  }
  EXPECT_LE(r.best_value, f(std::vector<double>{0.5, 0.5}));
  EXPECT_DOUBLE_EQ(r.best_value, r.trace.back().best_value);
}

TEST(Minimize, SeededRunsAreReproducible) {
  const auto f = [](std::span<const double> p) { return std::cos(p[0]) * std::sin(p[1]) + 0.05 * p[0] * p[1]; };
  lqs::OptimizerOptions o;
  o.restarts = 4;
  o.seed = 7;
  const auto a = lqs::minimize(f, {0.1, 0.2}, o);
  const auto b = lqs::minimize(f, {0.1, 0.2}, o);
  EXPECT_EQ(a.best_params, b.best_params);
  EXPECT_EQ(a.evaluations, b.evaluations);
}

TEST(Minimize, RejectsTinyBudget) {
  const auto f = [](std::span<const double> p) { return p[0] + p[1]; };
  lqs::OptimizerOptions o;
  o.budget = 2;
  EXPECT_THROW(lqs::minimize(f, {0.0, 0.0}, o), lqs::ContractError);
}

TEST(ParallelFor, VisitsEveryIndexOnce) {
  for (int threads : {1, 3, 8}) {
    std::vector<int> hits(101, 0);
    lqs::parallel_for(hits.size(), [&](std::size_t i) { ++hits[i]; }, threads);
    for (int h : hits) EXPECT_EQ(h, 1);
  }
}

TEST(ParallelFor, PropagatesExceptions) {
  EXPECT_THROW(lqs::parallel_for(10, [](std::size_t i) {
                 if (i == 7) throw lqs::InvariantError("boom");
               }, 4),
               lqs::InvariantError);
}

}  // namespace
