// Copyright 2026 The qpart authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <cstdint>
#include <utility>

#include "qpart/circuit.hpp"
#include "qpart/error.hpp"
#include "qpart/network.hpp"
#include "qpart/operators.hpp"
#include "qpart/rng.hpp"
#include "qpart/run_record.hpp"
#include "qpart/schedule.hpp"

namespace qpart {

struct SaConfig {
  double initial_temp = 10.0;
  double cooling_rate = 0.99;
  std::int64_t max_iterations = 0;
  std::int64_t lambda = kDefaultLambda;
  PenaltyMode penalty_mode = PenaltyMode::per_qpu;
  std::uint64_t seed = 0;
  InitMode init_mode = InitMode::feasible_column;
};

inline void validate(const SaConfig& cfg) {
  if (!(cfg.initial_temp > 0.0))
    fail("invalid_config", "sa: initial_temp must be positive");
  if (!(cfg.cooling_rate > 0.0) || !(cfg.cooling_rate < 1.0))
    fail("invalid_config", "sa: cooling_rate must be in (0, 1)");
  if (cfg.max_iterations < 1)
    fail("invalid_config", "sa: max_iterations must be at least 1");
}

/// Probability of accepting a neighbor of cost n against a current solution
/// of cost c at temperature t: 1 if n < c, exp(-(n-c)/t) otherwise.
inline double acceptance_probability(double neighbor_cost,
                                     double current_cost,
                                     double temperature) {
  if (neighbor_cost <= current_cost) return 1.0;
  return std::exp(-(neighbor_cost - current_cost) / temperature);
}

struct SolverResult {
  AssignmentSchedule best;
  RunRecord record;
};

/// Simulated annealing over assignment schedules.
///
/// Each iteration first cools the temperature, then proposes one neighbor
/// via mutate() and accepts it per acceptance_probability against a uniform
/// draw. Equal-cost neighbors are always accepted, which lets the search
/// drift across plateaus. The trace holds one row for the initial state
/// (iteration 0) and one per iteration; the best-cost column never
/// increases. Deterministic for a fixed seed.
inline SolverResult run_sa(const LayeredCircuit& lc, const Network& net,
                           const SaConfig& cfg) {
  validate(cfg);
  Rng rng(cfg.seed);
  AssignmentSchedule current =
      random_schedule(lc.num_qubits, lc.depth(), net, rng, cfg.init_mode);
  std::int64_t current_cost =
      cost(current, lc, net, cfg.lambda, cfg.penalty_mode).total;
  AssignmentSchedule best = current;
  std::int64_t best_cost = current_cost;

  SolverResult result;
  result.record.solver_id = "sa";
  result.record.seed = cfg.seed;
  result.record.has_temperature = true;
  result.record.trace.reserve(static_cast<std::size_t>(cfg.max_iterations) + 1);
  result.record.trace.push_back(
      {0, current_cost, best_cost, cfg.initial_temp});

  double temperature = cfg.initial_temp;
  for (std::int64_t i = 1; i <= cfg.max_iterations; ++i) {
    temperature *= cfg.cooling_rate;
    AssignmentSchedule neighbor = mutate(current, net, rng);
    std::int64_t neighbor_cost =
        cost(neighbor, lc, net, cfg.lambda, cfg.penalty_mode).total;
    bool accept = neighbor_cost < current_cost;
    if (!accept) {
      double p = acceptance_probability(static_cast<double>(neighbor_cost),
                                        static_cast<double>(current_cost),
                                        temperature);
      accept = p > rng.uniform01();
    }
    if (accept) {
      current = std::move(neighbor);
      current_cost = neighbor_cost;
    }
    if (current_cost < best_cost) {
      best = current;
      best_cost = current_cost;
    }
    result.record.trace.push_back({i, current_cost, best_cost, temperature});
  }

  result.best = std::move(best);
  result.record.final_cost =
      cost(result.best, lc, net, cfg.lambda, cfg.penalty_mode);
  return result;
}

}  // namespace qpart
