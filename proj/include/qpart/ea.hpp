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

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "qpart/circuit.hpp"
#include "qpart/error.hpp"
#include "qpart/network.hpp"
#include "qpart/operators.hpp"
#include "qpart/rng.hpp"
#include "qpart/run_record.hpp"
#include "qpart/sa.hpp"  // SolverResult
#include "qpart/schedule.hpp"

namespace qpart {

struct EaConfig {
  int population_size = 200;
  double mutation_rate = 0.3;
  int offspring_per_generation = 60;
  std::int64_t generations = 0;
  std::int64_t lambda = kDefaultLambda;
  PenaltyMode penalty_mode = PenaltyMode::per_qpu;
  std::uint64_t seed = 0;
  InitMode init_mode = InitMode::feasible_column;
};

inline void validate(const EaConfig& cfg) {
  if (cfg.population_size < 2)
    fail("invalid_config", "ea: population_size must be at least 2");
  if (cfg.offspring_per_generation < 1 ||
      cfg.offspring_per_generation > cfg.population_size)
    fail("invalid_config",
         "ea: offspring_per_generation must be in [1, population_size]");
  if (cfg.mutation_rate < 0.0 || cfg.mutation_rate > 1.0)
    fail("invalid_config", "ea: mutation_rate must be in [0, 1]");
  if (cfg.generations < 1)
    fail("invalid_config", "ea: generations must be at least 1");
}

/// Evolutionary algorithm with elitist replacement.
///
/// Each generation samples uniform parent pairs (two distinct individuals
/// per pair, pairs drawn with replacement), creates offspring by single-cut
/// crossover, mutates each child with probability mutation_rate, then
/// replaces the k worst individuals with the k children. The best individual
/// is never replaced, so the best-cost trace is non-increasing.
/// Deterministic for a fixed seed.
inline SolverResult run_ea(const LayeredCircuit& lc, const Network& net,
                           const EaConfig& cfg) {
  validate(cfg);
  Rng rng(cfg.seed);

  struct Individual {
    AssignmentSchedule schedule;
    std::int64_t cost = 0;
  };
  auto evaluate = [&](const AssignmentSchedule& s) {
    return cost(s, lc, net, cfg.lambda, cfg.penalty_mode).total;
  };

  std::vector<Individual> population;
  population.reserve(cfg.population_size);
  for (int i = 0; i < cfg.population_size; ++i) {
    AssignmentSchedule s =
        random_schedule(lc.num_qubits, lc.depth(), net, rng, cfg.init_mode);
    std::int64_t c = evaluate(s);
    population.push_back({std::move(s), c});
  }

  auto population_best = [&]() {
    std::size_t arg = 0;
    for (std::size_t i = 1; i < population.size(); ++i)
      if (population[i].cost < population[arg].cost) arg = i;
    return arg;
  };

  std::size_t best_index = population_best();
  AssignmentSchedule global_best = population[best_index].schedule;
  std::int64_t global_best_cost = population[best_index].cost;

  SolverResult result;
  result.record.solver_id = "ea";
  result.record.seed = cfg.seed;
  result.record.has_temperature = false;
  result.record.trace.reserve(static_cast<std::size_t>(cfg.generations) + 1);
  result.record.trace.push_back({0, global_best_cost, global_best_cost, 0.0});

  const int k = cfg.offspring_per_generation;
  std::vector<Individual> children;
  children.reserve(k);
  for (std::int64_t g = 1; g <= cfg.generations; ++g) {
    children.clear();
    for (int j = 0; j < k; ++j) {
      auto [p1, p2] = detail::distinct_pair(rng, cfg.population_size);
      AssignmentSchedule child =
          crossover(population[p1].schedule, population[p2].schedule, rng);
      if (rng.uniform01() < cfg.mutation_rate) child = mutate(child, net, rng);
      std::int64_t c = evaluate(child);
      children.push_back({std::move(child), c});
    }
    std::stable_sort(population.begin(), population.end(),
                     [](const Individual& a, const Individual& b) {
                       return a.cost < b.cost;
                     });
    for (int j = 0; j < k; ++j)
      population[population.size() - k + j] = std::move(children[j]);

    best_index = population_best();
    std::int64_t generation_best = population[best_index].cost;
    if (generation_best < global_best_cost) {
      global_best = population[best_index].schedule;
      global_best_cost = generation_best;
    }
    result.record.trace.push_back({g, generation_best, global_best_cost, 0.0});
  }

  result.best = std::move(global_best);
  result.record.final_cost =
      cost(result.best, lc, net, cfg.lambda, cfg.penalty_mode);
  return result;
}

}  // namespace qpart
