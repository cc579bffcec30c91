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

#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "qpart/ea.hpp"
#include "qpart/oracle.hpp"
#include "support.hpp"

using namespace qpart;

namespace {

struct TinyInstance {
  Network net = make_network(custom_topology({{0, 1}}), {2, 2});
  LayeredCircuit lc = testsupport::make_layered(3, {{{0, 1}}, {{1, 2}}});
};

EaConfig small_config(std::int64_t generations, std::uint64_t seed) {
  EaConfig cfg;
  cfg.population_size = 50;
  cfg.offspring_per_generation = 15;
  cfg.generations = generations;
  cfg.seed = seed;
  return cfg;
}

}  // namespace

TEST_CASE("generation best never worsens under elitist replacement") {
  TinyInstance tiny;
  SolverResult r = run_ea(tiny.lc, tiny.net, small_config(200, 17));
  REQUIRE(r.record.trace.size() == 201);
  for (std::size_t i = 1; i < r.record.trace.size(); ++i) {
    REQUIRE(r.record.trace[i].best_cost <= r.record.trace[i - 1].best_cost);
    REQUIRE(r.record.trace[i].current_cost <=
            r.record.trace[i - 1].current_cost);
  }
  REQUIRE(r.record.final_cost.total == r.record.trace.back().best_cost);
  REQUIRE(cost(r.best, tiny.lc, tiny.net) == r.record.final_cost);
}

TEST_CASE("identical seeds give identical evolutions") {
  TinyInstance tiny;
  SolverResult a = run_ea(tiny.lc, tiny.net, small_config(100, 4));
  SolverResult b = run_ea(tiny.lc, tiny.net, small_config(100, 4));
  REQUIRE(a.best == b.best);
  REQUIRE(a.record.trace.size() == b.record.trace.size());
  for (std::size_t i = 0; i < a.record.trace.size(); ++i) {
    REQUIRE(a.record.trace[i].current_cost == b.record.trace[i].current_cost);
    REQUIRE(a.record.trace[i].best_cost == b.record.trace[i].best_cost);
  }
}

TEST_CASE("evolution solves the tiny instance to optimality") {
  TinyInstance tiny;
  const OracleResult oracle = brute_force_optimum(tiny.lc, tiny.net);
  REQUIRE(oracle.min_cost == 1);

  int hits = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    SolverResult r = run_ea(tiny.lc, tiny.net, small_config(500, seed));
    REQUIRE(r.record.final_cost.total >= oracle.min_cost);
    if (r.record.final_cost.total == oracle.min_cost) ++hits;
  }
  REQUIRE(hits >= 18);
}

TEST_CASE("extreme mutation rates are fine") {
  TinyInstance tiny;
  EaConfig cfg = small_config(50, 2);
  cfg.mutation_rate = 0.0;
  SolverResult never = run_ea(tiny.lc, tiny.net, cfg);
  REQUIRE(never.record.final_cost.total >= 0);
  cfg.mutation_rate = 1.0;
  SolverResult always = run_ea(tiny.lc, tiny.net, cfg);
  REQUIRE(always.record.final_cost.total >= 0);
}

TEST_CASE("the returned best is a valid schedule") {
  Rng rng(12);
  Network net = testsupport::random_network(rng, 5, 3, 7);
  LayeredCircuit lc = testsupport::random_layered(rng, 7, 5);
  EaConfig cfg = small_config(80, 3);
  SolverResult r = run_ea(lc, net, cfg);
  REQUIRE(r.best.num_qubits == 7);
  REQUIRE(r.best.num_steps == 5);
  REQUIRE_NOTHROW(validate(r.best, net));
}

TEST_CASE("ea config validation") {
  TinyInstance tiny;
  EaConfig cfg = small_config(10, 1);
  cfg.offspring_per_generation = 51;
  REQUIRE_THROWS_AS(run_ea(tiny.lc, tiny.net, cfg), Error);
  cfg = small_config(10, 1);
  cfg.population_size = 1;
  cfg.offspring_per_generation = 1;
  REQUIRE_THROWS_AS(run_ea(tiny.lc, tiny.net, cfg), Error);
  cfg = small_config(0, 1);
  REQUIRE_THROWS_AS(run_ea(tiny.lc, tiny.net, cfg), Error);
  cfg = small_config(10, 1);
  cfg.mutation_rate = 1.5;
  REQUIRE_THROWS_AS(run_ea(tiny.lc, tiny.net, cfg), Error);
}
