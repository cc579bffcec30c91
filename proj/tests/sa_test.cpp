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

#include <cmath>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "qpart/oracle.hpp"
#include "qpart/sa.hpp"
#include "support.hpp"

using namespace qpart;

namespace {

// Q=3, T=2 on a two-node path, CX (0,1) then (1,2): enumeration over all
// 64 matrices puts the optimum at 1 (one remote CX is unavoidable).
struct TinyInstance {
  Network net = make_network(custom_topology({{0, 1}}), {2, 2});
  LayeredCircuit lc = testsupport::make_layered(3, {{{0, 1}}, {{1, 2}}});
};

}  // namespace

TEST_CASE("acceptance probability follows the two-branch form") {
  REQUIRE(acceptance_probability(5, 10, 1) == 1.0);
  REQUIRE(acceptance_probability(7, 7, 0.5) == 1.0);
  REQUIRE_THAT(acceptance_probability(11, 10, 1),
               Catch::Matchers::WithinAbs(std::exp(-1.0), 1e-9));

  // dense grid against the closed form
  for (double gap = -5.0; gap <= 5.0; gap += 1.0)
    for (double temp : {0.01, 0.1, 1.0, 10.0, 100.0}) {
      double n = 10.0 + gap, c = 10.0;
      double expected = n < c ? 1.0 : std::exp(-(n - c) / temp);
      REQUIRE_THAT(acceptance_probability(n, c, temp),
                   Catch::Matchers::WithinAbs(expected, 1e-9));
    }
}

TEST_CASE("temperature decays geometrically along the trace") {
  TinyInstance tiny;
  SaConfig cfg;
  cfg.max_iterations = 50;
  cfg.seed = 3;
  SolverResult r = run_sa(tiny.lc, tiny.net, cfg);
  REQUIRE(r.record.trace.size() == 51);
  REQUIRE(r.record.trace[0].temperature == cfg.initial_temp);
  for (std::size_t i = 1; i < r.record.trace.size(); ++i)
    REQUIRE(r.record.trace[i].temperature ==
            r.record.trace[i - 1].temperature * cfg.cooling_rate);
  REQUIRE_THAT(r.record.trace.back().temperature,
               Catch::Matchers::WithinRel(
                   cfg.initial_temp * std::pow(cfg.cooling_rate, 50), 1e-12));
}

TEST_CASE("best cost never increases and the final matches the trace") {
  TinyInstance tiny;
  SaConfig cfg;
  cfg.max_iterations = 2000;
  cfg.seed = 11;
  SolverResult r = run_sa(tiny.lc, tiny.net, cfg);
  for (std::size_t i = 1; i < r.record.trace.size(); ++i)
    REQUIRE(r.record.trace[i].best_cost <= r.record.trace[i - 1].best_cost);
  REQUIRE(r.record.final_cost.total == r.record.trace.back().best_cost);
  REQUIRE(cost(r.best, tiny.lc, tiny.net) == r.record.final_cost);
}

TEST_CASE("identical seeds give bit-identical runs") {
  TinyInstance tiny;
  SaConfig cfg;
  cfg.max_iterations = 500;
  cfg.seed = 21;
  SolverResult a = run_sa(tiny.lc, tiny.net, cfg);
  SolverResult b = run_sa(tiny.lc, tiny.net, cfg);
  REQUIRE(a.best == b.best);
  REQUIRE(a.record.trace.size() == b.record.trace.size());
  for (std::size_t i = 0; i < a.record.trace.size(); ++i) {
    REQUIRE(a.record.trace[i].iteration == b.record.trace[i].iteration);
    REQUIRE(a.record.trace[i].current_cost == b.record.trace[i].current_cost);
    REQUIRE(a.record.trace[i].best_cost == b.record.trace[i].best_cost);
    REQUIRE(a.record.trace[i].temperature == b.record.trace[i].temperature);
  }

  cfg.seed = 22;
  SolverResult c = run_sa(tiny.lc, tiny.net, cfg);
  bool same = true;
  for (std::size_t i = 0; i < a.record.trace.size() && same; ++i)
    same = a.record.trace[i].current_cost == c.record.trace[i].current_cost;
  REQUIRE_FALSE(same);
}

TEST_CASE("frozen search only ever walks downhill or sideways") {
  TinyInstance tiny;
  SaConfig cfg;
  cfg.initial_temp = 1e-300;
  cfg.max_iterations = 800;
  cfg.seed = 5;
  cfg.init_mode = InitMode::uniform;
  SolverResult r = run_sa(tiny.lc, tiny.net, cfg);
  for (std::size_t i = 1; i < r.record.trace.size(); ++i)
    REQUIRE(r.record.trace[i].current_cost <=
            r.record.trace[i - 1].current_cost);
}

TEST_CASE("annealing solves the tiny instance to optimality") {
  TinyInstance tiny;
  const OracleResult oracle = brute_force_optimum(tiny.lc, tiny.net);
  REQUIRE(oracle.min_cost == 1);

  int hits = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    SaConfig cfg;
    cfg.max_iterations = 5000;
    cfg.seed = seed;
    SolverResult r = run_sa(tiny.lc, tiny.net, cfg);
    REQUIRE(r.record.final_cost.total >= oracle.min_cost);
    if (r.record.final_cost.total == oracle.min_cost) ++hits;
  }
  REQUIRE(hits >= 18);
}

TEST_CASE("feasible start means a penalty-free first row") {
  Rng rng(1);
  Network net = testsupport::random_network(rng, 4, 3, 6);
  LayeredCircuit lc = testsupport::random_layered(rng, 6, 4);
  SaConfig cfg;
  cfg.max_iterations = 1;
  cfg.seed = 9;
  SolverResult r = run_sa(lc, net, cfg);
  REQUIRE(r.record.trace[0].current_cost < kDefaultLambda);
}

TEST_CASE("config validation") {
  TinyInstance tiny;
  SaConfig cfg;
  cfg.max_iterations = 0;
  REQUIRE_THROWS_AS(run_sa(tiny.lc, tiny.net, cfg), Error);
  cfg.max_iterations = 10;
  cfg.cooling_rate = 1.0;
  REQUIRE_THROWS_AS(run_sa(tiny.lc, tiny.net, cfg), Error);
  cfg.cooling_rate = 0.5;
  cfg.initial_temp = 0.0;
  REQUIRE_THROWS_AS(run_sa(tiny.lc, tiny.net, cfg), Error);

  // infeasible init propagates
  Network tight = make_network(custom_topology({{0, 1}}), {1, 1});
  LayeredCircuit lc3 = testsupport::make_layered(3, {{}});
  SaConfig good;
  good.max_iterations = 5;
  REQUIRE_THROWS_AS(run_sa(lc3, tight, good), Error);
}
