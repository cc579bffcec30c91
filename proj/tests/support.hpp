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

// Shared test helpers: independent reference implementations (kept separate
// from the library code paths they check) and random instance generators.

#pragma once

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "qpart/circuit.hpp"
#include "qpart/network.hpp"
#include "qpart/rng.hpp"
#include "qpart/schedule.hpp"

namespace testsupport {

/// Reference cost computation written directly from the objective, walking
/// the layer gate lists instead of the cached CX pairs and tallying
/// occupancy through a map.
inline qpart::CostBreakdown naive_cost(
    const qpart::AssignmentSchedule& s, const qpart::LayeredCircuit& lc,
    const qpart::Network& net, std::int64_t lambda = qpart::kDefaultLambda,
    qpart::PenaltyMode mode = qpart::PenaltyMode::per_qpu) {
  qpart::CostBreakdown b;
  for (int t = 0; t < lc.depth(); ++t)
    for (const qpart::Gate& g : lc.layers[t])
      if (g.kind == qpart::GateKind::cx)
        b.remote_cx_cost += net.dist[s.at(g.qubits[0], t)][s.at(g.qubits[1], t)];
  for (int t = 0; t + 1 < s.num_steps; ++t)
    for (int q = 0; q < s.num_qubits; ++q)
      b.teleport_cost += net.dist[s.at(q, t)][s.at(q, t + 1)];
  for (int t = 0; t < s.num_steps; ++t) {
    std::map<int, int> occupancy;
    for (int q = 0; q < s.num_qubits; ++q) ++occupancy[s.at(q, t)];
    int violating = 0;
    for (auto [node, count] : occupancy)
      if (count > net.capacities[node]) ++violating;
    if (mode == qpart::PenaltyMode::per_qpu)
      b.penalty_count += violating;
    else if (violating > 0)
      b.penalty_count += 1;
  }
  b.total = b.remote_cx_cost + b.teleport_cost + b.penalty_count * lambda;
  return b;
}

/// Reference depth: walk per-qubit frontiers over the raw gate list.
inline int naive_depth(const qpart::Circuit& c) {
  std::vector<int> frontier(c.num_qubits, 0);
  int depth = 0;
  for (const qpart::Gate& g : c.gates) {
    int layer = 0;
    for (int q : g.qubits) layer = std::max(layer, frontier[q]);
    for (int q : g.qubits) frontier[q] = layer + 1;
    depth = std::max(depth, layer + 1);
  }
  return depth;
}

/// Layered circuit built directly from per-layer CX pairs.
inline qpart::LayeredCircuit make_layered(
    int num_qubits,
    const std::vector<std::vector<std::pair<int, int>>>& cx_layers) {
  qpart::LayeredCircuit lc;
  lc.num_qubits = num_qubits;
  lc.cx_pairs = cx_layers;
  lc.layers.resize(cx_layers.size());
  for (std::size_t t = 0; t < cx_layers.size(); ++t)
    for (auto [control, target] : cx_layers[t])
      lc.layers[t].push_back(qpart::make_cx(control, target));
  return lc;
}

/// Random connected topology over n nodes: a random tree plus a few extra
/// edges.
inline qpart::Topology random_connected_topology(qpart::Rng& rng, int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < n; ++i)
    edges.emplace_back(static_cast<int>(rng.uniform_index(i)), i);
  int extra = static_cast<int>(rng.uniform_index(n));
  for (int e = 0; e < extra && n >= 2; ++e) {
    int a = static_cast<int>(rng.uniform_index(n));
    int b = static_cast<int>(rng.uniform_index(n));
    if (a != b) edges.emplace_back(a, b);
  }
  return qpart::custom_topology(std::move(edges));
}

/// Random network with capacities in [1, max_cap], resampled until the
/// total reaches min_total. max_cap is raised if the range cannot reach
/// min_total at all.
inline qpart::Network random_network(qpart::Rng& rng, int num_nodes,
                                     int max_cap, int min_total = 0) {
  max_cap = std::max(max_cap, (min_total + num_nodes - 1) / num_nodes);
  qpart::Topology topo;
  switch (num_nodes < 3 ? 1 : rng.uniform_index(3)) {
    case 0: topo = qpart::ring_topology(); break;
    case 1: topo = num_nodes >= 2 ? qpart::star_topology()
                                  : random_connected_topology(rng, num_nodes);
            break;
    default: topo = random_connected_topology(rng, num_nodes); break;
  }
  if (num_nodes == 1) topo = qpart::custom_topology({});
  std::vector<int> caps(num_nodes);
  for (;;) {
    int sum = 0;
    for (int& c : caps) {
      c = rng.uniform_int(1, max_cap);
      sum += c;
    }
    if (sum >= min_total) break;
  }
  return qpart::make_network(topo, caps);
}

/// Random layered circuit: each layer holds a random non-overlapping set of
/// CX pairs over the given qubit count.
inline qpart::LayeredCircuit random_layered(qpart::Rng& rng, int num_qubits,
                                            int num_steps,
                                            double cx_density = 0.7) {
  std::vector<std::vector<std::pair<int, int>>> cx_layers(num_steps);
  std::vector<int> perm(num_qubits);
  for (int q = 0; q < num_qubits; ++q) perm[q] = q;
  for (int t = 0; t < num_steps; ++t) {
    rng.shuffle(perm);
    for (int i = 0; i + 1 < num_qubits; i += 2)
      if (rng.uniform01() < cx_density)
        cx_layers[t].emplace_back(perm[i], perm[i + 1]);
  }
  return make_layered(num_qubits, cx_layers);
}

/// Random schedule with every cell drawn uniformly.
inline qpart::AssignmentSchedule random_cells(qpart::Rng& rng, int num_qubits,
                                              int num_steps, int num_nodes) {
  qpart::AssignmentSchedule s(num_qubits, num_steps);
  for (auto& cell : s.cells)
    cell = static_cast<std::int32_t>(rng.uniform_index(num_nodes));
  return s;
}

}  // namespace testsupport
