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
#include <numeric>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qpart/circuit.hpp"  // detail::parse_json helpers
#include "qpart/error.hpp"
#include "qpart/rng.hpp"

namespace qpart {

enum class TopologyKind { ring, grid, star, custom };

inline std::string to_string(TopologyKind k) {
  switch (k) {
    case TopologyKind::ring: return "ring";
    case TopologyKind::grid: return "grid";
    case TopologyKind::star: return "star";
    case TopologyKind::custom: return "custom";
  }
  return "?";
}

inline TopologyKind topology_kind_from_string(const std::string& s) {
  if (s == "ring") return TopologyKind::ring;
  if (s == "grid") return TopologyKind::grid;
  if (s == "star") return TopologyKind::star;
  if (s == "custom") return TopologyKind::custom;
  fail("invalid_argument", "unknown topology kind \"" + s + "\"");
}

struct Topology {
  TopologyKind kind = TopologyKind::custom;
  int rows = 0, cols = 0;                   // grid only
  std::vector<std::pair<int, int>> edges;   // custom only

  bool operator==(const Topology&) const = default;
};

inline Topology ring_topology() { return {TopologyKind::ring, 0, 0, {}}; }
inline Topology star_topology() { return {TopologyKind::star, 0, 0, {}}; }
inline Topology grid_topology(int rows, int cols) {
  return {TopologyKind::grid, rows, cols, {}};
}
inline Topology custom_topology(std::vector<std::pair<int, int>> edges) {
  return {TopologyKind::custom, 0, 0, std::move(edges)};
}

/// Undirected edge set for a topology over `num_nodes` nodes, normalized to
/// (a < b), sorted, deduplicated.
///   ring: node i adjacent to i+-1 mod N (N >= 3)
///   grid: rows x cols 4-neighbor lattice, row-major numbering, no wraparound
///   star: node 0 is the hub, no leaf-leaf edges (N >= 2)
inline std::vector<std::pair<int, int>> build_topology(const Topology& topo,
                                                       int num_nodes) {
  std::vector<std::pair<int, int>> edges;
  switch (topo.kind) {
    case TopologyKind::ring: {
      if (num_nodes < 3)
        fail("invalid_argument", "ring topology requires at least 3 nodes");
      for (int i = 0; i < num_nodes; ++i) {
        int j = (i + 1) % num_nodes;
        edges.emplace_back(std::min(i, j), std::max(i, j));
      }
      break;
    }
    case TopologyKind::grid: {
      if (topo.rows < 2 || topo.cols < 2)
        fail("invalid_argument", "grid topology requires rows, cols >= 2");
      if (topo.rows * topo.cols != num_nodes)
        fail("invalid_argument",
             "grid dimensions " + std::to_string(topo.rows) + "x" +
                 std::to_string(topo.cols) + " do not match " +
                 std::to_string(num_nodes) + " nodes");
      auto node = [&](int r, int c) { return r * topo.cols + c; };
      for (int r = 0; r < topo.rows; ++r)
        for (int c = 0; c < topo.cols; ++c) {
          if (c + 1 < topo.cols) edges.emplace_back(node(r, c), node(r, c + 1));
          if (r + 1 < topo.rows) edges.emplace_back(node(r, c), node(r + 1, c));
        }
      break;
    }
    case TopologyKind::star: {
      if (num_nodes < 2)
        fail("invalid_argument", "star topology requires at least 2 nodes");
      for (int i = 1; i < num_nodes; ++i) edges.emplace_back(0, i);
      break;
    }
    case TopologyKind::custom: {
      for (auto [a, b] : topo.edges) {
        if (a < 0 || a >= num_nodes || b < 0 || b >= num_nodes)
          fail("invalid_argument", "edge (" + std::to_string(a) + ", " +
                                       std::to_string(b) +
                                       ") references a node out of range");
        if (a == b)
          fail("invalid_argument",
               "self-loop on node " + std::to_string(a) + " not allowed");
        edges.emplace_back(std::min(a, b), std::max(a, b));
      }
      break;
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

/// Hop-distance matrix by per-node breadth-first search.
/// Throws naming an unreachable pair if the graph is disconnected.
inline std::vector<std::vector<int>> all_pairs_hop_distance(
    const std::vector<std::pair<int, int>>& edges, int num_nodes) {
  std::vector<std::vector<int>> adjacency(num_nodes);
  for (auto [a, b] : edges) {
    adjacency[a].push_back(b);
    adjacency[b].push_back(a);
  }
  std::vector<std::vector<int>> dist(num_nodes,
                                     std::vector<int>(num_nodes, -1));
  std::queue<int> frontier;
  for (int src = 0; src < num_nodes; ++src) {
    auto& row = dist[src];
    row[src] = 0;
    frontier.push(src);
    while (!frontier.empty()) {
      int u = frontier.front();
      frontier.pop();
      for (int v : adjacency[u]) {
        if (row[v] == -1) {
          row[v] = row[u] + 1;
          frontier.push(v);
        }
      }
    }
    for (int v = 0; v < num_nodes; ++v)
      if (row[v] == -1)
        fail("disconnected_graph", "no path between nodes " +
                                       std::to_string(src) + " and " +
                                       std::to_string(v));
  }
  return dist;
}

/// Per-QPU capacities drawn uniformly from [lo, hi], resampled (bounded
/// retries) until their sum reaches min_total.
inline std::vector<int> generate_capacities(int num_nodes, int lo, int hi,
                                            int min_total,
                                            std::uint64_t seed) {
  if (num_nodes < 1)
    fail("invalid_argument", "generate_capacities: need at least one node");
  if (lo < 1 || hi < lo)
    fail("invalid_argument", "generate_capacities: need 1 <= lo <= hi");
  if (static_cast<std::int64_t>(num_nodes) * hi < min_total)
    fail("infeasible", "generate_capacities: " + std::to_string(num_nodes) +
                           " nodes with capacity at most " +
                           std::to_string(hi) + " cannot reach a total of " +
                           std::to_string(min_total));
  constexpr int kMaxRetries = 10000;
  Rng rng(seed);
  std::vector<int> caps(num_nodes);
  for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
    std::int64_t sum = 0;
    for (int& c : caps) {
      c = rng.uniform_int(lo, hi);
      sum += c;
    }
    if (sum >= min_total) return caps;
  }
  fail("infeasible",
       "generate_capacities: could not reach a total of " +
           std::to_string(min_total) + " after " +
           std::to_string(kMaxRetries) + " draws");
}

/// QPU network: capacities, undirected topology, and the precomputed
/// hop-distance matrix used by the cost function.
struct Network {
  int num_nodes = 0;
  std::vector<int> capacities;
  Topology topology;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> dist;

  int distance(int a, int b) const { return dist[a][b]; }

  int total_capacity() const {
    return std::accumulate(capacities.begin(), capacities.end(), 0);
  }
};

inline Network make_network(const Topology& topo, std::vector<int> capacities) {
  Network net;
  net.num_nodes = static_cast<int>(capacities.size());
  if (net.num_nodes < 1)
    fail("invalid_argument", "network requires at least one node");
  for (std::size_t i = 0; i < capacities.size(); ++i)
    if (capacities[i] < 1)
      fail("invalid_argument", "capacity of node " + std::to_string(i) +
                                   " must be at least 1");
  net.capacities = std::move(capacities);
  net.topology = topo;
  net.edges = build_topology(topo, net.num_nodes);
  net.dist = all_pairs_hop_distance(net.edges, net.num_nodes);
  return net;
}

/// Network file format:
/// {"n": int, "capacities": [int,...], "topology": {"kind": ..., ...params}}
inline Network parse_network(const std::string& text) {
  nlohmann::json j = detail::parse_json(text, "network");
  if (!j.is_object() || !j.contains("n") || !j.contains("capacities") ||
      !j.contains("topology"))
    fail("parse_error",
         "network: expected an object with \"n\", \"capacities\", and "
         "\"topology\"");
  const int n = detail::require_int(j["n"], "network: \"n\"");
  if (!j["capacities"].is_array() ||
      static_cast<int>(j["capacities"].size()) != n)
    fail("parse_error",
         "network: \"capacities\" must be an array of length \"n\"");
  std::vector<int> caps;
  caps.reserve(n);
  for (std::size_t i = 0; i < j["capacities"].size(); ++i)
    caps.push_back(detail::require_int(
        j["capacities"][i], "network: capacities[" + std::to_string(i) + "]"));

  const auto& t = j["topology"];
  if (!t.is_object() || !t.contains("kind") || !t["kind"].is_string())
    fail("parse_error", "network: \"topology\" must have a string \"kind\"");
  Topology topo;
  topo.kind = topology_kind_from_string(t["kind"].get<std::string>());
  if (topo.kind == TopologyKind::grid) {
    if (!t.contains("rows") || !t.contains("cols"))
      fail("parse_error", "network: grid topology needs \"rows\" and \"cols\"");
    topo.rows = detail::require_int(t["rows"], "network: \"rows\"");
    topo.cols = detail::require_int(t["cols"], "network: \"cols\"");
  } else if (topo.kind == TopologyKind::custom) {
    if (!t.contains("edges") || !t["edges"].is_array())
      fail("parse_error", "network: custom topology needs an \"edges\" array");
    for (std::size_t i = 0; i < t["edges"].size(); ++i) {
      const auto& e = t["edges"][i];
      const std::string where = "network: edges[" + std::to_string(i) + "]";
      if (!e.is_array() || e.size() != 2)
        fail("parse_error", where + ": expected [a, b]");
      topo.edges.emplace_back(detail::require_int(e[0], where),
                              detail::require_int(e[1], where));
    }
  }
  return make_network(topo, std::move(caps));
}

inline std::string serialize_network(const Network& net) {
  nlohmann::json topo;
  topo["kind"] = to_string(net.topology.kind);
  if (net.topology.kind == TopologyKind::grid) {
    topo["rows"] = net.topology.rows;
    topo["cols"] = net.topology.cols;
  } else if (net.topology.kind == TopologyKind::custom) {
    nlohmann::json edges = nlohmann::json::array();
    for (auto [a, b] : net.edges) edges.push_back({a, b});
    topo["edges"] = std::move(edges);
  }
  std::string out = "{\n  \"n\": " + std::to_string(net.num_nodes) + ",\n";
  out += "  \"capacities\": " + nlohmann::json(net.capacities).dump() + ",\n";
  out += "  \"topology\": " + topo.dump() + "\n}\n";
  return out;
}

}  // namespace qpart
