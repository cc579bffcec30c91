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

#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qpart/circuit.hpp"
#include "qpart/error.hpp"
#include "qpart/network.hpp"
#include "qpart/rng.hpp"

namespace qpart {

/// The decision variable: a Q x T matrix whose (q, t) entry is the QPU
/// hosting qubit q at time step t. Rows are qubits, columns are time steps.
struct AssignmentSchedule {
  int num_qubits = 0;
  int num_steps = 0;
  std::vector<std::int32_t> cells;  // row-major, cells[q * num_steps + t]

  AssignmentSchedule() = default;
  AssignmentSchedule(int qubits, int steps, std::int32_t fill = 0)
      : num_qubits(qubits),
        num_steps(steps),
        cells(static_cast<std::size_t>(qubits) * steps, fill) {}

  std::int32_t& at(int q, int t) {
    return cells[static_cast<std::size_t>(q) * num_steps + t];
  }
  std::int32_t at(int q, int t) const {
    return cells[static_cast<std::size_t>(q) * num_steps + t];
  }

  bool operator==(const AssignmentSchedule&) const = default;
};

inline void validate(const AssignmentSchedule& s, const Network& net) {
  if (s.cells.size() != static_cast<std::size_t>(s.num_qubits) * s.num_steps)
    fail("invalid_schedule", "cell count does not match dimensions");
  for (std::int32_t v : s.cells)
    if (v < 0 || v >= net.num_nodes)
      fail("invalid_schedule", "entry " + std::to_string(v) +
                                   " is not a node index of the network");
}

/// How the capacity penalty is charged: once per violating (time step, QPU)
/// pair, or once per time step containing any violation.
enum class PenaltyMode { per_qpu, per_step };

inline std::string to_string(PenaltyMode m) {
  return m == PenaltyMode::per_qpu ? "per_qpu" : "per_step";
}

inline PenaltyMode penalty_mode_from_string(const std::string& s) {
  if (s == "per_qpu") return PenaltyMode::per_qpu;
  if (s == "per_step") return PenaltyMode::per_step;
  fail("invalid_argument", "unknown penalty mode \"" + s + "\"");
}

inline constexpr std::int64_t kDefaultLambda = 10000;

struct CostBreakdown {
  std::int64_t remote_cx_cost = 0;
  std::int64_t teleport_cost = 0;
  std::int64_t penalty_count = 0;
  std::int64_t total = 0;

  bool operator==(const CostBreakdown&) const = default;
};

/// Communication cost of a schedule:
///
///   remote_cx_cost = sum over t, (i,j) in CX_t of dist(x[i,t], x[j,t])
///   teleport_cost  = sum over t < T-1, q      of dist(x[q,t], x[q,t+1])
///   penalty_count  = violating (t, QPU) pairs (or steps, per `mode`)
///   total          = remote_cx_cost + teleport_cost + penalty_count * lambda
///
/// All terms are exact integers; hop distances come from net.dist.
inline CostBreakdown cost(const AssignmentSchedule& s, const LayeredCircuit& lc,
                          const Network& net,
                          std::int64_t lambda = kDefaultLambda,
                          PenaltyMode mode = PenaltyMode::per_qpu) {
  if (s.num_qubits != lc.num_qubits || s.num_steps != lc.depth())
    fail("dimension_mismatch",
         "schedule is " + std::to_string(s.num_qubits) + "x" +
             std::to_string(s.num_steps) + " but the circuit needs " +
             std::to_string(lc.num_qubits) + "x" +
             std::to_string(lc.depth()));

  const int num_qubits = s.num_qubits;
  const int num_steps = s.num_steps;
  CostBreakdown out;

  for (int t = 0; t < num_steps; ++t)
    for (auto [i, j] : lc.cx_pairs[t])
      out.remote_cx_cost += net.dist[s.at(i, t)][s.at(j, t)];

  for (int q = 0; q < num_qubits; ++q) {
    const std::int32_t* row = s.cells.data() +
                              static_cast<std::size_t>(q) * num_steps;
    for (int t = 0; t + 1 < num_steps; ++t)
      out.teleport_cost += net.dist[row[t]][row[t + 1]];
  }

  std::vector<int> occupancy(net.num_nodes);
  for (int t = 0; t < num_steps; ++t) {
    std::fill(occupancy.begin(), occupancy.end(), 0);
    for (int q = 0; q < num_qubits; ++q) ++occupancy[s.at(q, t)];
    int violating = 0;
    for (int p = 0; p < net.num_nodes; ++p)
      if (occupancy[p] > net.capacities[p]) ++violating;
    if (mode == PenaltyMode::per_qpu)
      out.penalty_count += violating;
    else if (violating > 0)
      out.penalty_count += 1;
  }

  out.total = out.remote_cx_cost + out.teleport_cost +
              out.penalty_count * lambda;
  return out;
}

enum class InitMode { feasible_column, uniform };

inline std::string to_string(InitMode m) {
  return m == InitMode::feasible_column ? "feasible_column" : "uniform";
}

inline InitMode init_mode_from_string(const std::string& s) {
  if (s == "feasible_column") return InitMode::feasible_column;
  if (s == "uniform") return InitMode::uniform;
  fail("invalid_argument", "unknown init mode \"" + s + "\"");
}

/// Random schedule draw.
///
/// feasible_column: one capacity-respecting placement (qubits shuffled, QPUs
/// filled in random order) replicated across all columns, so the start is
/// penalty-free with zero teleport cost. uniform: every cell independent.
inline AssignmentSchedule random_schedule(int num_qubits, int num_steps,
                                          const Network& net, Rng& rng,
                                          InitMode mode) {
  AssignmentSchedule s(num_qubits, num_steps);
  if (mode == InitMode::uniform) {
    for (auto& cell : s.cells)
      cell = static_cast<std::int32_t>(rng.uniform_index(net.num_nodes));
    return s;
  }
  if (net.total_capacity() < num_qubits)
    fail("infeasible", "total capacity " +
                           std::to_string(net.total_capacity()) +
                           " cannot host " + std::to_string(num_qubits) +
                           " qubits");
  std::vector<int> qubits(num_qubits);
  std::iota(qubits.begin(), qubits.end(), 0);
  rng.shuffle(qubits);
  std::vector<int> qpus(net.num_nodes);
  std::iota(qpus.begin(), qpus.end(), 0);
  rng.shuffle(qpus);

  std::vector<std::int32_t> column(num_qubits);
  std::size_t next = 0;
  for (int p : qpus) {
    for (int k = 0; k < net.capacities[p] && next < qubits.size(); ++k)
      column[qubits[next++]] = static_cast<std::int32_t>(p);
    if (next == qubits.size()) break;
  }
  for (int q = 0; q < num_qubits; ++q)
    for (int t = 0; t < num_steps; ++t) s.at(q, t) = column[q];
  return s;
}

inline AssignmentSchedule random_schedule(int num_qubits, int num_steps,
                                          const Network& net,
                                          std::uint64_t seed, InitMode mode) {
  Rng rng(seed);
  return random_schedule(num_qubits, num_steps, net, rng, mode);
}

/// Schedule file format: {"assign": [[int,...],...]}, rows = qubits.
inline AssignmentSchedule parse_schedule(const std::string& text) {
  nlohmann::json j = detail::parse_json(text, "schedule");
  if (!j.is_object() || !j.contains("assign") || !j["assign"].is_array())
    fail("parse_error",
         "schedule: expected an object with an \"assign\" matrix");
  const auto& rows = j["assign"];
  AssignmentSchedule s;
  s.num_qubits = static_cast<int>(rows.size());
  for (std::size_t q = 0; q < rows.size(); ++q) {
    const auto& row = rows[q];
    const std::string where = "schedule: assign[" + std::to_string(q) + "]";
    if (!row.is_array()) fail("parse_error", where + ": expected an array");
    if (q == 0) s.num_steps = static_cast<int>(row.size());
    if (static_cast<int>(row.size()) != s.num_steps)
      fail("parse_error", where + ": ragged rows (expected " +
                              std::to_string(s.num_steps) + " entries)");
    for (std::size_t t = 0; t < row.size(); ++t)
      s.cells.push_back(static_cast<std::int32_t>(detail::require_int(
          row[t], where + "[" + std::to_string(t) + "]")));
  }
  return s;
}

inline std::string serialize_schedule(const AssignmentSchedule& s) {
  std::string out = "{\n  \"assign\": [";
  if (s.num_qubits == 0) {
    out += "]\n}\n";
    return out;
  }
  out += "\n";
  for (int q = 0; q < s.num_qubits; ++q) {
    nlohmann::json row = nlohmann::json::array();
    for (int t = 0; t < s.num_steps; ++t) row.push_back(s.at(q, t));
    out += "    " + row.dump();
    out += (q + 1 < s.num_qubits) ? ",\n" : "\n";
  }
  out += "  ]\n}\n";
  return out;
}

}  // namespace qpart
