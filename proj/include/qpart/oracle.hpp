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
#include <cstdio>
#include <string>

#include "qpart/circuit.hpp"
#include "qpart/error.hpp"
#include "qpart/network.hpp"
#include "qpart/schedule.hpp"

namespace qpart {

inline constexpr double kOracleStateLimit = 1e7;

struct OracleResult {
  std::int64_t min_cost = 0;
  AssignmentSchedule argmin;
};

/// Exhaustive reference solver. Enumerates all N^(Q*T) assignment matrices
/// (cells counted row-major, first cell varying fastest) and returns the
/// minimum cost with the lexicographically smallest argmin among ties.
/// Refuses instances above kOracleStateLimit states.
inline OracleResult brute_force_optimum(
    const LayeredCircuit& lc, const Network& net,
    std::int64_t lambda = kDefaultLambda,
    PenaltyMode mode = PenaltyMode::per_qpu) {
  const int num_qubits = lc.num_qubits;
  const int num_steps = lc.depth();
  const int cell_count = num_qubits * num_steps;
  const double states =
      std::pow(static_cast<double>(net.num_nodes), cell_count);
  if (!(states <= kOracleStateLimit)) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.3g", states);
    fail("too_large", "instance has " + std::string(buf) +
                          " assignment matrices, above the limit of 1e7");
  }

  AssignmentSchedule s(num_qubits, num_steps);
  OracleResult result;
  result.min_cost = cost(s, lc, net, lambda, mode).total;
  result.argmin = s;

  auto advance = [&]() {
    for (int i = 0; i < cell_count; ++i) {
      if (++s.cells[i] < net.num_nodes) return true;
      s.cells[i] = 0;
    }
    return false;
  };

  while (advance()) {
    std::int64_t c = cost(s, lc, net, lambda, mode).total;
    if (c < result.min_cost ||
        (c == result.min_cost && s.cells < result.argmin.cells)) {
      result.min_cost = c;
      result.argmin = s;
    }
  }
  return result;
}

}  // namespace qpart
