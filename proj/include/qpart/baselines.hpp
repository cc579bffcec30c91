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
#include <numeric>
#include <string>
#include <vector>

#include "qpart/error.hpp"
#include "qpart/network.hpp"
#include "qpart/schedule.hpp"

namespace qpart {

namespace detail {

inline AssignmentSchedule fill_in_order(const std::vector<int>& qpu_order,
                                        int num_qubits, int num_steps,
                                        const Network& net) {
  if (net.total_capacity() < num_qubits)
    fail("infeasible", "total capacity " +
                           std::to_string(net.total_capacity()) +
                           " cannot host " + std::to_string(num_qubits) +
                           " qubits");
  AssignmentSchedule s(num_qubits, num_steps);
  int q = 0;
  for (int p : qpu_order) {
    for (int k = 0; k < net.capacities[p] && q < num_qubits; ++k, ++q)
      for (int t = 0; t < num_steps; ++t)
        s.at(q, t) = static_cast<std::int32_t>(p);
    if (q == num_qubits) break;
  }
  return s;
}

}  // namespace detail

/// Static baseline: QPUs in index order, each filled to capacity with the
/// next ascending qubit indices; the column is replicated across all steps.
inline AssignmentSchedule successive_assignment(int num_qubits, int num_steps,
                                                const Network& net) {
  std::vector<int> order(net.num_nodes);
  std::iota(order.begin(), order.end(), 0);
  return detail::fill_in_order(order, num_qubits, num_steps, net);
}

/// Static baseline: like successive_assignment, but QPUs are visited in
/// descending capacity order (ties broken by lower node index).
inline AssignmentSchedule capacity_based_assignment(int num_qubits,
                                                    int num_steps,
                                                    const Network& net) {
  std::vector<int> order(net.num_nodes);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return net.capacities[a] > net.capacities[b];
  });
  return detail::fill_in_order(order, num_qubits, num_steps, net);
}

}  // namespace qpart
