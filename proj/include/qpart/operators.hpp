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

#include <array>
#include <cstdint>
#include <string>
#include <utility>

#include "qpart/error.hpp"
#include "qpart/network.hpp"
#include "qpart/rng.hpp"
#include "qpart/schedule.hpp"

namespace qpart {

/// Neighbor/mutation moves shared by the annealer and the evolutionary
/// solver. Every kind maps a valid schedule to a valid schedule of the same
/// dimensions.
enum class MutationKind {
  flip_one_cell,
  flip_multiple_cells,
  swap_two_rows,
  swap_two_columns,
  swap_two_cells,
  shuffle_row,
  shuffle_column,
};

inline constexpr std::array<MutationKind, 7> kAllMutationKinds = {
    MutationKind::flip_one_cell,      MutationKind::flip_multiple_cells,
    MutationKind::swap_two_rows,      MutationKind::swap_two_columns,
    MutationKind::swap_two_cells,     MutationKind::shuffle_row,
    MutationKind::shuffle_column,
};

inline std::string to_string(MutationKind k) {
  switch (k) {
    case MutationKind::flip_one_cell: return "flip_one_cell";
    case MutationKind::flip_multiple_cells: return "flip_multiple_cells";
    case MutationKind::swap_two_rows: return "swap_two_rows";
    case MutationKind::swap_two_columns: return "swap_two_columns";
    case MutationKind::swap_two_cells: return "swap_two_cells";
    case MutationKind::shuffle_row: return "shuffle_row";
    case MutationKind::shuffle_column: return "shuffle_column";
  }
  return "?";
}

namespace detail {

// Two distinct values in [0, n), uniform over ordered pairs.
inline std::pair<int, int> distinct_pair(Rng& rng, int n) {
  int a = static_cast<int>(rng.uniform_index(n));
  int b = static_cast<int>(rng.uniform_index(n - 1));
  if (b >= a) ++b;
  return {a, b};
}

inline void shuffle_span(Rng& rng, std::int32_t* base, int count, int stride) {
  for (int i = count; i > 1; --i) {
    int j = static_cast<int>(rng.uniform_index(i));
    std::swap(base[(i - 1) * stride], base[j * stride]);
  }
}

}  // namespace detail

/// Applies one specific move; the input is not modified. Moves that need two
/// distinct rows/columns/cells degrade to flip_one_cell when the matrix is
/// too small for them.
inline AssignmentSchedule apply_mutation(const AssignmentSchedule& s,
                                         MutationKind kind, const Network& net,
                                         Rng& rng) {
  const int num_qubits = s.num_qubits;
  const int num_steps = s.num_steps;
  const int cell_count = num_qubits * num_steps;
  if (cell_count == 0)
    fail("invalid_schedule", "cannot mutate an empty schedule");

  if ((kind == MutationKind::swap_two_rows && num_qubits < 2) ||
      (kind == MutationKind::swap_two_columns && num_steps < 2) ||
      (kind == MutationKind::swap_two_cells && cell_count < 2))
    kind = MutationKind::flip_one_cell;

  AssignmentSchedule out = s;
  switch (kind) {
    case MutationKind::flip_one_cell: {
      int c = static_cast<int>(rng.uniform_index(cell_count));
      out.cells[c] = static_cast<std::int32_t>(rng.uniform_index(net.num_nodes));
      break;
    }
    case MutationKind::flip_multiple_cells: {
      // A contiguous stretch of one qubit's row moves to a single node:
      // the "host qubit q on QPU p for a while" move. Windows at least as
      // long as the row relocate the whole trajectory, which is the only
      // way to reach unused capacity once the search has gone cold.
      const int hi = std::max(2, (cell_count + 19) / 20);
      const int m = rng.uniform_int(2, hi);
      const int q = static_cast<int>(rng.uniform_index(num_qubits));
      const int len = std::min(m, num_steps);
      const int start =
          static_cast<int>(rng.uniform_index(num_steps - len + 1));
      const auto node =
          static_cast<std::int32_t>(rng.uniform_index(net.num_nodes));
      for (int t = start; t < start + len; ++t) out.at(q, t) = node;
      break;
    }
    case MutationKind::swap_two_rows: {
      auto [r1, r2] = detail::distinct_pair(rng, num_qubits);
      for (int t = 0; t < num_steps; ++t) std::swap(out.at(r1, t), out.at(r2, t));
      break;
    }
    case MutationKind::swap_two_columns: {
      auto [c1, c2] = detail::distinct_pair(rng, num_steps);
      for (int q = 0; q < num_qubits; ++q)
        std::swap(out.at(q, c1), out.at(q, c2));
      break;
    }
    case MutationKind::swap_two_cells: {
      auto [c1, c2] = detail::distinct_pair(rng, cell_count);
      std::swap(out.cells[c1], out.cells[c2]);
      break;
    }
    case MutationKind::shuffle_row: {
      int q = static_cast<int>(rng.uniform_index(num_qubits));
      detail::shuffle_span(rng, &out.at(q, 0), num_steps, 1);
      break;
    }
    case MutationKind::shuffle_column: {
      int t = static_cast<int>(rng.uniform_index(num_steps));
      detail::shuffle_span(rng, &out.at(0, t), num_qubits, num_steps);
      break;
    }
  }
  return out;
}

/// One mutation with the kind drawn uniformly from all seven.
inline AssignmentSchedule mutate(const AssignmentSchedule& s,
                                 const Network& net, Rng& rng) {
  MutationKind kind = kAllMutationKinds[rng.uniform_index(
      kAllMutationKinds.size())];
  return apply_mutation(s, kind, net, rng);
}

/// Child takes rows [0, cut) from a and rows [cut, Q) from b.
inline AssignmentSchedule crossover_rows(const AssignmentSchedule& a,
                                         const AssignmentSchedule& b,
                                         int cut) {
  AssignmentSchedule child = a;
  for (int q = cut; q < a.num_qubits; ++q)
    for (int t = 0; t < a.num_steps; ++t) child.at(q, t) = b.at(q, t);
  return child;
}

/// Child takes columns [0, cut) from a and columns [cut, T) from b.
inline AssignmentSchedule crossover_columns(const AssignmentSchedule& a,
                                            const AssignmentSchedule& b,
                                            int cut) {
  AssignmentSchedule child = a;
  for (int q = 0; q < a.num_qubits; ++q)
    for (int t = cut; t < a.num_steps; ++t) child.at(q, t) = b.at(q, t);
  return child;
}

/// Row-wise or column-wise single-point crossover, axis and cut point drawn
/// uniformly. An axis of size 1 forces the other axis; a 1x1 matrix returns
/// a copy of the first parent.
inline AssignmentSchedule crossover(const AssignmentSchedule& a,
                                    const AssignmentSchedule& b, Rng& rng) {
  if (a.num_qubits != b.num_qubits || a.num_steps != b.num_steps)
    fail("dimension_mismatch", "crossover parents are " +
                                   std::to_string(a.num_qubits) + "x" +
                                   std::to_string(a.num_steps) + " and " +
                                   std::to_string(b.num_qubits) + "x" +
                                   std::to_string(b.num_steps));
  const bool rows_possible = a.num_qubits >= 2;
  const bool cols_possible = a.num_steps >= 2;
  if (!rows_possible && !cols_possible) return a;
  bool row_wise = rows_possible;
  if (rows_possible && cols_possible) row_wise = rng.uniform_index(2) == 0;
  if (row_wise) {
    int cut = rng.uniform_int(1, a.num_qubits - 1);
    return crossover_rows(a, b, cut);
  }
  int cut = rng.uniform_int(1, a.num_steps - 1);
  return crossover_columns(a, b, cut);
}

}  // namespace qpart
