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
#include <array>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qpart/error.hpp"
#include "qpart/rng.hpp"

namespace qpart {

enum class GateKind { cx, single_qubit };

struct Gate {
  GateKind kind = GateKind::single_qubit;
  std::vector<int> qubits;  // two entries for cx, one otherwise
  std::string label;        // "cx", "h", "rz", ...; carried for round-tripping

  bool operator==(const Gate&) const = default;
};

inline Gate make_cx(int control, int target) {
  return Gate{GateKind::cx, {control, target}, "cx"};
}

inline Gate make_single(std::string label, int qubit) {
  return Gate{GateKind::single_qubit, {qubit}, std::move(label)};
}

/// A gate list in program order.
struct Circuit {
  int num_qubits = 0;
  std::vector<Gate> gates;

  bool operator==(const Circuit&) const = default;
};

inline void validate(const Circuit& c) {
  if (c.num_qubits < 1)
    fail("invalid_circuit", "circuit must have at least one qubit");
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    const Gate& g = c.gates[i];
    const std::string where = "gates[" + std::to_string(i) + "]";
    if (g.kind == GateKind::cx) {
      if (g.qubits.size() != 2)
        fail("invalid_circuit", where + ": cx takes exactly two qubits");
      if (g.qubits[0] == g.qubits[1])
        fail("invalid_circuit", where + ": cx qubits must be distinct");
    } else {
      if (g.qubits.size() != 1)
        fail("invalid_circuit",
             where + ": single-qubit gate takes exactly one qubit");
      if (g.label == "cx")
        fail("invalid_circuit",
             where + ": label \"cx\" is reserved for two-qubit gates");
    }
    for (int q : g.qubits) {
      if (q < 0 || q >= c.num_qubits)
        fail("invalid_circuit", where + ": qubit index " + std::to_string(q) +
                                    " out of range [0, " +
                                    std::to_string(c.num_qubits) + ")");
    }
  }
}

/// The circuit cut into time steps. `cx_pairs[t]` caches the (control,
/// target) pairs of layer t, which is all the cost function needs.
struct LayeredCircuit {
  int num_qubits = 0;
  std::vector<std::vector<Gate>> layers;
  std::vector<std::vector<std::pair<int, int>>> cx_pairs;

  int depth() const { return static_cast<int>(layers.size()); }
};

/// ASAP layering: each gate lands in the earliest layer after the last gate
/// touching any of its qubits. The layer count equals the circuit depth.
inline LayeredCircuit layerize(const Circuit& c) {
  validate(c);
  LayeredCircuit lc;
  lc.num_qubits = c.num_qubits;
  std::vector<int> frontier(c.num_qubits, 0);  // earliest free layer per qubit
  for (const Gate& g : c.gates) {
    int layer = 0;
    for (int q : g.qubits) layer = std::max(layer, frontier[q]);
    if (layer >= lc.depth()) {
      lc.layers.resize(layer + 1);
      lc.cx_pairs.resize(layer + 1);
    }
    lc.layers[layer].push_back(g);
    if (g.kind == GateKind::cx)
      lc.cx_pairs[layer].emplace_back(g.qubits[0], g.qubits[1]);
    for (int q : g.qubits) frontier[q] = layer + 1;
  }
  return lc;
}

/// Flatten layers back into a gate list (layer order, then in-layer order).
inline Circuit flatten(const LayeredCircuit& lc) {
  Circuit c;
  c.num_qubits = lc.num_qubits;
  for (const auto& layer : lc.layers)
    c.gates.insert(c.gates.end(), layer.begin(), layer.end());
  return c;
}

/// Seeded random circuit with layered depth exactly `target_depth`.
///
/// Every layer keeps all qubits busy: the number of CX gates per layer is
/// error-diffusion rounded so the total tracks cx_fraction * num_qubits *
/// target_depth / 2 to within one gate, and every qubit not in a CX pair
/// receives a single-qubit gate. Busy qubits in every layer make the ASAP
/// depth of the result equal the construction depth.
inline Circuit generate_random(int num_qubits, int target_depth,
                               double cx_fraction, std::uint64_t seed) {
  if (num_qubits < 2)
    fail("invalid_argument", "generate_random: num_qubits must be >= 2");
  if (target_depth < 1)
    fail("invalid_argument", "generate_random: target_depth must be >= 1");
  if (!(cx_fraction > 0.0) || !(cx_fraction < 1.0))
    fail("invalid_argument", "generate_random: cx_fraction must be in (0, 1)");

  static constexpr std::array<const char*, 5> kSingleLabels = {"h", "x", "t",
                                                               "s", "rz"};
  Rng rng(seed);
  Circuit c;
  c.num_qubits = num_qubits;
  std::vector<int> perm(num_qubits);
  std::iota(perm.begin(), perm.end(), 0);

  const double cx_per_layer = cx_fraction * num_qubits / 2.0;
  double carry = 0.0;
  for (int t = 0; t < target_depth; ++t) {
    carry += cx_per_layer;
    int k = static_cast<int>(std::floor(carry + 0.5));
    carry -= k;
    k = std::clamp(k, 0, num_qubits / 2);
    rng.shuffle(perm);
    for (int i = 0; i < k; ++i)
      c.gates.push_back(make_cx(perm[2 * i], perm[2 * i + 1]));
    for (int i = 2 * k; i < num_qubits; ++i) {
      const char* label =
          kSingleLabels[rng.uniform_index(kSingleLabels.size())];
      c.gates.push_back(make_single(label, perm[i]));
    }
  }
  return c;
}

namespace detail {

inline std::string line_col_of(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

inline nlohmann::json parse_json(const std::string& text,
                                 const std::string& what) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail("parse_error",
         what + ": " + e.what() + " (" + line_col_of(text, e.byte) + ")");
  }
}

inline int require_int(const nlohmann::json& j, const std::string& where) {
  if (!j.is_number_integer())
    fail("parse_error", where + ": expected an integer");
  return j.get<int>();
}

}  // namespace detail

/// Circuit file format: {"n": <int>, "gates": [["cx", c, t] | ["<label>", q]]}
inline Circuit parse_circuit(const std::string& text) {
  nlohmann::json j = detail::parse_json(text, "circuit");
  if (!j.is_object() || !j.contains("n") || !j.contains("gates"))
    fail("parse_error", "circuit: expected an object with \"n\" and \"gates\"");
  Circuit c;
  c.num_qubits = detail::require_int(j["n"], "circuit: \"n\"");
  if (!j["gates"].is_array())
    fail("parse_error", "circuit: \"gates\" must be an array");
  for (std::size_t i = 0; i < j["gates"].size(); ++i) {
    const auto& g = j["gates"][i];
    const std::string where = "circuit: gates[" + std::to_string(i) + "]";
    if (!g.is_array() || g.empty() || !g[0].is_string())
      fail("parse_error", where + ": expected [\"<label>\", qubits...]");
    const std::string label = g[0].get<std::string>();
    if (label == "cx") {
      if (g.size() != 3)
        fail("parse_error", where + ": cx takes exactly two qubit arguments");
      c.gates.push_back(make_cx(detail::require_int(g[1], where),
                                detail::require_int(g[2], where)));
    } else {
      if (g.size() != 2)
        fail("parse_error",
             where + ": single-qubit gate takes exactly one qubit argument");
      c.gates.push_back(make_single(label, detail::require_int(g[1], where)));
    }
  }
  validate(c);
  return c;
}

/// Canonical serialization, one gate per line for diffability.
/// parse_circuit(serialize_circuit(c)) reproduces c exactly.
inline std::string serialize_circuit(const Circuit& c) {
  std::string out = "{\n  \"n\": " + std::to_string(c.num_qubits) + ",\n";
  if (c.gates.empty()) {
    out += "  \"gates\": []\n}\n";
    return out;
  }
  out += "  \"gates\": [\n";
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    const Gate& g = c.gates[i];
    nlohmann::json arr = nlohmann::json::array();
    arr.push_back(g.kind == GateKind::cx ? "cx" : g.label);
    for (int q : g.qubits) arr.push_back(q);
    out += "    " + arr.dump();
    out += (i + 1 < c.gates.size()) ? ",\n" : "\n";
  }
  out += "  ]\n}\n";
  return out;
}

}  // namespace qpart
