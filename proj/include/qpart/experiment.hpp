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
#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qpart/baselines.hpp"
#include "qpart/circuit.hpp"
#include "qpart/ea.hpp"
#include "qpart/error.hpp"
#include "qpart/io.hpp"
#include "qpart/network.hpp"
#include "qpart/run_record.hpp"
#include "qpart/sa.hpp"
#include "qpart/schedule.hpp"

namespace qpart {

struct GenCircuitParams {
  int qubits = 0;
  int depth = 0;
  double cx_fraction = 0.15;
  std::uint64_t seed = 0;
};

struct GenNetworkParams {
  Topology topology;
  int nodes = 0;
  int cap_min = 2;
  int cap_max = 5;
  int min_total = 0;
  std::uint64_t seed = 0;
};

/// A full benchmark description: one instance (circuit + network), the two
/// static baselines, and any enabled solver run once per seed.
struct ExperimentConfig {
  std::optional<std::string> circuit_file;
  std::optional<GenCircuitParams> circuit_gen;
  std::optional<std::string> network_file;
  std::optional<GenNetworkParams> network_gen;
  bool run_baselines = true;
  std::optional<SaConfig> sa;
  std::optional<EaConfig> ea;
  std::vector<std::uint64_t> seeds;
  std::int64_t lambda = kDefaultLambda;
  PenaltyMode penalty_mode = PenaltyMode::per_qpu;
  std::string output_dir;  // empty: keep results in memory only
  bool write_traces = true;
};

inline void validate(const ExperimentConfig& cfg) {
  if (cfg.circuit_file.has_value() == cfg.circuit_gen.has_value())
    fail("invalid_config",
         "experiment: provide exactly one circuit source (file or generator)");
  if (cfg.network_file.has_value() == cfg.network_gen.has_value())
    fail("invalid_config",
         "experiment: provide exactly one network source (file or generator)");
  if (!cfg.run_baselines && !cfg.sa && !cfg.ea)
    fail("invalid_config",
         "experiment: enable at least one solver or the baselines");
  if (cfg.seeds.empty())
    fail("invalid_config", "experiment: seeds must be non-empty");
}

namespace detail {

inline double require_number(const nlohmann::json& j,
                             const std::string& where) {
  if (!j.is_number()) fail("parse_error", where + ": expected a number");
  return j.get<double>();
}

inline std::uint64_t require_seed(const nlohmann::json& j,
                                  const std::string& where) {
  if (!j.is_number_integer())
    fail("parse_error", where + ": expected an integer seed");
  return j.get<std::uint64_t>();
}

inline std::string resolve_path(const std::string& path,
                                const std::filesystem::path& base_dir) {
  std::filesystem::path p(path);
  if (p.is_absolute() || base_dir.empty()) return path;
  return (base_dir / p).string();
}

}  // namespace detail

/// Parses the experiment config JSON. Relative circuit/network file paths
/// are resolved against `base_dir` (typically the config file's directory).
inline ExperimentConfig parse_experiment_config(
    const std::string& text, const std::filesystem::path& base_dir = {}) {
  nlohmann::json j = detail::parse_json(text, "experiment config");
  if (!j.is_object())
    fail("parse_error", "experiment config: expected an object");
  ExperimentConfig cfg;

  if (!j.contains("circuit") || !j["circuit"].is_object())
    fail("parse_error", "experiment config: missing \"circuit\" object");
  const auto& cj = j["circuit"];
  if (cj.contains("file") && cj.contains("qubits"))
    fail("invalid_config",
         "experiment config: circuit takes a file or generator params, not "
         "both");
  if (cj.contains("file")) {
    cfg.circuit_file =
        detail::resolve_path(cj["file"].get<std::string>(), base_dir);
  } else {
    GenCircuitParams p;
    p.qubits = detail::require_int(cj.at("qubits"), "circuit: \"qubits\"");
    p.depth = detail::require_int(cj.at("depth"), "circuit: \"depth\"");
    if (cj.contains("cx_fraction"))
      p.cx_fraction =
          detail::require_number(cj["cx_fraction"], "circuit: \"cx_fraction\"");
    p.seed = detail::require_seed(cj.at("seed"), "circuit: \"seed\"");
    cfg.circuit_gen = p;
  }

  if (!j.contains("network") || !j["network"].is_object())
    fail("parse_error", "experiment config: missing \"network\" object");
  const auto& nj = j["network"];
  if (nj.contains("file") && nj.contains("nodes"))
    fail("invalid_config",
         "experiment config: network takes a file or generator params, not "
         "both");
  if (nj.contains("file")) {
    cfg.network_file =
        detail::resolve_path(nj["file"].get<std::string>(), base_dir);
  } else {
    GenNetworkParams p;
    p.nodes = detail::require_int(nj.at("nodes"), "network: \"nodes\"");
    const std::string kind = nj.at("topology").get<std::string>();
    p.topology.kind = topology_kind_from_string(kind);
    if (p.topology.kind == TopologyKind::grid) {
      // rows/cols may be omitted when nodes is a perfect square
      if (nj.contains("rows"))
        p.topology.rows = detail::require_int(nj["rows"], "network: \"rows\"");
      if (nj.contains("cols"))
        p.topology.cols = detail::require_int(nj["cols"], "network: \"cols\"");
    }
    if (p.topology.kind == TopologyKind::custom)
      fail("invalid_config",
           "experiment config: custom topologies must come from a network "
           "file");
    p.cap_min = detail::require_int(nj.at("cap_min"), "network: \"cap_min\"");
    p.cap_max = detail::require_int(nj.at("cap_max"), "network: \"cap_max\"");
    if (nj.contains("min_total"))
      p.min_total =
          detail::require_int(nj["min_total"], "network: \"min_total\"");
    p.seed = detail::require_seed(nj.at("seed"), "network: \"seed\"");
    cfg.network_gen = p;
  }

  cfg.run_baselines = j.value("baselines", true);
  cfg.lambda = j.value("lambda", kDefaultLambda);
  if (j.contains("penalty_mode"))
    cfg.penalty_mode =
        penalty_mode_from_string(j["penalty_mode"].get<std::string>());

  if (j.contains("solvers")) {
    const auto& sj = j["solvers"];
    if (sj.contains("sa") && sj["sa"].value("enabled", true)) {
      const auto& s = sj["sa"];
      SaConfig sa;
      sa.initial_temp = s.value("initial_temp", 10.0);
      sa.cooling_rate = s.value("cooling_rate", 0.99);
      sa.max_iterations =
          detail::require_int(s.at("max_iterations"), "sa: \"max_iterations\"");
      sa.init_mode =
          init_mode_from_string(s.value("init_mode", "feasible_column"));
      sa.lambda = cfg.lambda;
      sa.penalty_mode = cfg.penalty_mode;
      validate(sa);
      cfg.sa = sa;
    }
    if (sj.contains("ea") && sj["ea"].value("enabled", true)) {
      const auto& e = sj["ea"];
      EaConfig ea;
      ea.population_size = e.value("population_size", 200);
      ea.mutation_rate = e.value("mutation_rate", 0.3);
      ea.offspring_per_generation = e.value("offspring_per_generation", 60);
      ea.generations =
          detail::require_int(e.at("generations"), "ea: \"generations\"");
      ea.init_mode =
          init_mode_from_string(e.value("init_mode", "feasible_column"));
      ea.lambda = cfg.lambda;
      ea.penalty_mode = cfg.penalty_mode;
      validate(ea);
      cfg.ea = ea;
    }
  }

  if (!j.contains("seeds") || !j["seeds"].is_array())
    fail("parse_error", "experiment config: missing \"seeds\" array");
  for (const auto& s : j["seeds"])
    cfg.seeds.push_back(detail::require_seed(s, "experiment config: seeds"));

  cfg.output_dir = j.value("output_dir", std::string());
  cfg.write_traces = j.value("write_traces", true);
  validate(cfg);
  return cfg;
}

struct ExperimentResult {
  Circuit circuit;
  LayeredCircuit layered;
  Network network;
  std::vector<RunRecord> runs;  // solver runs, sorted by (solver id, seed)
  nlohmann::json summary;       // "experiment" section deterministic,
                                // "timing" section wall-clock
};

namespace detail {

inline nlohmann::json to_json(const CostBreakdown& b) {
  return {{"remote_cx_cost", b.remote_cx_cost},
          {"teleport_cost", b.teleport_cost},
          {"penalty_count", b.penalty_count},
          {"total", b.total}};
}

inline nlohmann::json to_json(const SaConfig& cfg) {
  return {{"initial_temp", cfg.initial_temp},
          {"cooling_rate", cfg.cooling_rate},
          {"max_iterations", cfg.max_iterations},
          {"init_mode", to_string(cfg.init_mode)}};
}

inline nlohmann::json to_json(const EaConfig& cfg) {
  return {{"population_size", cfg.population_size},
          {"mutation_rate", cfg.mutation_rate},
          {"offspring_per_generation", cfg.offspring_per_generation},
          {"generations", cfg.generations},
          {"init_mode", to_string(cfg.init_mode)}};
}

struct SeedStats {
  double mean = 0.0;
  double stddev = 0.0;  // population
};

inline SeedStats seed_stats(const std::vector<std::int64_t>& values) {
  SeedStats stats;
  if (values.empty()) return stats;
  double sum = 0.0;
  for (std::int64_t v : values) sum += static_cast<double>(v);
  stats.mean = sum / static_cast<double>(values.size());
  double var = 0.0;
  for (std::int64_t v : values) {
    double d = static_cast<double>(v) - stats.mean;
    var += d * d;
  }
  stats.stddev = std::sqrt(var / static_cast<double>(values.size()));
  return stats;
}

}  // namespace detail

/// Percentage improvement of a solver mean over the better baseline.
inline double improvement_pct(double best_baseline_total,
                              double mean_solver_cost) {
  return (best_baseline_total - mean_solver_cost) / best_baseline_total *
         100.0;
}

/// Writes one CSV per run plus one aggregate CSV per solver into `dir`.
inline void emit_traces(const std::vector<RunRecord>& records,
                        const std::filesystem::path& dir) {
  std::vector<std::string> solver_ids;
  for (const RunRecord& r : records) {
    write_text_file(dir / (r.solver_id + "_seed" + std::to_string(r.seed) +
                           ".csv"),
                    trace_to_csv(r));
    if (std::find(solver_ids.begin(), solver_ids.end(), r.solver_id) ==
        solver_ids.end())
      solver_ids.push_back(r.solver_id);
  }
  for (const std::string& id : solver_ids) {
    std::vector<const RunRecord*> group;
    for (const RunRecord& r : records)
      if (r.solver_id == id) group.push_back(&r);
    write_text_file(dir / (id + "_aggregate.csv"),
                    aggregate_traces_to_csv(group));
  }
}

/// Runs the configured experiment: baselines once, each enabled solver once
/// per seed, statistics across seeds, improvement over the best baseline.
/// When output_dir is set, writes the resolved circuit/network snapshots,
/// summary.json, and (optionally) per-run trace CSVs.
inline ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  validate(cfg);
  const auto t_start = std::chrono::steady_clock::now();

  ExperimentResult result;
  nlohmann::json instance;

  if (cfg.circuit_file) {
    result.circuit = parse_circuit(read_text_file(*cfg.circuit_file));
    instance["circuit"]["source"] = "file";
    instance["circuit"]["path"] = *cfg.circuit_file;
  } else {
    const GenCircuitParams& p = *cfg.circuit_gen;
    result.circuit =
        generate_random(p.qubits, p.depth, p.cx_fraction, p.seed);
    instance["circuit"]["source"] = "generated";
    instance["circuit"]["params"] = {{"qubits", p.qubits},
                                     {"depth", p.depth},
                                     {"cx_fraction", p.cx_fraction},
                                     {"seed", p.seed}};
  }
  result.layered = layerize(result.circuit);

  if (cfg.network_file) {
    result.network = parse_network(read_text_file(*cfg.network_file));
    instance["network"]["source"] = "file";
    instance["network"]["path"] = *cfg.network_file;
  } else {
    const GenNetworkParams& p = *cfg.network_gen;
    Topology topo = p.topology;
    if (topo.kind == TopologyKind::grid && topo.rows == 0 && topo.cols == 0) {
      int side = static_cast<int>(std::lround(std::sqrt(p.nodes)));
      topo.rows = topo.cols = side;
    }
    result.network = make_network(
        topo, generate_capacities(p.nodes, p.cap_min, p.cap_max, p.min_total,
                                  p.seed));
    instance["network"]["source"] = "generated";
    instance["network"]["params"] = {{"topology", to_string(p.topology.kind)},
                                     {"nodes", p.nodes},
                                     {"cap_min", p.cap_min},
                                     {"cap_max", p.cap_max},
                                     {"min_total", p.min_total},
                                     {"seed", p.seed}};
  }

  int cx_gates = 0;
  for (const Gate& g : result.circuit.gates)
    if (g.kind == GateKind::cx) ++cx_gates;
  instance["circuit"]["qubits"] = result.circuit.num_qubits;
  instance["circuit"]["gate_count"] = result.circuit.gates.size();
  instance["circuit"]["cx_gates"] = cx_gates;
  instance["circuit"]["depth"] = result.layered.depth();
  instance["network"]["nodes"] = result.network.num_nodes;
  instance["network"]["capacities"] = result.network.capacities;
  instance["network"]["total_capacity"] = result.network.total_capacity();
  instance["lambda"] = cfg.lambda;
  instance["penalty_mode"] = to_string(cfg.penalty_mode);

  nlohmann::json experiment;
  experiment["schema"] = "qpart-summary-v1";
  experiment["instance"] = std::move(instance);
  experiment["seeds"] = cfg.seeds;

  const int num_qubits = result.circuit.num_qubits;
  const int depth = result.layered.depth();

  std::optional<std::int64_t> best_baseline_total;
  if (cfg.run_baselines) {
    AssignmentSchedule successive =
        successive_assignment(num_qubits, depth, result.network);
    AssignmentSchedule capacity_based =
        capacity_based_assignment(num_qubits, depth, result.network);
    CostBreakdown successive_cost = cost(successive, result.layered,
                                         result.network, cfg.lambda,
                                         cfg.penalty_mode);
    CostBreakdown capacity_cost = cost(capacity_based, result.layered,
                                       result.network, cfg.lambda,
                                       cfg.penalty_mode);
    experiment["baselines"]["successive"] = detail::to_json(successive_cost);
    experiment["baselines"]["capacity_based"] = detail::to_json(capacity_cost);
    const bool successive_wins = successive_cost.total <= capacity_cost.total;
    best_baseline_total =
        successive_wins ? successive_cost.total : capacity_cost.total;
    experiment["best_baseline"] = {
        {"name", successive_wins ? "successive" : "capacity_based"},
        {"total", *best_baseline_total}};
  }

  nlohmann::json timing;
  struct SolverPlan {
    std::string id;
    nlohmann::json config;
  };
  std::vector<SolverPlan> plans;
  if (cfg.ea) plans.push_back({"ea", detail::to_json(*cfg.ea)});
  if (cfg.sa) plans.push_back({"sa", detail::to_json(*cfg.sa)});

  for (const SolverPlan& plan : plans) {
    nlohmann::json solver_json;
    solver_json["config"] = plan.config;
    solver_json["runs"] = nlohmann::json::array();
    std::vector<std::int64_t> finals;
    for (std::uint64_t seed : cfg.seeds) {
      nlohmann::json run_json;
      run_json["seed"] = seed;
      const auto t0 = std::chrono::steady_clock::now();
      try {
        RunRecord record;
        if (plan.id == "sa") {
          SaConfig run_cfg = *cfg.sa;
          run_cfg.seed = seed;
          record = run_sa(result.layered, result.network, run_cfg).record;
        } else {
          EaConfig run_cfg = *cfg.ea;
          run_cfg.seed = seed;
          record = run_ea(result.layered, result.network, run_cfg).record;
        }
        record.wall_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                          t0)
                .count();
        record.config = plan.config;
        run_json["final"] = detail::to_json(record.final_cost);
        run_json["trace_rows"] = record.trace.size();
        finals.push_back(record.final_cost.total);
        timing["runs"][plan.id + "_seed" + std::to_string(seed)] =
            record.wall_seconds;
        result.runs.push_back(std::move(record));
      } catch (const Error& e) {
        run_json["error"] = {{"type", e.kind()}, {"message", e.what()}};
      }
      solver_json["runs"].push_back(std::move(run_json));
    }
    if (!finals.empty()) {
      detail::SeedStats stats = detail::seed_stats(finals);
      solver_json["mean_final_cost"] = stats.mean;
      solver_json["stddev_final_cost"] = stats.stddev;
      if (best_baseline_total && *best_baseline_total != 0)
        solver_json["improvement_over_best_baseline_pct"] = improvement_pct(
            static_cast<double>(*best_baseline_total), stats.mean);
    }
    experiment["solvers"][plan.id] = std::move(solver_json);
  }

  std::stable_sort(result.runs.begin(), result.runs.end(),
                   [](const RunRecord& a, const RunRecord& b) {
                     if (a.solver_id != b.solver_id)
                       return a.solver_id < b.solver_id;
                     return a.seed < b.seed;
                   });

  timing["total_seconds"] =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start)
          .count();
  result.summary["experiment"] = std::move(experiment);
  result.summary["timing"] = std::move(timing);

  if (!cfg.output_dir.empty()) {
    std::filesystem::path dir(cfg.output_dir);
    write_text_file(dir / "circuit.json", serialize_circuit(result.circuit));
    write_text_file(dir / "network.json", serialize_network(result.network));
    write_text_file(dir / "summary.json", result.summary.dump(2) + "\n");
    if (cfg.write_traces && !result.runs.empty())
      emit_traces(result.runs, dir / "traces");
  }
  return result;
}

}  // namespace qpart
