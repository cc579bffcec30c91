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
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qpart/qpart.hpp"

namespace {

using nlohmann::json;

int emit_error(const std::string& type, const std::string& message) {
  json err = {{"error", {{"type", type}, {"message", message}}}};
  std::cerr << err.dump() << std::endl;
  return 1;
}

struct RunArgs {
  std::string config_path;
};

int cmd_run(const RunArgs& args) {
  const std::filesystem::path path(args.config_path);
  qpart::ExperimentConfig cfg = qpart::parse_experiment_config(
      qpart::read_text_file(path), path.parent_path());
  qpart::ExperimentResult result = qpart::run_experiment(cfg);
  std::cout << result.summary.dump(2) << std::endl;
  return 0;
}

struct GenCircuitArgs {
  int qubits = 0;
  int depth = 0;
  double cx_fraction = 0.15;
  std::uint64_t seed = 0;
  std::string out;
};

int cmd_gen_circuit(const GenCircuitArgs& args) {
  qpart::Circuit c = qpart::generate_random(args.qubits, args.depth,
                                            args.cx_fraction, args.seed);
  qpart::write_text_file(args.out, qpart::serialize_circuit(c));
  qpart::LayeredCircuit lc = qpart::layerize(c);
  int cx_gates = 0;
  for (const auto& g : c.gates)
    if (g.kind == qpart::GateKind::cx) ++cx_gates;
  json info = {{"written", args.out},
               {"qubits", c.num_qubits},
               {"depth", lc.depth()},
               {"gate_count", c.gates.size()},
               {"cx_gates", cx_gates}};
  std::cout << info.dump() << std::endl;
  return 0;
}

struct GenNetworkArgs {
  std::string topology;
  int nodes = 0;
  int rows = 0;
  int cols = 0;
  int cap_min = 2;
  int cap_max = 5;
  int min_total = 0;
  std::uint64_t seed = 0;
  std::string out;
};

int cmd_gen_network(const GenNetworkArgs& args) {
  qpart::Topology topo;
  topo.kind = qpart::topology_kind_from_string(args.topology);
  if (topo.kind == qpart::TopologyKind::custom)
    qpart::fail("invalid_argument",
                "gen-network supports ring, grid, and star topologies");
  if (topo.kind == qpart::TopologyKind::grid) {
    topo.rows = args.rows;
    topo.cols = args.cols;
    if (topo.rows == 0 && topo.cols == 0) {
      int side = static_cast<int>(std::lround(std::sqrt(args.nodes)));
      topo.rows = topo.cols = side;
    }
  }
  qpart::Network net = qpart::make_network(
      topo, qpart::generate_capacities(args.nodes, args.cap_min, args.cap_max,
                                       args.min_total, args.seed));
  qpart::write_text_file(args.out, qpart::serialize_network(net));
  json info = {{"written", args.out},
               {"nodes", net.num_nodes},
               {"total_capacity", net.total_capacity()}};
  std::cout << info.dump() << std::endl;
  return 0;
}

struct CostArgs {
  std::string circuit_path;
  std::string network_path;
  std::string schedule_path;
  std::int64_t lambda = qpart::kDefaultLambda;
  std::string penalty_mode = "per_qpu";
};

int cmd_cost(const CostArgs& args) {
  qpart::Circuit c = qpart::parse_circuit(qpart::read_text_file(args.circuit_path));
  qpart::Network net =
      qpart::parse_network(qpart::read_text_file(args.network_path));
  qpart::AssignmentSchedule s =
      qpart::parse_schedule(qpart::read_text_file(args.schedule_path));
  qpart::validate(s, net);
  qpart::LayeredCircuit lc = qpart::layerize(c);
  qpart::CostBreakdown b =
      qpart::cost(s, lc, net, args.lambda,
                  qpart::penalty_mode_from_string(args.penalty_mode));
  json out = {{"remote_cx_cost", b.remote_cx_cost},
              {"teleport_cost", b.teleport_cost},
              {"penalty_count", b.penalty_count},
              {"total", b.total}};
  std::cout << out.dump() << std::endl;
  return 0;
}

struct OracleArgs {
  std::string circuit_path;
  std::string network_path;
  std::int64_t lambda = qpart::kDefaultLambda;
  std::string penalty_mode = "per_qpu";
};

int cmd_oracle(const OracleArgs& args) {
  qpart::Circuit c = qpart::parse_circuit(qpart::read_text_file(args.circuit_path));
  qpart::Network net =
      qpart::parse_network(qpart::read_text_file(args.network_path));
  qpart::LayeredCircuit lc = qpart::layerize(c);
  qpart::OracleResult r = qpart::brute_force_optimum(
      lc, net, args.lambda, qpart::penalty_mode_from_string(args.penalty_mode));
  json assign = json::array();
  for (int q = 0; q < r.argmin.num_qubits; ++q) {
    json row = json::array();
    for (int t = 0; t < r.argmin.num_steps; ++t) row.push_back(r.argmin.at(q, t));
    assign.push_back(std::move(row));
  }
  json out = {{"min_cost", r.min_cost}, {"assign", std::move(assign)}};
  std::cout << out.dump() << std::endl;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Capacity-aware qubit assignment for distributed quantum "
               "computing"};
  app.require_subcommand(1);

  RunArgs run_args;
  CLI::App* run = app.add_subcommand("run", "Run an experiment from a config");
  run->add_option("--config", run_args.config_path, "Experiment config JSON")
      ->required();

  GenCircuitArgs gc;
  CLI::App* gen_circuit =
      app.add_subcommand("gen-circuit", "Generate a seeded random circuit");
  gen_circuit->add_option("--qubits", gc.qubits, "Number of qubits")->required();
  gen_circuit->add_option("--depth", gc.depth, "Target depth")->required();
  gen_circuit->add_option("--cx-fraction", gc.cx_fraction,
                          "Fraction of qubits in CX pairs per layer");
  gen_circuit->add_option("--seed", gc.seed, "Generator seed")->required();
  gen_circuit->add_option("--out", gc.out, "Output path")->required();

  GenNetworkArgs gn;
  CLI::App* gen_network =
      app.add_subcommand("gen-network", "Generate a network with random "
                                        "capacities");
  gen_network->add_option("--topology", gn.topology, "ring|grid|star")
      ->required();
  gen_network->add_option("--nodes", gn.nodes, "Number of QPUs")->required();
  gen_network->add_option("--rows", gn.rows, "Grid rows");
  gen_network->add_option("--cols", gn.cols, "Grid cols");
  gen_network->add_option("--cap-min", gn.cap_min, "Minimum QPU capacity");
  gen_network->add_option("--cap-max", gn.cap_max, "Maximum QPU capacity");
  gen_network->add_option("--min-total", gn.min_total,
                          "Resample until total capacity reaches this");
  gen_network->add_option("--seed", gn.seed, "Generator seed")->required();
  gen_network->add_option("--out", gn.out, "Output path")->required();

  CostArgs ca;
  CLI::App* cost_cmd =
      app.add_subcommand("cost", "Evaluate a schedule's communication cost");
  cost_cmd->add_option("--circuit", ca.circuit_path, "Circuit file")->required();
  cost_cmd->add_option("--network", ca.network_path, "Network file")->required();
  cost_cmd->add_option("--schedule", ca.schedule_path, "Schedule file")
      ->required();
  cost_cmd->add_option("--lambda", ca.lambda, "Capacity penalty weight");
  cost_cmd->add_option("--penalty-mode", ca.penalty_mode, "per_qpu|per_step");

  OracleArgs oa;
  CLI::App* oracle_cmd = app.add_subcommand(
      "oracle", "Exhaustive optimum for tiny instances");
  oracle_cmd->add_option("--circuit", oa.circuit_path, "Circuit file")
      ->required();
  oracle_cmd->add_option("--network", oa.network_path, "Network file")
      ->required();
  oracle_cmd->add_option("--lambda", oa.lambda, "Capacity penalty weight");
  oracle_cmd->add_option("--penalty-mode", oa.penalty_mode,
                         "per_qpu|per_step");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    emit_error("cli", e.what());
    return e.get_exit_code() == 0 ? 1 : e.get_exit_code();
  }

  try {
    if (run->parsed()) return cmd_run(run_args);
    if (gen_circuit->parsed()) return cmd_gen_circuit(gc);
    if (gen_network->parsed()) return cmd_gen_network(gn);
    if (cost_cmd->parsed()) return cmd_cost(ca);
    if (oracle_cmd->parsed()) return cmd_oracle(oa);
  } catch (const qpart::Error& e) {
    return emit_error(e.kind(), e.what());
  } catch (const std::exception& e) {
    return emit_error("internal", e.what());
  }
  return 0;
}
