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
#include <cstdlib>
#include <string>
#include <vector>

#include <json.hpp>

#include "qpart/error.hpp"
#include "qpart/schedule.hpp"

namespace qpart {

struct TracePoint {
  std::int64_t iteration = 0;
  std::int64_t current_cost = 0;
  std::int64_t best_cost = 0;
  double temperature = 0.0;  // meaningful only when the run has a temperature
};

/// One solver run: the per-iteration trace plus everything needed to
/// reproduce it. Wall-clock time is kept out of the deterministic summary.
struct RunRecord {
  std::string solver_id;
  std::uint64_t seed = 0;
  CostBreakdown final_cost;
  bool has_temperature = false;
  std::vector<TracePoint> trace;
  double wall_seconds = 0.0;
  nlohmann::json config;  // resolved configuration snapshot
};

namespace detail {

inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace detail

/// CSV with columns `iter,current_cost,best_cost[,temperature]`.
inline std::string trace_to_csv(const RunRecord& record) {
  std::string out = record.has_temperature
                        ? "iter,current_cost,best_cost,temperature\n"
                        : "iter,current_cost,best_cost\n";
  for (const TracePoint& p : record.trace) {
    out += std::to_string(p.iteration);
    out += ',';
    out += std::to_string(p.current_cost);
    out += ',';
    out += std::to_string(p.best_cost);
    if (record.has_temperature) {
      out += ',';
      out += detail::format_double(p.temperature);
    }
    out += '\n';
  }
  return out;
}

/// Parses a trace CSV produced by trace_to_csv (used for round-trip checks).
inline std::vector<TracePoint> parse_trace_csv(const std::string& text,
                                               bool* has_temperature_out = nullptr) {
  std::vector<TracePoint> points;
  std::size_t pos = 0;
  auto next_line = [&](std::string& line) {
    if (pos >= text.size()) return false;
    std::size_t end = text.find('\n', pos);
    if (end == std::string::npos) end = text.size();
    line = text.substr(pos, end - pos);
    pos = end + 1;
    return true;
  };
  std::string header;
  if (!next_line(header)) fail("parse_error", "trace CSV: missing header");
  bool with_temp = header == "iter,current_cost,best_cost,temperature";
  if (!with_temp && header != "iter,current_cost,best_cost")
    fail("parse_error", "trace CSV: unexpected header \"" + header + "\"");
  if (has_temperature_out) *has_temperature_out = with_temp;
  std::string line;
  while (next_line(line)) {
    if (line.empty()) continue;
    TracePoint p;
    char* cursor = nullptr;
    p.iteration = std::strtoll(line.c_str(), &cursor, 10);
    if (*cursor != ',') fail("parse_error", "trace CSV: bad row \"" + line + "\"");
    p.current_cost = std::strtoll(cursor + 1, &cursor, 10);
    if (*cursor != ',') fail("parse_error", "trace CSV: bad row \"" + line + "\"");
    p.best_cost = std::strtoll(cursor + 1, &cursor, 10);
    if (with_temp) {
      if (*cursor != ',')
        fail("parse_error", "trace CSV: bad row \"" + line + "\"");
      p.temperature = std::strtod(cursor + 1, &cursor);
    }
    points.push_back(p);
  }
  return points;
}

/// Aggregate CSV across same-length runs: per-iteration mean and population
/// standard deviation of the best-cost column.
inline std::string aggregate_traces_to_csv(
    const std::vector<const RunRecord*>& runs) {
  std::string out = "iter,mean_best_cost,stddev_best_cost\n";
  if (runs.empty()) return out;
  const std::size_t rows = runs.front()->trace.size();
  for (const RunRecord* r : runs)
    if (r->trace.size() != rows)
      fail("invalid_argument", "aggregate: traces have different lengths");
  const double n = static_cast<double>(runs.size());
  for (std::size_t i = 0; i < rows; ++i) {
    double mean = 0.0;
    for (const RunRecord* r : runs)
      mean += static_cast<double>(r->trace[i].best_cost);
    mean /= n;
    double var = 0.0;
    for (const RunRecord* r : runs) {
      double d = static_cast<double>(r->trace[i].best_cost) - mean;
      var += d * d;
    }
    var /= n;
    out += std::to_string(runs.front()->trace[i].iteration);
    out += ',';
    out += detail::format_double(mean);
    out += ',';
    out += detail::format_double(std::sqrt(var));
    out += '\n';
  }
  return out;
}

}  // namespace qpart
