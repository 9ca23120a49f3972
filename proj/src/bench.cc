// Copyright 2026 The nanroute Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nanroute/bench.h"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "nanroute/dynamics.h"
#include "nanroute/fixtures.h"
#include "nanroute/solver.h"

namespace nanroute {
namespace {

constexpr int kUnitHorizon = 12;

// Second gateway at node k+2, reference delivery time and split
// (to node 1, to the second gateway).
struct GatewayRow {
  int delivery;
  int to_first;
  int to_second;
};
constexpr std::array<GatewayRow, 10> kSecondGateway = {{
    {7, 2, 7}, {9, 5, 4}, {5, 5, 4}, {5, 5, 4}, {5, 5, 4},
    {5, 4, 5}, {7, 4, 5}, {8, 4, 5}, {8, 5, 4}, {8, 4, 5},
}};

class Timer {
 public:
  double Seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

BenchRow Row(std::string experiment, std::string quantity, int expected,
             std::optional<int> observed, double seconds,
             std::string relation = "=") {
  BenchRow row;
  row.experiment = std::move(experiment);
  row.quantity = std::move(quantity);
  row.expected = expected;
  row.relation = std::move(relation);
  row.observed = observed;
  row.match = observed && (row.relation == "=" ? *observed == expected
                                               : *observed <= expected);
  row.accepted = row.match;
  row.seconds = seconds;
  return row;
}

std::string SolveNote(const SolveResult& r) {
  return "status=" + std::string(StatusName(r.status)) +
         " bound=" + std::to_string(r.lower_bound_used) +
         " transmissions=" + std::to_string(r.transmissions) +
         " nodes=" + std::to_string(r.search_nodes);
}

SolveOptions Exact(const BenchOptions& options) {
  return {.mode = SolveMode::kExact, .time_budget = options.time_budget};
}

void ReplayRows(std::vector<BenchRow>& rows, const std::string& experiment,
                const Network& net, const TrafficSpec& traffic,
                const Schedule& schedule, int delivery,
                std::optional<int> transmissions, int max_queue,
                std::string max_queue_relation) {
  Timer timer;
  Metrics m;
  std::string error;
  try {
    m = ComputeMetrics(RunSchedule(net, traffic, schedule, Semantics::kStrict));
  } catch (const std::exception& e) {
    error = e.what();
  }
  double seconds = timer.Seconds();
  const size_t first = rows.size();
  auto observed = [&](std::optional<int> v) {
    return error.empty() ? v : std::nullopt;
  };
  rows.push_back(Row(experiment, "replay delivery_time", delivery,
                     observed(m.delivery_time), seconds));
  if (transmissions) {
    rows.push_back(Row(experiment, "replay transmissions", *transmissions,
                       observed(m.transmissions), seconds));
  }
  if (max_queue > 0) {
    rows.push_back(Row(experiment, "replay max_queue", max_queue,
                       observed(m.max_queue), seconds, max_queue_relation));
  }
  if (!error.empty()) {
    for (size_t k = first; k < rows.size(); ++k) {
      rows[k].note = "invalid schedule: " + error;
    }
  }
}

// Optimal delivery time; accepted when proven, or when it meets the bound.
void SolverDeliveryRow(std::vector<BenchRow>& rows, const std::string& experiment,
                       const Network& net, const TrafficSpec& traffic,
                       int expected, const BenchOptions& options) {
  Timer timer;
  SolveResult r = SolveExact(net, traffic, Exact(options));
  BenchRow row = Row(experiment, "exact delivery_time", expected,
                     r.delivery_time, timer.Seconds());
  row.accepted = row.match && (r.status == SolveStatus::kOptimal ||
                               r.delivery_time == r.lower_bound_used);
  row.note = SolveNote(r);
  rows.push_back(std::move(row));
}

void Experiment1(std::vector<BenchRow>& rows, const BenchOptions& options) {
  Network net = BuiltinNan11();
  ReplayRows(rows, "1", net, fixtures::UnequalTraffic(),
             fixtures::UnequalSchedule(), 24, 82, 6, "=");
  SolverDeliveryRow(rows, "1", net, fixtures::UnequalTraffic(), 24, options);
}

void Experiment2(std::vector<BenchRow>& rows, const BenchOptions&) {
  ReplayRows(rows, "2", BuiltinNan11(), fixtures::CappedTraffic(),
             fixtures::CappedSchedule(), 24, 88, 3, "<=");
}

void Experiment3(std::vector<BenchRow>& rows, const BenchOptions& options) {
  SolverDeliveryRow(rows, "3", fixtures::RelayNan11(), fixtures::RelayTraffic(),
                    23, options);
}

void Experiment4(std::vector<BenchRow>& rows, const BenchOptions& options) {
  Timer timer;
  SolveResult r =
      SolveExact(BuiltinNan11(), fixtures::UnequalTraffic(20), Exact(options));
  std::optional<int> observed;
  if (r.status != SolveStatus::kNoSchedule) observed = r.undelivered;
  BenchRow row = Row("4", "exact undelivered", 5, observed, timer.Seconds());
  row.accepted = observed && (*observed == 4 || *observed == 5) &&
                 r.status == SolveStatus::kOptimal;
  row.note = std::string(row.match ? "agrees" : "disagrees") +
             " with the reference value on the reconstructed topology; " +
             SolveNote(r);
  rows.push_back(std::move(row));
}

void Experiment5(std::vector<BenchRow>& rows, const BenchOptions& options) {
  Network net = BuiltinNan11();
  TrafficSpec traffic = fixtures::UnitTraffic(net, kUnitHorizon);
  SolverDeliveryRow(rows, "5", net, traffic, 10, options);
  ReplayRows(rows, "5", net, traffic, fixtures::UnitSchedule(), 10,
             std::nullopt, 0, "=");
}

void SecondGateway(std::vector<BenchRow>& rows, const BenchOptions& options) {
  Network base = BuiltinNan11();
  for (int k = 0; k < 10; ++k) {
    const NodeId second = k + 1;
    const GatewayRow& ref = kSecondGateway[k];
    std::vector<NodeId> gateways{0, second};
    Network net = base.WithGateways(gateways);
    TrafficSpec traffic = fixtures::UnitTraffic(net, kUnitHorizon);
    Timer timer;
    SolveResult r = SolveExact(net, traffic, Exact(options));
    BenchRow row = Row("table3",
                       "exact delivery_time, gateways 1," +
                           std::to_string(second + 1),
                       ref.delivery, r.delivery_time, timer.Seconds());
    const bool proven = r.status == SolveStatus::kOptimal;
    // Rows that meet ceil(9/2) must be exact; the others must not exceed the
    // reference.
    const bool at_bound = ref.delivery == 5;
    int to_first = 0;
    int to_second = 0;
    try {
      QueueTrace trace =
          RunSchedule(net, traffic, r.schedule, Semantics::kStrict);
      to_first = trace.delivered_per_node[0];
      to_second = trace.delivered_per_node[second];
    } catch (const std::exception&) {
      row.observed.reset();
    }
    const bool split_ok = to_first + to_second == 9;
    if (at_bound) {
      row.accepted = row.match && proven && split_ok;
    } else {
      row.accepted = row.observed && *row.observed <= ref.delivery && proven &&
                     split_ok;
    }
    std::ostringstream note;
    note << "split " << to_first << "|" << to_second << " (reference "
         << ref.to_first << "|" << ref.to_second << ")";
    if (row.observed && *row.observed < ref.delivery) {
      note << "; below the reference value: reconstruction artifact";
    }
    note << "; " << SolveNote(r);
    row.note = note.str();
    rows.push_back(std::move(row));
  }
}

}  // namespace

bool BenchReport::AllAccepted() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const BenchRow& r) { return r.accepted; });
}

BenchReport RunBench(std::string_view selector, const BenchOptions& options) {
  using Runner = std::function<void(std::vector<BenchRow>&, const BenchOptions&)>;
  const std::vector<std::pair<std::string, Runner>> experiments = {
      {"1", Experiment1}, {"2", Experiment2},     {"3", Experiment3},
      {"4", Experiment4}, {"5", Experiment5}, {"table3", SecondGateway},
  };
  BenchReport report;
  bool found = false;
  for (const auto& [name, run] : experiments) {
    if (selector == "all" || selector == name) {
      run(report.rows, options);
      found = true;
    }
  }
  if (!found) {
    throw std::invalid_argument("unknown experiment '" + std::string(selector) +
                                "' (expected 1-5, table3 or all)");
  }
  return report;
}

std::string RenderBenchText(const BenchReport& report) {
  std::vector<std::array<std::string, 8>> cells;
  cells.push_back({"experiment", "quantity", "expected", "observed", "match",
                   "accepted", "seconds", "note"});
  for (const BenchRow& r : report.rows) {
    std::ostringstream secs;
    secs << std::fixed << std::setprecision(3) << r.seconds;
    cells.push_back({r.experiment, r.quantity,
                     (r.relation == "=" ? "" : r.relation) +
                         std::to_string(r.expected),
                     r.observed ? std::to_string(*r.observed) : "-",
                     r.match ? "yes" : "no", r.accepted ? "yes" : "no",
                     secs.str(), r.note});
  }
  std::array<size_t, 8> width{};
  for (const auto& row : cells) {
    for (size_t c = 0; c < row.size(); ++c) {
      width[c] = std::max(width[c], row[c].size());
    }
  }
  std::ostringstream out;
  for (const auto& row : cells) {
    std::string line;
    for (size_t c = 0; c < row.size(); ++c) {
      std::string cell = row[c];
      if (c + 1 < row.size()) cell.resize(width[c] + 2, ' ');
      line += cell;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
  out << (report.AllAccepted() ? "all rows accepted" : "some rows NOT accepted")
      << '\n';
  return out.str();
}

std::string RenderBenchJson(const BenchReport& report) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const BenchRow& r : report.rows) {
    nlohmann::ordered_json row;
    row["experiment"] = r.experiment;
    row["quantity"] = r.quantity;
    row["expected"] = r.expected;
    row["relation"] = r.relation;
    row["observed"] =
        r.observed ? nlohmann::ordered_json(*r.observed) : nullptr;
    row["match"] = r.match;
    row["accepted"] = r.accepted;
    row["seconds"] = r.seconds;
    row["note"] = r.note;
    rows.push_back(std::move(row));
  }
  nlohmann::ordered_json doc;
  doc["rows"] = std::move(rows);
  doc["all_accepted"] = report.AllAccepted();
  return doc.dump(2) + "\n";
}

}  // namespace nanroute
