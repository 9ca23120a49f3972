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

// Command-line driver.
//
// Exit codes: 0 ok, 1 input error, 2 invalid schedule or messages left
// undelivered, 3 budget exhausted without a schedule, 4 bench row not
// accepted, 5 oracle state cap exceeded.

#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "nanroute/bench.h"
#include "nanroute/dynamics.h"
#include "nanroute/io.h"
#include "nanroute/milp.h"
#include "nanroute/solver.h"
#include "nanroute/topology.h"

namespace nanroute {
namespace {

enum Exit {
  kOk = 0,
  kInputError = 1,
  kInvalid = 2,
  kBudget = 3,
  kBenchMismatch = 4,
  kOracleCap = 5,
};

// Thrown for bad inputs that are not tied to a file line.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Inputs {
  std::string network_path;
  std::string traffic_path;
  std::string schedule_path;
  std::optional<int> tmax;
  std::string gateways;
  std::string format = "text";
  std::string out;
};

template <typename T>
T Load(const std::string& path, T (*loader)(const std::string&)) {
  try {
    return loader(path);
  } catch (const ParseError& e) {
    throw ParseError(0, path + ": " + e.what());
  }
}

Network LoadNetworkOrBuiltin(const Inputs& in) {
  Network net =
      in.network_path.empty() ? BuiltinNan11() : Load(in.network_path, LoadNetwork);
  if (in.gateways.empty()) return net;
  std::vector<NodeId> gateways;
  std::stringstream list(in.gateways);
  for (std::string item; std::getline(list, item, ',');) {
    try {
      size_t used = 0;
      int id = std::stoi(item, &used);
      if (used != item.size() || id < 1) throw std::invalid_argument(item);
      gateways.push_back(id - 1);
    } catch (const std::exception&) {
      throw InputError("--gateways: bad node id '" + item + "'");
    }
  }
  try {
    net = net.WithGateways(gateways);
  } catch (const std::out_of_range& e) {
    throw InputError(std::string("--gateways: ") + e.what());
  }
  std::vector<Violation> v = ValidateNetwork(net);
  if (!v.empty()) throw InputError("--gateways: " + v.front().detail);
  return net;
}

TrafficSpec LoadTrafficFor(const Inputs& in, const Network& net) {
  TrafficSpec traffic = Load(in.traffic_path, LoadTraffic);
  if (in.tmax) traffic.horizon = *in.tmax;
  if (!in.gateways.empty()) {
    // Nodes promoted to gateways stop injecting.
    std::erase_if(traffic.injections, [&](const auto& entry) {
      const auto& [node, count] = entry;
      if (node < 0 || node >= net.node_count() || !net.IsGateway(node)) {
        return false;
      }
      if (count > 0) {
        std::cerr << "note: dropping " << count << " message(s) injected at "
                  << "gateway " << node + 1 << '\n';
      }
      return true;
    });
  }
  try {
    CheckTraffic(net, traffic);
  } catch (const std::invalid_argument& e) {
    throw InputError(in.traffic_path + ": " + e.what());
  }
  return traffic;
}

void Emit(const Inputs& in, const std::string& text) {
  if (in.out.empty()) {
    std::cout << text;
  } else {
    WriteFile(in.out, text);
  }
}

bool Json(const Inputs& in) { return in.format == "json"; }

std::string OptionalInt(const std::optional<int>& v) {
  return v ? std::to_string(*v) : "none";
}

nlohmann::ordered_json JsonInt(const std::optional<int>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

// Pads `window` to `period` slots and repeats it.
Schedule Repeat(const Schedule& window, int period, int times) {
  Schedule out;
  for (int k = 0; k < times; ++k) {
    Schedule padded = window;
    padded.resize(std::max<size_t>(window.size(), period));
    out.insert(out.end(), padded.begin(), padded.end());
  }
  while (!out.empty() && out.back().empty()) out.pop_back();
  return out;
}

int RunSolve(const Inputs& in, const std::string& mode, uint64_t seed,
             double time_budget, int64_t node_budget, bool lean, int repeat) {
  Network net = LoadNetworkOrBuiltin(in);
  TrafficSpec traffic = LoadTrafficFor(in, net);
  SolveOptions options{.mode = mode == "heuristic" ? SolveMode::kHeuristic
                                                   : SolveMode::kExact,
                       .node_budget = node_budget,
                       .time_budget = time_budget,
                       .seed = seed,
                       .minimize_transmissions = lean};
  SolveResult r = Solve(net, traffic, options);
  Schedule schedule = r.schedule;
  if (repeat > 1) {
    int period = traffic.period.value_or(HorizonOf(net, traffic));
    if (period < static_cast<int>(schedule.size())) {
      throw InputError("period " + std::to_string(period) +
                       " is shorter than the schedule (" +
                       std::to_string(schedule.size()) + " slots)");
    }
    schedule = Repeat(schedule, period, repeat);
  }
  const int lower_bound = LowerBound(net, InitialQueues(net, traffic));

  if (Json(in)) {
    nlohmann::ordered_json doc;
    doc["delivery_time"] = JsonInt(r.delivery_time);
    doc["undelivered"] = r.undelivered;
    doc["transmissions"] = r.transmissions;
    doc["status"] = std::string(StatusName(r.status));
    doc["lower_bound"] = lower_bound;
    doc["lower_bound_used"] = r.lower_bound_used;
    doc["search_nodes"] = r.search_nodes;
    doc["schedule"] = nlohmann::ordered_json::parse(RenderScheduleJson(schedule));
    if (in.out.empty()) {
      std::cout << doc.dump(2) << '\n';
    } else {
      WriteFile(in.out, RenderScheduleJson(schedule));
      doc.erase("schedule");
      std::cout << doc.dump(2) << '\n';
    }
  } else {
    std::ostringstream summary;
    summary << "delivery_time=" << OptionalInt(r.delivery_time)
            << " undelivered=" << r.undelivered
            << " transmissions=" << r.transmissions
            << " status=" << StatusName(r.status)
            << " lower_bound=" << lower_bound
            << " lower_bound_used=" << r.lower_bound_used
            << " search_nodes=" << r.search_nodes << '\n';
    if (in.out.empty()) {
      std::cout << RenderSchedule(schedule) << summary.str();
    } else {
      WriteFile(in.out, HasJsonExtension(in.out) ? RenderScheduleJson(schedule)
                                                 : RenderSchedule(schedule));
      std::cout << summary.str();
    }
  }
  if (r.status == SolveStatus::kNoSchedule) return kBudget;
  return r.undelivered > 0 ? kInvalid : kOk;
}

int RunValidate(const Inputs& in, const std::string& semantics_name,
                bool require_complete) {
  Network net = LoadNetworkOrBuiltin(in);
  TrafficSpec traffic = LoadTrafficFor(in, net);
  Schedule schedule = Load(in.schedule_path, LoadSchedule);
  Semantics semantics = semantics_name == "operational" ? Semantics::kOperational
                                                        : Semantics::kStrict;
  QueueTrace trace;
  try {
    trace = RunSchedule(net, traffic, schedule, semantics);
  } catch (const ScheduleError& e) {
    if (Json(in)) {
      nlohmann::ordered_json doc;
      doc["valid"] = false;
      doc["slot"] = e.slot();
      doc["rule"] = e.rule();
      doc["error"] = e.what();
      std::cout << doc.dump(2) << '\n';
    } else {
      std::cout << "invalid: " << e.what() << " [rule " << e.rule() << "]\n";
    }
    return kInvalid;
  }
  Metrics m = ComputeMetrics(trace);
  if (Json(in)) {
    nlohmann::ordered_json doc;
    doc["valid"] = true;
    doc["delivery_time"] = JsonInt(m.delivery_time);
    doc["transmissions"] = m.transmissions;
    doc["undelivered"] = m.undelivered_at_end;
    doc["max_queue"] = m.max_queue;
    doc["slots"] = trace.slots();
    std::cout << doc.dump(2) << '\n';
  } else {
    std::cout << "valid, delivery_time=" << OptionalInt(m.delivery_time)
              << ", transmissions=" << m.transmissions
              << ", undelivered=" << m.undelivered_at_end
              << ", max_queue=" << m.max_queue << '\n';
  }
  if (require_complete && m.undelivered_at_end > 0) return kInvalid;
  return kOk;
}

int RunExportLp(const Inputs& in) {
  Network net = LoadNetworkOrBuiltin(in);
  TrafficSpec traffic = LoadTrafficFor(in, net);
  MilpModel model = BuildModel(net, traffic);
  Emit(in, ExportLp(model));
  if (!in.out.empty()) {
    ModelStats stats = ComputeModelStats(model);
    std::cout << "wrote " << in.out
              << ": C=" << stats.vars_by_kind[VarKind::kControl]
              << " Q=" << stats.vars_by_kind[VarKind::kQueue]
              << " d=" << stats.vars_by_kind[VarKind::kIndicator]
              << " rows=" << model.rows().size() << " M=" << model.big_m()
              << '\n';
  }
  return kOk;
}

int RunOracle(const Inputs& in, int64_t cap) {
  Network net = LoadNetworkOrBuiltin(in);
  TrafficSpec traffic = LoadTrafficFor(in, net);
  OracleResult r;
  try {
    r = Oracle(net, traffic, HorizonOf(net, traffic), cap);
  } catch (const OracleCapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kOracleCap;
  }
  if (Json(in)) {
    nlohmann::ordered_json doc;
    doc["min_delivery"] = JsonInt(r.min_delivery);
    doc["min_undelivered"] = r.min_undelivered;
    doc["states"] = r.states;
    doc["witness"] = nlohmann::ordered_json::parse(RenderScheduleJson(r.witness));
    std::cout << doc.dump(2) << '\n';
  } else {
    std::cout << "min_delivery=" << OptionalInt(r.min_delivery)
              << " min_undelivered=" << r.min_undelivered
              << " states=" << r.states << '\n';
  }
  return kOk;
}

int RunBenchCommand(const Inputs& in, const std::string& selector,
                    double time_budget) {
  BenchReport report;
  try {
    report = RunBench(selector, {.time_budget = time_budget});
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  Emit(in, Json(in) ? RenderBenchJson(report) : RenderBenchText(report));
  return report.AllAccepted() ? kOk : kBenchMismatch;
}

int Main(int argc, char** argv) {
  CLI::App app{"Exact routing and link scheduling for slotted wireless mesh "
               "networks"};
  app.require_subcommand(1);
  Inputs in;
  std::string mode = "exact";
  std::string semantics = "strict";
  uint64_t seed = 0;
  double time_budget = 0;
  int64_t node_budget = 0;
  bool lean = false;
  bool require_complete = false;
  int repeat = 1;
  int64_t cap = kDefaultOracleCap;
  std::string selector = "all";

  auto add_common = [&](CLI::App* cmd, bool needs_traffic) {
    cmd->add_option("--network", in.network_path,
                    "network file (default: built-in 11-node network)");
    auto* t = cmd->add_option("--traffic", in.traffic_path, "traffic file");
    if (needs_traffic) t->required();
    cmd->add_option("--tmax", in.tmax, "horizon in slots (overrides tmax)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--gateways", in.gateways,
                    "comma-separated gateway ids, replacing the file's roles");
    cmd->add_option("--format", in.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
  };

  CLI::App* solve = app.add_subcommand("solve", "compute a schedule");
  add_common(solve, true);
  solve->add_option("--mode", mode)->check(CLI::IsMember({"exact", "heuristic"}));
  solve->add_option("--seed", seed, "heuristic tie-breaking seed");
  solve->add_option("--time-budget", time_budget, "seconds, 0 = unlimited")
      ->check(CLI::NonNegativeNumber);
  solve->add_option("--node-budget", node_budget, "search nodes, 0 = unlimited")
      ->check(CLI::NonNegativeNumber);
  solve->add_flag("--min-transmissions", lean,
                  "also minimize transmissions among optimal schedules");
  solve->add_option("--repeat", repeat,
                    "repeat the schedule this many periods")
      ->check(CLI::PositiveNumber);
  solve->add_option("--out", in.out, "schedule output file");

  CLI::App* validate = app.add_subcommand("validate", "replay a schedule");
  add_common(validate, true);
  validate->add_option("--schedule", in.schedule_path)->required();
  validate->add_option("--semantics", semantics)
      ->check(CLI::IsMember({"strict", "operational"}));
  validate->add_flag("--require-complete", require_complete,
                     "fail unless every message is delivered");

  CLI::App* export_lp = app.add_subcommand("export-lp", "write the MILP");
  add_common(export_lp, true);
  export_lp->add_option("--out", in.out, "LP output file");

  CLI::App* oracle = app.add_subcommand("oracle", "exhaustive optimum");
  add_common(oracle, true);
  oracle->add_option("--cap", cap, "state cap")->check(CLI::PositiveNumber);

  CLI::App* bench = app.add_subcommand("bench", "reproduce the experiments");
  bench->add_option("experiment", selector, "1-5, table3 or all");
  bench->add_option("--format", in.format)->check(CLI::IsMember({"text", "json"}));
  bench->add_option("--time-budget", time_budget, "seconds per exact solve")
      ->check(CLI::NonNegativeNumber);
  bench->add_option("--out", in.out, "report output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*solve) {
      return RunSolve(in, mode, seed, time_budget, node_budget, lean, repeat);
    }
    if (*validate) return RunValidate(in, semantics, require_complete);
    if (*export_lp) return RunExportLp(in);
    if (*oracle) return RunOracle(in, cap);
    if (*bench) return RunBenchCommand(in, selector, time_budget);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace
}  // namespace nanroute

int main(int argc, char** argv) { return nanroute::Main(argc, argv); }
