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

// Time-expanded mixed-integer model of the routing and link scheduling
// problem, and its LP-format export.
//
// Variables (node ids 1-based in names):
//   C_<i>_<j>_t<t>  binary, link i->j active in slot t      t = 0..T-1
//   Q_<i>_t<t>      integer >= 0, queue of node i at column  t = 0..T
//   d_t<t>          binary, 1 only if the network is empty   t = 1..T
// C variables exist only for directed edges of the network.
//
// Objective: minimize -sum_t d_t + sum_i Q_<i>_t<T>. Every row carries the tag
// of the formulation constraint it encodes ("3.1" ... "3.16").

#ifndef NANROUTE_MILP_H_
#define NANROUTE_MILP_H_

#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "nanroute/dynamics.h"
#include "nanroute/topology.h"

namespace nanroute {

enum class VarKind { kControl, kQueue, kIndicator };

struct Variable {
  std::string name;
  VarKind kind;
};

struct Term {
  int var;
  long long coef;
};

enum class Sense { kLessEqual, kEqual };

struct Row {
  std::string name;
  std::string tag;
  std::vector<Term> terms;
  Sense sense;
  long long rhs;
};

class MilpModel {
 public:
  int horizon() const { return horizon_; }
  long long big_m() const { return big_m_; }
  const std::vector<Variable>& variables() const { return variables_; }
  const std::vector<Row>& rows() const { return rows_; }
  const std::vector<Term>& objective() const { return objective_; }

  // -1 when the variable does not exist (e.g. C on a non-edge).
  int ControlVar(NodeId from, NodeId to, int slot) const;
  int QueueVar(NodeId node, int column) const;
  int IndicatorVar(int column) const;
  int VarIndex(const std::string& name) const;

  // Directed links that carry a C variable, in variable order.
  const std::vector<Link>& links() const { return links_; }
  int node_count() const { return node_count_; }

 private:
  friend MilpModel BuildModel(const Network&, const TrafficSpec&);

  int AddVar(std::string name, VarKind kind);

  int horizon_ = 0;
  int node_count_ = 0;
  long long big_m_ = 1;
  std::vector<Variable> variables_;
  std::vector<Row> rows_;
  std::vector<Term> objective_;
  std::vector<Link> links_;
  std::map<Link, int> link_index_;
  std::unordered_map<std::string, int> by_name_;
};

// Throws std::invalid_argument for invalid traffic (see CheckTraffic).
MilpModel BuildModel(const Network& net, const TrafficSpec& traffic);

// CPLEX LP text. Byte-stable for a given model.
std::string ExportLp(const MilpModel& model);

struct ModelStats {
  std::map<VarKind, int> vars_by_kind;
  std::map<std::string, int> rows_by_tag;
};
ModelStats ComputeModelStats(const MilpModel& model);

using Assignment = std::map<std::string, double>;

// Parses whitespace-separated "name value" lines ('#' comments allowed).
Assignment ParseSolution(std::string_view text);

// Slot-t activation = the links whose C value is 1. Throws
// std::invalid_argument when a C variable is missing or fractional, and
// ScheduleError when a slot violates the one-link-per-node rule.
Schedule SolutionToSchedule(const Network& net, const MilpModel& model,
                            const Assignment& assignment);

// Assignment induced by replaying `schedule` (strict semantics): C from the
// activations, Q from the queue trace (held constant after the last slot),
// d_t = 1 iff the network is empty at column t.
Assignment AssignmentFromSchedule(const Network& net,
                                  const TrafficSpec& traffic,
                                  const MilpModel& model,
                                  const Schedule& schedule);

struct RowCheck {
  std::vector<std::string> violated_rows;
  std::vector<std::string> domain_errors;  // missing / out-of-domain values
  double objective = 0;
  bool feasible() const {
    return violated_rows.empty() && domain_errors.empty();
  }
};
RowCheck CheckAssignment(const MilpModel& model, const Assignment& assignment);

}  // namespace nanroute

#endif  // NANROUTE_MILP_H_
