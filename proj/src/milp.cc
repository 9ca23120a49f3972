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

#include "nanroute/milp.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "text_util.h"

namespace nanroute {
namespace {

std::string Id(NodeId i) { return std::to_string(i + 1); }

std::string ControlName(NodeId from, NodeId to, int t) {
  return "C_" + Id(from) + "_" + Id(to) + "_t" + std::to_string(t);
}
std::string QueueName(NodeId i, int t) {
  return "Q_" + Id(i) + "_t" + std::to_string(t);
}
std::string IndicatorName(int t) { return "d_t" + std::to_string(t); }

constexpr int kTermsPerLine = 8;

void WriteExpression(std::ostringstream& out, const MilpModel& model,
                     const std::vector<Term>& terms) {
  int on_line = 0;
  bool first = true;
  for (const Term& term : terms) {
    if (term.coef == 0) continue;
    if (on_line == kTermsPerLine) {
      out << "\n   ";
      on_line = 0;
    }
    long long mag = term.coef < 0 ? -term.coef : term.coef;
    if (first) {
      if (term.coef < 0) out << "- ";
    } else {
      out << (term.coef < 0 ? " - " : " + ");
    }
    if (mag != 1) out << mag << ' ';
    out << model.variables()[term.var].name;
    first = false;
    ++on_line;
  }
  if (first) out << "0 " << model.variables().front().name;
}

}  // namespace

int MilpModel::AddVar(std::string name, VarKind kind) {
  int index = static_cast<int>(variables_.size());
  by_name_.emplace(name, index);
  variables_.push_back({std::move(name), kind});
  return index;
}

int MilpModel::ControlVar(NodeId from, NodeId to, int slot) const {
  auto it = link_index_.find({from, to});
  if (it == link_index_.end() || slot < 0 || slot >= horizon_) return -1;
  return slot * static_cast<int>(links_.size()) + it->second;
}

int MilpModel::QueueVar(NodeId node, int column) const {
  if (node < 0 || node >= node_count_ || column < 0 || column > horizon_) {
    return -1;
  }
  return horizon_ * static_cast<int>(links_.size()) +
         column * node_count_ + node;
}

int MilpModel::IndicatorVar(int column) const {
  if (column < 1 || column > horizon_) return -1;
  return horizon_ * static_cast<int>(links_.size()) +
         (horizon_ + 1) * node_count_ + (column - 1);
}

int MilpModel::VarIndex(const std::string& name) const {
  auto it = by_name_.find(name);
  return it == by_name_.end() ? -1 : it->second;
}

MilpModel BuildModel(const Network& net, const TrafficSpec& traffic) {
  CheckTraffic(net, traffic);
  MilpModel m;
  const int n = net.node_count();
  const int horizon = HorizonOf(net, traffic);
  m.horizon_ = horizon;
  m.node_count_ = n;
  m.big_m_ = std::max(1, traffic.TotalMessages());

  for (const Edge& e : net.edges()) {
    m.links_.push_back({e.first, e.second});
    m.links_.push_back({e.second, e.first});
  }
  std::sort(m.links_.begin(), m.links_.end());
  for (size_t k = 0; k < m.links_.size(); ++k) {
    m.link_index_[m.links_[k]] = static_cast<int>(k);
  }

  // Variable order is relied on by ControlVar/QueueVar/IndicatorVar.
  for (int t = 0; t < horizon; ++t) {
    for (const Link& l : m.links_) {
      m.AddVar(ControlName(l.from, l.to, t), VarKind::kControl);
    }
  }
  for (int t = 0; t <= horizon; ++t) {
    for (NodeId i = 0; i < n; ++i) m.AddVar(QueueName(i, t), VarKind::kQueue);
  }
  for (int t = 1; t <= horizon; ++t) {
    m.AddVar(IndicatorName(t), VarKind::kIndicator);
  }

  const std::vector<int> q0 = InitialQueues(net, traffic);
  const Limits limits = ResolveLimits(net, traffic);
  auto add_row = [&](std::string name, std::string tag, std::vector<Term> terms,
                     Sense sense, long long rhs) {
    m.rows_.push_back(
        {std::move(name), std::move(tag), std::move(terms), sense, rhs});
  };

  // 3.1: gateway queues are zero, so a gateway has nothing to send either.
  for (NodeId g = 0; g < n; ++g) {
    if (!net.IsGateway(g)) continue;
    for (int t = 0; t <= horizon; ++t) {
      add_row("c3_1_n" + Id(g) + "_t" + std::to_string(t), "3.1",
              {{m.QueueVar(g, t), 1}}, Sense::kEqual, 0);
    }
    if (net.neighbors(g).empty()) continue;
    for (int t = 0; t < horizon; ++t) {
      std::vector<Term> out;
      for (NodeId j : net.neighbors(g)) out.push_back({m.ControlVar(g, j, t), 1});
      add_row("c3_1_out_n" + Id(g) + "_t" + std::to_string(t), "3.1",
              std::move(out), Sense::kEqual, 0);
    }
  }
  // 3.2 / 3.3: initial column.
  for (NodeId i = 0; i < n; ++i) {
    if (net.role(i) == NodeRole::kSource) {
      add_row("c3_2_n" + Id(i), "3.2", {{m.QueueVar(i, 0), 1}}, Sense::kEqual,
              q0[i]);
    } else if (net.role(i) == NodeRole::kRelay) {
      add_row("c3_3_n" + Id(i), "3.3", {{m.QueueVar(i, 0), 1}}, Sense::kEqual,
              0);
    }
  }
  // 3.5 needs no rows: non-edges carry no C variable.
  // 3.6: flow balance on every non-gateway node.
  for (int t = 1; t <= horizon; ++t) {
    for (NodeId i = 0; i < n; ++i) {
      if (net.IsGateway(i)) continue;
      std::vector<Term> terms{{m.QueueVar(i, t), 1}, {m.QueueVar(i, t - 1), -1}};
      for (NodeId k : net.neighbors(i)) {
        terms.push_back({m.ControlVar(k, i, t - 1), -1});
      }
      for (NodeId j : net.neighbors(i)) {
        terms.push_back({m.ControlVar(i, j, t - 1), 1});
      }
      add_row("c3_6_n" + Id(i) + "_t" + std::to_string(t), "3.6",
              std::move(terms), Sense::kEqual, 0);
    }
  }
  // 3.7: each node on at most one active link per slot.
  for (int t = 0; t < horizon; ++t) {
    for (NodeId i = 0; i < n; ++i) {
      std::vector<Term> terms;
      for (NodeId k : net.neighbors(i)) terms.push_back({m.ControlVar(k, i, t), 1});
      for (NodeId j : net.neighbors(i)) terms.push_back({m.ControlVar(i, j, t), 1});
      add_row("c3_7_n" + Id(i) + "_t" + std::to_string(t), "3.7",
              std::move(terms), Sense::kLessEqual, 1);
    }
  }
  // 3.8: half duplex, one row per undirected edge.
  for (int t = 0; t < horizon; ++t) {
    for (const Edge& e : net.edges()) {
      add_row("c3_8_e" + Id(e.first) + "_" + Id(e.second) + "_t" +
                  std::to_string(t),
              "3.8",
              {{m.ControlVar(e.first, e.second, t), 1},
               {m.ControlVar(e.second, e.first, t), 1}},
              Sense::kLessEqual, 1);
    }
  }
  // 3.9: optional queue bounds.
  for (NodeId i = 0; i < n; ++i) {
    if (limits.cap[i] == Limits::kNoCap) continue;
    for (int t = 0; t <= horizon; ++t) {
      add_row("c3_9_n" + Id(i) + "_t" + std::to_string(t), "3.9",
              {{m.QueueVar(i, t), 1}}, Sense::kLessEqual, limits.cap[i]);
    }
  }
  // 3.12: sum_i Q_i_t + M d_t <= M.
  for (int t = 1; t <= horizon; ++t) {
    std::vector<Term> terms;
    for (NodeId i = 0; i < n; ++i) terms.push_back({m.QueueVar(i, t), 1});
    terms.push_back({m.IndicatorVar(t), m.big_m_});
    add_row("c3_12_t" + std::to_string(t), "3.12", std::move(terms),
            Sense::kLessEqual, m.big_m_);
  }
  // 3.16: compromised queues pinned at their initial size.
  for (NodeId i = 0; i < n; ++i) {
    if (!limits.frozen[i]) continue;
    for (int t = 0; t <= horizon; ++t) {
      add_row("c3_16_n" + Id(i) + "_t" + std::to_string(t), "3.16",
              {{m.QueueVar(i, t), 1}}, Sense::kEqual, q0[i]);
    }
  }

  for (int t = 1; t <= horizon; ++t) m.objective_.push_back({m.IndicatorVar(t), -1});
  for (NodeId i = 0; i < n; ++i) {
    m.objective_.push_back({m.QueueVar(i, horizon), 1});
  }
  return m;
}

std::string ExportLp(const MilpModel& model) {
  std::ostringstream out;
  out << "\\ Slotted-time routing and link scheduling, T = " << model.horizon()
      << ", M = " << model.big_m() << "\n";
  out << "Minimize\n obj: ";
  WriteExpression(out, model, model.objective());
  out << "\nSubject To\n";
  for (const Row& row : model.rows()) {
    out << ' ' << row.name << ": ";
    WriteExpression(out, model, row.terms);
    out << (row.sense == Sense::kEqual ? " = " : " <= ") << row.rhs << '\n';
  }
  out << "Bounds\n";
  for (const Variable& v : model.variables()) {
    if (v.kind == VarKind::kQueue) out << ' ' << v.name << " >= 0\n";
  }
  out << "General\n";
  for (const Variable& v : model.variables()) {
    if (v.kind == VarKind::kQueue) out << ' ' << v.name << '\n';
  }
  out << "Binary\n";
  for (const Variable& v : model.variables()) {
    if (v.kind != VarKind::kQueue) out << ' ' << v.name << '\n';
  }
  out << "End\n";
  return out.str();
}

ModelStats ComputeModelStats(const MilpModel& model) {
  ModelStats stats;
  for (VarKind kind :
       {VarKind::kControl, VarKind::kQueue, VarKind::kIndicator}) {
    stats.vars_by_kind[kind] = 0;
  }
  for (const char* tag :
       {"3.1", "3.2", "3.3", "3.5", "3.6", "3.7", "3.8", "3.9", "3.12", "3.16"}) {
    stats.rows_by_tag[tag] = 0;
  }
  for (const Variable& v : model.variables()) ++stats.vars_by_kind[v.kind];
  for (const Row& row : model.rows()) ++stats.rows_by_tag[row.tag];
  return stats;
}

Assignment ParseSolution(std::string_view text) {
  Assignment out;
  internal::ForEachStatement(text, [&](int line, const auto& tok) {
    if (tok.size() != 2) throw ParseError(line, "expected '<name> <value>'");
    std::string value(tok[1]);
    size_t used = 0;
    double v = 0;
    try {
      v = std::stod(value, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != value.size()) {
      throw ParseError(line, "bad value '" + value + "'");
    }
    out[std::string(tok[0])] = v;
  });
  return out;
}

Schedule SolutionToSchedule(const Network& net, const MilpModel& model,
                            const Assignment& assignment) {
  Schedule schedule(model.horizon());
  for (int t = 0; t < model.horizon(); ++t) {
    std::vector<Link> active;
    for (const Link& l : model.links()) {
      const std::string& name =
          model.variables()[model.ControlVar(l.from, l.to, t)].name;
      auto it = assignment.find(name);
      if (it == assignment.end()) {
        throw std::invalid_argument("missing value for " + name);
      }
      double v = it->second;
      if (std::abs(v) <= 1e-6) continue;
      if (std::abs(v - 1.0) > 1e-6) {
        throw std::invalid_argument("fractional value for " + name);
      }
      active.push_back(l);
    }
    schedule[t] = MakeActivation(std::move(active));
    std::vector<Violation> violations = ValidateActivation(net, schedule[t]);
    if (!violations.empty()) {
      throw ScheduleError(t, violations.front().rule,
                          violations.front().detail);
    }
  }
  // Trailing empty slots carry no information.
  while (!schedule.empty() && schedule.back().empty()) schedule.pop_back();
  return schedule;
}

Assignment AssignmentFromSchedule(const Network& net,
                                  const TrafficSpec& traffic,
                                  const MilpModel& model,
                                  const Schedule& schedule) {
  QueueTrace trace = RunSchedule(net, traffic, schedule, Semantics::kStrict);
  Assignment out;
  for (int t = 0; t < model.horizon(); ++t) {
    for (const Link& l : model.links()) {
      out[model.variables()[model.ControlVar(l.from, l.to, t)].name] = 0.0;
    }
    if (t < static_cast<int>(schedule.size())) {
      for (const Link& l : schedule[t]) {
        out[model.variables()[model.ControlVar(l.from, l.to, t)].name] = 1.0;
      }
    }
  }
  for (int t = 0; t <= model.horizon(); ++t) {
    int column = std::min(t, trace.slots());
    for (NodeId i = 0; i < model.node_count(); ++i) {
      out[model.variables()[model.QueueVar(i, t)].name] =
          trace.queues[column][i];
    }
    if (t >= 1) {
      out[model.variables()[model.IndicatorVar(t)].name] =
          trace.TotalAt(column) == 0 ? 1.0 : 0.0;
    }
  }
  return out;
}

RowCheck CheckAssignment(const MilpModel& model, const Assignment& assignment) {
  RowCheck check;
  std::vector<double> value(model.variables().size(), 0.0);
  for (size_t k = 0; k < model.variables().size(); ++k) {
    const Variable& v = model.variables()[k];
    auto it = assignment.find(v.name);
    if (it == assignment.end()) {
      check.domain_errors.push_back(v.name + " missing");
      continue;
    }
    double x = it->second;
    value[k] = x;
    bool integral = std::abs(x - std::round(x)) <= 1e-9;
    bool ok = v.kind == VarKind::kQueue ? integral && x >= 0
                                        : integral && (x == 0.0 || x == 1.0);
    if (!ok) check.domain_errors.push_back(v.name + " out of domain");
  }
  for (const Row& row : model.rows()) {
    double lhs = 0;
    for (const Term& term : row.terms) lhs += term.coef * value[term.var];
    bool ok = row.sense == Sense::kEqual ? std::abs(lhs - row.rhs) <= 1e-9
                                         : lhs <= row.rhs + 1e-9;
    if (!ok) check.violated_rows.push_back(row.name);
  }
  for (const Term& term : model.objective()) {
    check.objective += term.coef * value[term.var];
  }
  return check;
}

}  // namespace nanroute
