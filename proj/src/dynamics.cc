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

#include "nanroute/dynamics.h"

#include <algorithm>
#include <numeric>

namespace nanroute {
namespace {

std::string LinkName(const Link& l) {
  return std::to_string(l.from + 1) + "->" + std::to_string(l.to + 1);
}

std::string NodeName(NodeId i) { return "node " + std::to_string(i + 1); }

}  // namespace

Activation MakeActivation(std::vector<Link> links) {
  std::sort(links.begin(), links.end());
  return links;
}

int TrafficSpec::TotalMessages() const {
  int total = 0;
  for (const auto& [node, count] : injections) total += count;
  return total;
}

void CheckTraffic(const Network& net, const TrafficSpec& traffic) {
  const int n = net.node_count();
  auto check_node = [&](NodeId i, const char* what) {
    if (i < 0 || i >= n) {
      throw std::invalid_argument(std::string(what) + " names unknown " +
                                  NodeName(i));
    }
  };
  for (const auto& [node, count] : traffic.injections) {
    check_node(node, "inject");
    if (count < 0) {
      throw std::invalid_argument("negative injection at " + NodeName(node));
    }
    if (count > 0 && net.role(node) != NodeRole::kSource) {
      throw std::invalid_argument(
          "injection at " + NodeName(node) + " which is a " +
          std::string(RoleName(net.role(node))) + "; only sources inject");
    }
  }
  for (const auto& [node, cap] : traffic.queue_caps) check_node(node, "qmax");
  for (NodeId node : traffic.compromised) check_node(node, "compromised");
  if (traffic.horizon && *traffic.horizon < 1) {
    throw std::invalid_argument("horizon must be at least 1 slot");
  }
  if (traffic.period && *traffic.period < 1) {
    throw std::invalid_argument("period must be at least 1 slot");
  }
  Limits limits = ResolveLimits(net, traffic);
  std::vector<int> q0 = InitialQueues(net, traffic);
  for (NodeId i = 0; i < n; ++i) {
    if (limits.cap[i] != Limits::kNoCap && limits.cap[i] < q0[i]) {
      throw std::invalid_argument("queue cap " + std::to_string(limits.cap[i]) +
                                  " at " + NodeName(i) +
                                  " is below its injection " +
                                  std::to_string(q0[i]));
    }
  }
}

std::vector<int> InitialQueues(const Network& net, const TrafficSpec& traffic) {
  std::vector<int> q(net.node_count(), 0);
  for (const auto& [node, count] : traffic.injections) {
    if (node >= 0 && node < net.node_count() && !net.IsGateway(node)) {
      q[node] = count;
    }
  }
  return q;
}

Limits ResolveLimits(const Network& net, const TrafficSpec& traffic) {
  const int n = net.node_count();
  Limits limits{std::vector<int>(n, Limits::kNoCap),
                std::vector<char>(n, 0)};
  if (traffic.source_cap) {
    for (NodeId i = 0; i < n; ++i) {
      if (net.role(i) == NodeRole::kSource) limits.cap[i] = *traffic.source_cap;
    }
  }
  for (const auto& [node, cap] : traffic.queue_caps) {
    if (node >= 0 && node < n) limits.cap[node] = cap;
  }
  for (NodeId node : traffic.compromised) {
    if (node >= 0 && node < n) limits.frozen[node] = 1;
  }
  return limits;
}

int DefaultHorizon(const Network& net, const TrafficSpec& traffic) {
  std::vector<int> dist = GatewayDistances(net);
  int far = 0;
  for (int d : dist) {
    if (d != kUnreachable) far = std::max(far, d);
  }
  return std::max(1, traffic.TotalMessages() * std::max(1, far));
}

int HorizonOf(const Network& net, const TrafficSpec& traffic) {
  return traffic.horizon ? *traffic.horizon : DefaultHorizon(net, traffic);
}

std::vector<Violation> ValidateActivation(const Network& net,
                                          const Activation& act) {
  std::vector<Violation> out;
  const int n = net.node_count();
  std::vector<std::vector<Link>> incident(n);
  for (const Link& l : act) {
    if (l.from < 0 || l.from >= n || l.to < 0 || l.to >= n) {
      out.push_back({"unknown-node", "link " + LinkName(l) +
                                         " references an unknown node"});
      continue;
    }
    if (l.from == l.to) {
      out.push_back({"3.5", "link " + LinkName(l) + " is a self-loop"});
      continue;
    }
    if (!net.HasEdge(l.from, l.to)) {
      out.push_back({"3.5", "link " + LinkName(l) + " is not an edge"});
      continue;
    }
    incident[l.from].push_back(l);
    incident[l.to].push_back(l);
  }
  for (NodeId i = 0; i < n; ++i) {
    if (incident[i].size() <= 1) continue;
    // Two opposite directions of the same edge is the half-duplex case.
    bool duplex = false;
    for (size_t a = 0; a < incident[i].size(); ++a) {
      for (size_t b = a + 1; b < incident[i].size(); ++b) {
        const Link& x = incident[i][a];
        const Link& y = incident[i][b];
        if (x.from == y.to && x.to == y.from) duplex = true;
      }
    }
    std::string links;
    for (const Link& l : incident[i]) {
      if (!links.empty()) links += ", ";
      links += LinkName(l);
    }
    out.push_back({duplex ? "3.8" : "3.7",
                   NodeName(i) + " services " +
                       std::to_string(incident[i].size()) + " links (" +
                       links + ")" +
                       (duplex ? "; uplink and downlink at once" : "")});
  }
  return out;
}

ScheduleError::ScheduleError(int slot, std::string rule,
                             const std::string& message)
    : std::runtime_error(slot >= 0 ? "slot " + std::to_string(slot) + ": " +
                                         message
                                   : message),
      slot_(slot),
      rule_(std::move(rule)) {}

StepResult Step(const Network& net, std::span<const int> queues,
                const Activation& act, Semantics semantics,
                const Limits& limits) {
  std::vector<Violation> violations = ValidateActivation(net, act);
  if (!violations.empty()) {
    throw ScheduleError(-1, violations.front().rule,
                        violations.front().detail);
  }
  StepResult result;
  result.queues.assign(queues.begin(), queues.end());
  auto frozen = [&](NodeId i) {
    return !limits.frozen.empty() && limits.frozen[i];
  };
  for (const Link& l : act) {
    if (frozen(l.from) || frozen(l.to)) {
      if (semantics == Semantics::kStrict) {
        throw ScheduleError(-1, "3.16",
                            "link " + LinkName(l) +
                                " touches a compromised node");
      }
      continue;
    }
    // Each node is on at most one link, so reading the pre-step value is the
    // same as reading the current one.
    if (queues[l.from] == 0 || net.IsGateway(l.from)) {
      if (semantics == Semantics::kStrict) {
        throw ScheduleError(-1, "empty-sender",
                            "link " + LinkName(l) + " has an empty sender (" +
                                NodeName(l.from) + ")");
      }
      continue;
    }
    --result.queues[l.from];
    ++result.moved;
    if (net.IsGateway(l.to)) {
      ++result.delivered;
      result.delivered_to.emplace_back(l.to, 1);
    } else {
      ++result.queues[l.to];
    }
  }
  if (!limits.cap.empty()) {
    for (const Link& l : act) {
      int cap = limits.cap[l.to];
      if (cap != Limits::kNoCap && result.queues[l.to] > cap) {
        throw ScheduleError(-1, "3.9",
                            NodeName(l.to) + " exceeds its queue cap " +
                                std::to_string(cap) + " (receives over " +
                                LinkName(l) + ")");
      }
    }
  }
  return result;
}

int QueueTrace::TotalAt(int column) const {
  const auto& col = queues[column];
  return std::accumulate(col.begin(), col.end(), 0);
}

QueueTrace RunSchedule(const Network& net, const TrafficSpec& traffic,
                       const Schedule& schedule, Semantics semantics) {
  const int horizon = HorizonOf(net, traffic);
  if (static_cast<int>(schedule.size()) > horizon) {
    throw ScheduleError(horizon, "horizon",
                        "schedule has " + std::to_string(schedule.size()) +
                            " slots but the horizon is " +
                            std::to_string(horizon));
  }
  Limits limits = ResolveLimits(net, traffic);
  QueueTrace trace;
  trace.queues.push_back(InitialQueues(net, traffic));
  trace.delivered_per_node.assign(net.node_count(), 0);
  for (size_t t = 0; t < schedule.size(); ++t) {
    StepResult r;
    try {
      r = Step(net, trace.queues.back(), schedule[t], semantics, limits);
    } catch (const ScheduleError& e) {
      throw ScheduleError(static_cast<int>(t), e.rule(), e.what());
    }
    trace.queues.push_back(std::move(r.queues));
    trace.moved_per_slot.push_back(r.moved);
    trace.delivered_per_slot.push_back(r.delivered);
    for (const auto& [gateway, count] : r.delivered_to) {
      trace.delivered_per_node[gateway] += count;
    }
  }
  return trace;
}

Metrics ComputeMetrics(const QueueTrace& trace) {
  Metrics m;
  for (int t = 0; t < static_cast<int>(trace.queues.size()); ++t) {
    if (!m.delivery_time && trace.TotalAt(t) == 0) m.delivery_time = t;
    for (int q : trace.queues[t]) m.max_queue = std::max(m.max_queue, q);
  }
  m.transmissions = std::accumulate(trace.moved_per_slot.begin(),
                                    trace.moved_per_slot.end(), 0);
  if (!trace.queues.empty()) m.undelivered_at_end = trace.TotalAt(trace.slots());
  return m;
}

}  // namespace nanroute
