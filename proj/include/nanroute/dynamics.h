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

// Slotted-time queue dynamics.
//
// Time is 0-based. Column t of a queue trace is the state at the start of
// slot t; the activation of slot t maps column t to column t+1. Each active
// directed link carries at most one message per slot, a node touches at most
// one active link per slot, and a message that reaches a gateway is delivered
// (gateway queues are identically zero).

#ifndef NANROUTE_DYNAMICS_H_
#define NANROUTE_DYNAMICS_H_

#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "nanroute/topology.h"

namespace nanroute {

struct Link {
  NodeId from;
  NodeId to;
  friend auto operator<=>(const Link&, const Link&) = default;
};

// Directed links active in one slot, kept sorted.
using Activation = std::vector<Link>;
// Activation of slot t at index t.
using Schedule = std::vector<Activation>;

Activation MakeActivation(std::vector<Link> links);

enum class Semantics {
  // Every active link fires; an empty sender is an error. This is the
  // feasibility notion of the MILP.
  kStrict,
  // An active link whose sender is empty is silently idle.
  kOperational,
};

struct TrafficSpec {
  // Initial messages per node (1-based ids in files, 0-based here).
  std::map<NodeId, int> injections;
  // Explicit per-node queue bounds.
  std::map<NodeId, int> queue_caps;
  // Bound applied to every source without an explicit entry.
  std::optional<int> source_cap;
  // Number of slots T_max. Unset means "pick one" (see DefaultHorizon).
  std::optional<int> horizon;
  // Injection period in slots; carried as metadata for schedule repetition.
  std::optional<int> period;
  // Compromised nodes: queues pinned at their initial size, no traffic in or
  // out, messages counted as permanently undelivered.
  std::set<NodeId> compromised;

  int TotalMessages() const;
};

// Per-node view of a TrafficSpec resolved against a network.
struct Limits {
  std::vector<int> cap;       // kNoCap when unbounded
  std::vector<char> frozen;   // compromised
  static constexpr int kNoCap = -1;

  bool empty() const { return cap.empty() && frozen.empty(); }
};

// Throws std::invalid_argument when the traffic does not fit the network:
// unknown node, injection on a relay or gateway, negative count, horizon < 1,
// or a cap below the node's injection.
void CheckTraffic(const Network& net, const TrafficSpec& traffic);

// Queue vector at column 0.
std::vector<int> InitialQueues(const Network& net, const TrafficSpec& traffic);

Limits ResolveLimits(const Network& net, const TrafficSpec& traffic);

// Horizon used when the traffic leaves it unset: enough for any schedule that
// moves one message one hop closer to a gateway per slot.
int DefaultHorizon(const Network& net, const TrafficSpec& traffic);
int HorizonOf(const Network& net, const TrafficSpec& traffic);

// Empty iff every link is an edge of `net` and each node is an endpoint of at
// most one link. Violations name the offending node or link.
std::vector<Violation> ValidateActivation(const Network& net,
                                          const Activation& act);

// Error raised while stepping or replaying. `slot` is -1 for single steps.
class ScheduleError : public std::runtime_error {
 public:
  ScheduleError(int slot, std::string rule, const std::string& message);
  int slot() const { return slot_; }
  const std::string& rule() const { return rule_; }

 private:
  int slot_;
  std::string rule_;
};

struct StepResult {
  std::vector<int> queues;
  int moved = 0;      // links that carried a message
  int delivered = 0;  // messages absorbed by gateways
  // (gateway, messages) pairs; at most one message per gateway per slot.
  std::vector<std::pair<NodeId, int>> delivered_to;
};

// Applies one activation. Throws ScheduleError for an invalid activation, a
// strict-mode empty sender or frozen endpoint, or a receiver pushed above its
// cap.
StepResult Step(const Network& net, std::span<const int> queues,
                const Activation& act, Semantics semantics,
                const Limits& limits = {});

struct QueueTrace {
  // queues[t][i]: queue of node i at column t, t = 0..T.
  std::vector<std::vector<int>> queues;
  std::vector<int> delivered_per_slot;
  std::vector<int> moved_per_slot;
  // Total messages absorbed by each node over the run (non-zero only on
  // gateways).
  std::vector<int> delivered_per_node;

  int slots() const { return static_cast<int>(moved_per_slot.size()); }
  int TotalAt(int column) const;
};

// Replays `schedule` from the initial queues. Throws ScheduleError (with the
// slot) on any violation, or when the schedule is longer than the horizon.
QueueTrace RunSchedule(const Network& net, const TrafficSpec& traffic,
                       const Schedule& schedule, Semantics semantics);

struct Metrics {
  std::optional<int> delivery_time;  // first column with total queue 0
  int transmissions = 0;
  int undelivered_at_end = 0;
  int max_queue = 0;
};

Metrics ComputeMetrics(const QueueTrace& trace);

}  // namespace nanroute

#endif  // NANROUTE_DYNAMICS_H_
