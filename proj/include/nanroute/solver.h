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

// Schedule search.
//
// The objective is lexicographic: deliver every message as early as
// possible within the horizon; if that is impossible, leave as few messages
// undelivered at the horizon as possible. Among equally good schedules the
// exact search returns the first one in its enumeration order, or, with
// SolveOptions::minimize_transmissions, the one with the fewest
// transmissions (first in enumeration order among those).

#ifndef NANROUTE_SOLVER_H_
#define NANROUTE_SOLVER_H_

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>

#include "nanroute/dynamics.h"
#include "nanroute/topology.h"

namespace nanroute {

enum class SolveMode { kExact, kHeuristic };

struct SolveOptions {
  SolveMode mode = SolveMode::kExact;
  int64_t node_budget = 0;    // 0 = unlimited
  double time_budget = 0.0;   // wall seconds, 0 = unlimited
  uint64_t seed = 0;          // heuristic tie-breaking
  // Make the transmission count part of the proven objective. Proving it is
  // far more expensive than proving the delivery time alone.
  bool minimize_transmissions = false;
};

enum class SolveStatus {
  kOptimal,     // search completed, result is optimal
  kFeasible,    // a budget ran out; best schedule found so far
  kNoSchedule,  // a budget ran out before any schedule was found
};

std::string_view StatusName(SolveStatus status);

struct SolveResult {
  Schedule schedule;
  std::optional<int> delivery_time;  // unset if messages remain at the end
  int undelivered = 0;
  int transmissions = 0;
  SolveStatus status = SolveStatus::kNoSchedule;
  int lower_bound_used = 0;
  int64_t search_nodes = 0;
};

// Slots needed to empty the network: max(ceil(m / gateways), farthest
// non-empty node's hop distance). Admissible.
int LowerBound(const Network& net, std::span<const int> queues);

// Sharper admissible bound used for pruning. The k-th message held by a node
// at distance d cannot reach a gateway before column d + k - 1, and the
// gateways together absorb at most one message each per slot; the bound is
// the makespan of that relaxed problem. Never below LowerBound. Nodes marked
// in `blocked` neither send nor relay; returns kUnreachable when a message
// cannot be delivered at all.
int TightLowerBound(const Network& net, std::span<const int> queues,
                    std::span<const char> blocked = {});

SolveResult SolveExact(const Network& net, const TrafficSpec& traffic,
                       const SolveOptions& options = {});

// Greedy per-slot matching, gateway-ward links first. Always reports
// kFeasible (never claims optimality).
SolveResult SolveHeuristic(const Network& net, const TrafficSpec& traffic,
                           const SolveOptions& options = {});

SolveResult Solve(const Network& net, const TrafficSpec& traffic,
                  const SolveOptions& options);

class OracleCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleResult {
  std::optional<int> min_delivery;
  int min_undelivered = 0;
  // A schedule attaining the optimum.
  Schedule witness;
  int64_t states = 0;
};

inline constexpr int64_t kDefaultOracleCap = 10'000'000;

// Breadth-first search over every queue vector reachable within `horizon`
// slots, expanding every valid activation. Shares no code with the search
// above. Throws OracleCapExceeded when the state space (the number of ways to
// spread the messages over the nodes) exceeds `state_cap`.
OracleResult Oracle(const Network& net, const TrafficSpec& traffic,
                    int horizon, int64_t state_cap = kDefaultOracleCap);

}  // namespace nanroute

#endif  // NANROUTE_SOLVER_H_
