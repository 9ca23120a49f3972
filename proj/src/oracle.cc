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

// Exhaustive breadth-first reference for the schedule search. Deliberately
// naive: no bounds, no ordering, its own transition function.

#include <algorithm>
#include <map>
#include <numeric>

#include "nanroute/solver.h"

namespace nanroute {
namespace {

using State = std::vector<int>;

// Number of ways to place `messages` indistinguishable messages on `bins`
// nodes, saturating at `cap` + 1.
int64_t StateSpaceSize(int messages, int bins, int64_t cap) {
  // C(messages + bins - 1, bins - 1), computed incrementally.
  if (bins <= 0) return 1;
  long double value = 1;
  for (int k = 1; k < bins; ++k) {
    value = value * (messages + k) / k;
    if (value > static_cast<long double>(cap)) return cap + 1;
  }
  return static_cast<int64_t>(value + 0.5L);
}

struct Arc {
  NodeId from;
  NodeId to;
};

void Expand(const Network& net, const Limits& limits, const State& state,
            const std::vector<Arc>& arcs, size_t k, std::vector<char>& busy,
            std::vector<Link>& chosen, std::vector<std::vector<Link>>& out) {
  if (k == arcs.size()) {
    out.push_back(chosen);
    return;
  }
  Expand(net, limits, state, arcs, k + 1, busy, chosen, out);
  const Arc& a = arcs[k];
  if (busy[a.from] || busy[a.to] || state[a.from] == 0) return;
  busy[a.from] = busy[a.to] = 1;
  chosen.push_back({a.from, a.to});
  Expand(net, limits, state, arcs, k + 1, busy, chosen, out);
  chosen.pop_back();
  busy[a.from] = busy[a.to] = 0;
}

// Next state, or an empty vector when a queue cap is exceeded.
State Apply(const Network& net, const Limits& limits, const State& state,
            const std::vector<Link>& links) {
  State next = state;
  for (const Link& l : links) next[l.from] -= 1;
  for (const Link& l : links) {
    if (net.role(l.to) != NodeRole::kGateway) next[l.to] += 1;
  }
  for (NodeId i = 0; i < static_cast<NodeId>(next.size()); ++i) {
    if (limits.cap[i] != Limits::kNoCap && next[i] > limits.cap[i]) {
      return {};
    }
  }
  return next;
}

}  // namespace

OracleResult Oracle(const Network& net, const TrafficSpec& traffic,
                    int horizon, int64_t state_cap) {
  CheckTraffic(net, traffic);
  const Limits limits = ResolveLimits(net, traffic);
  const State start = InitialQueues(net, traffic);
  const int messages = std::accumulate(start.begin(), start.end(), 0);

  int holders = 0;
  for (NodeId i = 0; i < net.node_count(); ++i) {
    if (net.role(i) != NodeRole::kGateway) ++holders;
  }
  if (StateSpaceSize(messages, holders, state_cap) > state_cap) {
    throw OracleCapExceeded("state space of " + std::to_string(messages) +
                            " messages over " + std::to_string(holders) +
                            " nodes exceeds the cap of " +
                            std::to_string(state_cap) + " states");
  }

  // Every directed edge whose endpoints are allowed to carry traffic.
  std::vector<Arc> arcs;
  for (const Edge& e : net.edges()) {
    for (auto [a, b] : {std::pair{e.first, e.second}, {e.second, e.first}}) {
      if (net.role(a) == NodeRole::kGateway) continue;
      if (limits.frozen[a] || limits.frozen[b]) continue;
      arcs.push_back({a, b});
    }
  }

  struct Visit {
    State parent;
    std::vector<Link> links;
    int depth;
  };
  std::map<State, Visit> seen;
  seen.emplace(start, Visit{{}, {}, 0});
  std::vector<State> frontier{start};

  auto total = [](const State& s) {
    return std::accumulate(s.begin(), s.end(), 0);
  };
  State best = start;
  auto consider = [&](const State& s) {
    if (total(s) < total(best)) best = s;
  };

  OracleResult result;
  for (int depth = 0; depth < horizon && total(best) > 0; ++depth) {
    std::vector<State> next_frontier;
    for (const State& s : frontier) {
      std::vector<std::vector<Link>> options;
      std::vector<char> busy(net.node_count(), 0);
      std::vector<Link> chosen;
      Expand(net, limits, s, arcs, 0, busy, chosen, options);
      for (const auto& links : options) {
        State t = Apply(net, limits, s, links);
        if (t.empty() || seen.contains(t)) continue;
        seen.emplace(t, Visit{s, links, depth + 1});
        if (static_cast<int64_t>(seen.size()) > state_cap) {
          throw OracleCapExceeded("oracle visited more than " +
                                  std::to_string(state_cap) + " states");
        }
        consider(t);
        next_frontier.push_back(std::move(t));
      }
    }
    frontier = std::move(next_frontier);
  }

  result.states = static_cast<int64_t>(seen.size());
  result.min_undelivered = total(best);
  if (result.min_undelivered == 0) {
    result.min_delivery = seen.at(best).depth;
  }
  // Walk parents back to the start.
  Schedule witness;
  for (State s = best; s != start;) {
    const Visit& v = seen.at(s);
    std::vector<Link> links = v.links;
    std::sort(links.begin(), links.end());
    witness.push_back(links);
    s = v.parent;
  }
  std::reverse(witness.begin(), witness.end());
  result.witness = std::move(witness);
  return result;
}

}  // namespace nanroute
