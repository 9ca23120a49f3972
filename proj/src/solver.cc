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

#include "nanroute/solver.h"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <string>
#include <tuple>
#include <unordered_map>

namespace nanroute {

std::string_view StatusName(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal:
      return "optimal";
    case SolveStatus::kFeasible:
      return "feasible";
    case SolveStatus::kNoSchedule:
      return "no-schedule";
  }
  return "?";
}

int LowerBound(const Network& net, std::span<const int> queues) {
  const int gateways = net.gateway_count();
  if (gateways == 0) return kUnreachable;
  std::vector<int> dist = GatewayDistances(net);
  int total = 0;
  int far = 0;
  for (NodeId i = 0; i < net.node_count(); ++i) {
    if (queues[i] <= 0) continue;
    total += queues[i];
    far = std::max(far, dist[i]);
  }
  return std::max((total + gateways - 1) / gateways, far);
}

namespace {

// Relaxation shared by the pruning bounds: per message, the earliest column
// at which it can be absorbed (see TightLowerBound).
class ReleaseBound {
 public:
  ReleaseBound(std::vector<int> dist, int gateways)
      : dist_(std::move(dist)), gateways_(gateways) {}

  // Fills `releases_` for `queues`; returns false if some message can never
  // reach a gateway.
  bool Load(std::span<const int> queues, std::span<const char> blocked) {
    counts_.clear();
    total_ = 0;
    hops_ = 0;
    hop_counts_.clear();
    bool reachable = true;
    for (size_t i = 0; i < queues.size(); ++i) {
      int q = queues[i];
      if (q <= 0) continue;
      total_ += q;
      if ((!blocked.empty() && blocked[i]) || dist_[i] == kUnreachable) {
        reachable = false;
        continue;
      }
      int d = dist_[i];
      if (static_cast<int>(counts_.size()) < d + q + 1) counts_.resize(d + q + 1);
      for (int k = 0; k < q; ++k) ++counts_[d + k];
      hops_ += static_cast<int64_t>(q) * d;
      if (static_cast<int>(hop_counts_.size()) < d + 1) hop_counts_.resize(d + 1);
      hop_counts_[d] += q;
    }
    return reachable;
  }

  int total() const { return total_; }
  // Fewest transmissions that deliver every message.
  int64_t hops() const { return hops_; }

  // Makespan of the relaxation (only meaningful when Load returned true).
  int Makespan() const {
    if (total_ == 0) return 0;
    if (gateways_ == 0) return kUnreachable;
    int delivered = 0;
    int pool = 0;
    for (int c = 1;; ++c) {
      if (c < static_cast<int>(counts_.size())) pool += counts_[c];
      int take = std::min(pool, gateways_);
      pool -= take;
      delivered += take;
      if (delivered == total_) return c;
    }
  }

  // Upper bound on the messages absorbed within `columns` more columns.
  int DeliverableWithin(int columns) const {
    int delivered = 0;
    int pool = 0;
    for (int c = 1; c <= columns; ++c) {
      if (c < static_cast<int>(counts_.size())) pool += counts_[c];
      int take = std::min(pool, gateways_);
      pool -= take;
      delivered += take;
    }
    return delivered;
  }

  // Fewest transmissions that deliver `k` of the (reachable) messages.
  int64_t HopsToDeliver(int k) const {
    int64_t hops = 0;
    for (int d = 0; d < static_cast<int>(hop_counts_.size()) && k > 0; ++d) {
      int take = std::min(k, hop_counts_[d]);
      hops += static_cast<int64_t>(take) * d;
      k -= take;
    }
    return hops;
  }

 private:
  std::vector<int> dist_;
  int gateways_;
  std::vector<int> counts_;
  std::vector<int> hop_counts_;
  int total_ = 0;
  int64_t hops_ = 0;
};

int UnblockedGateways(const Network& net, std::span<const char> blocked) {
  int count = 0;
  for (NodeId g : net.Gateways()) {
    if (blocked.empty() || !blocked[g]) ++count;
  }
  return count;
}

}  // namespace

int TightLowerBound(const Network& net, std::span<const int> queues,
                    std::span<const char> blocked) {
  ReleaseBound bound(GatewayDistances(net, blocked),
                     UnblockedGateways(net, blocked));
  if (!bound.Load(queues, blocked)) return kUnreachable;
  return bound.Makespan();
}

namespace {

// Depth-first branch and bound over per-slot activations.
class ExactSearch {
 public:
  ExactSearch(const Network& net, const TrafficSpec& traffic,
              const SolveOptions& options)
      : net_(net),
        options_(options),
        limits_(ResolveLimits(net, traffic)),
        horizon_(HorizonOf(net, traffic)),
        dist_(GatewayDistances(net, limits_.frozen)),
        bound_(dist_, UnblockedGateways(net, limits_.frozen)),
        count_transmissions_(options.minimize_transmissions),
        start_(std::chrono::steady_clock::now()) {}

  SolveResult Run(std::vector<int> queues) {
    SolveResult result;
    result.lower_bound_used = TightLowerBound(net_, queues, limits_.frozen);
    Search(queues, 0, 0);

    result.search_nodes = nodes_;
    if (!best_) {
      result.status = SolveStatus::kNoSchedule;
      result.undelivered = std::accumulate(queues.begin(), queues.end(), 0);
      return result;
    }
    result.status =
        aborted_ ? SolveStatus::kFeasible : SolveStatus::kOptimal;
    result.schedule = best_path_;
    result.transmissions = best_->transmissions;
    if (best_->undelivered == 0) {
      result.delivery_time = best_->slots;
    } else {
      result.undelivered = best_->undelivered;
    }
    return result;
  }

 private:
  // Ordered so that smaller is better.
  struct Outcome {
    int undelivered;  // 0 when every message arrived
    int slots;        // delivery time; 0 when undelivered > 0
    int transmissions;
  };

  bool Better(const Outcome& a, const Outcome& b) const {
    if (count_transmissions_) {
      return std::tie(a.undelivered, a.slots, a.transmissions) <
             std::tie(b.undelivered, b.slots, b.transmissions);
    }
    return std::tie(a.undelivered, a.slots) < std::tie(b.undelivered, b.slots);
  }

  void Offer(const Outcome& outcome) {
    if (best_ && !Better(outcome, *best_)) return;
    best_ = outcome;
    best_path_ = path_;
  }

  bool OutOfBudget() {
    if (aborted_) return true;
    if (options_.node_budget > 0 && nodes_ >= options_.node_budget) {
      aborted_ = true;
    } else if (options_.time_budget > 0 && (nodes_ & 1023) == 0) {
      std::chrono::duration<double> elapsed =
          std::chrono::steady_clock::now() - start_;
      if (elapsed.count() >= options_.time_budget) aborted_ = true;
    }
    return aborted_;
  }

  // Returns true when `state` was already expanded at an earlier-or-equal
  // slot with no more transmissions; otherwise records it.
  bool Dominated(const std::vector<int>& queues, int slot, int sent) {
    if (!count_transmissions_) sent = 0;
    std::string key(queues.size() * 2, '\0');
    for (size_t i = 0; i < queues.size(); ++i) {
      key[2 * i] = static_cast<char>(queues[i] & 0xff);
      key[2 * i + 1] = static_cast<char>((queues[i] >> 8) & 0xff);
    }
    auto& seen = memo_[key];
    for (const auto& [s, x] : seen) {
      if (s <= slot && x <= sent) return true;
    }
    std::erase_if(seen, [&](const std::pair<int, int>& e) {
      return slot <= e.first && sent <= e.second;
    });
    seen.emplace_back(slot, sent);
    return false;
  }

  void Search(const std::vector<int>& queues, int slot, int sent) {
    if (OutOfBudget()) return;
    ++nodes_;
    const bool reachable = bound_.Load(queues, limits_.frozen);
    const int total = bound_.total();
    if (total == 0) {
      Offer({0, slot, sent});
      return;
    }
    const int need = reachable ? bound_.Makespan() : kUnreachable;
    if (need != kUnreachable && slot + need <= horizon_) {
      if (best_ && best_->undelivered == 0) {
        if (slot + need > best_->slots) return;
        if (slot + need == best_->slots &&
            (!count_transmissions_ ||
             sent + bound_.hops() >= best_->transmissions)) {
          return;
        }
      }
    } else {
      // Messages will remain at the horizon whatever happens below.
      if (best_ && best_->undelivered == 0) return;
      const int floor = total - bound_.DeliverableWithin(horizon_ - slot);
      if (best_) {
        if (floor > best_->undelivered) return;
        if (floor == best_->undelivered &&
            (!count_transmissions_ ||
             sent + bound_.HopsToDeliver(total - floor) >=
                 best_->transmissions)) {
          return;
        }
      }
    }
    if (Dominated(queues, slot, sent)) return;
    // Idling until the horizon is always possible.
    Offer({total, 0, sent});
    if (slot == horizon_) return;

    std::vector<Activation> children = Activations(queues);
    std::vector<int> next(queues.size());
    for (const Activation& act : children) {
      if (aborted_) return;
      next = queues;
      for (const Link& l : act) {
        --next[l.from];
        if (!net_.IsGateway(l.to)) ++next[l.to];
      }
      path_.push_back(act);
      Search(next, slot + 1, sent + static_cast<int>(act.size()));
      path_.pop_back();
    }
  }

  // Every non-empty node-disjoint set of links with non-empty senders that
  // respects the queue caps, gateway-ward links tried first.
  std::vector<Activation> Activations(const std::vector<int>& queues) const {
    std::vector<Link> candidates;
    for (NodeId i = 0; i < net_.node_count(); ++i) {
      if (queues[i] == 0 || net_.IsGateway(i) || limits_.frozen[i]) continue;
      for (NodeId j : net_.neighbors(i)) {
        if (!limits_.frozen[j]) candidates.push_back({i, j});
      }
    }
    std::sort(candidates.begin(), candidates.end(),
              [&](const Link& a, const Link& b) {
                auto key = [&](const Link& l) {
                  return std::make_tuple(dist_[l.to] >= dist_[l.from],
                                         dist_[l.from], -queues[l.from],
                                         queues[l.to] - queues[l.from],
                                         l.from, l.to);
                };
                return key(a) < key(b);
              });
    std::vector<Activation> out;
    std::vector<char> used(net_.node_count(), 0);
    Activation current;
    Enumerate(candidates, 0, used, current, queues, out);
    return out;
  }

  void Enumerate(const std::vector<Link>& candidates, size_t k,
                 std::vector<char>& used, Activation& current,
                 const std::vector<int>& queues,
                 std::vector<Activation>& out) const {
    if (k == candidates.size()) {
      if (!current.empty() && WithinCaps(current, queues)) {
        out.push_back(MakeActivation(current));
      }
      return;
    }
    const Link& l = candidates[k];
    if (!used[l.from] && !used[l.to]) {
      used[l.from] = used[l.to] = 1;
      current.push_back(l);
      Enumerate(candidates, k + 1, used, current, queues, out);
      current.pop_back();
      used[l.from] = used[l.to] = 0;
    }
    Enumerate(candidates, k + 1, used, current, queues, out);
  }

  bool WithinCaps(const Activation& act, const std::vector<int>& queues) const {
    for (const Link& in : act) {
      int cap = limits_.cap[in.to];
      if (cap == Limits::kNoCap || net_.IsGateway(in.to)) continue;
      bool also_sends = std::any_of(act.begin(), act.end(), [&](const Link& o) {
        return o.from == in.to;
      });
      if (queues[in.to] + 1 - (also_sends ? 1 : 0) > cap) return false;
    }
    return true;
  }

  const Network& net_;
  SolveOptions options_;
  Limits limits_;
  int horizon_;
  std::vector<int> dist_;
  ReleaseBound bound_;
  bool count_transmissions_;
  std::chrono::steady_clock::time_point start_;

  int64_t nodes_ = 0;
  bool aborted_ = false;
  std::optional<Outcome> best_;
  Schedule path_;
  Schedule best_path_;
  std::unordered_map<std::string, std::vector<std::pair<int, int>>> memo_;
};

}  // namespace

SolveResult SolveExact(const Network& net, const TrafficSpec& traffic,
                       const SolveOptions& options) {
  CheckTraffic(net, traffic);
  ExactSearch search(net, traffic, options);
  return search.Run(InitialQueues(net, traffic));
}

SolveResult SolveHeuristic(const Network& net, const TrafficSpec& traffic,
                           const SolveOptions& options) {
  CheckTraffic(net, traffic);
  const Limits limits = ResolveLimits(net, traffic);
  const int horizon = HorizonOf(net, traffic);
  const std::vector<int> dist = GatewayDistances(net, limits.frozen);
  std::mt19937_64 rng(options.seed);

  std::vector<int> queues = InitialQueues(net, traffic);
  SolveResult result;
  result.lower_bound_used = TightLowerBound(net, queues, limits.frozen);
  auto total = [&] { return std::accumulate(queues.begin(), queues.end(), 0); };

  struct Candidate {
    Link link;
    bool gateway_ward;
    int queue;
    int pressure;
    uint64_t noise;
  };
  std::vector<Candidate> candidates;
  std::vector<char> used(net.node_count());
  while (total() > 0 && static_cast<int>(result.schedule.size()) < horizon) {
    candidates.clear();
    for (NodeId i = 0; i < net.node_count(); ++i) {
      if (queues[i] == 0 || net.IsGateway(i) || limits.frozen[i]) continue;
      for (NodeId j : net.neighbors(i)) {
        if (limits.frozen[j]) continue;
        bool gateway_ward = dist[j] < dist[i];
        int pressure = queues[i] - queues[j];
        // Sideways moves only when they relieve a real imbalance; moves
        // away from the gateways never help the makespan.
        if (!gateway_ward && (dist[j] > dist[i] || pressure < 2)) continue;
        candidates.push_back({{i, j}, gateway_ward, queues[i], pressure, rng()});
      }
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const Candidate& a, const Candidate& b) {
                return std::make_tuple(!a.gateway_ward, -a.queue, -a.pressure,
                                       a.noise) <
                       std::make_tuple(!b.gateway_ward, -b.queue, -b.pressure,
                                       b.noise);
              });
    std::fill(used.begin(), used.end(), 0);
    std::vector<Link> chosen;
    for (const Candidate& c : candidates) {
      const Link& l = c.link;
      if (used[l.from] || used[l.to]) continue;
      int cap = limits.cap[l.to];
      if (cap != Limits::kNoCap && !net.IsGateway(l.to) &&
          queues[l.to] + 1 > cap) {
        continue;
      }
      used[l.from] = used[l.to] = 1;
      chosen.push_back(l);
    }
    Activation act = MakeActivation(std::move(chosen));
    for (const Link& l : act) {
      --queues[l.from];
      if (!net.IsGateway(l.to)) ++queues[l.to];
    }
    result.transmissions += static_cast<int>(act.size());
    result.schedule.push_back(std::move(act));
    if (result.schedule.back().empty()) break;  // stuck: nothing can move
  }
  while (!result.schedule.empty() && result.schedule.back().empty()) {
    result.schedule.pop_back();
  }
  result.status = SolveStatus::kFeasible;
  result.search_nodes = static_cast<int64_t>(result.schedule.size());
  int left = total();
  if (left == 0) {
    result.delivery_time = static_cast<int>(result.schedule.size());
  } else {
    result.undelivered = left;
  }
  return result;
}

SolveResult Solve(const Network& net, const TrafficSpec& traffic,
                  const SolveOptions& options) {
  return options.mode == SolveMode::kExact
             ? SolveExact(net, traffic, options)
             : SolveHeuristic(net, traffic, options);
}

}  // namespace nanroute
