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

#include <gtest/gtest.h>

#include <random>

#include "nanroute/fixtures.h"
#include "nanroute/io.h"
#include "test_util.h"

namespace nanroute {
namespace {

// g - a - b
Network Path() { return ParseNetwork("node 1 gateway; node 2 source; node 3 source; edge 1 2; edge 2 3"); }
// gateway at the center, three leaves
Network Star() {
  return ParseNetwork(
      "node 1 gateway; node 2 source; node 3 source; node 4 source;"
      "edge 1 2; edge 1 3; edge 1 4");
}
Network Triangle() {
  return ParseNetwork(
      "node 1 gateway; node 2 source; node 3 source; edge 1 2; edge 1 3; edge 2 3");
}

TrafficSpec Unit(const Network& net, int horizon) {
  return fixtures::UnitTraffic(net, horizon);
}

// Hand enumeration: b must move to a before a can empty twice into g, and a
// can only do one thing per slot: a->g, b->a, a->g is the only 3-slot plan.
TEST(OracleTest, HandCheckedInstances) {
  EXPECT_EQ(Oracle(Path(), Unit(Path(), 5), 5).min_delivery, 3);
  EXPECT_EQ(Oracle(Star(), Unit(Star(), 5), 5).min_delivery, 3);
  EXPECT_EQ(Oracle(Triangle(), Unit(Triangle(), 5), 5).min_delivery, 2);
  OracleResult short_horizon = Oracle(Path(), Unit(Path(), 2), 2);
  EXPECT_FALSE(short_horizon.min_delivery);
  EXPECT_EQ(short_horizon.min_undelivered, 1);
  TrafficSpec empty;
  empty.horizon = 4;
  EXPECT_EQ(Oracle(Path(), empty, 4).min_delivery, 0);
}

TEST(OracleTest, WitnessReplays) {
  OracleResult r = Oracle(Path(), Unit(Path(), 5), 5);
  Metrics m = ComputeMetrics(
      RunSchedule(Path(), Unit(Path(), 5), r.witness, Semantics::kStrict));
  EXPECT_EQ(m.delivery_time, 3);
}

TEST(OracleTest, CapIsEnforced) {
  Network net = BuiltinNan11();
  EXPECT_THROW(Oracle(net, fixtures::UnequalTraffic(), 24),
               OracleCapExceeded);
  EXPECT_THROW(Oracle(Path(), Unit(Path(), 5), 5, 2), OracleCapExceeded);
}

TEST(LowerBoundTest, Examples) {
  Network net = BuiltinNan11();
  EXPECT_EQ(LowerBound(net, InitialQueues(net, fixtures::UnequalTraffic())), 24);
  std::vector<NodeId> gws{0, 3};
  Network two = net.WithGateways(gws);
  EXPECT_EQ(LowerBound(two, InitialQueues(two, Unit(two, 12))), 5);
  std::vector<int> one(11, 0);
  one[4] = 1;  // node 5
  EXPECT_EQ(LowerBound(net, one), 4);
  EXPECT_EQ(LowerBound(net, std::vector<int>(11, 0)), 0);
}

TEST(LowerBoundTest, TightBoundDominates) {
  Network net = BuiltinNan11();
  std::vector<int> q = InitialQueues(net, fixtures::UnequalTraffic());
  EXPECT_EQ(TightLowerBound(net, q), 24);
  // Two messages at node 5 (distance 4): the second cannot arrive before 5.
  std::vector<int> two(11, 0);
  two[4] = 2;
  EXPECT_EQ(LowerBound(net, two), 4);
  EXPECT_EQ(TightLowerBound(net, two), 5);
  std::vector<char> blocked(11, 0);
  blocked[6] = 1;  // node 7 cuts node 5 off
  EXPECT_EQ(TightLowerBound(net, two, blocked), kUnreachable);
}

TEST(SolveExactTest, SmallInstances) {
  SolveResult r = SolveExact(Path(), Unit(Path(), 5));
  EXPECT_EQ(r.status, SolveStatus::kOptimal);
  EXPECT_EQ(r.delivery_time, 3);
  EXPECT_EQ(r.undelivered, 0);
  EXPECT_EQ(SolveExact(Star(), Unit(Star(), 5)).delivery_time, 3);
  EXPECT_EQ(SolveExact(Triangle(), Unit(Triangle(), 5)).delivery_time, 2);

  SolveResult cut = SolveExact(Path(), Unit(Path(), 2));
  EXPECT_EQ(cut.status, SolveStatus::kOptimal);
  EXPECT_FALSE(cut.delivery_time);
  EXPECT_EQ(cut.undelivered, 1);

  TrafficSpec empty;
  empty.horizon = 3;
  SolveResult none = SolveExact(Path(), empty);
  EXPECT_EQ(none.delivery_time, 0);
  EXPECT_TRUE(none.schedule.empty());
}

TEST(SolveExactTest, Nan11Experiments) {
  Network net = BuiltinNan11();
  SolveResult r = SolveExact(net, fixtures::UnequalTraffic());
  EXPECT_EQ(r.status, SolveStatus::kOptimal);
  EXPECT_EQ(r.delivery_time, 24);
  EXPECT_EQ(r.lower_bound_used, 24);

  SolveResult relay =
      SolveExact(fixtures::RelayNan11(), fixtures::RelayTraffic());
  EXPECT_EQ(relay.status, SolveStatus::kOptimal);
  EXPECT_EQ(relay.delivery_time, 23);

  SolveResult cut = SolveExact(net, fixtures::UnequalTraffic(20));
  EXPECT_EQ(cut.status, SolveStatus::kOptimal);
  EXPECT_FALSE(cut.delivery_time);
  EXPECT_EQ(cut.undelivered, 4);

  SolveResult unit = SolveExact(net, Unit(net, 12));
  EXPECT_EQ(unit.status, SolveStatus::kOptimal);
  EXPECT_EQ(unit.delivery_time, 10);
}

TEST(SolveExactTest, CompromisedMessagesStayUndelivered) {
  Network net = BuiltinNan11();
  TrafficSpec traffic = fixtures::UnitTraffic(net, 12);
  traffic.compromised = {6};  // node 7 isolates 4, 5 and 6
  SolveResult r = SolveExact(net, traffic);
  EXPECT_EQ(r.status, SolveStatus::kOptimal);
  EXPECT_FALSE(r.delivery_time);
  EXPECT_EQ(r.undelivered, 4);
  QueueTrace trace = RunSchedule(net, traffic, r.schedule, Semantics::kStrict);
  EXPECT_EQ(trace.TotalAt(trace.slots()), 4);
}

TEST(SolveExactTest, BudgetsDowngradeStatus) {
  Network net = BuiltinNan11();
  std::vector<NodeId> gws{0, 2};
  Network two = net.WithGateways(gws);
  SolveResult r = SolveExact(two, Unit(two, 12), {.node_budget = 50});
  EXPECT_EQ(r.status, SolveStatus::kFeasible);
  EXPECT_LE(r.search_nodes, 50);
  ASSERT_TRUE(r.delivery_time);
  EXPECT_GE(*r.delivery_time, 9);
}

TEST(SolveExactTest, TransmissionTieBreak) {
  Network net = BuiltinNan11();
  TrafficSpec traffic = Unit(net, 12);
  SolveResult plain = SolveExact(net, traffic);
  SolveResult lean =
      SolveExact(net, traffic, {.minimize_transmissions = true});
  EXPECT_EQ(lean.status, SolveStatus::kOptimal);
  EXPECT_EQ(lean.delivery_time, 10);
  EXPECT_LE(lean.transmissions, plain.transmissions);
  // Sum of the hop distances of nodes 2..11.
  EXPECT_GE(lean.transmissions, 24);
}

TEST(SolveHeuristicTest, Examples) {
  Network net = BuiltinNan11();
  std::vector<NodeId> gws{0, 3};
  Network two = net.WithGateways(gws);
  TrafficSpec traffic = Unit(two, 30);
  SolveResult r = SolveHeuristic(two, traffic);
  EXPECT_EQ(r.status, SolveStatus::kFeasible);
  ASSERT_TRUE(r.delivery_time);
  EXPECT_GE(*r.delivery_time, 5);
  QueueTrace trace = RunSchedule(two, traffic, r.schedule, Semantics::kStrict);
  EXPECT_EQ(ComputeMetrics(trace).delivery_time, r.delivery_time);

  TrafficSpec empty;
  empty.horizon = 5;
  SolveResult none = SolveHeuristic(net, empty);
  EXPECT_EQ(none.delivery_time, 0);
  EXPECT_TRUE(none.schedule.empty());

  SolveResult cut = SolveHeuristic(net, fixtures::UnequalTraffic(10));
  EXPECT_FALSE(cut.delivery_time);
  EXPECT_GE(cut.undelivered, 14);
}

TEST(SolveHeuristicTest, DeterministicPerSeed) {
  Network net = BuiltinNan11();
  TrafficSpec traffic = fixtures::UnequalTraffic(60);
  for (uint64_t seed : {1u, 2u, 3u}) {
    SolveResult a = SolveHeuristic(net, traffic, {.seed = seed});
    SolveResult b = SolveHeuristic(net, traffic, {.seed = seed});
    EXPECT_EQ(a.schedule, b.schedule);
    EXPECT_EQ(a.delivery_time, b.delivery_time);
  }
}

// The exact search agrees with the oracle on random small instances, both on
// the delivery time and, under a horizon below it, on the messages left.
TEST(SolverPropertyTest, ExactMatchesOracle) {
  std::mt19937_64 rng(2026);
  int checked = 0;
  for (int trial = 0; trial < 150; ++trial) {
    Network net = testing_util::RandomNetwork(
        rng, testing_util::Uniform(rng, 2, 5), 2, 0.35, 0.15);
    TrafficSpec traffic = testing_util::RandomTraffic(rng, net, 4, 12);
    if (trial % 5 == 0) traffic.source_cap = 2 + trial % 2;
    if (trial % 7 == 0 && net.node_count() > 2) {
      traffic.compromised = {testing_util::Uniform(rng, 0, net.node_count() - 1)};
    }
    try {
      CheckTraffic(net, traffic);
    } catch (const std::invalid_argument&) {
      continue;
    }
    ++checked;
    OracleResult full = Oracle(net, traffic, 12);
    for (bool lean : {false, true}) {
      SolveResult r =
          SolveExact(net, traffic, {.minimize_transmissions = lean});
      ASSERT_EQ(r.status, SolveStatus::kOptimal);
      EXPECT_EQ(r.delivery_time, full.min_delivery) << RenderNetwork(net);
      EXPECT_EQ(r.undelivered, full.min_undelivered) << RenderNetwork(net);
      QueueTrace trace =
          RunSchedule(net, traffic, r.schedule, Semantics::kStrict);
      Metrics m = ComputeMetrics(trace);
      EXPECT_EQ(m.delivery_time, r.delivery_time);
      EXPECT_EQ(m.undelivered_at_end, r.undelivered);
      EXPECT_EQ(m.transmissions, r.transmissions);
    }
    if (full.min_delivery && *full.min_delivery > 1) {
      EXPECT_LE(LowerBound(net, InitialQueues(net, traffic)),
                *full.min_delivery);
      TrafficSpec cut = traffic;
      cut.horizon = testing_util::Uniform(rng, 1, *full.min_delivery - 1);
      OracleResult o = Oracle(net, cut, *cut.horizon);
      SolveResult r = SolveExact(net, cut);
      EXPECT_FALSE(r.delivery_time);
      EXPECT_EQ(r.undelivered, o.min_undelivered) << RenderNetwork(net);
    }
  }
  EXPECT_GE(checked, 120);
}

TEST(SolverPropertyTest, HeuristicIsValidAndAboveBound) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    Network net = testing_util::RandomNetwork(
        rng, testing_util::Uniform(rng, 2, 30), 3, 0.1, 0.1);
    TrafficSpec traffic = testing_util::RandomTraffic(rng, net, 20, 400);
    SolveResult r = SolveHeuristic(net, traffic, {.seed = static_cast<uint64_t>(trial)});
    QueueTrace trace = RunSchedule(net, traffic, r.schedule, Semantics::kStrict);
    Metrics m = ComputeMetrics(trace);
    ASSERT_TRUE(r.delivery_time) << RenderNetwork(net);
    EXPECT_EQ(m.delivery_time, r.delivery_time);
    EXPECT_GE(*r.delivery_time, LowerBound(net, InitialQueues(net, traffic)));
    EXPECT_GE(*r.delivery_time, r.lower_bound_used);
  }
}

}  // namespace
}  // namespace nanroute
