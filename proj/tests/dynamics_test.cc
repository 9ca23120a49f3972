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

#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "nanroute/fixtures.h"
#include "nanroute/io.h"
#include "test_util.h"

namespace nanroute {
namespace {

// 1-based link for readability.
Link L(int from, int to) { return {from - 1, to - 1}; }

TEST(ValidateActivationTest, Nan11Examples) {
  Network net = BuiltinNan11();
  EXPECT_TRUE(ValidateActivation(
                  net, MakeActivation({L(3, 1), L(7, 2), L(6, 4), L(11, 10)}))
                  .empty());

  auto v = ValidateActivation(net, MakeActivation({L(2, 1), L(1, 3)}));
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].rule, "3.7");
  EXPECT_NE(v[0].detail.find("node 1 services 2 links"), std::string::npos);

  v = ValidateActivation(net, MakeActivation({L(2, 1), L(1, 2)}));
  ASSERT_EQ(v.size(), 2u);  // node 1 and node 2
  EXPECT_EQ(v[0].rule, "3.8");
  EXPECT_EQ(v[1].rule, "3.8");

  v = ValidateActivation(net, MakeActivation({L(1, 4)}));
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].rule, "3.5");
  EXPECT_NE(v[0].detail.find("1->4"), std::string::npos);

  v = ValidateActivation(net, MakeActivation({L(12, 1)}));
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].rule, "unknown-node");
}

TEST(StepTest, FirstSlotOfUnequalTraffic) {
  Network net = BuiltinNan11();
  std::vector<int> q = InitialQueues(net, fixtures::UnequalTraffic());
  EXPECT_EQ(q, (std::vector<int>{0, 1, 3, 3, 2, 3, 1, 2, 3, 3, 3}));
  StepResult r =
      Step(net, q, MakeActivation({L(3, 1), L(7, 2), L(6, 4), L(11, 10)}),
           Semantics::kStrict);
  std::vector<int> want = q;
  want[2] = 2;   // node 3
  want[1] = 2;   // node 2
  want[6] = 0;   // node 7
  want[5] = 2;   // node 6
  want[3] = 4;   // node 4
  want[10] = 2;  // node 11
  want[9] = 4;   // node 10
  EXPECT_EQ(r.queues, want);
  EXPECT_EQ(r.moved, 4);
  EXPECT_EQ(r.delivered, 1);
  ASSERT_EQ(r.delivered_to.size(), 1u);
  EXPECT_EQ(r.delivered_to[0].first, 0);
}

TEST(StepTest, EmptyActivationIsIdentity) {
  Network net = BuiltinNan11();
  std::vector<int> q = InitialQueues(net, fixtures::UnequalTraffic());
  StepResult r = Step(net, q, {}, Semantics::kStrict);
  EXPECT_EQ(r.queues, q);
  EXPECT_EQ(r.moved, 0);
}

TEST(StepTest, EmptySenderDependsOnSemantics) {
  Network net = BuiltinNan11();
  std::vector<int> q(11, 1);
  q[0] = 0;
  q[5] = 0;  // node 6
  Activation act = MakeActivation({L(6, 4)});
  StepResult r = Step(net, q, act, Semantics::kOperational);
  EXPECT_EQ(r.queues, q);
  EXPECT_EQ(r.moved, 0);
  try {
    Step(net, q, act, Semantics::kStrict);
    FAIL() << "expected ScheduleError";
  } catch (const ScheduleError& e) {
    EXPECT_EQ(e.rule(), "empty-sender");
    EXPECT_NE(std::string(e.what()).find("6->4"), std::string::npos);
  }
}

TEST(StepTest, QueueCapAtReceiver) {
  Network net = BuiltinNan11();
  std::vector<int> q(11, 0);
  q[3] = 3;  // node 4
  q[4] = 1;  // node 5
  Limits limits = ResolveLimits(net, {.queue_caps = {{3, 3}}});
  try {
    Step(net, q, MakeActivation({L(5, 4)}), Semantics::kStrict, limits);
    FAIL();
  } catch (const ScheduleError& e) {
    EXPECT_EQ(e.rule(), "3.9");
  }
  // A node at its cap may still send.
  StepResult r =
      Step(net, q, MakeActivation({L(4, 7)}), Semantics::kStrict, limits);
  EXPECT_EQ(r.queues[3], 2);
}

TEST(StepTest, CompromisedNodesAreFrozen) {
  Network net = BuiltinNan11();
  TrafficSpec traffic = fixtures::UnequalTraffic();
  traffic.compromised = {4};  // node 5
  Limits limits = ResolveLimits(net, traffic);
  std::vector<int> q = InitialQueues(net, traffic);
  EXPECT_THROW(
      Step(net, q, MakeActivation({L(5, 4)}), Semantics::kStrict, limits),
      ScheduleError);
  StepResult r =
      Step(net, q, MakeActivation({L(5, 4)}), Semantics::kOperational, limits);
  EXPECT_EQ(r.queues, q);
}

TEST(RunScheduleTest, UnequalFixture) {
  Network net = BuiltinNan11();
  QueueTrace trace = RunSchedule(net, fixtures::UnequalTraffic(),
                                 fixtures::UnequalSchedule(),
                                 Semantics::kStrict);
  Metrics m = ComputeMetrics(trace);
  EXPECT_EQ(m.delivery_time, 24);
  EXPECT_EQ(m.transmissions, 82);
  EXPECT_EQ(m.max_queue, 6);
  EXPECT_EQ(m.undelivered_at_end, 0);
  EXPECT_EQ(trace.delivered_per_node[0], 24);
}

TEST(RunScheduleTest, AsPrintedFixtureFailsAtSlotFive) {
  Network net = BuiltinNan11();
  Schedule printed = ParseSchedule(fixtures::UnequalScheduleAsPrintedText());
  try {
    RunSchedule(net, fixtures::UnequalTraffic(), printed, Semantics::kStrict);
    FAIL();
  } catch (const ScheduleError& e) {
    EXPECT_EQ(e.slot(), 5);
    EXPECT_EQ(e.rule(), "3.7");
  }
}

TEST(RunScheduleTest, CappedFixture) {
  Network net = BuiltinNan11();
  QueueTrace trace = RunSchedule(net, fixtures::CappedTraffic(),
                                 fixtures::CappedSchedule(),
                                 Semantics::kStrict);
  Metrics m = ComputeMetrics(trace);
  EXPECT_EQ(m.delivery_time, 24);
  EXPECT_EQ(m.transmissions, 88);
  EXPECT_LE(m.max_queue, 3);
}

TEST(RunScheduleTest, UnitFixture) {
  Network net = BuiltinNan11();
  QueueTrace trace = RunSchedule(net, fixtures::UnitTraffic(net, 10),
                                 fixtures::UnitSchedule(), Semantics::kStrict);
  Metrics m = ComputeMetrics(trace);
  EXPECT_EQ(m.delivery_time, 10);
  EXPECT_EQ(m.undelivered_at_end, 0);
  EXPECT_EQ(trace.delivered_per_node[0], 10);
}

TEST(RunScheduleTest, EmptyTraffic) {
  Network net = BuiltinNan11();
  TrafficSpec traffic;
  traffic.horizon = 3;
  QueueTrace trace = RunSchedule(net, traffic, {}, Semantics::kStrict);
  Metrics m = ComputeMetrics(trace);
  EXPECT_EQ(m.delivery_time, 0);
  EXPECT_EQ(m.transmissions, 0);
}

TEST(RunScheduleTest, LongerThanHorizonIsRejected) {
  Network net = BuiltinNan11();
  EXPECT_THROW(RunSchedule(net, fixtures::UnequalTraffic(20),
                           fixtures::UnequalSchedule(), Semantics::kStrict),
               ScheduleError);
}

TEST(CheckTrafficTest, RejectsBadTraffic) {
  Network relay = fixtures::RelayNan11();
  EXPECT_THROW(CheckTraffic(relay, fixtures::UnequalTraffic()),
               std::invalid_argument);
  EXPECT_NO_THROW(CheckTraffic(relay, fixtures::RelayTraffic()));
  Network net = BuiltinNan11();
  EXPECT_THROW(CheckTraffic(net, {.injections = {{0, 1}}}),
               std::invalid_argument);  // gateway
  EXPECT_THROW(CheckTraffic(net, {.injections = {{11, 1}}}),
               std::invalid_argument);  // unknown
  EXPECT_THROW(CheckTraffic(net, {.injections = {{1, -1}}}),
               std::invalid_argument);
  EXPECT_THROW(CheckTraffic(net, {.injections = {{1, 4}}, .source_cap = 3}),
               std::invalid_argument);
  EXPECT_THROW(CheckTraffic(net, {.injections = {{1, 1}}, .horizon = 0}),
               std::invalid_argument);
}

// Conservation, gateway rows, monotone emptiness and per-slot delivery bounds
// over random operational runs.
TEST(DynamicsPropertyTest, InvariantsOnRandomRuns) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    Network net = testing_util::RandomNetwork(rng, 2 + trial % 9, 3, 0.3, 0.2);
    TrafficSpec traffic = testing_util::RandomTraffic(rng, net, 8, 12);
    Schedule schedule;
    for (int t = 0; t < 12; ++t) {
      schedule.push_back(testing_util::RandomActivation(rng, net));
    }
    QueueTrace trace =
        RunSchedule(net, traffic, schedule, Semantics::kOperational);
    const int total = traffic.TotalMessages();
    int delivered = 0;
    bool emptied = false;
    for (int t = 0; t <= trace.slots(); ++t) {
      if (t > 0) {
        delivered += trace.delivered_per_slot[t - 1];
        EXPECT_LE(trace.delivered_per_slot[t - 1], net.gateway_count());
        if (emptied) {
          EXPECT_EQ(trace.moved_per_slot[t - 1], 0);
        }
      }
      EXPECT_EQ(trace.TotalAt(t) + delivered, total);
      for (NodeId g : net.Gateways()) EXPECT_EQ(trace.queues[t][g], 0);
      for (int q : trace.queues[t]) EXPECT_GE(q, 0);
      if (emptied) {
        EXPECT_EQ(trace.TotalAt(t), 0);
      }
      emptied = emptied || trace.TotalAt(t) == 0;
    }
    // Same schedule with empty-sender links removed: strict agrees.
    Schedule firing;
    for (int t = 0; t < trace.slots(); ++t) {
      Activation act;
      for (const Link& l : schedule[t]) {
        if (trace.queues[t][l.from] > 0 && !net.IsGateway(l.from)) {
          act.push_back(l);
        }
      }
      firing.push_back(act);
    }
    QueueTrace strict = RunSchedule(net, traffic, firing, Semantics::kStrict);
    EXPECT_EQ(strict.queues, trace.queues);
    // Replay determinism.
    EXPECT_EQ(RunSchedule(net, traffic, schedule, Semantics::kOperational)
                  .queues,
              trace.queues);
  }
}

}  // namespace
}  // namespace nanroute
