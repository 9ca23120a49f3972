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

#include "nanroute/fixtures.h"

#include <array>

#include "nanroute/io.h"

namespace nanroute::fixtures {
namespace {

constexpr std::array<int, 10> kUnequalInjections = {1, 3, 3, 2, 3,
                                                    1, 2, 3, 3, 3};

}  // namespace

TrafficSpec UnequalTraffic(int horizon) {
  TrafficSpec traffic;
  for (int k = 0; k < 10; ++k) traffic.injections[k + 1] = kUnequalInjections[k];
  traffic.horizon = horizon;
  return traffic;
}

TrafficSpec CappedTraffic(int horizon) {
  TrafficSpec traffic = UnequalTraffic(horizon);
  traffic.source_cap = 3;
  return traffic;
}

Network RelayNan11() {
  Network base = BuiltinNan11();
  std::vector<NodeRole> roles(base.roles().begin(), base.roles().end());
  roles[6] = NodeRole::kRelay;
  return Network(std::move(roles),
                 std::vector<Edge>(base.edges().begin(), base.edges().end()));
}

TrafficSpec RelayTraffic(int horizon) {
  TrafficSpec traffic = UnequalTraffic(horizon);
  traffic.injections.erase(6);
  return traffic;
}

TrafficSpec UnitTraffic(const Network& net, int horizon) {
  TrafficSpec traffic;
  for (NodeId i = 0; i < net.node_count(); ++i) {
    if (net.role(i) == NodeRole::kSource) traffic.injections[i] = 1;
  }
  traffic.horizon = horizon;
  return traffic;
}

std::string_view UnequalScheduleText() {
  return R"(slot 0: 3->1, 7->2, 6->4, 11->10
slot 1: 2->1, 9->3, 5->4, 11->10
slot 2: 2->1, 9->3, 6->4, 11->10
slot 3: 3->1, 8->2, 5->6, 4->7, 10->9
slot 4: 2->1, 9->3, 8->10
slot 5: 3->1, 7->2, 6->4, 10->8
slot 6: 2->1, 9->3, 6->5, 4->7
slot 7: 3->1, 8->2, 10->11, 4->7
slot 8: 3->1, 7->2, 10->9
slot 9: 3->1, 7->2, 10->9, 11->8
slot 10: 2->1, 9->3, 10->8, 4->7
slot 11: 3->1, 7->2, 4->6, 8->10
slot 12: 2->1, 10->9, 5->6, 4->7, 8->11
slot 13: 3->1, 4->7, 11->8
slot 14: 2->1, 9->3, 6->4, 7->8
slot 15: 2->1, 9->3, 6->5, 4->7, 8->10
slot 16: 3->1, 8->2, 5->4, 10->9
slot 17: 2->1, 9->3, 4->7
slot 18: 3->1, 7->2, 10->9
slot 19: 2->1, 9->3
slot 20: 3->1, 7->2
slot 21: 2->1
slot 22: 3->1, 7->2
slot 23: 2->1
)";
}

std::string_view UnequalScheduleAsPrintedText() {
  return R"(slot 0: 3->1, 7->2, 6->4, 11->10
slot 1: 2->1, 9->3, 5->4, 11->10
slot 2: 2->1, 9->3, 6->4, 11->10
slot 3: 3->1, 8->2, 5->6, 4->7, 10->9
slot 4: 2->1, 9->3, 8->10
slot 5: 2->1, 7->2, 6->4, 10->8
slot 6: 2->1, 9->3, 6->5, 4->7
slot 7: 3->1, 8->2, 10->11, 4->7
slot 8: 3->1, 7->2, 10->9
slot 9: 3->1, 7->2, 10->9, 11->8
slot 10: 2->1, 9->3, 10->8, 4->7
slot 11: 3->1, 7->2, 4->6, 8->10
slot 12: 2->1, 10->9, 5->6, 4->7, 8->11
slot 13: 3->1, 4->7, 11->8
slot 14: 2->1, 9->3, 6->4, 7->8
slot 15: 2->1, 9->3, 6->5, 4->7, 8->10
slot 16: 3->1, 8->2, 5->4, 10->9
slot 17: 2->1, 9->3, 4->7
slot 18: 3->1, 7->2, 10->9
slot 19: 2->1, 9->3
slot 20: 3->1, 7->2
slot 21: 2->1
slot 22: 3->1, 7->2
slot 23: 2->1
)";
}

std::string_view CappedScheduleText() {
  return R"(slot 0: 3->1, 8->2, 4->7
slot 1: 2->1, 9->3, 4->7
slot 2: 3->1, 7->2, 5->4, 10->9
slot 3: 2->1, 9->3, 6->5, 4->7, 11->10
slot 4: 3->1, 7->2, 4->6, 10->9, 8->11
slot 5: 2->1, 9->3, 6->4, 11->10
slot 6: 3->1, 6->4, 10->9
slot 7: 2->1, 9->3, 5->6, 4->7, 10->11
slot 8: 3->1, 7->2, 4->6, 11->8, 10->9
slot 9: 3->1, 9->2, 5->4, 8->7, 11->10
slot 10: 2->1, 9->3, 7->8, 11->10
slot 11: 2->1, 9->3, 4->7, 8->10
slot 12: 3->1, 7->2, 6->5, 10->9
slot 13: 3->1, 7->2, 5->6, 10->9
slot 14: 2->1, 9->3, 6->4, 7->8
slot 15: 3->1, 8->2, 4->7, 10->9
slot 16: 2->1, 9->3, 7->8
slot 17: 3->1, 6->4, 8->10
slot 18: 2->1, 9->3, 4->7
slot 19: 3->1, 6->4, 7->8
slot 20: 3->1, 8->2, 4->7, 10->9
slot 21: 2->1, 9->3, 7->8
slot 22: 3->1, 8->2
slot 23: 2->1
)";
}

std::string_view UnitScheduleText() {
  return R"(slot 0: 3->1, 7->2, 6->4, 10->9
slot 1: 2->1, 9->3, 4->7, 11->10
slot 2: 2->1, 9->3, 5->4, 8->10
slot 3: 3->1, 7->2, 10->9
slot 4: 3->1, 9->2, 4->7
slot 5: 2->1, 7->8, 10->9
slot 6: 2->1, 9->3, 8->10, 4->7
slot 7: 3->1, 7->2, 10->9
slot 8: 2->1, 9->3
slot 9: 3->1
)";
}

Schedule UnequalSchedule() { return ParseSchedule(UnequalScheduleText()); }
Schedule CappedSchedule() { return ParseSchedule(CappedScheduleText()); }
Schedule UnitSchedule() { return ParseSchedule(UnitScheduleText()); }

}  // namespace nanroute::fixtures
