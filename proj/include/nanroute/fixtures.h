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

// Built-in instances for the 11-node network (see BuiltinNan11): the
// reference traffic vectors and optimal link schedules, embedded so that the
// benchmark needs no input files.

#ifndef NANROUTE_FIXTURES_H_
#define NANROUTE_FIXTURES_H_

#include <string_view>

#include "nanroute/dynamics.h"

namespace nanroute::fixtures {

// Unequal injections at nodes 2..11: 1,3,3,2,3,1,2,3,3,3 (24 messages).
TrafficSpec UnequalTraffic(int horizon = 24);
// Same with every source capped at 3 messages.
TrafficSpec CappedTraffic(int horizon = 24);
// Same as UnequalTraffic with node 7 turned into a relay that injects nothing
// (23 messages). Use with RelayNan11().
TrafficSpec RelayTraffic(int horizon = 23);
Network RelayNan11();
// One message at every non-gateway node of `net`.
TrafficSpec UnitTraffic(const Network& net, int horizon);

// Single-gateway schedule for UnequalTraffic: 24 slots, 82 transmissions.
//
// The as-printed variant below has 2->1 in slot 5, where node 2 is empty and
// also receives over 7->2. This fixture uses 3->1 there, the one substitution
// that keeps the gateway busy in every slot; it gives 24 slots, 82
// transmissions and a peak queue of 6 at nodes 4 and 10.
std::string_view UnequalScheduleText();
// The table exactly as printed, slot 5 included. Fails validation.
std::string_view UnequalScheduleAsPrintedText();
// Schedule for CappedTraffic: 24 slots, 88 transmissions, queues <= 3.
std::string_view CappedScheduleText();
// Bid-aggregation schedule for unit traffic with gateway 1: 10 slots.
std::string_view UnitScheduleText();

Schedule UnequalSchedule();
Schedule CappedSchedule();
Schedule UnitSchedule();

}  // namespace nanroute::fixtures

#endif  // NANROUTE_FIXTURES_H_
