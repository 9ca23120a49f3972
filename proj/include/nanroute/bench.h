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

// Reproduction bench for the 11-node experiments. Every observed value is
// recomputed on each run from the embedded fixtures.
//
// Experiments:
//   1       unequal traffic: fixture replay and exact optimum (24 slots)
//   2       same with source queues capped at 3: fixture replay
//   3       node 7 as a relay: exact optimum
//   4       unequal traffic with a 20-slot horizon: fewest undelivered
//   5       one message per source: exact optimum and fixture replay
//   table3  second gateway at each of nodes 2..11, one message per source

#ifndef NANROUTE_BENCH_H_
#define NANROUTE_BENCH_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nanroute {

struct BenchRow {
  std::string experiment;
  std::string quantity;
  int expected = 0;
  // How `observed` is compared with `expected` for `match`: "=" or "<=".
  std::string relation = "=";
  std::optional<int> observed;
  bool match = false;
  // Whether the row meets its acceptance rule. Differs from `match` where a
  // disagreement is explained by the reconstructed topology.
  bool accepted = false;
  double seconds = 0;
  std::string note;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  bool AllAccepted() const;
};

struct BenchOptions {
  double time_budget = 0;  // per exact solve, seconds; 0 = unlimited
};

// `selector` is "1".."5", "table3" or "all". Throws std::invalid_argument
// for anything else.
BenchReport RunBench(std::string_view selector, const BenchOptions& options = {});

std::string RenderBenchText(const BenchReport& report);
std::string RenderBenchJson(const BenchReport& report);

}  // namespace nanroute

#endif  // NANROUTE_BENCH_H_
