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

// Traffic and schedule file formats.
//
// Traffic (text):
//   inject <node> <count>
//   qmax <node> <bound>      | qmax * <bound>   (every source)
//   tmax <slots>
//   period <slots>
//   compromised <node>
//
// Schedule (text), one line per non-empty slot; missing slots are empty:
//   slot <t>: <a>-><b>, <c>-><d>
//
// JSON mirrors:
//   traffic:  {"inject": {"2": 1}, "qmax": {"4": 3}, "qmax_all": 3,
//              "tmax": 24, "period": 24, "compromised": [5]}
//   schedule: {"slots": [{"slot": 0, "links": [[3, 1], [7, 2]]}, ...]}
//
// All node ids are 1-based in files.

#ifndef NANROUTE_IO_H_
#define NANROUTE_IO_H_

#include <string>
#include <string_view>

#include "nanroute/dynamics.h"
#include "nanroute/topology.h"

namespace nanroute {

TrafficSpec ParseTraffic(std::string_view text);
TrafficSpec ParseTrafficJson(std::string_view text);
std::string RenderTraffic(const TrafficSpec& traffic);
std::string RenderTrafficJson(const TrafficSpec& traffic);

Schedule ParseSchedule(std::string_view text);
Schedule ParseScheduleJson(std::string_view text);
std::string RenderSchedule(const Schedule& schedule);
std::string RenderScheduleJson(const Schedule& schedule);

// Reads a whole file; throws ParseError(0, ...) if it cannot be opened.
std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, std::string_view contents);

bool HasJsonExtension(const std::string& path);

// Dispatch on file extension (.json selects the JSON mirror).
Network LoadNetwork(const std::string& path);
TrafficSpec LoadTraffic(const std::string& path);
Schedule LoadSchedule(const std::string& path);

}  // namespace nanroute

#endif  // NANROUTE_IO_H_
