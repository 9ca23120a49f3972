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

#include "nanroute/io.h"

#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"
#include "text_util.h"

namespace nanroute {
namespace {

using json = nlohmann::json;

int JsonNode(const json& value, const std::string& what) {
  int id = 0;
  if (value.is_number_integer()) {
    id = value.get<int>();
  } else if (value.is_string()) {
    id = internal::ParseInt(value.get<std::string>(), 0, what);
  } else {
    throw ParseError(0, what + " must be an integer node id");
  }
  if (id <= 0) throw ParseError(0, what + " must be positive");
  return id - 1;
}

int JsonCount(const json& value, const std::string& what) {
  if (!value.is_number_integer() || value.get<long long>() < 0) {
    throw ParseError(0, what + " must be a non-negative integer");
  }
  return value.get<int>();
}

json ParseJsonText(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(0, std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

TrafficSpec ParseTraffic(std::string_view text) {
  TrafficSpec traffic;
  internal::ForEachStatement(text, [&](int line, const auto& tok) {
    auto need = [&](size_t n, const char* usage) {
      if (tok.size() != n) throw ParseError(line, std::string("expected '") +
                                                      usage + "'");
    };
    if (tok[0] == "inject") {
      need(3, "inject <node> <count>");
      NodeId node = internal::ParsePositive(tok[1], line) - 1;
      if (traffic.injections.contains(node)) {
        throw ParseError(line, "duplicate inject for node " +
                                   std::string(tok[1]));
      }
      traffic.injections[node] = internal::ParseNonNegative(tok[2], line);
    } else if (tok[0] == "qmax") {
      need(3, "qmax <node|*> <bound>");
      int bound = internal::ParseNonNegative(tok[2], line);
      if (tok[1] == "*") {
        traffic.source_cap = bound;
      } else {
        traffic.queue_caps[internal::ParsePositive(tok[1], line) - 1] = bound;
      }
    } else if (tok[0] == "tmax") {
      need(2, "tmax <slots>");
      traffic.horizon = internal::ParsePositive(tok[1], line);
    } else if (tok[0] == "period") {
      need(2, "period <slots>");
      traffic.period = internal::ParsePositive(tok[1], line);
    } else if (tok[0] == "compromised") {
      need(2, "compromised <node>");
      traffic.compromised.insert(internal::ParsePositive(tok[1], line) - 1);
    } else {
      throw ParseError(line, "unknown directive '" + std::string(tok[0]) + "'");
    }
  });
  return traffic;
}

TrafficSpec ParseTrafficJson(std::string_view text) {
  json doc = ParseJsonText(text);
  if (!doc.is_object()) throw ParseError(0, "traffic JSON must be an object");
  TrafficSpec traffic;
  for (const auto& [key, value] : doc.items()) {
    if (key == "inject") {
      for (const auto& [node, count] : value.items()) {
        traffic.injections[JsonNode(json(node), "inject key")] =
            JsonCount(count, "inject count");
      }
    } else if (key == "qmax") {
      for (const auto& [node, bound] : value.items()) {
        traffic.queue_caps[JsonNode(json(node), "qmax key")] =
            JsonCount(bound, "qmax bound");
      }
    } else if (key == "qmax_all") {
      traffic.source_cap = JsonCount(value, "qmax_all");
    } else if (key == "tmax") {
      traffic.horizon = JsonCount(value, "tmax");
      if (*traffic.horizon < 1) throw ParseError(0, "tmax must be positive");
    } else if (key == "period") {
      traffic.period = JsonCount(value, "period");
      if (*traffic.period < 1) throw ParseError(0, "period must be positive");
    } else if (key == "compromised") {
      if (!value.is_array()) throw ParseError(0, "compromised must be a list");
      for (const json& node : value) {
        traffic.compromised.insert(JsonNode(node, "compromised entry"));
      }
    } else {
      throw ParseError(0, "unknown traffic key '" + key + "'");
    }
  }
  return traffic;
}

std::string RenderTraffic(const TrafficSpec& traffic) {
  std::ostringstream out;
  for (const auto& [node, count] : traffic.injections) {
    out << "inject " << node + 1 << ' ' << count << '\n';
  }
  if (traffic.source_cap) out << "qmax * " << *traffic.source_cap << '\n';
  for (const auto& [node, bound] : traffic.queue_caps) {
    out << "qmax " << node + 1 << ' ' << bound << '\n';
  }
  if (traffic.horizon) out << "tmax " << *traffic.horizon << '\n';
  if (traffic.period) out << "period " << *traffic.period << '\n';
  for (NodeId node : traffic.compromised) {
    out << "compromised " << node + 1 << '\n';
  }
  return out.str();
}

std::string RenderTrafficJson(const TrafficSpec& traffic) {
  json doc = json::object();
  json inject = json::object();
  for (const auto& [node, count] : traffic.injections) {
    inject[std::to_string(node + 1)] = count;
  }
  doc["inject"] = inject;
  if (!traffic.queue_caps.empty()) {
    json caps = json::object();
    for (const auto& [node, bound] : traffic.queue_caps) {
      caps[std::to_string(node + 1)] = bound;
    }
    doc["qmax"] = caps;
  }
  if (traffic.source_cap) doc["qmax_all"] = *traffic.source_cap;
  if (traffic.horizon) doc["tmax"] = *traffic.horizon;
  if (traffic.period) doc["period"] = *traffic.period;
  if (!traffic.compromised.empty()) {
    json list = json::array();
    for (NodeId node : traffic.compromised) list.push_back(node + 1);
    doc["compromised"] = list;
  }
  return doc.dump(2) + "\n";
}

Schedule ParseSchedule(std::string_view text) {
  std::map<int, Activation> slots;
  internal::ForEachStatement(text, [&](int line, const auto& tok) {
    if (tok[0] != "slot" || tok.size() < 2) {
      throw ParseError(line, "expected 'slot <t>: <a>-><b>, ...'");
    }
    // Re-join the rest so that "3:" / "3 :" / "3: 1->2,3->4" all work.
    std::string rest;
    for (size_t i = 1; i < tok.size(); ++i) {
      rest += tok[i];
      rest += ' ';
    }
    size_t colon = rest.find(':');
    if (colon == std::string::npos) {
      throw ParseError(line, "missing ':' after slot number");
    }
    std::vector<std::string_view> head =
        internal::Tokenize(std::string_view(rest).substr(0, colon));
    if (head.size() != 1) throw ParseError(line, "bad slot number");
    int slot = internal::ParseNonNegative(head[0], line);
    if (slots.contains(slot)) {
      throw ParseError(line, "duplicate slot " + std::to_string(slot));
    }
    std::vector<Link> links;
    std::string body = rest.substr(colon + 1);
    size_t start = 0;
    while (start <= body.size()) {
      size_t end = body.find(',', start);
      if (end == std::string::npos) end = body.size();
      std::string item = body.substr(start, end - start);
      start = end + 1;
      std::vector<std::string_view> parts = internal::Tokenize(item);
      std::string compact;
      for (auto p : parts) compact += p;
      if (compact.empty()) {
        // Only a slot with no links at all may have an empty body.
        if (!internal::Tokenize(body).empty()) {
          throw ParseError(line, "empty link entry");
        }
        continue;
      }
      size_t arrow = compact.find("->");
      if (arrow == std::string::npos) {
        throw ParseError(line, "expected '<a>-><b>', got '" + compact + "'");
      }
      int a = internal::ParsePositive(std::string_view(compact).substr(0, arrow),
                                      line);
      int b = internal::ParsePositive(
          std::string_view(compact).substr(arrow + 2), line);
      links.push_back({a - 1, b - 1});
    }
    slots[slot] = MakeActivation(std::move(links));
  });
  Schedule schedule;
  if (!slots.empty()) schedule.resize(slots.rbegin()->first + 1);
  for (auto& [slot, act] : slots) schedule[slot] = std::move(act);
  return schedule;
}

Schedule ParseScheduleJson(std::string_view text) {
  json doc = ParseJsonText(text);
  if (!doc.is_object() || !doc.contains("slots") || !doc["slots"].is_array()) {
    throw ParseError(0, "schedule JSON must be {\"slots\": [...]}");
  }
  std::map<int, Activation> slots;
  for (const json& entry : doc["slots"]) {
    if (!entry.is_object() || !entry.contains("slot")) {
      throw ParseError(0, "slot entry must have a \"slot\" field");
    }
    int slot = JsonCount(entry["slot"], "slot");
    if (slots.contains(slot)) {
      throw ParseError(0, "duplicate slot " + std::to_string(slot));
    }
    std::vector<Link> links;
    if (entry.contains("links")) {
      for (const json& link : entry["links"]) {
        if (!link.is_array() || link.size() != 2) {
          throw ParseError(0, "link must be a [from, to] pair");
        }
        links.push_back({JsonNode(link[0], "link endpoint"),
                         JsonNode(link[1], "link endpoint")});
      }
    }
    slots[slot] = MakeActivation(std::move(links));
  }
  Schedule schedule;
  if (!slots.empty()) schedule.resize(slots.rbegin()->first + 1);
  for (auto& [slot, act] : slots) schedule[slot] = std::move(act);
  return schedule;
}

std::string RenderSchedule(const Schedule& schedule) {
  std::ostringstream out;
  for (size_t t = 0; t < schedule.size(); ++t) {
    if (schedule[t].empty()) continue;
    out << "slot " << t << ':';
    for (size_t k = 0; k < schedule[t].size(); ++k) {
      out << (k == 0 ? " " : ", ") << schedule[t][k].from + 1 << "->"
          << schedule[t][k].to + 1;
    }
    out << '\n';
  }
  return out.str();
}

std::string RenderScheduleJson(const Schedule& schedule) {
  json slots = json::array();
  for (size_t t = 0; t < schedule.size(); ++t) {
    if (schedule[t].empty()) continue;
    json links = json::array();
    for (const Link& l : schedule[t]) links.push_back({l.from + 1, l.to + 1});
    slots.push_back({{"slot", t}, {"links", links}});
  }
  json doc = {{"slots", slots}};
  return doc.dump(2) + "\n";
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteFile(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << contents;
}

bool HasJsonExtension(const std::string& path) {
  return path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
}

Network LoadNetwork(const std::string& path) {
  return ParseNetwork(ReadFile(path));
}

TrafficSpec LoadTraffic(const std::string& path) {
  std::string text = ReadFile(path);
  return HasJsonExtension(path) ? ParseTrafficJson(text) : ParseTraffic(text);
}

Schedule LoadSchedule(const std::string& path) {
  std::string text = ReadFile(path);
  return HasJsonExtension(path) ? ParseScheduleJson(text)
                                : ParseSchedule(text);
}

}  // namespace nanroute
