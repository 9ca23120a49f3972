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

#include "nanroute/topology.h"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <sstream>

#include "text_util.h"

namespace nanroute {

std::string_view RoleName(NodeRole role) {
  switch (role) {
    case NodeRole::kSource:
      return "source";
    case NodeRole::kRelay:
      return "relay";
    case NodeRole::kGateway:
      return "gateway";
  }
  return "?";
}

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " +
                                        message
                                  : message),
      line_(line) {}

Network::Network(std::vector<NodeRole> roles, std::vector<Edge> edges)
    : roles_(std::move(roles)), edges_(std::move(edges)) {
  for (Edge& e : edges_) {
    if (e.first > e.second) std::swap(e.first, e.second);
  }
  std::sort(edges_.begin(), edges_.end());
  adjacency_.resize(roles_.size());
  for (const Edge& e : edges_) {
    if (e.first < 0 || e.second >= node_count()) continue;
    adjacency_[e.first].push_back(e.second);
    if (e.first != e.second) adjacency_[e.second].push_back(e.first);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

bool Network::HasEdge(NodeId a, NodeId b) const {
  if (a < 0 || b < 0 || a >= node_count() || b >= node_count()) return false;
  const auto& list = adjacency_[a];
  return std::binary_search(list.begin(), list.end(), b);
}

std::vector<NodeId> Network::Gateways() const {
  std::vector<NodeId> out;
  for (NodeId i = 0; i < node_count(); ++i) {
    if (IsGateway(i)) out.push_back(i);
  }
  return out;
}

int Network::gateway_count() const {
  return static_cast<int>(
      std::count(roles_.begin(), roles_.end(), NodeRole::kGateway));
}

Network Network::WithGateways(std::span<const NodeId> gateways) const {
  std::vector<NodeRole> roles = roles_;
  for (NodeRole& r : roles) {
    if (r == NodeRole::kGateway) r = NodeRole::kSource;
  }
  for (NodeId g : gateways) {
    if (g < 0 || g >= node_count()) {
      throw std::out_of_range("gateway override names unknown node " +
                              std::to_string(g + 1));
    }
    roles[g] = NodeRole::kGateway;
  }
  return Network(std::move(roles), edges_);
}

std::vector<Violation> ValidateNetwork(const Network& net) {
  std::vector<Violation> out;
  const int n = net.node_count();
  if (n == 0) {
    out.push_back({"empty", "network has no nodes"});
    return out;
  }
  std::optional<Edge> previous;
  for (const Edge& e : net.edges()) {
    if (e.first < 0 || e.second >= n) {
      out.push_back({"unknown-node", "edge " + std::to_string(e.first + 1) +
                                         "-" + std::to_string(e.second + 1) +
                                         " references an unknown node"});
    } else if (e.first == e.second) {
      out.push_back(
          {"self-loop", "self-loop at " + std::to_string(e.first + 1)});
    } else if (previous && *previous == e) {
      out.push_back({"duplicate-edge", "duplicate edge " +
                                           std::to_string(e.first + 1) + "-" +
                                           std::to_string(e.second + 1)});
    }
    previous = e;
  }
  if (net.gateway_count() == 0) out.push_back({"no-gateway", "no gateway"});
  if (std::none_of(net.roles().begin(), net.roles().end(),
                   [](NodeRole r) { return r == NodeRole::kSource; })) {
    out.push_back({"no-source", "no source"});
  }

  std::vector<bool> seen(n, false);
  std::deque<NodeId> frontier{0};
  seen[0] = true;
  while (!frontier.empty()) {
    NodeId u = frontier.front();
    frontier.pop_front();
    for (NodeId v : net.neighbors(u)) {
      if (!seen[v]) {
        seen[v] = true;
        frontier.push_back(v);
      }
    }
  }
  for (NodeId i = 0; i < n; ++i) {
    if (!seen[i]) {
      out.push_back({"disconnected", "disconnected: node " +
                                         std::to_string(i + 1) +
                                         " is unreachable from node 1"});
      break;
    }
  }
  return out;
}

Network ParseNetwork(std::string_view text) {
  std::map<int, NodeRole> roles;
  struct PendingEdge {
    int a, b, line;
  };
  std::vector<PendingEdge> pending;

  internal::ForEachStatement(text, [&](int line_no, const auto& tok) {
    if (tok[0] == "node") {
      if (tok.size() != 3) {
        throw ParseError(line_no, "expected 'node <id> <role>'");
      }
      int id = internal::ParsePositive(tok[1], line_no);
      NodeRole role;
      if (tok[2] == "source") {
        role = NodeRole::kSource;
      } else if (tok[2] == "relay") {
        role = NodeRole::kRelay;
      } else if (tok[2] == "gateway") {
        role = NodeRole::kGateway;
      } else {
        throw ParseError(line_no, "unknown role '" + std::string(tok[2]) + "'");
      }
      if (!roles.emplace(id, role).second) {
        throw ParseError(line_no, "duplicate node id " + std::to_string(id));
      }
    } else if (tok[0] == "edge") {
      if (tok.size() != 3) {
        throw ParseError(line_no, "expected 'edge <id> <id>'");
      }
      pending.push_back({internal::ParsePositive(tok[1], line_no),
                         internal::ParsePositive(tok[2], line_no), line_no});
    } else {
      throw ParseError(line_no,
                       "unknown directive '" + std::string(tok[0]) + "'");
    }
  });

  const int n = static_cast<int>(roles.size());
  if (n > 0 && roles.rbegin()->first != n) {
    for (int id = 1; id <= n; ++id) {
      if (!roles.contains(id)) {
        throw ParseError(0, "node ids must be 1..N; node " +
                                std::to_string(id) + " is missing");
      }
    }
  }
  std::vector<NodeRole> role_vec;
  role_vec.reserve(n);
  for (const auto& [id, role] : roles) role_vec.push_back(role);

  std::vector<Edge> edges;
  for (const PendingEdge& e : pending) {
    for (int id : {e.a, e.b}) {
      if (!roles.contains(id)) {
        throw ParseError(e.line,
                         "edge references unknown node " + std::to_string(id));
      }
    }
    if (e.a == e.b) {
      throw ParseError(e.line, "self-loop at " + std::to_string(e.a));
    }
    edges.push_back({e.a - 1, e.b - 1});
  }

  Network net(std::move(role_vec), std::move(edges));
  std::vector<Violation> violations = ValidateNetwork(net);
  if (!violations.empty()) throw ParseError(0, violations.front().detail);
  return net;
}

std::string RenderNetwork(const Network& net) {
  std::ostringstream out;
  for (NodeId i = 0; i < net.node_count(); ++i) {
    out << "node " << i + 1 << ' ' << RoleName(net.role(i)) << '\n';
  }
  for (const Edge& e : net.edges()) {
    out << "edge " << e.first + 1 << ' ' << e.second + 1 << '\n';
  }
  return out.str();
}

std::string_view Nan11Text() {
  return R"(# 11-node neighborhood area network. Node 1 is the gateway.
node 1 gateway
node 2 source
node 3 source
node 4 source
node 5 source
node 6 source
node 7 source
node 8 source
node 9 source
node 10 source
node 11 source
edge 1 2
edge 1 3
edge 2 7
edge 2 8
edge 2 9
edge 3 9
edge 4 5
edge 4 6
edge 4 7
edge 5 6
edge 7 8
edge 8 10
edge 8 11
edge 9 10
edge 10 11
)";
}

Network BuiltinNan11() { return ParseNetwork(Nan11Text()); }

std::vector<int> GatewayDistances(const Network& net,
                                  std::span<const char> blocked) {
  const int n = net.node_count();
  auto is_blocked = [&](NodeId i) {
    return !blocked.empty() && blocked[i];
  };
  std::vector<int> dist(n, kUnreachable);
  std::deque<NodeId> frontier;
  for (NodeId g : net.Gateways()) {
    if (is_blocked(g)) continue;
    dist[g] = 0;
    frontier.push_back(g);
  }
  while (!frontier.empty()) {
    NodeId u = frontier.front();
    frontier.pop_front();
    for (NodeId v : net.neighbors(u)) {
      if (dist[v] == kUnreachable && !is_blocked(v)) {
        dist[v] = dist[u] + 1;
        frontier.push_back(v);
      }
    }
  }
  return dist;
}

int GatewayDistance(const Network& net, NodeId node) {
  if (node < 0 || node >= net.node_count()) {
    throw std::out_of_range("unknown node " + std::to_string(node + 1));
  }
  return GatewayDistances(net)[node];
}

}  // namespace nanroute
