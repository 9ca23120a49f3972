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

#ifndef NANROUTE_TOPOLOGY_H_
#define NANROUTE_TOPOLOGY_H_

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nanroute {

// Nodes are indexed 0..N-1 internally. Every text/JSON format uses the
// 1-based numbering (internal index + 1).
using NodeId = int;

inline int ExternalId(NodeId node) { return node + 1; }

enum class NodeRole { kSource, kRelay, kGateway };

std::string_view RoleName(NodeRole role);

// Thrown for malformed input files. `line` is 1-based, 0 when the error is
// not tied to a single line (e.g. a disconnected graph).
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

// Undirected edge with first < second.
struct Edge {
  NodeId first;
  NodeId second;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// One broken rule, e.g. {"self-loop", "self-loop at 4"}.
struct Violation {
  std::string rule;
  std::string detail;
};

// Undirected unweighted graph with a source/relay/gateway partition.
//
// A Network may hold invalid data (that is what ValidateNetwork reports on);
// ParseNetwork and BuiltinNan11 only ever return valid ones. Once built it is
// never mutated, so it can be shared read-only between threads.
class Network {
 public:
  Network() = default;
  // Edges are normalized (first < second) and sorted, but not deduplicated
  // and self-loops are kept so that validation can report them.
  Network(std::vector<NodeRole> roles, std::vector<Edge> edges);

  int node_count() const { return static_cast<int>(roles_.size()); }
  NodeRole role(NodeId node) const { return roles_[node]; }
  std::span<const NodeRole> roles() const { return roles_; }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const NodeId> neighbors(NodeId node) const {
    return adjacency_[node];
  }
  bool HasEdge(NodeId a, NodeId b) const;
  bool IsGateway(NodeId node) const {
    return roles_[node] == NodeRole::kGateway;
  }
  std::vector<NodeId> Gateways() const;
  int gateway_count() const;

  // Copy with exactly `gateways` as gateways. Nodes that were gateways but
  // are not listed become sources; every other role is kept.
  Network WithGateways(std::span<const NodeId> gateways) const;

  friend bool operator==(const Network&, const Network&) = default;

 private:
  std::vector<NodeRole> roles_;
  std::vector<Edge> edges_;
  std::vector<std::vector<NodeId>> adjacency_;
};

// Parses the line-oriented network format:
//   # comment
//   node <id> <source|relay|gateway>
//   edge <id> <id>
// Ids must be exactly 1..N. Throws ParseError on syntax errors and on any
// violated Network invariant.
Network ParseNetwork(std::string_view text);

// Canonical text form; ParseNetwork(RenderNetwork(net)) == net.
std::string RenderNetwork(const Network& net);

// Empty iff the network is connected, has no self-loops or duplicate edges,
// and has at least one gateway and one source.
std::vector<Violation> ValidateNetwork(const Network& net);

// The 11-node neighborhood network used in the experiments: node 1 is the
// gateway, nodes 2-11 are sources. The edge set is the union of every link
// that appears in the reference optimal schedules (see fixtures.h).
Network BuiltinNan11();
std::string_view Nan11Text();

// Hop count from every node to its nearest gateway. Nodes listed in
// `blocked` can neither be traversed nor reached; unreachable nodes get
// kUnreachable.
inline constexpr int kUnreachable = 1 << 28;
std::vector<int> GatewayDistances(const Network& net,
                                  std::span<const char> blocked = {});

// Throws std::out_of_range for an unknown node.
int GatewayDistance(const Network& net, NodeId node);

}  // namespace nanroute

#endif  // NANROUTE_TOPOLOGY_H_
