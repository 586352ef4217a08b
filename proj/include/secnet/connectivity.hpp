// Copyright 2026 The secnet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "secnet/error.hpp"
#include "secnet/graph.hpp"

namespace secnet {

// Link connectivity in the "p-connected" convention: the network survives any p
// link deletions and some p + 1 deletions disconnect it. p == -1 means disconnected.
struct LinkConnectivity {
  int p = -1;

  int lambda() const { return p + 1; }
  bool connected() const { return p >= 0; }
  friend bool operator==(const LinkConnectivity&, const LinkConnectivity&) = default;
};

struct MinCut {
  std::vector<Edge> edges;
  int size() const { return static_cast<int>(edges.size()); }
};

namespace detail {

// Unit-capacity max-flow over an undirected simple graph (each link is a pair of
// mutually-residual arcs). Buffers are reused across (s, t) queries.
class UnitFlow {
 public:
  UnitFlow(int n, std::span<const std::pair<NodeId, NodeId>> links)
      : n_(n), head_(static_cast<std::size_t>(n), -1) {
    to_.reserve(links.size() * 2);
    for (auto [u, v] : links) {
      add_arc(u, v);
      add_arc(v, u);
    }
    cap_.assign(to_.size(), 1);
    parent_arc_.resize(static_cast<std::size_t>(n));
    queue_.resize(static_cast<std::size_t>(n));
  }

  // Max flow from s to t, stopping early once `limit` units are routed.
  int max_flow(NodeId s, NodeId t, int limit = std::numeric_limits<int>::max()) {
    std::fill(cap_.begin(), cap_.end(), 1);
    int flow = 0;
    while (flow < limit && augment(s, t)) ++flow;
    return flow;
  }

  // Nodes reachable from s in the residual graph of the last max_flow call.
  std::vector<char> residual_side(NodeId s) {
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    std::size_t qh = 0, qt = 0;
    queue_[qt++] = s;
    seen[static_cast<std::size_t>(s)] = 1;
    while (qh < qt) {
      NodeId x = queue_[qh++];
      for (int a = head_[static_cast<std::size_t>(x)]; a != -1; a = next_[static_cast<std::size_t>(a)]) {
        NodeId y = to_[static_cast<std::size_t>(a)];
        if (cap_[static_cast<std::size_t>(a)] > 0 && !seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = 1;
          queue_[qt++] = y;
        }
      }
    }
    return seen;
  }

 private:
  void add_arc(NodeId u, NodeId v) {
    to_.push_back(v);
    next_.push_back(head_[static_cast<std::size_t>(u)]);
    head_[static_cast<std::size_t>(u)] = static_cast<int>(to_.size()) - 1;
  }

  bool augment(NodeId s, NodeId t) {
    std::fill(parent_arc_.begin(), parent_arc_.end(), -2);
    parent_arc_[static_cast<std::size_t>(s)] = -1;
    std::size_t qh = 0, qt = 0;
    queue_[qt++] = s;
    while (qh < qt) {
      NodeId x = queue_[qh++];
      for (int a = head_[static_cast<std::size_t>(x)]; a != -1; a = next_[static_cast<std::size_t>(a)]) {
        NodeId y = to_[static_cast<std::size_t>(a)];
        if (cap_[static_cast<std::size_t>(a)] > 0 && parent_arc_[static_cast<std::size_t>(y)] == -2) {
          parent_arc_[static_cast<std::size_t>(y)] = a;
          if (y == t) {
            for (NodeId z = t; z != s;) {
              int arc = parent_arc_[static_cast<std::size_t>(z)];
              cap_[static_cast<std::size_t>(arc)] -= 1;
              cap_[static_cast<std::size_t>(arc ^ 1)] += 1;
              z = to_[static_cast<std::size_t>(arc ^ 1)];
            }
            return true;
          }
          queue_[qt++] = y;
        }
      }
    }
    return false;
  }

  int n_;
  std::vector<int> head_;
  std::vector<int> next_;
  std::vector<NodeId> to_;
  std::vector<int> cap_;
  std::vector<int> parent_arc_;
  std::vector<NodeId> queue_;
};

inline std::vector<std::pair<NodeId, NodeId>> links_of(const LayeredGraph& g) {
  std::vector<std::pair<NodeId, NodeId>> out;
  out.reserve(g.edge_count());
  for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

// Standard edge connectivity (size of a minimum disconnecting set), capped at `cap`.
// Also reports the sink whose s-t cut attains the minimum.
inline std::pair<int, NodeId> edge_connectivity(int n, std::span<const std::pair<NodeId, NodeId>> links,
                                                int cap = std::numeric_limits<int>::max()) {
  if (n <= 1) return {0, 0};
  UnitFlow flow(n, links);
  int best = cap;
  NodeId arg = -1;
  for (NodeId t = 1; t < n && best > 0; ++t) {
    int f = flow.max_flow(0, t, best);
    if (f < best || arg == -1) {
      if (f < best) best = f;
      arg = t;
    }
  }
  return {best, arg};
}

// True iff every s-t flow reaches `target`, i.e. lambda >= target.
inline bool edge_connectivity_at_least(int n, std::span<const std::pair<NodeId, NodeId>> links, int target) {
  if (target <= 0) return true;
  if (n <= 1) return true;
  if (static_cast<long long>(links.size()) * 2 < static_cast<long long>(n) * target) return false;
  return edge_connectivity(n, links, target).first >= target;
}

}  // namespace detail

inline bool is_connected(const LayeredGraph& g) {
  const int n = g.node_count();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<NodeId> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    NodeId x = stack.back();
    stack.pop_back();
    for (NodeId y : g.neighbors(x))
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = 1;
        ++reached;
        stack.push_back(y);
      }
  }
  return reached == n;
}

inline LinkConnectivity link_connectivity(const LayeredGraph& g) {
  if (!is_connected(g)) return {-1};
  auto links = detail::links_of(g);
  return {detail::edge_connectivity(g.node_count(), links).first - 1};
}

inline bool is_p_resistant(const LayeredGraph& g, int p) {
  if (p < 0) return true;
  if (!is_connected(g)) return false;
  auto links = detail::links_of(g);
  return detail::edge_connectivity_at_least(g.node_count(), links, p + 1);
}

// A minimum disconnecting link set. Disconnected input has no such cut by contract.
inline MinCut min_edge_cut(const LayeredGraph& g) {
  if (!is_connected(g)) throw InvalidArgument("min_edge_cut requires a connected network");
  if (g.node_count() < 2) throw InvalidArgument("min_edge_cut requires at least two nodes");
  auto links = detail::links_of(g);
  auto [lambda, sink] = detail::edge_connectivity(g.node_count(), links);
  detail::UnitFlow flow(g.node_count(), links);
  flow.max_flow(0, sink);
  std::vector<char> side = flow.residual_side(0);
  MinCut cut;
  for (const Edge& e : g.edges())
    if (side[static_cast<std::size_t>(e.u)] != side[static_cast<std::size_t>(e.v)]) cut.edges.push_back(e);
  if (cut.size() != lambda) throw Error("internal: min cut size mismatch");
  return cut;
}

}  // namespace secnet
