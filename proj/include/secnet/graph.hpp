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
#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "secnet/error.hpp"

namespace secnet {

// Global 0-based index. Layer-1 nodes occupy [0, n1), layer-2 nodes [n1, n1 + n2).
using NodeId = int;

enum class Layer { One, Two };

enum class EdgeClass { Intra1, Intra2, Cross };

enum class Owner { Operator1, Operator2, Unowned };

inline const char* to_string(EdgeClass c) {
  switch (c) {
    case EdgeClass::Intra1: return "intra1";
    case EdgeClass::Intra2: return "intra2";
    case EdgeClass::Cross: return "cross";
  }
  return "?";
}

inline const char* to_string(Owner o) {
  switch (o) {
    case Owner::Operator1: return "operator1";
    case Owner::Operator2: return "operator2";
    case Owner::Unowned: return "unowned";
  }
  return "?";
}

// Operator 1 may build in E1 and E12, operator 2 in E2 and E12.
constexpr bool admissible(Owner owner, EdgeClass cls) {
  switch (owner) {
    case Owner::Operator1: return cls != EdgeClass::Intra2;
    case Owner::Operator2: return cls != EdgeClass::Intra1;
    case Owner::Unowned: return false;
  }
  return false;
}

// Undirected link, stored with u < v.
struct Edge {
  NodeId u = 0;
  NodeId v = 0;
  Owner owner = Owner::Unowned;
  EdgeClass cls = EdgeClass::Intra1;

  std::pair<NodeId, NodeId> key() const { return {u, v}; }
  bool same_link(const Edge& other) const { return u == other.u && v == other.v; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

inline bool link_less(const Edge& a, const Edge& b) { return a.key() < b.key(); }

class LayeredGraph {
 public:
  LayeredGraph(int n1, int n2) : n1_(n1), n2_(n2) {
    if (n1 < 1 || n2 < 1) throw InvalidArgument("both layers need at least one node");
    adj_.resize(static_cast<std::size_t>(n1 + n2));
  }

  int n1() const { return n1_; }
  int n2() const { return n2_; }
  int node_count() const { return n1_ + n2_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool valid_node(NodeId v) const { return v >= 0 && v < node_count(); }

  Layer layer_of(NodeId v) const {
    check_node(v);
    return v < n1_ ? Layer::One : Layer::Two;
  }

  EdgeClass classify(NodeId u, NodeId v) const {
    Layer a = layer_of(u);
    Layer b = layer_of(v);
    if (a != b) return EdgeClass::Cross;
    return a == Layer::One ? EdgeClass::Intra1 : EdgeClass::Intra2;
  }

  bool has_edge(NodeId u, NodeId v) const {
    if (!valid_node(u) || !valid_node(v)) return false;
    const auto& nb = adj_[static_cast<std::size_t>(u)];
    return std::find(nb.begin(), nb.end(), v) != nb.end();
  }

  const Edge* find_edge(NodeId u, NodeId v) const {
    if (u > v) std::swap(u, v);
    for (const Edge& e : edges_)
      if (e.u == u && e.v == v) return &e;
    return nullptr;
  }

  const Edge& add_edge(NodeId u, NodeId v, Owner owner) {
    check_node(u);
    check_node(v);
    if (u == v) throw InvalidArgument("self-loop at node " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (has_edge(u, v))
      throw InvalidArgument("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    EdgeClass cls = classify(u, v);
    if (!admissible(owner, cls))
      throw InvalidArgument(std::string(to_string(owner)) + " may not build a " + to_string(cls) +
                            " edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    adj_[static_cast<std::size_t>(u)].push_back(v);
    adj_[static_cast<std::size_t>(v)].push_back(u);
    edges_.push_back(Edge{u, v, owner, cls});
    return edges_.back();
  }

  LayeredGraph with_edge(NodeId u, NodeId v, Owner owner) const {
    LayeredGraph g = *this;
    g.add_edge(u, v, owner);
    return g;
  }

  // Removes exactly the listed links (matched by endpoints); every one must be present.
  LayeredGraph without_edges(std::span<const Edge> cut) const {
    std::vector<std::pair<NodeId, NodeId>> drop;
    drop.reserve(cut.size());
    for (const Edge& e : cut) {
      auto k = std::minmax(e.u, e.v);
      if (!has_edge(k.first, k.second))
        throw InvalidArgument("cannot remove absent edge (" + std::to_string(k.first) + "," +
                              std::to_string(k.second) + ")");
      drop.emplace_back(k.first, k.second);
    }
    std::sort(drop.begin(), drop.end());
    LayeredGraph g(n1_, n2_);
    for (const Edge& e : edges_)
      if (!std::binary_search(drop.begin(), drop.end(), e.key())) g.add_edge(e.u, e.v, e.owner);
    return g;
  }

  int degree(NodeId v) const {
    check_node(v);
    return static_cast<int>(adj_[static_cast<std::size_t>(v)].size());
  }

  const std::vector<NodeId>& neighbors(NodeId v) const {
    check_node(v);
    return adj_[static_cast<std::size_t>(v)];
  }

  int count_by(Owner owner, EdgeClass cls) const {
    return static_cast<int>(std::count_if(edges_.begin(), edges_.end(), [&](const Edge& e) {
      return e.owner == owner && e.cls == cls;
    }));
  }

  int count_class(EdgeClass cls) const {
    return static_cast<int>(
        std::count_if(edges_.begin(), edges_.end(), [&](const Edge& e) { return e.cls == cls; }));
  }

  // Upper bound on |edges| for a simple graph on the two layers.
  static long long max_edges(int n1, int n2) {
    long long a = n1, b = n2;
    return a * (a - 1) / 2 + b * (b - 1) / 2 + a * b;
  }

 private:
  void check_node(NodeId v) const {
    if (!valid_node(v)) throw InvalidArgument("node " + std::to_string(v) + " out of range");
  }

  int n1_;
  int n2_;
  std::vector<Edge> edges_;
  std::vector<std::vector<NodeId>> adj_;
};

inline LayeredGraph new_graph(int n1, int n2) { return LayeredGraph(n1, n2); }

inline LayeredGraph add_edge(const LayeredGraph& g, NodeId u, NodeId v, Owner owner) { return g.with_edge(u, v, owner); }

inline LayeredGraph remove_edges(const LayeredGraph& g, std::span<const Edge> cut) { return g.without_edges(cut); }

inline int degree(const LayeredGraph& g, NodeId v) { return g.degree(v); }

inline int count_by(const LayeredGraph& g, Owner owner, EdgeClass cls) { return g.count_by(owner, cls); }

// Every admissible link of one class, in lexicographic (u, v) order.
inline std::vector<std::pair<NodeId, NodeId>> all_links(int n1, int n2, EdgeClass cls) {
  std::vector<std::pair<NodeId, NodeId>> out;
  const int n = n1 + n2;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v) {
      bool lu = u < n1, lv = v < n1;
      EdgeClass c = lu != lv ? EdgeClass::Cross : (lu ? EdgeClass::Intra1 : EdgeClass::Intra2);
      if (c == cls) out.emplace_back(u, v);
    }
  return out;
}

}  // namespace secnet
