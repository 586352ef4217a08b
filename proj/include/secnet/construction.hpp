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
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "secnet/connectivity.hpp"
#include "secnet/error.hpp"
#include "secnet/game.hpp"
#include "secnet/graph.hpp"
#include "secnet/rational.hpp"

namespace secnet {

// Operator budget split for a symmetric instance.
struct StageOnePlan {
  int n1 = 0;
  int k = 0;
  int e1 = 0;
  int e11 = 0;
  int e12 = 0;
  int op2_intra = 0;
  int op2_cross = 0;
  Rational c1_total;
  Rational c2_total;
  bool feasible = false;
  // The loop ran out of room for operator 1 before operator 2's cost fell below 1.
  bool cap_hit = false;

  int total_links() const { return e1 + op2_intra + op2_cross; }
};

struct BuiltNetwork {
  LayeredGraph graph{1, 1};
  StageOnePlan plan;
  bool is_null = true;
  int cycles_built = 0;
  std::vector<std::vector<Edge>> cycles;  // one entry per Hamiltonian cycle, when known
  int rewires = 0;
};

// Most layer-1 links operator 1 can place before spilling into cross links.
inline int stage1_intra_capacity(int n1, int k) { return (n1 - 1) * (k + 1) / 2; }

// Operator 2's cost once operator 1 has committed e1 links.
inline Rational stage1_operator2_cost(int n1, int k, const LinkCosts& c, int e1) {
  const int nb11 = stage1_intra_capacity(n1, k);
  Rational c2 = c.c21 * (n1 * (k + 1));
  c2 -= (c.c21 * 2 - c.c2) * std::min(e1, nb11);
  c2 -= c.c21 * std::max(0, e1 - nb11);
  return c2;
}

inline StageOnePlan stage1_allocate(int n1, int k, const LinkCosts& costs) {
  costs.validate();
  if (n1 < 2) throw InvalidArgument("stage-one allocation needs n1 >= 2");
  if (k < 0) throw InvalidArgument("attack budget must be non-negative");
  if (!costs.cross_dearer()) throw InvalidArgument("stage-one allocation requires c1 <= c12 and c2 <= c21");

  StageOnePlan plan;
  plan.n1 = n1;
  plan.k = k;
  const int total = n1 * (k + 1);
  const int nb11 = stage1_intra_capacity(n1, k);
  const int e12_cap = total - 2 * nb11;

  int e1 = 0;
  Rational c2 = costs.c21 * total;
  while (c2 >= 1) {
    if (e1 - nb11 >= e12_cap) {
      plan.cap_hit = true;
      break;
    }
    ++e1;
    if (e1 <= nb11)
      c2 = c2 - costs.c21 * 2 + costs.c2;
    else
      c2 -= costs.c21;
  }
  plan.e1 = e1;
  plan.e12 = std::max(0, e1 - nb11);
  plan.e11 = e1 - plan.e12;
  plan.op2_intra = plan.e11;
  plan.op2_cross = total - 2 * plan.e11 - plan.e12;
  plan.c1_total = costs.c12 * plan.e12 + costs.c1 * plan.e11;
  plan.c2_total = c2;
  plan.feasible = !plan.cap_hit && plan.c1_total < 1 && plan.c2_total < 1;
  return plan;
}

// Circulant Harary graph H(n, r) on nodes 0..n-1.
inline std::vector<std::pair<NodeId, NodeId>> build_harary(int n, int r) {
  if (r < 2 || r >= n) throw InvalidArgument("Harary graph needs 2 <= r < n");
  std::vector<std::pair<NodeId, NodeId>> out;
  auto add = [&](int a, int b) { out.emplace_back(std::min(a, b), std::max(a, b)); };
  for (int d = 1; d <= r / 2; ++d)
    for (int i = 0; i < n; ++i) {
      if (2 * d == n && i >= n / 2) continue;
      add(i, (i + d) % n);
    }
  if (r % 2 == 1) {
    if (n % 2 == 0) {
      for (int i = 0; i < n / 2; ++i) add(i, i + n / 2);
    } else {
      add(0, (n - 1) / 2);
      add(0, (n + 1) / 2);
      for (int i = 1; i <= (n - 3) / 2; ++i) add(i, i + (n + 1) / 2);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

inline void check_symmetric(int n1, int n2, int k) {
  if (n1 != n2) throw InvalidArgument("builders require n1 == n2");
  if (n1 < 2) throw InvalidArgument("builders require n1 >= 2");
  if (k < 1 || k >= n1) throw InvalidArgument("builders require 1 <= k < n1");
}

// Post-build reconciliation against the plan and the resistance target.
inline void certify(const BuiltNetwork& net) {
  const LayeredGraph& g = net.graph;
  const StageOnePlan& p = net.plan;
  if (g.count_by(Owner::Operator1, EdgeClass::Intra1) != p.e11 ||
      g.count_by(Owner::Operator1, EdgeClass::Cross) != p.e12 ||
      g.count_by(Owner::Operator2, EdgeClass::Intra2) != p.op2_intra ||
      g.count_by(Owner::Operator2, EdgeClass::Cross) != p.op2_cross)
    throw ConstructionError("built link counts do not match the stage-one plan");
  if (!is_p_resistant(g, p.k))
    throw ConstructionError("built network is not " + std::to_string(p.k) + "-resistant");
}

inline BuiltNetwork null_network(int n1, const StageOnePlan& plan) {
  BuiltNetwork net;
  net.graph = LayeredGraph(n1, n1);
  net.plan = plan;
  net.is_null = true;
  return net;
}

}  // namespace detail

// Superposition of (k+1)/2 edge-disjoint Hamiltonian cycles for odd n1 and odd k.
// Builds from an explicit plan; the plan's counts need not come from stage1_allocate.
inline BuiltNetwork build_spe_network(const StageOnePlan& plan) {
  const int n1 = plan.n1, k = plan.k;
  detail::check_symmetric(n1, n1, k);
  if (n1 % 2 == 0 || k % 2 == 0) throw InvalidArgument("structured builder requires odd n1 and odd k");
  if (!plan.feasible) return detail::null_network(n1, plan);

  // Labels run 1..n1 per layer; layer-2 node j is j + n1.
  auto md = [n1](int x) {
    int r = ((x % n1) + n1) % n1;
    return r == 0 ? n1 : r;
  };
  auto id = [](int label) { return label - 1; };

  BuiltNetwork net;
  net.graph = LayeredGraph(n1, n1);
  net.plan = plan;
  net.is_null = false;
  LayeredGraph& g = net.graph;
  int op1_cross_left = plan.e12;

  auto add = [&](int a, int b, std::vector<Edge>& cycle) {
    NodeId u = id(a), v = id(b);
    if (u == v || g.has_edge(u, v))
      throw ConstructionError("structured construction produced a repeated link");
    EdgeClass cls = g.classify(u, v);
    Owner owner = Owner::Operator2;
    if (cls == EdgeClass::Intra1) owner = Owner::Operator1;
    if (cls == EdgeClass::Cross && op1_cross_left > 0) {
      owner = Owner::Operator1;
      --op1_cross_left;
    }
    cycle.push_back(g.add_edge(u, v, owner));
  };

  const int m = plan.e11 / (n1 - 1);
  const int z = plan.e11 - m * (n1 - 1);
  const int s = (n1 + 1) / 2;
  std::vector<bool> used(static_cast<std::size_t>(n1), false);

  // Stage 2: layer-1 offsets coprime with n1 give Hamiltonian circulant cycles.
  std::vector<int> offsets;
  const int limit = (n1 - 1) / 2 - (z > 0 ? 1 : 0);
  for (int l = 1; l <= limit && static_cast<int>(offsets.size()) < m; ++l)
    if (std::gcd(l, n1) == 1) offsets.push_back(l);
  if (static_cast<int>(offsets.size()) < m)
    throw ConstructionError("not enough coprime offsets for the layer cycles");
  for (int l : offsets) {
    std::vector<Edge> cycle;
    for (int j = 2; j <= n1; ++j) {
      add(j, md(j + l), cycle);
      add(j + n1, md(j + l) + n1, cycle);
    }
    add(1, n1 + 1 + l, cycle);
    add(n1 + 1, 1 + l, cycle);
    used[static_cast<std::size_t>(l % n1)] = used[static_cast<std::size_t>((n1 - l) % n1)] = true;
    net.cycles.push_back(std::move(cycle));
  }

  // Stage 3: one mixed cycle along the step-s permutation.
  if (z > 0) {
    std::vector<Edge> cycle;
    int j = 1;
    for (int step = 1; step <= z; ++step) {
      int p = md(j + s);
      add(j, p, cycle);
      add(j + n1, p + n1, cycle);
      j = p;
    }
    for (int step = z + 1; step <= n1 - 1; ++step) {
      int p = md(j + s);
      add(j, p + n1, cycle);
      add(j + n1, p, cycle);
      j = p;
    }
    add(1, n1 + 1, cycle);
    add(s, n1 + s, cycle);
    used[0] = true;
    if (z < n1 - 1) used[static_cast<std::size_t>(s % n1)] = used[static_cast<std::size_t>((n1 - s) % n1)] = true;
    net.cycles.push_back(std::move(cycle));
  }

  // Stage 4: all-cross cycles from pairs of unused difference classes.
  const int m12 = (k + 1) / 2 - m - (z > 0 ? 1 : 0);
  std::vector<int> free_classes;
  for (int d = 0; d < n1; ++d)
    if (!used[static_cast<std::size_t>(d)]) free_classes.push_back(d);
  std::vector<std::pair<int, int>> pairs;
  auto pick = [&](auto&& self, std::vector<int> avail, int need) -> bool {
    if (need == 0) return true;
    if (avail.empty()) return false;
    const int d1 = avail.front();
    for (std::size_t i = 1; i < avail.size(); ++i) {
      const int d2 = avail[i];
      if (std::gcd(((d1 - d2) % n1 + n1) % n1, n1) != 1) continue;
      std::vector<int> rest;
      for (int x : avail)
        if (x != d1 && x != d2) rest.push_back(x);
      pairs.emplace_back(d1, d2);
      if (self(self, rest, need - 1)) return true;
      pairs.pop_back();
    }
    return self(self, std::vector<int>(avail.begin() + 1, avail.end()), need);
  };
  if (!pick(pick, free_classes, m12))
    throw ConstructionError("no disjoint difference classes left for the cross-layer cycles");
  for (auto [d1, d2] : pairs) {
    std::vector<Edge> cycle;
    for (int a = 1; a <= n1; ++a) {
      int b = md(a + d1);
      add(a, b + n1, cycle);
      add(md(b - d2), b + n1, cycle);
    }
    net.cycles.push_back(std::move(cycle));
  }

  net.cycles_built = static_cast<int>(net.cycles.size());
  detail::certify(net);
  return net;
}

inline BuiltNetwork build_spe_network(int n1, int k, const LinkCosts& costs) {
  detail::check_symmetric(n1, n1, k);
  if (n1 % 2 == 0 || k % 2 == 0) throw InvalidArgument("structured builder requires odd n1 and odd k");
  return build_spe_network(stage1_allocate(n1, k, costs));
}

struct GeneralizedOptions {
  int rewire_budget = 64;
};

// Mirrored greedy circulant layers, degree-balanced cross links, then certified
// repair by degree-preserving swaps across a deficient cut.
inline BuiltNetwork build_generalized(const StageOnePlan& plan, const GeneralizedOptions& options = {}) {
  const int n1 = plan.n1, n2 = plan.n1, k = plan.k;
  detail::check_symmetric(n1, n2, k);
  if (!plan.feasible) return detail::null_network(n1, plan);

  const int cap = k + 1;
  struct Link {
    NodeId u, v;
    EdgeClass cls;
  };
  std::vector<Link> links;
  std::vector<int> deg(static_cast<std::size_t>(n1), 0);
  int placed = 0;
  for (int r = 1; r <= n1 / 2 && placed < plan.e11; ++r)
    for (int j = 0; j < n1 && placed < plan.e11; ++j) {
      if (2 * r == n1 && j >= n1 / 2) continue;
      int a = j, b = (j + r) % n1;
      if (deg[static_cast<std::size_t>(a)] < cap && deg[static_cast<std::size_t>(b)] < cap) {
        links.push_back({std::min(a, b), std::max(a, b), EdgeClass::Intra1});
        links.push_back({std::min(a, b) + n1, std::max(a, b) + n1, EdgeClass::Intra2});
        ++deg[static_cast<std::size_t>(a)];
        ++deg[static_cast<std::size_t>(b)];
        ++placed;
      }
    }
  if (placed < plan.e11) throw ConstructionError("could not place the planned layer links");

  std::vector<int> d1(static_cast<std::size_t>(n1)), d2(static_cast<std::size_t>(n1));
  for (int a = 0; a < n1; ++a) d1[static_cast<std::size_t>(a)] = d2[static_cast<std::size_t>(a)] = cap - deg[static_cast<std::size_t>(a)];
  std::vector<int> order(static_cast<std::size_t>(n1));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return d1[static_cast<std::size_t>(x)] > d1[static_cast<std::size_t>(y)]; });
  for (int a : order) {
    std::vector<int> cands;
    for (int b = 0; b < n1; ++b)
      if (d2[static_cast<std::size_t>(b)] > 0) cands.push_back(b);
    std::sort(cands.begin(), cands.end(), [&](int x, int y) {
      if (d2[static_cast<std::size_t>(x)] != d2[static_cast<std::size_t>(y)])
        return d2[static_cast<std::size_t>(x)] > d2[static_cast<std::size_t>(y)];
      return (x - a + n1) % n1 < (y - a + n1) % n1;
    });
    const int need = d1[static_cast<std::size_t>(a)];
    if (static_cast<int>(cands.size()) < need) throw ConstructionError("could not place the cross-layer links");
    for (int i = 0; i < need; ++i) {
      int b = cands[static_cast<std::size_t>(i)];
      links.push_back({a, b + n1, EdgeClass::Cross});
      --d2[static_cast<std::size_t>(b)];
    }
    d1[static_cast<std::size_t>(a)] = 0;
  }

  auto materialize = [&] {
    LayeredGraph g(n1, n2);
    int op1_cross_left = plan.e12;
    for (const Link& l : links) {
      Owner owner = Owner::Operator2;
      if (l.cls == EdgeClass::Intra1) owner = Owner::Operator1;
      if (l.cls == EdgeClass::Cross && op1_cross_left > 0) {
        owner = Owner::Operator1;
        --op1_cross_left;
      }
      g.add_edge(l.u, l.v, owner);
    }
    return g;
  };

  BuiltNetwork net;
  net.plan = plan;
  net.is_null = false;
  int swaps = 0;
  while (true) {
    LayeredGraph g = materialize();
    LinkConnectivity lc = link_connectivity(g);
    if (lc.lambda() >= cap) {
      net.graph = std::move(g);
      break;
    }
    if (swaps >= options.rewire_budget)
      throw ConstructionError("rewiring budget exhausted before reaching " + std::to_string(k) + "-resistance");

    // Side containing node 0 once a minimum cut (if any) is removed.
    LayeredGraph h = lc.connected() ? g.without_edges(min_edge_cut(g).edges) : g;
    std::vector<char> side(static_cast<std::size_t>(h.node_count()), 0);
    std::vector<NodeId> stack{0};
    side[0] = 1;
    while (!stack.empty()) {
      NodeId x = stack.back();
      stack.pop_back();
      for (NodeId y : h.neighbors(x))
        if (!side[static_cast<std::size_t>(y)]) {
          side[static_cast<std::size_t>(y)] = 1;
          stack.push_back(y);
        }
    }
    auto inside = [&](const Link& l) { return side[static_cast<std::size_t>(l.u)] && side[static_cast<std::size_t>(l.v)]; };
    auto outside = [&](const Link& l) { return !side[static_cast<std::size_t>(l.u)] && !side[static_cast<std::size_t>(l.v)]; };
    auto exists = [&](NodeId a, NodeId b) {
      for (const Link& l : links)
        if ((l.u == a && l.v == b) || (l.u == b && l.v == a)) return true;
      return false;
    };

    bool done = false;
    for (EdgeClass cls : {EdgeClass::Cross, EdgeClass::Intra1, EdgeClass::Intra2}) {
      std::vector<std::size_t> ins, outs;
      for (std::size_t i = 0; i < links.size(); ++i) {
        if (links[i].cls != cls) continue;
        if (inside(links[i])) ins.push_back(i);
        if (outside(links[i])) outs.push_back(i);
      }
      if (ins.empty()) continue;
      std::rotate(ins.begin(), ins.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(swaps) % ins.size()),
                  ins.end());
      for (std::size_t i : ins) {
        for (std::size_t o : outs) {
          // Cross links are stored layer-1 endpoint first.
          NodeId a = links[i].u, b = links[i].v, c = links[o].u, d = links[o].v;
          if (a == d || c == b || exists(a, d) || exists(c, b)) continue;
          links[i] = {std::min(a, d), std::max(a, d), cls};
          links[o] = {std::min(c, b), std::max(c, b), cls};
          done = true;
          break;
        }
        if (done) break;
      }
      if (done) break;
    }
    if (!done) throw ConstructionError("no degree-preserving swap can repair the network");
    ++swaps;
  }
  net.rewires = swaps;
  detail::certify(net);
  return net;
}

inline BuiltNetwork build_generalized(int n1, int n2, int k, const LinkCosts& costs,
                                      const GeneralizedOptions& options = {}) {
  detail::check_symmetric(n1, n2, k);
  return build_generalized(stage1_allocate(n1, k, costs), options);
}

// A plan with a chosen layer-1 count, for exercising the builders directly.
inline StageOnePlan plan_for(int n1, int k, int e11, int e12 = 0) {
  StageOnePlan p;
  p.n1 = n1;
  p.k = k;
  p.e11 = e11;
  p.e12 = e12;
  p.e1 = e11 + e12;
  p.op2_intra = e11;
  p.op2_cross = n1 * (k + 1) - 2 * e11 - e12;
  p.feasible = p.op2_cross >= 0;
  return p;
}

}  // namespace secnet
