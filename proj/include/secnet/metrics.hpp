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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "secnet/connectivity.hpp"
#include "secnet/construction.hpp"
#include "secnet/detail/augment_search.hpp"
#include "secnet/error.hpp"
#include "secnet/game.hpp"
#include "secnet/graph.hpp"
#include "secnet/rational.hpp"
#include "secnet/solve.hpp"

namespace secnet {

// Who builds cross links in the coordinated benchmark.
enum class CrossPricing {
  Cheapest,   // whichever operator is cheaper
  Operator1,  // always operator 1, at c12
};

struct TeamOptimum {
  bool is_null = false;
  bool exact = false;
  bool found = false;  // a certified network exists (exact optimum or upper bound)
  LayeredGraph graph{1, 1};
  Rational cost;
};

struct CostBounds {
  Rational lower;
  std::optional<Rational> upper;
};

inline Rational cross_price(const LinkCosts& c, CrossPricing pricing) {
  if (pricing == CrossPricing::Operator1) return c.c12;
  return c.c12 <= c.c21 ? c.c12 : c.c21;
}

inline Owner cross_builder(const LinkCosts& c, CrossPricing pricing) {
  if (pricing == CrossPricing::Operator1) return Owner::Operator1;
  return c.c12 <= c.c21 ? Owner::Operator1 : Owner::Operator2;
}

inline CostBounds cost_bounds(int n1, int n2, int k, const LinkCosts& c) {
  const long long kp = k + 1;
  auto ceil_half = [](long long x) { return (x + 1) / 2; };
  const Rational cx = c.c12 < c.c21 ? c.c12 : c.c21;
  const Rational ci = c.c1 < c.c2 ? c.c1 : c.c2;
  CostBounds b;
  b.lower = cx * kp + ci * ceil_half((n1 + n2 - 2) * kp);
  if (n1 >= k + 1 && n2 >= k + 1) b.upper = cx * kp + c.c1 * ceil_half(n1 * kp) + c.c2 * ceil_half(n2 * kp);
  return b;
}

namespace detail {

inline LayeredGraph team_graph(int n1, int n2, const std::vector<std::pair<NodeId, NodeId>>& links,
                               const LinkCosts& c, CrossPricing pricing) {
  LayeredGraph g(n1, n2);
  for (auto [u, v] : links) {
    EdgeClass cls = g.classify(u, v);
    Owner owner = cls == EdgeClass::Intra1   ? Owner::Operator1
                  : cls == EdgeClass::Intra2 ? Owner::Operator2
                                             : cross_builder(c, pricing);
    g.add_edge(u, v, owner);
  }
  return g;
}

inline Rational team_cost(const LayeredGraph& g, const LinkCosts& c, CrossPricing pricing) {
  return c.c1 * g.count_class(EdgeClass::Intra1) + c.c2 * g.count_class(EdgeClass::Intra2) +
         cross_price(c, pricing) * g.count_class(EdgeClass::Cross);
}

// Layer graph with edge connectivity r, or the complete graph when r == n.
inline std::vector<std::pair<NodeId, NodeId>> layer_frame(int n, int r, int offset) {
  std::vector<std::pair<NodeId, NodeId>> out;
  if (r >= n) {
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) out.emplace_back(u + offset, v + offset);
  } else if (r == 1) {
    for (int u = 0; u + 1 < n; ++u) out.emplace_back(u + offset, u + 1 + offset);
  } else {
    for (auto [u, v] : build_harary(n, r)) out.emplace_back(u + offset, v + offset);
  }
  return out;
}

}  // namespace detail

// Minimum total cost of a k-resistant network if both operators coordinate.
// Exact for n1 + n2 <= 7; otherwise the cheaper of two certified constructions.
inline TeamOptimum team_optimal(int n1, int n2, int k, const LinkCosts& costs,
                                CrossPricing pricing = CrossPricing::Cheapest, const SearchOptions& options = {}) {
  costs.validate();
  TeamOptimum out;
  out.graph = LayeredGraph(n1, n2);
  if (n1 + n2 - 1 < k + 1) {
    out.is_null = true;
    out.exact = true;
    return out;
  }
  const int target = k + 1;

  if (n1 + n2 <= 7) {
    detail::SearchBudget budget(options.cap);
    std::vector<detail::LinkPool> pools{{all_links(n1, n2, EdgeClass::Intra1), costs.c1},
                                        {all_links(n1, n2, EdgeClass::Intra2), costs.c2},
                                        {all_links(n1, n2, EdgeClass::Cross), cross_price(costs, pricing)}};
    auto aug = detail::min_cost_augmentation(n1, n2, {}, pools, target, Rational(2), budget);
    out.exact = true;
    if (!aug) {
      out.is_null = true;
      return out;
    }
    std::vector<std::pair<NodeId, NodeId>> links;
    for (const auto& chosen : aug->chosen) links.insert(links.end(), chosen.begin(), chosen.end());
    out.graph = detail::team_graph(n1, n2, links, costs, pricing);
    out.cost = aug->cost;
    out.found = true;
    return out;
  }

  std::vector<std::vector<std::pair<NodeId, NodeId>>> candidates;
  if (n1 == n2 && target <= n1) {
    std::vector<std::pair<NodeId, NodeId>> links;
    for (int d = 0; d < target; ++d)
      for (int a = 0; a < n1; ++a) links.emplace_back(a, n1 + (a + d) % n1);
    candidates.push_back(std::move(links));
  }
  if (n1 >= target && n2 >= target) {
    auto links = detail::layer_frame(n1, target, 0);
    auto second = detail::layer_frame(n2, target, n1);
    links.insert(links.end(), second.begin(), second.end());
    for (int i = 0; i < target; ++i) links.emplace_back(i, n1 + i);
    candidates.push_back(std::move(links));
  }
  for (const auto& links : candidates) {
    LayeredGraph g = detail::team_graph(n1, n2, links, costs, pricing);
    if (!is_p_resistant(g, k)) continue;
    Rational cost = detail::team_cost(g, costs, pricing);
    if (!out.found || cost < out.cost) {
      out.found = true;
      out.cost = cost;
      out.graph = std::move(g);
    }
  }
  if (cost_bounds(n1, n2, k, costs).lower >= 2) out.is_null = true;
  return out;
}

struct EfficiencyReport {
  int k = 0;
  Equilibrium equilibrium;
  TeamOptimum team;
  Rational c_spe;
  Rational c_co;
  std::optional<Rational> poa;  // absent when either side is null or unbounded above
  CostBounds bounds;
};

inline EfficiencyReport price_of_anarchy_k(int n1, int n2, const LinkCosts& costs, int k,
                                           CrossPricing pricing = CrossPricing::Cheapest,
                                           SolveMode mode = SolveMode::Auto, const SearchOptions& options = {}) {
  EfficiencyReport r;
  r.k = k;
  r.equilibrium = solve_equilibrium_k(n1, n2, costs, k, mode, options);
  r.team = team_optimal(n1, n2, k, costs, pricing, options);
  // The equilibrium network is itself a feasible coordinated design.
  if (!r.team.exact && !r.equilibrium.is_null) {
    std::vector<std::pair<NodeId, NodeId>> links;
    for (const Edge& e : r.equilibrium.graph.edges()) links.emplace_back(e.u, e.v);
    LayeredGraph g = detail::team_graph(n1, n2, links, costs, pricing);
    Rational cost = detail::team_cost(g, costs, pricing);
    if (!r.team.found || cost < r.team.cost) {
      r.team.found = true;
      r.team.cost = cost;
      r.team.graph = std::move(g);
    }
  }
  r.bounds = cost_bounds(n1, n2, k, costs);
  r.c_spe = r.equilibrium.max_total_cost();
  r.c_co = r.team.found ? r.team.cost : Rational(0);
  if (!r.equilibrium.is_null && r.team.found && !r.team.is_null) r.poa = r.c_spe / r.c_co;
  return r;
}

inline EfficiencyReport price_of_anarchy(int n1, int n2, const CostProfile& costs,
                                         CrossPricing pricing = CrossPricing::Cheapest,
                                         SolveMode mode = SolveMode::Auto, const SearchOptions& options = {}) {
  costs.validate();
  return price_of_anarchy_k(n1, n2, costs, attack_budget(costs.cA), pricing, mode, options);
}

struct SeniorityReport {
  Equilibrium second;  // original order
  Equilibrium first;   // operator 2 leads
  Rational c2_second;
  Rational c2_first;
  bool infinite = false;
  std::optional<Rational> pos;
};

// Operator 2's cost when following versus when leading the game with its own
// admissible sets and costs.
inline SeniorityReport price_of_seniority_k(int n1, int n2, const LinkCosts& costs, int k,
                                            SolveMode mode = SolveMode::Auto, const SearchOptions& options = {}) {
  SeniorityReport r;
  r.second = solve_equilibrium_k(n1, n2, costs, k, mode, options);
  r.first = solve_equilibrium_k(n2, n1, costs.swapped(), k, mode, options);
  r.c2_second = r.second.is_null ? Rational(0) : r.second.op2_costs.back();
  r.c2_first = r.first.is_null ? Rational(0) : r.first.op1_cost;
  if (r.c2_first == 0) {
    if (r.c2_second > 0)
      r.infinite = true;
    else
      r.pos = Rational(1);
  } else {
    r.pos = r.c2_second / r.c2_first;
  }
  return r;
}

inline SeniorityReport price_of_seniority(int n1, int n2, const CostProfile& costs, SolveMode mode = SolveMode::Auto,
                                          const SearchOptions& options = {}) {
  costs.validate();
  return price_of_seniority_k(n1, n2, costs, attack_budget(costs.cA), mode, options);
}

struct ThreatPoint {
  int k = 0;
  StageOnePlan plan;
  bool is_null = true;
  std::optional<NullReason> null_reason;
  Rational u1;
  Rational u2;
};

// Stage-one split and null detection across a range of attack budgets.
inline std::vector<ThreatPoint> threat_sweep(int n1, const LinkCosts& costs, int k_min, int k_max) {
  costs.validate();
  if (k_min < 0 || k_max < k_min) throw InvalidArgument("invalid attack budget range");
  std::vector<ThreatPoint> out;
  for (int k = k_min; k <= k_max; ++k) {
    ThreatPoint t;
    t.k = k;
    t.plan = stage1_allocate(n1, k, costs);
    NullCheck nc = null_spe_check(n1, n1, k, costs);
    t.is_null = nc.is_null || !t.plan.feasible;
    if (nc.is_null) t.null_reason = nc.reason;
    t.u1 = t.is_null ? Rational(0) : Rational(1) - t.plan.c1_total;
    t.u2 = t.is_null ? Rational(0) : Rational(1) - t.plan.c2_total;
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace secnet
