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
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "secnet/connectivity.hpp"
#include "secnet/detail/augment_search.hpp"
#include "secnet/error.hpp"
#include "secnet/graph.hpp"
#include "secnet/rational.hpp"

namespace secnet {

// Normalized unitary link-creation costs.
struct LinkCosts {
  Rational c1;   // operator 1, inside layer 1
  Rational c2;   // operator 2, inside layer 2
  Rational c12;  // operator 1, across layers
  Rational c21;  // operator 2, across layers

  void validate() const {
    auto in_unit = [](const Rational& x) { return x > 0 && x < 1; };
    if (!in_unit(c1) || !in_unit(c2) || !in_unit(c12) || !in_unit(c21))
      throw InvalidArgument("link costs must lie strictly between 0 and 1");
  }

  // Cheaper layers first: c1 <= c12 and c2 <= c21.
  bool cross_dearer() const { return c1 <= c12 && c2 <= c21; }

  // The same market seen with the operators' roles exchanged.
  LinkCosts swapped() const { return {c2, c1, c21, c12}; }
};

struct CostProfile : LinkCosts {
  Rational cA;  // adversary, per compromised link

  void validate() const {
    LinkCosts::validate();
    if (!(cA > 0 && cA < 1)) throw InvalidArgument("attack cost must lie strictly between 0 and 1");
  }
};

// ((E1^1, E1^12), (E2^2, E2^21), E_A)
struct StrategyProfile {
  std::vector<Edge> e1_intra;
  std::vector<Edge> e1_cross;
  std::vector<Edge> e2_intra;
  std::vector<Edge> e2_cross;
  std::vector<Edge> attack;

  std::vector<Edge> built() const {
    std::vector<Edge> out = e1_intra;
    out.insert(out.end(), e1_cross.begin(), e1_cross.end());
    out.insert(out.end(), e2_intra.begin(), e2_intra.end());
    out.insert(out.end(), e2_cross.begin(), e2_cross.end());
    return out;
  }
};

struct GameOutcome {
  bool connected_after_attack = false;
  Rational u1;
  Rational u2;
  Rational uA;
};

struct SpeSolution {
  int k = 0;
  bool is_null = true;
  // One representative per distinct operator-2 cost, cheapest first.
  std::vector<StrategyProfile> profiles;
  std::vector<GameOutcome> outcomes;
  std::vector<Rational> op2_costs;
  Rational op1_cost;
  Rational u1;
  Rational u2;
  Rational uA{1};
};

struct SearchOptions {
  std::uint64_t cap = std::uint64_t{1} << 20;
};

inline Rational op1_cost(const StrategyProfile& w, const LinkCosts& c) {
  return c.c1 * static_cast<long>(w.e1_intra.size()) + c.c12 * static_cast<long>(w.e1_cross.size());
}

inline Rational op2_cost(const StrategyProfile& w, const LinkCosts& c) {
  return c.c2 * static_cast<long>(w.e2_intra.size()) + c.c21 * static_cast<long>(w.e2_cross.size());
}

// k = floor(1 / cA): the largest attack the adversary can afford without loss.
inline int attack_budget(const Rational& cA) {
  if (!(cA > 0 && cA < 1)) throw InvalidArgument("attack cost must lie strictly between 0 and 1");
  return floor_of(Rational(1) / cA).convert_to<int>();
}

// Network G2 built by both operators. Rejects inadmissible or mislabelled sets.
inline LayeredGraph built_network(const StrategyProfile& w, int n1, int n2) {
  LayeredGraph g(n1, n2);
  auto put = [&](const std::vector<Edge>& set, Owner owner, EdgeClass expected, const char* name) {
    for (const Edge& e : set) {
      if (g.valid_node(e.u) && g.valid_node(e.v) && e.u != e.v && g.classify(e.u, e.v) != expected)
        throw InvalidArgument(std::string("edge in ") + name + " has the wrong class");
      g.add_edge(e.u, e.v, owner);
    }
  };
  put(w.e1_intra, Owner::Operator1, EdgeClass::Intra1, "E1^1");
  put(w.e1_cross, Owner::Operator1, EdgeClass::Cross, "E1^12");
  put(w.e2_intra, Owner::Operator2, EdgeClass::Intra2, "E2^2");
  put(w.e2_cross, Owner::Operator2, EdgeClass::Cross, "E2^21");
  return g;
}

inline GameOutcome utilities(const StrategyProfile& w, const CostProfile& costs, int n1, int n2) {
  LayeredGraph g2 = built_network(w, n1, n2);
  LayeredGraph g3 = g2.without_edges(w.attack);
  GameOutcome out;
  out.connected_after_attack = is_connected(g3);
  Rational ind = out.connected_after_attack ? 1 : 0;
  out.u1 = ind - op1_cost(w, costs);
  out.u2 = ind - op2_cost(w, costs);
  out.uA = Rational(1) - ind - costs.cA * static_cast<long>(w.attack.size());
  return out;
}

// Empty if G2 is disconnected or already k-resistant; otherwise a minimum cut.
// At cA * |cut| == 1 the adversary still attacks.
inline std::vector<Edge> adversary_best_response_k(const LayeredGraph& g, int k) {
  LinkConnectivity p = link_connectivity(g);
  if (!p.connected() || p.p >= k) return {};
  return min_edge_cut(g).edges;
}

inline std::vector<Edge> adversary_best_response(const LayeredGraph& g, const Rational& cA) {
  return adversary_best_response_k(g, attack_budget(cA));
}

struct Operator2Response {
  std::vector<Edge> edges;  // empty for the null strategy
  Rational cost;
  bool secures = false;  // the resulting network is k-resistant
};

namespace detail {

inline std::vector<Link> links_of_owner(const LayeredGraph& g) {
  std::vector<Link> out;
  for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

// Admissible links of `cls` that are not yet in `g`.
inline std::vector<Link> free_links(const LayeredGraph& g, EdgeClass cls) {
  std::vector<Link> out;
  for (auto l : all_links(g.n1(), g.n2(), cls))
    if (!g.has_edge(l.first, l.second)) out.push_back(l);
  return out;
}

}  // namespace detail

// Operator 2's best response to operator 1's network g1, by exact search.
inline Operator2Response operator2_best_response_exact(const LayeredGraph& g1, const LinkCosts& costs, int k,
                                                       const SearchOptions& options = {}) {
  detail::SearchBudget budget(options.cap);
  Operator2Response r;
  if (is_p_resistant(g1, k)) {
    r.secures = true;
    return r;
  }
  std::vector<detail::LinkPool> pools{{detail::free_links(g1, EdgeClass::Intra2), costs.c2},
                                      {detail::free_links(g1, EdgeClass::Cross), costs.c21}};
  auto base = detail::links_of_owner(g1);
  auto aug = detail::min_cost_augmentation(g1.n1(), g1.n2(), base, pools, k + 1, Rational(1), budget);
  if (!aug) return r;
  for (auto [u, v] : aug->chosen[0]) r.edges.push_back(Edge{u, v, Owner::Operator2, EdgeClass::Intra2});
  for (auto [u, v] : aug->chosen[1]) r.edges.push_back(Edge{u, v, Owner::Operator2, EdgeClass::Cross});
  r.cost = aug->cost;
  r.secures = true;
  return r;
}

enum class NullReason { None, DegreeBound, CostBound };

inline const char* to_string(NullReason r) {
  switch (r) {
    case NullReason::None: return "none";
    case NullReason::DegreeBound: return "degree-bound";
    case NullReason::CostBound: return "cost-bound";
  }
  return "?";
}

struct NullCheck {
  bool is_null = false;
  NullReason reason = NullReason::None;
  Rational cost_bound;  // left-hand side of the cost test, when evaluated
};

// Sufficient conditions for the all-empty equilibrium. A false answer proves nothing.
inline NullCheck null_spe_check(int n1, int n2, int k, const LinkCosts& c) {
  NullCheck out;
  if (n1 + n2 - 1 < k + 1) {
    out.is_null = true;
    out.reason = NullReason::DegreeBound;
    return out;
  }
  if (!c.cross_dearer()) return out;
  const long long kp = k + 1;
  Rational bound = c.c12 < c.c21 ? c.c12 : c.c21;
  bound *= kp;
  bound += c.c1 * static_cast<long long>((static_cast<long long>(n1 - 1) * kp) / 2);
  bound += c.c2 * static_cast<long long>((static_cast<long long>(n2 - 1) * kp) / 2);
  out.cost_bound = bound;
  if (bound >= 2) {
    out.is_null = true;
    out.reason = NullReason::CostBound;
  }
  return out;
}

inline SpeSolution null_solution(int k) {
  SpeSolution s;
  s.k = k;
  s.is_null = true;
  s.profiles.emplace_back();
  s.outcomes.push_back(GameOutcome{false, Rational(0), Rational(0), Rational(1)});
  s.op2_costs.push_back(Rational(0));
  s.u1 = 0;
  s.u2 = 0;
  s.uA = 1;
  return s;
}

namespace detail {

// Calls f(indices) for every size-r subset of [0, n) in lexicographic order.
template <class F>
bool for_each_combination(int n, int r, F&& f) {
  if (r < 0 || r > n) return false;
  std::vector<int> idx(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    if (f(static_cast<const std::vector<int>&>(idx))) return true;
    int i = r - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - r + i) --i;
    if (i < 0) return false;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < r; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace detail

// Backward induction by exact search: operator-1 strategies in nondecreasing cost
// (ties: fewer cross links first, then lexicographic), each answered by operator 2's
// exact best response. Every strategy at the cheapest successful cost is examined so
// that all distinct operator-2 equilibrium costs are reported.
inline SpeSolution solve_spe_exact_k(int n1, int n2, const LinkCosts& costs, int k,
                                     const SearchOptions& options = {}) {
  costs.validate();
  if (n1 < 1 || n2 < 1) throw InvalidArgument("both layers need at least one node");
  if (k < 0) throw InvalidArgument("attack budget must be non-negative");
  if (n1 + n2 > 9)
    throw SearchCapExceeded("exact search is limited to small instances (n1 + n2 <= 9)");
  if (null_spe_check(n1, n2, k, costs).is_null) return null_solution(k);

  detail::SearchBudget budget(options.cap);
  const auto intra1 = all_links(n1, n2, EdgeClass::Intra1);
  const auto cross = all_links(n1, n2, EdgeClass::Cross);

  struct Level {
    int a, b;
    Rational cost;
  };
  std::vector<Level> levels;
  for (int a = 0; a <= static_cast<int>(intra1.size()); ++a)
    for (int b = 0; b <= static_cast<int>(cross.size()); ++b) {
      Rational c = costs.c1 * a + costs.c12 * b;
      if (c < 1) levels.push_back({a, b, c});
    }
  std::stable_sort(levels.begin(), levels.end(), [](const Level& x, const Level& y) {
    if (x.cost != y.cost) return x.cost < y.cost;
    return x.b < y.b;
  });

  SpeSolution sol;
  sol.k = k;
  std::size_t i = 0;
  while (i < levels.size()) {
    std::size_t j = i;
    while (j < levels.size() && levels[j].cost == levels[i].cost) ++j;

    for (std::size_t li = i; li < j; ++li) {
      const Level& lv = levels[li];
      detail::for_each_combination(static_cast<int>(intra1.size()), lv.a, [&](const std::vector<int>& ia) {
        detail::for_each_combination(static_cast<int>(cross.size()), lv.b, [&](const std::vector<int>& ib) {
          budget.charge();
          LayeredGraph g1(n1, n2);
          StrategyProfile w;
          for (int x : ia) {
            auto [u, v] = intra1[static_cast<std::size_t>(x)];
            w.e1_intra.push_back(g1.add_edge(u, v, Owner::Operator1));
          }
          for (int x : ib) {
            auto [u, v] = cross[static_cast<std::size_t>(x)];
            w.e1_cross.push_back(g1.add_edge(u, v, Owner::Operator1));
          }
          SearchOptions inner{budget.cap() - budget.used()};
          Operator2Response r = operator2_best_response_exact(g1, costs, k, inner);
          if (!r.secures) return false;
          for (const Edge& e : r.edges) (e.cls == EdgeClass::Cross ? w.e2_cross : w.e2_intra).push_back(e);
          if (std::find(sol.op2_costs.begin(), sol.op2_costs.end(), r.cost) == sol.op2_costs.end()) {
            Rational c1v = lv.cost;
            sol.op2_costs.push_back(r.cost);
            sol.outcomes.push_back(GameOutcome{true, Rational(1) - c1v, Rational(1) - r.cost, Rational(0)});
            sol.profiles.push_back(std::move(w));
          }
          return false;
        });
        return false;
      });
    }

    if (!sol.profiles.empty()) {
      // Cheapest operator-2 cost first.
      std::vector<std::size_t> order(sol.profiles.size());
      for (std::size_t x = 0; x < order.size(); ++x) order[x] = x;
      std::sort(order.begin(), order.end(),
                [&](std::size_t p, std::size_t q) { return sol.op2_costs[p] < sol.op2_costs[q]; });
      SpeSolution sorted;
      sorted.k = k;
      for (std::size_t x : order) {
        sorted.profiles.push_back(sol.profiles[x]);
        sorted.outcomes.push_back(sol.outcomes[x]);
        sorted.op2_costs.push_back(sol.op2_costs[x]);
      }
      sorted.is_null = false;
      sorted.op1_cost = levels[i].cost;
      sorted.u1 = sorted.outcomes.front().u1;
      sorted.u2 = sorted.outcomes.front().u2;
      sorted.uA = 0;
      return sorted;
    }
    i = j;
  }
  return null_solution(k);
}

inline SpeSolution solve_spe_exact(int n1, int n2, const CostProfile& costs, const SearchOptions& options = {}) {
  costs.validate();
  return solve_spe_exact_k(n1, n2, costs, attack_budget(costs.cA), options);
}

}  // namespace secnet
