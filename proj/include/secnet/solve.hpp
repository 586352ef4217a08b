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
#include <vector>

#include "secnet/construction.hpp"
#include "secnet/error.hpp"
#include "secnet/game.hpp"

namespace secnet {

enum class SolveMode { Auto, Exact, Structured };

inline const char* to_string(SolveMode m) {
  switch (m) {
    case SolveMode::Auto: return "auto";
    case SolveMode::Exact: return "exact";
    case SolveMode::Structured: return "structured";
  }
  return "?";
}

inline SolveMode parse_solve_mode(const std::string& s) {
  if (s == "auto") return SolveMode::Auto;
  if (s == "exact") return SolveMode::Exact;
  if (s == "structured") return SolveMode::Structured;
  throw InvalidArgument("unknown mode '" + s + "' (expected exact, structured or auto)");
}

// Equilibrium summary shared by every solver route.
struct Equilibrium {
  std::string route;  // exact, structured, generalized or null-check
  int k = 0;
  bool is_null = true;
  Rational u1;
  Rational u2;
  Rational uA{1};
  Rational op1_cost;
  std::vector<Rational> op2_costs;  // distinct equilibrium costs of operator 2, ascending
  LayeredGraph graph{1, 1};         // representative equilibrium network
  std::optional<StageOnePlan> plan;
  std::optional<NullReason> null_reason;
  int cycles_built = 0;
  int rewires = 0;
  // Stage-one split used with an even attack budget, where it can miss cheaper
  // operator-1 strategies. The network itself is still certified k-resistant.
  bool split_unverified = false;

  Rational max_total_cost() const {
    if (is_null) return 0;
    return op1_cost + op2_costs.back();
  }
};

// Symmetric instance with layer links no dearer than cross links and k < n1.
inline bool structured_applicable(int n1, int n2, int k, const LinkCosts& c) {
  return n1 == n2 && n1 >= 2 && k >= 1 && k < n1 && c.cross_dearer();
}

// The stricter preconditions of the Hamiltonian-cycle construction.
inline bool cycle_construction_applicable(int n1, int n2, int k, const LinkCosts& c) {
  return structured_applicable(n1, n2, k, c) && n1 % 2 == 1 && k % 2 == 1;
}

namespace detail {

inline Equilibrium null_equilibrium(int n1, int n2, int k, const std::string& route) {
  Equilibrium eq;
  eq.route = route;
  eq.k = k;
  eq.is_null = true;
  eq.u1 = eq.u2 = 0;
  eq.uA = 1;
  eq.op1_cost = 0;
  eq.op2_costs = {Rational(0)};
  eq.graph = LayeredGraph(n1, n2);
  return eq;
}

inline Equilibrium from_exact(int n1, int n2, const LinkCosts& costs, const SpeSolution& s) {
  if (s.is_null) {
    Equilibrium eq = null_equilibrium(n1, n2, s.k, "exact");
    // Name the closed-form reason when one applies; otherwise the search alone decided.
    if (NullCheck nc = null_spe_check(n1, n2, s.k, costs); nc.is_null) eq.null_reason = nc.reason;
    return eq;
  }
  Equilibrium eq;
  eq.route = "exact";
  eq.k = s.k;
  eq.is_null = false;
  eq.u1 = s.u1;
  eq.u2 = s.u2;
  eq.uA = 0;
  eq.op1_cost = s.op1_cost;
  eq.op2_costs = s.op2_costs;
  eq.graph = built_network(s.profiles.front(), n1, n2);
  return eq;
}

inline Equilibrium from_built(const BuiltNetwork& net, const std::string& route) {
  const StageOnePlan& p = net.plan;
  if (net.is_null) {
    Equilibrium eq = null_equilibrium(p.n1, p.n1, p.k, route);
    eq.plan = p;
    return eq;
  }
  Equilibrium eq;
  eq.route = route;
  eq.k = p.k;
  eq.is_null = false;
  eq.u1 = Rational(1) - p.c1_total;
  eq.u2 = Rational(1) - p.c2_total;
  eq.uA = 0;
  eq.op1_cost = p.c1_total;
  eq.op2_costs = {p.c2_total};
  eq.graph = net.graph;
  eq.plan = p;
  eq.cycles_built = net.cycles_built;
  eq.rewires = net.rewires;
  eq.split_unverified = p.k % 2 == 0;
  return eq;
}

}  // namespace detail

// Structured route: stage-one split, then the cycle construction when its
// preconditions hold, otherwise the certified generalized builder.
inline Equilibrium solve_structured_k(int n1, int n2, const LinkCosts& costs, int k) {
  costs.validate();
  if (!structured_applicable(n1, n2, k, costs))
    throw InvalidArgument("structured route needs n1 == n2, 1 <= k < n1, c1 <= c12 and c2 <= c21");
  if (NullCheck nc = null_spe_check(n1, n2, k, costs); nc.is_null) {
    Equilibrium eq = detail::null_equilibrium(n1, n2, k, "null-check");
    eq.null_reason = nc.reason;
    eq.plan = stage1_allocate(n1, k, costs);
    return eq;
  }
  StageOnePlan plan = stage1_allocate(n1, k, costs);
  if (cycle_construction_applicable(n1, n2, k, costs)) {
    try {
      return detail::from_built(build_spe_network(plan), "structured");
    } catch (const ConstructionError&) {
      // Fall through to the generalized builder.
    }
  }
  return detail::from_built(build_generalized(plan), "generalized");
}

inline Equilibrium solve_equilibrium_k(int n1, int n2, const LinkCosts& costs, int k, SolveMode mode = SolveMode::Auto,
                                       const SearchOptions& options = {}) {
  costs.validate();
  switch (mode) {
    case SolveMode::Exact:
      return detail::from_exact(n1, n2, costs, solve_spe_exact_k(n1, n2, costs, k, options));
    case SolveMode::Structured:
      return solve_structured_k(n1, n2, costs, k);
    case SolveMode::Auto:
      break;
  }
  if (cycle_construction_applicable(n1, n2, k, costs)) return solve_structured_k(n1, n2, costs, k);
  if (n1 + n2 <= 7) return detail::from_exact(n1, n2, costs, solve_spe_exact_k(n1, n2, costs, k, options));
  if (structured_applicable(n1, n2, k, costs)) return solve_structured_k(n1, n2, costs, k);
  if (NullCheck nc = null_spe_check(n1, n2, k, costs); nc.is_null) {
    Equilibrium eq = detail::null_equilibrium(n1, n2, k, "null-check");
    eq.null_reason = nc.reason;
    return eq;
  }
  throw InvalidArgument("no solver applies: instance is too large for exact search and not symmetric "
                        "with layer links no dearer than cross links and k < n1");
}

inline Equilibrium solve_equilibrium(int n1, int n2, const CostProfile& costs, SolveMode mode = SolveMode::Auto,
                                     const SearchOptions& options = {}) {
  costs.validate();
  return solve_equilibrium_k(n1, n2, costs, attack_budget(costs.cA), mode, options);
}

}  // namespace secnet
