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
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "secnet/connectivity.hpp"
#include "secnet/construction.hpp"
#include "secnet/error.hpp"
#include "secnet/game.hpp"
#include "secnet/io.hpp"
#include "secnet/metrics.hpp"
#include "secnet/oracle.hpp"
#include "secnet/solve.hpp"

namespace secnet::cli {

enum ExitCode : int { kOk = 0, kError = 1, kNullSpe = 2 };

struct LinkCounts {
  int op1_intra1 = 0;
  int op1_cross = 0;
  int op2_intra2 = 0;
  int op2_cross = 0;
};

inline LinkCounts count_links(const LayeredGraph& g) {
  return {g.count_by(Owner::Operator1, EdgeClass::Intra1), g.count_by(Owner::Operator1, EdgeClass::Cross),
          g.count_by(Owner::Operator2, EdgeClass::Intra2), g.count_by(Owner::Operator2, EdgeClass::Cross)};
}

inline Json rationals_json(const std::vector<Rational>& xs) {
  Json a = Json::array();
  for (const Rational& x : xs) a.push_back(to_string(x));
  return a;
}

inline Json plan_json(const StageOnePlan& p) {
  return Json{{"e1", p.e1},
              {"e11", p.e11},
              {"e12", p.e12},
              {"op2_intra", p.op2_intra},
              {"op2_cross", p.op2_cross},
              {"c1_total", to_string(p.c1_total)},
              {"c2_total", to_string(p.c2_total)},
              {"feasible", p.feasible},
              {"cap_hit", p.cap_hit}};
}

inline Json verification_json(const LayeredGraph& g, int k) {
  LinkConnectivity lc = link_connectivity(g);
  std::vector<Edge> attack = adversary_best_response_k(g, k);
  int dmin = g.node_count() ? g.degree(0) : 0, dmax = dmin;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    dmin = std::min(dmin, g.degree(v));
    dmax = std::max(dmax, g.degree(v));
  }
  return Json{{"edges", g.edge_count()},
              {"connected", lc.connected()},
              {"lambda", lc.lambda()},
              {"p", lc.p},
              {"k_resistant", is_p_resistant(g, k)},
              {"adversary_attack_size", attack.size()},
              {"degree_min", dmin},
              {"degree_max", dmax}};
}

inline Json equilibrium_json(const Scenario& s, const Equilibrium& eq) {
  Json j;
  j["scenario"] = scenario_to_json(s);
  j["k"] = eq.k;
  j["route"] = eq.route;
  j["null"] = eq.is_null;
  LinkCounts c = count_links(eq.graph);
  Rational c2 = eq.is_null ? Rational(0) : eq.op2_costs.front();
  j["operator1"] = {{"intra1", c.op1_intra1},
                    {"cross", c.op1_cross},
                    {"cost", to_string(eq.op1_cost)},
                    {"utility", to_string(eq.u1)}};
  j["operator2"] = {{"intra2", c.op2_intra2},
                    {"cross", c.op2_cross},
                    {"cost", to_string(c2)},
                    {"utility", to_string(eq.u2)},
                    {"cost_classes", rationals_json(eq.op2_costs)}};
  j["adversary"] = {{"attack", Json::array()}, {"utility", to_string(eq.uA)}};
  if (eq.plan) j["plan"] = plan_json(*eq.plan);
  if (eq.null_reason) j["null_reason"] = to_string(*eq.null_reason);
  if (!eq.is_null) {
    j["verification"] = verification_json(eq.graph, eq.k);
    j["hamiltonian_cycles"] = eq.cycles_built;
    j["rewires"] = eq.rewires;
  }
  if (eq.split_unverified)
    j["warning"] =
        "even attack budget: the operator budget split is not certified as an equilibrium; "
        "use mode \"exact\" on small instances";
  return j;
}

inline int cmd_solve(const Scenario& s, std::ostream& out) {
  Equilibrium eq = solve_equilibrium(s.n1, s.n2, s.costs, s.mode, s.search);
  out << equilibrium_json(s, eq).dump(2) << "\n";
  return eq.is_null ? kNullSpe : kOk;
}

inline int cmd_construct(const Scenario& s, const std::optional<std::string>& graph_path,
                         const std::optional<std::string>& dot_path, std::ostream& out) {
  Equilibrium eq = solve_equilibrium(s.n1, s.n2, s.costs, s.mode, s.search);
  Json j = equilibrium_json(s, eq);
  if (eq.is_null) {
    out << j.dump(2) << "\n";
    return kNullSpe;
  }
  if (graph_path) {
    write_file(*graph_path, graph_to_json(eq.graph).dump(2) + "\n");
    j["graph_file"] = *graph_path;
  }
  if (dot_path) {
    write_file(*dot_path, to_dot(eq.graph));
    j["dot_file"] = *dot_path;
  }
  if (!graph_path && !dot_path) j["graph"] = graph_to_json(eq.graph);
  out << j.dump(2) << "\n";
  return kOk;
}

inline Json edges_json(const std::vector<Edge>& es) {
  Json a = Json::array();
  for (const Edge& e : es) a.push_back({{"u", e.u}, {"v", e.v}, {"owner", e.owner == Owner::Operator1 ? 1 : 2}});
  return a;
}

inline int cmd_attack(const LayeredGraph& g, const Rational& cA, const std::optional<std::string>& dot_path,
                      std::ostream& out) {
  const int k = attack_budget(cA);
  LinkConnectivity lc = link_connectivity(g);
  std::vector<Edge> attack = adversary_best_response(g, cA);
  LayeredGraph after = g.without_edges(attack);
  const bool connected = is_connected(after);
  Rational uA = Rational(1) - (connected ? Rational(1) : Rational(0)) - cA * static_cast<long>(attack.size());
  Json j{{"cA", to_string(cA)},
         {"k", k},
         {"p", lc.p},
         {"attack", edges_json(attack)},
         {"connected_after_attack", connected},
         {"uA", to_string(uA)}};
  if (dot_path) {
    write_file(*dot_path, to_dot(g, attack));
    j["dot_file"] = *dot_path;
  }
  out << j.dump(2) << "\n";
  return kOk;
}

inline int cmd_verify(const LayeredGraph& g, int k, std::ostream& out) {
  if (k < 0) throw InvalidArgument("--k must be non-negative");
  LinkConnectivity lc = link_connectivity(g);
  const bool resistant = is_p_resistant(g, k);
  Json degrees = Json::array();
  for (NodeId v = 0; v < g.node_count(); ++v)
    degrees.push_back({{"node", v}, {"layer", g.layer_of(v) == Layer::One ? 1 : 2}, {"degree", g.degree(v)}});
  LinkCounts c = count_links(g);
  Json j{{"k", k},
         {"connected", lc.connected()},
         {"p", lc.p},
         {"k_resistant", resistant},
         {"edges", g.edge_count()},
         {"counts",
          {{"op1_intra1", c.op1_intra1}, {"op1_cross", c.op1_cross}, {"op2_intra2", c.op2_intra2},
           {"op2_cross", c.op2_cross}}},
         {"degrees", degrees}};
  out << j.dump(2) << "\n";
  return resistant ? kOk : kError;
}

inline int cmd_oracle(const Scenario& s, std::ostream& out) {
  if (s.n1 + s.n2 > 5) throw InvalidArgument("oracle is limited to n1 + n2 <= 5");
  SpeSolution exact = solve_spe_exact(s.n1, s.n2, s.costs, s.search);
  OracleResult brute = bruteforce_spe_oracle(s.n1, s.n2, s.costs);
  std::set<Rational> exact_u2;
  for (const GameOutcome& o : exact.outcomes) exact_u2.insert(o.u2);
  std::vector<Rational> eu2(exact_u2.begin(), exact_u2.end());
  std::vector<Rational> bu2(brute.u2_values.begin(), brute.u2_values.end());
  const bool agree = exact.is_null == brute.is_null && exact.u1 == brute.u1 && exact_u2 == brute.u2_values;
  Json j{{"scenario", scenario_to_json(s)},
         {"k", exact.k},
         {"exact", {{"null", exact.is_null}, {"u1", to_string(exact.u1)}, {"u2_values", rationals_json(eu2)}}},
         {"oracle", {{"null", brute.is_null}, {"u1", to_string(brute.u1)}, {"u2_values", rationals_json(bu2)}}},
         {"agree", agree}};
  out << j.dump(2) << "\n";
  return agree ? kOk : kError;
}

inline Json efficiency_json(const EfficiencyReport& r) {
  Json j{{"c_spe", to_string(r.c_spe)},
         {"c_co", r.team.found ? Json(to_string(r.c_co)) : Json(nullptr)},
         {"c_co_exact", r.team.exact},
         {"poa", r.poa ? Json(to_string(*r.poa)) : Json(nullptr)},
         {"lower_bound", to_string(r.bounds.lower)},
         {"upper_bound", r.bounds.upper ? Json(to_string(*r.bounds.upper)) : Json(nullptr)},
         {"spe_null", r.equilibrium.is_null},
         {"team_null", r.team.is_null}};
  return j;
}

inline int cmd_metrics(const Scenario& s, std::ostream& out) {
  EfficiencyReport cheapest = price_of_anarchy(s.n1, s.n2, s.costs, CrossPricing::Cheapest, s.mode, s.search);
  EfficiencyReport op1 = price_of_anarchy(s.n1, s.n2, s.costs, CrossPricing::Operator1, s.mode, s.search);
  SeniorityReport pos = price_of_seniority(s.n1, s.n2, s.costs, s.mode, s.search);
  Json j{{"scenario", scenario_to_json(s)},
         {"k", cheapest.k},
         {"route", cheapest.equilibrium.route},
         {"efficiency", efficiency_json(cheapest)},
         {"efficiency_cross_by_operator1", efficiency_json(op1)},
         {"seniority",
          {{"c2_second", to_string(pos.c2_second)},
           {"c2_first", to_string(pos.c2_first)},
           {"pos", pos.infinite ? Json("infinite") : Json(to_string(*pos.pos))}}}};
  out << j.dump(2) << "\n";
  return kOk;
}

}  // namespace secnet::cli
