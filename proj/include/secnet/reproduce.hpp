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

#include <functional>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "secnet/cli.hpp"

namespace secnet::cli {

class Checklist {
 public:
  explicit Checklist(std::ostream& out) : out_(out) {}

  void check(const std::string& label, bool ok, const std::string& detail = "") {
    out_ << "  [" << (ok ? "PASS" : "FAIL") << "] " << label;
    if (!detail.empty()) out_ << ": " << detail;
    out_ << "\n";
    ok ? ++passed_ : ++failed_;
  }

  template <class T>
  void expect_eq(const std::string& label, const T& computed, const T& expected) {
    check(label, computed == expected, "computed " + show(computed) + ", expected " + show(expected));
  }

  void info(const std::string& text) { out_ << "  " << text << "\n"; }
  void note(const std::string& text) { out_ << "  [NOTE] " << text << "\n"; }
  void heading(const std::string& text) { out_ << text << "\n"; }

  int passed() const { return passed_; }
  int failed() const { return failed_; }

 private:
  static std::string show(const Rational& x) { return to_string(x); }
  static std::string show(int x) { return std::to_string(x); }
  static std::string show(bool x) { return x ? "true" : "false"; }
  static std::string show(const std::string& x) { return x; }

  std::ostream& out_;
  int passed_ = 0;
  int failed_ = 0;
};

inline LinkCosts case_a_costs() {
  return {make_rational(1, 30), make_rational(1, 45), make_rational(1, 20), make_rational(2, 45)};
}

inline CostProfile with_attack(const LinkCosts& c, const Rational& cA) {
  CostProfile p;
  static_cast<LinkCosts&>(p) = c;
  p.cA = cA;
  return p;
}

inline bool all_degrees(const LayeredGraph& g, int d) {
  for (NodeId v = 0; v < g.node_count(); ++v)
    if (g.degree(v) != d) return false;
  return true;
}

namespace detail {

inline void reproduce_algo_example(Checklist& c) {
  c.heading("algo-example: n1 = n2 = 5, k = 3, c1 = c2 = 1/20, c12 = c21 = 1/10");
  LinkCosts costs{make_rational(1, 20), make_rational(1, 20), make_rational(1, 10), make_rational(1, 10)};
  Equilibrium eq = solve_equilibrium(5, 5, with_attack(costs, make_rational(1, 3)), SolveMode::Structured);
  LinkCounts n = count_links(eq.graph);
  c.expect_eq("route", eq.route, std::string("structured"));
  c.expect_eq("operator 1 cross links (e12)", n.op1_cross, 0);
  c.expect_eq("operator 1 layer links (e11)", n.op1_intra1, 7);
  c.expect_eq("operator 2 cross links", n.op2_cross, 6);
  c.expect_eq("operator 2 layer links", n.op2_intra2, 7);
  c.expect_eq("u1", eq.u1, make_rational(13, 20));
  c.expect_eq("u2", eq.u2, make_rational(1, 20));
  c.check("every node has degree 4", all_degrees(eq.graph, 4));
  c.expect_eq("link connectivity p", link_connectivity(eq.graph).p, 3);
  c.expect_eq("Hamiltonian cycles", eq.cycles_built, 2);
}

inline void reproduce_case_a(Checklist& c) {
  c.heading("case-a: n1 = n2 = 9, cA = 1/3, costs (1/30, 1/45, 1/20, 2/45)");
  Equilibrium eq = solve_equilibrium(9, 9, with_attack(case_a_costs(), make_rational(1, 3)));
  LinkCounts n = count_links(eq.graph);
  c.expect_eq("k", eq.k, 3);
  c.expect_eq("operator 1 layer links", n.op1_intra1, 10);
  c.expect_eq("operator 1 cross links", n.op1_cross, 0);
  c.expect_eq("operator 2 layer links", n.op2_intra2, 10);
  c.expect_eq("operator 2 cross links", n.op2_cross, 16);
  c.expect_eq("u2", eq.u2, make_rational(1, 15));
  c.expect_eq("adversary best response size", static_cast<int>(adversary_best_response_k(eq.graph, 3).size()), 0);
  c.expect_eq("link connectivity p", link_connectivity(eq.graph).p, 3);
  c.expect_eq("u1 = 1 - 10 c1", eq.u1, Rational(1) - case_a_costs().c1 * 10);
  c.note("u1 computes to " + to_string(eq.u1) +
         "; the reference value 5/6 is inconsistent with 10 links at c1 = 1/30 and is not used");
}

inline void reproduce_case_b(Checklist& c) {
  c.heading("case-b-sweep: n1 = n2 = 9, case-A costs, k = 0..8");
  auto sweep = threat_sweep(9, case_a_costs(), 0, 8);
  c.info("k  e1  e11 e12 op2_intra op2_cross  C1      C2      null");
  for (const ThreatPoint& t : sweep) {
    std::ostringstream row;
    row << t.k << "  " << t.plan.e1 << "  " << t.plan.e11 << "  " << t.plan.e12 << "  " << t.plan.op2_intra << "  "
        << t.plan.op2_cross << "  " << to_string(t.plan.c1_total) << "  " << to_string(t.plan.c2_total) << "  "
        << (t.is_null ? "yes" : "no");
    c.info(row.str());
  }
  for (const ThreatPoint& t : sweep) {
    const std::string at = " at k = " + std::to_string(t.k);
    if (t.k <= 1) {
      c.expect_eq("operator 1 idle" + at, t.plan.e1, 0);
      c.expect_eq("u1" + at, t.u1, Rational(1));
    } else if (t.k <= 6) {
      c.check("operator 1 contributes" + at, !t.is_null && t.plan.e1 > 0, "e1 = " + std::to_string(t.plan.e1));
      c.expect_eq("operator 1 stays inside its layer" + at, t.plan.e12, 0);
    } else {
      c.check("null equilibrium" + at, t.is_null,
              t.null_reason ? std::string("reason ") + to_string(*t.null_reason) : "stage-one infeasible");
    }
  }
  bool constant = true;
  for (const ThreatPoint& t : sweep)
    if (t.k >= 2 && t.k <= 6) constant = constant && t.plan.c2_total == sweep[2].plan.c2_total;
  c.check("operator 2 cost constant for 2 <= k <= 6", constant, "C2 = " + to_string(sweep[2].plan.c2_total));
  if (sweep[2].k == 2 && sweep[2].plan.e1 == 4) c.info("operator 1 starts with e1 = 4 links at k = 2");
}

// Edge-set difference after dropping the highest-index node of each layer.
struct RewireDiff {
  int removed_with_departing = 0;
  int kept = 0;
  int dropped = 0;
  int added = 0;
};

inline RewireDiff rewire_diff(const LayeredGraph& big, const LayeredGraph& small) {
  // (layer, index within layer)
  auto key = [](const LayeredGraph& g, NodeId v) {
    return std::make_pair(g.layer_of(v) == Layer::One ? 1 : 2, g.layer_of(v) == Layer::One ? v : v - g.n1());
  };
  using Key = std::pair<std::pair<int, int>, std::pair<int, int>>;
  auto edge_key = [&](const LayeredGraph& g, const Edge& e) {
    auto a = key(g, e.u), b = key(g, e.v);
    return a < b ? Key{a, b} : Key{b, a};
  };
  std::set<Key> old_edges, new_edges;
  RewireDiff d;
  for (const Edge& e : big.edges()) {
    auto k = edge_key(big, e);
    auto gone = [&](std::pair<int, int> node) { return node.second >= (node.first == 1 ? small.n1() : small.n2()); };
    const bool departs = gone(k.first) || gone(k.second);
    if (departs)
      ++d.removed_with_departing;
    else
      old_edges.insert(k);
  }
  for (const Edge& e : small.edges()) new_edges.insert(edge_key(small, e));
  for (const Key& k : old_edges) new_edges.count(k) ? ++d.kept : ++d.dropped;
  for (const Key& k : new_edges)
    if (!old_edges.count(k)) ++d.added;
  return d;
}

inline void reproduce_case_c(Checklist& c) {
  c.heading("case-c: one node leaves each layer, n1 = n2 = 8, case-A costs, cA = 1/3");
  const CostProfile costs = with_attack(case_a_costs(), make_rational(1, 3));
  Equilibrium eq = solve_equilibrium(8, 8, costs);
  LinkCounts n = count_links(eq.graph);
  c.expect_eq("route", eq.route, std::string("generalized"));
  c.expect_eq("operator 1 links", n.op1_intra1 + n.op1_cross, 7);
  c.expect_eq("operator 2 layer links", n.op2_intra2, 7);
  c.expect_eq("operator 2 cross links", n.op2_cross, 18);
  c.expect_eq("u1", eq.u1, make_rational(23, 30));
  c.expect_eq("u2", eq.u2, make_rational(2, 45));
  c.check("certified 3-resistant", is_p_resistant(eq.graph, 3),
          "p = " + std::to_string(link_connectivity(eq.graph).p) + ", rewires = " + std::to_string(eq.rewires));
  Equilibrium nine = solve_equilibrium(9, 9, costs);
  RewireDiff d = rewire_diff(nine.graph, eq.graph);
  c.info("diff against the n1 = 9 network: " + std::to_string(d.removed_with_departing) +
         " links left with the departing nodes, " + std::to_string(d.kept) + " kept, " + std::to_string(d.dropped) +
         " dropped, " + std::to_string(d.added) + " added");
  c.info("rewired links: " + std::to_string(d.dropped + d.added) + " of " + std::to_string(eq.graph.edge_count()));
}

inline void reproduce_example_1(Checklist& c) {
  c.heading("example-1: n1 = n2 = 3, c1 = c12 = 0.19, c2 = c21 = 0.21");
  LinkCosts costs{parse_rational("0.19"), parse_rational("0.21"), parse_rational("0.19"), parse_rational("0.21")};
  const std::pair<int, std::pair<Rational, Rational>> expected[] = {
      {1, {make_rational(19, 50), make_rational(21, 25)}},
      {2, {make_rational(19, 20), make_rational(21, 25)}},
  };
  for (const auto& [k, want] : expected) {
    const std::string at = " at k = " + std::to_string(k);
    StageOnePlan plan = stage1_allocate(3, k, costs);
    c.expect_eq("C1" + at, plan.c1_total, want.first);
    c.expect_eq("C2" + at, plan.c2_total, want.second);
    Equilibrium exact = solve_equilibrium_k(3, 3, costs, k, SolveMode::Exact);
    c.check("exact search agrees" + at,
            !exact.is_null && exact.op1_cost == want.first && exact.op2_costs.front() == want.second,
            "C1 = " + to_string(exact.op1_cost) + ", C2 = " + to_string(exact.op2_costs.front()));
  }
}

inline void reproduce_prop3(Checklist& c) {
  c.heading("prop3: n1 = 4, n2 = 3, k = 2, all costs 9/100");
  const Rational x = make_rational(9, 100);
  SpeSolution s = solve_spe_exact_k(4, 3, LinkCosts{x, x, x, x}, 2);
  std::string classes;
  for (const Rational& r : s.op2_costs) classes += (classes.empty() ? "" : ", ") + to_string(r);
  auto has = [&](const Rational& r) { return std::find(s.op2_costs.begin(), s.op2_costs.end(), r) != s.op2_costs.end(); };
  c.check("operator 2 cost 9/10 occurs", has(make_rational(9, 10)), "classes {" + classes + "}");
  c.check("operator 2 cost 99/100 occurs", has(make_rational(99, 100)), "classes {" + classes + "}");
  bool same_u1 = true;
  for (const GameOutcome& o : s.outcomes) same_u1 = same_u1 && o.u1 == make_rational(91, 100);
  c.check("u1 = 91/100 in every equilibrium", !s.is_null && same_u1, "u1 = " + to_string(s.u1));
}

inline void reproduce_prop4(Checklist& c) {
  c.heading("prop4: symmetric instances with n1 (k+1) c12 < 1");
  struct Case {
    int n1, k;
    Rational cross;
  };
  const Case cases[] = {{3, 1, make_rational(1, 10)}, {5, 3, make_rational(1, 25)}, {7, 3, make_rational(1, 30)}};
  for (const Case& x : cases) {
    LinkCosts costs{x.cross / 2, x.cross / 2, x.cross, x.cross};
    const std::string at = " (n1 = " + std::to_string(x.n1) + ", k = " + std::to_string(x.k) + ")";
    SeniorityReport pos = price_of_seniority_k(x.n1, x.n1, costs, x.k);
    c.expect_eq("u1" + at, pos.second.u1, Rational(1));
    c.expect_eq("u2" + at, pos.second.u2, Rational(1) - x.cross * (x.n1 * (x.k + 1)));
    c.check("PoS infinite" + at, pos.infinite,
            "c2 second = " + to_string(pos.c2_second) + ", c2 first = " + to_string(pos.c2_first));
  }
}

inline void reproduce_poa_family(Checklist& c) {
  c.heading("poa-family: n2 = 2, k = 1, c1 = c2 = 1/n1^3, c12 = 1/n1^2, c21 = 1/(3 n1)");
  for (int n1 = 3; n1 <= 5; ++n1) {
    LinkCosts costs{make_rational(1, n1 * n1 * n1), make_rational(1, n1 * n1 * n1), make_rational(1, n1 * n1),
                    make_rational(1, 3 * n1)};
    const std::string at = " at n1 = " + std::to_string(n1);
    EfficiencyReport by_op1 = price_of_anarchy_k(n1, 2, costs, 1, CrossPricing::Operator1);
    EfficiencyReport cheap = price_of_anarchy_k(n1, 2, costs, 1, CrossPricing::Cheapest);
    c.expect_eq("C_SPE" + at, by_op1.c_spe, make_rational(2, 3));
    c.expect_eq("C_CO, cross links at c12" + at, by_op1.c_co, make_rational(3, n1 * n1));
    c.expect_eq("C_CO, cheapest builder" + at, cheap.c_co, make_rational(3, n1 * n1));
    c.check("PoA = 2 n1^2 / 9" + at, by_op1.poa && *by_op1.poa == make_rational(2 * n1 * n1, 9),
            "computed " + (by_op1.poa ? to_string(*by_op1.poa) : std::string("undefined")) +
                ", cheapest-builder " + (cheap.poa ? to_string(*cheap.poa) : std::string("undefined")));
  }
}

inline void reproduce_pos_family(Checklist& c) {
  c.heading("pos-family: n1 = n2 = 3, k = 1, c1 = c2 = 1/20, cross costs c12 = c21 = x");
  for (int den : {10, 7, 6, 5, 4}) {
    const Rational x = make_rational(1, den);
    LinkCosts costs{make_rational(1, 20), make_rational(1, 20), x, x};
    SeniorityReport r = price_of_seniority_k(3, 3, costs, 1);
    std::string value = r.infinite ? "infinite" : to_string(*r.pos);
    c.check("PoS >= 1 at x = " + to_string(x), r.infinite || *r.pos >= 1,
            "PoS = " + value + " (c2 second " + to_string(r.c2_second) + ", c2 first " + to_string(r.c2_first) + ")");
  }
}

inline void reproduce_bounds_sweep(Checklist& c) {
  c.heading("bounds-sweep: lower <= team optimum <= upper for n1 + n2 <= 6");
  const Rational grid[] = {make_rational(1, 20), make_rational(1, 12), make_rational(1, 7)};
  int checked = 0, bad = 0, skipped = 0;
  for (int n1 = 1; n1 <= 5; ++n1)
    for (int n2 = 1; n1 + n2 <= 6; ++n2)
      for (int k = 1; k + 1 <= n1 + n2 - 1; ++k)
        for (const Rational& a : grid)
          for (const Rational& b : grid)
            for (const Rational& x : grid)
              for (const Rational& y : grid) {
                LinkCosts costs{a, b, x, y};
                if (std::min(a, b) > std::min(x, y)) {
                  ++skipped;
                  continue;
                }
                TeamOptimum t = team_optimal(n1, n2, k, costs);
                if (!t.found) continue;
                CostBounds bounds = cost_bounds(n1, n2, k, costs);
                ++checked;
                if (t.cost < bounds.lower || (bounds.upper && t.cost > *bounds.upper)) ++bad;
              }
  c.check("bounds hold on every solved instance", bad == 0 && checked > 0,
          std::to_string(checked) + " instances, " + std::to_string(bad) + " violations");
  c.info(std::to_string(skipped) +
         " cost points with cross links cheaper than every layer link skipped: the lower bound assumes the opposite");
}

}  // namespace detail

inline const std::vector<std::pair<std::string, std::function<void(Checklist&)>>>& reproduce_cases() {
  static const std::vector<std::pair<std::string, std::function<void(Checklist&)>>> cases{
      {"algo-example", detail::reproduce_algo_example}, {"case-a", detail::reproduce_case_a},
      {"case-b-sweep", detail::reproduce_case_b},       {"case-c", detail::reproduce_case_c},
      {"example-1", detail::reproduce_example_1},       {"prop3", detail::reproduce_prop3},
      {"prop4", detail::reproduce_prop4},               {"poa-family", detail::reproduce_poa_family},
      {"pos-family", detail::reproduce_pos_family},     {"bounds-sweep", detail::reproduce_bounds_sweep},
  };
  return cases;
}

// Runs one named case, or every case for "all".
inline int cmd_reproduce(const std::string& name, std::ostream& out) {
  Checklist c(out);
  bool ran = false;
  for (const auto& [case_name, run] : reproduce_cases()) {
    if (name != "all" && name != case_name) continue;
    run(c);
    ran = true;
  }
  if (!ran) {
    std::string names;
    for (const auto& entry : reproduce_cases()) names += " " + entry.first;
    throw InvalidArgument("unknown case '" + name + "'; expected one of:" + names + " all");
  }
  out << c.passed() << " passed, " << c.failed() << " failed\n";
  return c.failed() == 0 ? kOk : kError;
}

}  // namespace secnet::cli
