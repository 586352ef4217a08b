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


// Acceptance suite: one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/edge_connectivity.hpp>

#include "secnet.hpp"
#include "test_util.hpp"

namespace {

using namespace secnet;
using cli::all_degrees;
using cli::case_a_costs;
using cli::count_links;
using cli::LinkCounts;
using cli::with_attack;

// Wall-clock limits in seconds.
constexpr double kAlgoExampleLimit = 1.0;
constexpr double kCaseALimit = 5.0;
constexpr double kTiedResponsesLimit = 60.0;

constexpr int kOracleInstances = 200;
constexpr int kConnectivityGraphs = 200;

struct Verdict {
  bool ok = true;
  std::ostringstream why;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (!ok) why << "; ";
      why << what;
      ok = false;
    }
  }
};

std::string str(const Rational& x) { return to_string(x); }

Verdict ac1() {
  Verdict v;
  LinkCosts c{make_rational(1, 20), make_rational(1, 20), make_rational(1, 10), make_rational(1, 10)};
  Equilibrium eq = solve_equilibrium(5, 5, with_attack(c, make_rational(1, 3)), SolveMode::Structured);
  LinkCounts n = count_links(eq.graph);
  v.require(eq.route == "structured", "route " + eq.route);
  v.require(eq.plan && eq.plan->e12 == 0 && eq.plan->e11 == 7, "stage-one split");
  v.require(n.op1_cross == 0 && n.op1_intra1 == 7, "operator 1 links");
  v.require(n.op2_cross == 6 && n.op2_intra2 == 7, "operator 2 links");
  v.require(eq.u1 == make_rational(13, 20), "u1 = " + str(eq.u1));
  v.require(eq.u2 == make_rational(1, 20), "u2 = " + str(eq.u2));
  v.require(all_degrees(eq.graph, 4), "degrees");
  v.require(link_connectivity(eq.graph).p == 3, "p");
  return v;
}

Verdict ac2() {
  Verdict v;
  Equilibrium eq = solve_equilibrium(9, 9, with_attack(case_a_costs(), make_rational(1, 3)));
  LinkCounts n = count_links(eq.graph);
  v.require(eq.k == 3, "k");
  v.require(n.op1_intra1 == 10 && n.op1_cross == 0, "operator 1 links");
  v.require(n.op2_intra2 == 10 && n.op2_cross == 16, "operator 2 links");
  v.require(eq.u2 == make_rational(1, 15), "u2 = " + str(eq.u2));
  v.require(adversary_best_response_k(eq.graph, 3).empty(), "adversary attacks");
  v.require(link_connectivity(eq.graph).p == 3, "p");
  v.require(eq.u1 == make_rational(2, 3), "u1 = " + str(eq.u1));
  if (v.ok) v.why << "u1 = 2/3; the reference value 5/6 contradicts 10 links at 1/30 (noted, not a failure)";
  return v;
}

Verdict ac3() {
  Verdict v;
  Equilibrium eq = solve_equilibrium(8, 8, with_attack(case_a_costs(), make_rational(1, 3)));
  LinkCounts n = count_links(eq.graph);
  v.require(eq.route == "generalized", "route " + eq.route);
  v.require(n.op1_intra1 + n.op1_cross == 7, "operator 1 links");
  v.require(n.op2_intra2 == 7 && n.op2_cross == 18, "operator 2 links");
  v.require(eq.u1 == make_rational(23, 30), "u1 = " + str(eq.u1));
  v.require(eq.u2 == make_rational(2, 45), "u2 = " + str(eq.u2));
  v.require(is_p_resistant(eq.graph, 3), "not 3-resistant");
  if (v.ok) v.why << "rewires = " << eq.rewires;
  return v;
}

Verdict ac4() {
  Verdict v;
  auto sweep = threat_sweep(9, case_a_costs(), 0, 8);
  v.require(sweep.size() == 9, "sweep size");
  for (const ThreatPoint& t : sweep) {
    const std::string at = " at k=" + std::to_string(t.k);
    if (t.k <= 1)
      v.require(!t.is_null && t.plan.e1 == 0, "operator 1 not idle" + at);
    else if (t.k <= 6)
      v.require(!t.is_null && t.plan.e1 > 0, "operator 1 idle" + at);
    else
      v.require(t.is_null, "not null" + at);
  }
  for (int k = 2; k <= 6; ++k)
    v.require(sweep[static_cast<std::size_t>(k)].plan.c2_total == sweep[2].plan.c2_total,
              "operator 2 cost varies at k=" + std::to_string(k));
  return v;
}

Verdict ac5() {
  Verdict v;
  LinkCosts c{parse_rational("0.19"), parse_rational("0.21"), parse_rational("0.19"), parse_rational("0.21")};
  StageOnePlan k1 = stage1_allocate(3, 1, c), k2 = stage1_allocate(3, 2, c);
  v.require(k1.c1_total == make_rational(19, 50), "C1 at k=1 = " + str(k1.c1_total));
  v.require(k1.c2_total == make_rational(21, 25), "C2 at k=1 = " + str(k1.c2_total));
  v.require(k2.c1_total == make_rational(19, 20), "C1 at k=2 = " + str(k2.c1_total));
  v.require(k2.c2_total == make_rational(21, 25), "C2 at k=2 = " + str(k2.c2_total));
  for (int k : {1, 2}) {
    Equilibrium e = solve_equilibrium_k(3, 3, c, k, SolveMode::Exact);
    const StageOnePlan& p = k == 1 ? k1 : k2;
    v.require(!e.is_null && e.op1_cost == p.c1_total && e.op2_costs.front() == p.c2_total,
              "exact search disagrees at k=" + std::to_string(k));
  }
  return v;
}

Verdict ac6() {
  Verdict v;
  const Rational x = make_rational(9, 100);
  SpeSolution s = solve_spe_exact_k(4, 3, LinkCosts{x, x, x, x}, 2);
  auto has = [&](const Rational& r) { return std::find(s.op2_costs.begin(), s.op2_costs.end(), r) != s.op2_costs.end(); };
  v.require(!s.is_null, "null");
  v.require(has(make_rational(9, 10)), "no equilibrium with operator 2 cost 9/10");
  v.require(has(make_rational(99, 100)), "no equilibrium with operator 2 cost 99/100");
  for (const GameOutcome& o : s.outcomes) v.require(o.u1 == make_rational(91, 100), "u1 = " + str(o.u1));
  return v;
}

Verdict ac7() {
  Verdict v;
  struct Case {
    int n1, k;
    Rational cross;
  };
  const Case cases[] = {{3, 1, make_rational(1, 10)}, {5, 3, make_rational(1, 25)}, {7, 3, make_rational(1, 30)},
                        {9, 5, make_rational(1, 60)}};
  for (const Case& x : cases) {
    const std::string at = " at n1=" + std::to_string(x.n1) + " k=" + std::to_string(x.k);
    LinkCosts c{x.cross / 2, x.cross / 2, x.cross, x.cross};
    v.require(x.cross * (x.n1 * (x.k + 1)) < 1, "instance outside the family" + at);
    SeniorityReport r = price_of_seniority_k(x.n1, x.n1, c, x.k);
    v.require(r.second.u1 == 1, "u1 = " + str(r.second.u1) + at);
    v.require(r.second.u2 == Rational(1) - x.cross * (x.n1 * (x.k + 1)), "u2 = " + str(r.second.u2) + at);
    v.require(r.infinite, "PoS finite" + at);
  }
  return v;
}

Verdict ac8() {
  Verdict v;
  for (int n1 = 3; n1 <= 5; ++n1) {
    LinkCosts c{make_rational(1, n1 * n1 * n1), make_rational(1, n1 * n1 * n1), make_rational(1, n1 * n1),
                make_rational(1, 3 * n1)};
    EfficiencyReport by_op1 = price_of_anarchy_k(n1, 2, c, 1, CrossPricing::Operator1);
    EfficiencyReport cheap = price_of_anarchy_k(n1, 2, c, 1, CrossPricing::Cheapest);
    v.require(by_op1.poa && *by_op1.poa == make_rational(2 * n1 * n1, 9), "PoA at n1=" + std::to_string(n1));
    if (cheap.poa) v.why << (v.why.tellp() > 0 ? ", " : "") << "n1=" << n1 << " cheapest " << str(*cheap.poa);
  }
  return v;
}

int boost_lambda(const LayeredGraph& g) {
  using BGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BGraph b(static_cast<std::size_t>(g.node_count()));
  for (const Edge& e : g.edges()) boost::add_edge(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v), b);
  std::vector<boost::graph_traits<BGraph>::edge_descriptor> cut;
  return static_cast<int>(boost::edge_connectivity(b, std::back_inserter(cut)));
}

Verdict ac9() {
  Verdict v;
  std::mt19937 rng(20260901);
  int disagree = 0, nulls = 0;
  for (int i = 0; i < kOracleInstances; ++i) {
    const int n1 = 1 + static_cast<int>(rng() % 4);
    const int n2 = 1 + static_cast<int>(rng() % static_cast<unsigned>(5 - n1));
    CostProfile p = testing::profile(testing::random_link_costs(rng, 20, 60),
                                     testing::random_cost(rng, 59, 60));
    SpeSolution exact = solve_spe_exact(n1, n2, p);
    OracleResult brute = bruteforce_spe_oracle(n1, n2, p);
    std::set<Rational> u2;
    for (const GameOutcome& o : exact.outcomes) u2.insert(o.u2);
    nulls += exact.is_null;
    if (exact.is_null != brute.is_null || exact.u1 != brute.u1 || u2 != brute.u2_values) ++disagree;
  }
  v.require(disagree == 0, std::to_string(disagree) + " solver disagreements");
  int bad = 0;
  for (int i = 0; i < kConnectivityGraphs; ++i) {
    const int n1 = 1 + static_cast<int>(rng() % 4), n2 = 1 + static_cast<int>(rng() % 4);
    LayeredGraph g = testing::random_graph(n1, n2, 12, rng);
    const int p = link_connectivity(g).p;
    const int want = testing::exhaustive_lambda(g);
    const bool connected = want >= 0;
    if (p != (connected ? want - 1 : -1) || (connected && boost_lambda(g) != want)) ++bad;
  }
  v.require(bad == 0, std::to_string(bad) + " connectivity disagreements");
  if (v.ok)
    v.why << kOracleInstances << " games (" << nulls << " null), " << kConnectivityGraphs << " graphs";
  return v;
}

bool hamiltonian(const std::vector<Edge>& cycle, int n) {
  if (static_cast<int>(cycle.size()) != n) return false;
  std::vector<std::vector<NodeId>> adj(static_cast<std::size_t>(n));
  for (const Edge& e : cycle) {
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (const auto& a : adj)
    if (a.size() != 2) return false;
  int seen = 1;
  NodeId prev = 0, at = adj[0][0];
  while (at != 0) {
    ++seen;
    NodeId next = adj[static_cast<std::size_t>(at)][0] == prev ? adj[static_cast<std::size_t>(at)][1]
                                                               : adj[static_cast<std::size_t>(at)][0];
    prev = at;
    at = next;
  }
  return seen == n;
}

Verdict ac10() {
  Verdict v;
  int structured = 0, generalized = 0;
  for (int n1 = 2; n1 <= 11; ++n1)
    for (int k = 1; k < n1; ++k) {
      const int nb11 = stage1_intra_capacity(n1, k);
      for (int e11 = 0; e11 <= nb11; ++e11) {
        StageOnePlan plan = plan_for(n1, k, e11);
        const std::string at = " at n1=" + std::to_string(n1) + " k=" + std::to_string(k) + " e11=" + std::to_string(e11);
        std::optional<BuiltNetwork> net;
        if (n1 % 2 == 1 && k % 2 == 1) {
          try {
            net = build_spe_network(plan);
            ++structured;
            std::set<std::pair<NodeId, NodeId>> used;
            bool disjoint = static_cast<int>(net->cycles.size()) == (k + 1) / 2;
            for (const auto& cyc : net->cycles) {
              disjoint = disjoint && hamiltonian(cyc, 2 * n1);
              for (const Edge& e : cyc) disjoint = disjoint && used.insert(e.key()).second;
            }
            v.require(disjoint && used.size() == net->graph.edge_count(), "cycles" + at);
          } catch (const ConstructionError&) {
            net.reset();
          }
        }
        if (!net) {
          net = build_generalized(plan);
          ++generalized;
        }
        const LayeredGraph& g = net->graph;
        v.require(static_cast<int>(g.edge_count()) == n1 * (k + 1), "edge count" + at);
        v.require(g.count_by(Owner::Operator1, EdgeClass::Cross) + g.count_by(Owner::Operator2, EdgeClass::Cross) >= k + 1,
                  "cross edges" + at);
        if (k % 2 == 1) v.require(all_degrees(g, k + 1), "degrees" + at);
        v.require(is_p_resistant(g, k), "resistance" + at);
      }
    }

  std::mt19937 rng(20260902);
  int sandwiched = 0, skipped = 0;
  for (int n1 = 1; n1 <= 5; ++n1)
    for (int n2 = 1; n1 + n2 <= 6; ++n2)
      for (int k = 1; k + 1 <= n1 + n2 - 1; ++k)
        for (int trial = 0; trial < 4; ++trial) {
          LinkCosts c = testing::random_link_costs(rng, 12, 60);
          if (std::min(c.c1, c.c2) > std::min(c.c12, c.c21)) {
            ++skipped;
            continue;
          }
          TeamOptimum t = team_optimal(n1, n2, k, c);
          if (!t.found) continue;
          CostBounds b = cost_bounds(n1, n2, k, c);
          ++sandwiched;
          v.require(b.lower <= t.cost && (!b.upper || t.cost <= *b.upper),
                    "bounds at n1=" + std::to_string(n1) + " n2=" + std::to_string(n2) + " k=" + std::to_string(k));
        }
  if (v.ok)
    v.why << structured << " structured and " << generalized << " generalized builds; " << sandwiched
          << " team optima sandwiched, " << skipped << " skipped with cross links cheapest";
  return v;
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* title;
    std::function<Verdict()> run;
    double limit;
  };
  const Criterion criteria[] = {
      {"AC1", "algorithm example n1 = 5, k = 3", ac1, kAlgoExampleLimit},
      {"AC2", "case A n1 = 9", ac2, kCaseALimit},
      {"AC3", "case C n1 = 8", ac3, 0},
      {"AC4", "case B threat sweep", ac4, 0},
      {"AC5", "example 1 budget split", ac5, 0},
      {"AC6", "multiple operator-2 equilibrium costs", ac6, kTiedResponsesLimit},
      {"AC7", "infinite price of seniority", ac7, 0},
      {"AC8", "unbounded price of anarchy family", ac8, 0},
      {"AC9", "oracle equivalence", ac9, 0},
      {"AC10", "structural invariants and cost bounds", ac10, 0},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.ok = false;
      v.why << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit > 0 && secs >= c.limit) v.require(false, "took longer than " + std::to_string(c.limit) + " s");
    std::ostringstream time;
    time.precision(3);
    time << std::fixed << secs;
    std::cout << (v.ok ? "PASS " : "FAIL ") << c.id << " " << c.title << " (" << time.str() << " s)";
    if (v.why.tellp() > 0) std::cout << ": " << v.why.str();
    std::cout << "\n";
    failed += !v.ok;
  }
  std::cout << (10 - failed) << "/10 criteria passed\n";
  return failed == 0 ? 0 : 1;
}
