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

#include <bit>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "secnet/error.hpp"
#include "secnet/game.hpp"
#include "secnet/graph.hpp"
#include "secnet/rational.hpp"

namespace secnet {

struct OracleResult {
  bool is_null = true;
  Rational u1;
  std::set<Rational> u2_values;  // over every operator-1 optimum
  Rational op1_cost;
  StrategyProfile witness;
  std::uint64_t op1_strategies = 0;
};

// Exhaustive backward induction over bitmasks, for n1 + n2 <= 5. Shares nothing with
// the search-based solver beyond the graph types used to report the witness.
inline OracleResult bruteforce_spe_oracle(int n1, int n2, const CostProfile& costs) {
  costs.validate();
  if (n1 < 1 || n2 < 1) throw InvalidArgument("both layers need at least one node");
  const int n = n1 + n2;
  if (n > 5) throw InvalidArgument("brute-force oracle is limited to n1 + n2 <= 5");

  struct L {
    int u, v;
    EdgeClass cls;
  };
  std::vector<L> links;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      EdgeClass cls = (v < n1) ? EdgeClass::Intra1 : (u >= n1 ? EdgeClass::Intra2 : EdgeClass::Cross);
      links.push_back({u, v, cls});
    }
  const int m = static_cast<int>(links.size());

  // Edge cut of every vertex set S containing node 0, as a link mask.
  std::vector<std::uint32_t> cutmask;
  for (std::uint32_t s = 1; s < (1u << n) - 1; s += 2) {
    std::uint32_t cm = 0;
    for (int i = 0; i < m; ++i)
      if (((s >> links[i].u) & 1u) != ((s >> links[i].v) & 1u)) cm |= 1u << i;
    cutmask.push_back(cm);
  }
  auto lambda = [&](std::uint32_t mask) {
    int best = m + 1;
    for (std::uint32_t cm : cutmask) best = std::min(best, std::popcount(mask & cm));
    return best;
  };
  // Survives the adversary iff every cut costs more than the whole prize.
  auto secure = [&](std::uint32_t mask) { return costs.cA * lambda(mask) > 1; };

  // Integer costs on a common denominator.
  auto den = [](const Rational& x) { return static_cast<std::int64_t>(denominator(x)); };
  auto num = [](const Rational& x) { return static_cast<std::int64_t>(numerator(x)); };
  std::int64_t D = 1;
  for (const Rational* x : {&costs.c1, &costs.c2, &costs.c12, &costs.c21}) D = std::lcm(D, den(*x));
  auto scaled = [&](const Rational& x) { return num(x) * (D / den(x)); };
  const std::int64_t w1 = scaled(costs.c1), w2 = scaled(costs.c2), w12 = scaled(costs.c12), w21 = scaled(costs.c21);

  std::vector<int> op1_links, intra2_links, cross_links;
  for (int i = 0; i < m; ++i) {
    if (links[i].cls != EdgeClass::Intra2) op1_links.push_back(i);
    if (links[i].cls == EdgeClass::Intra2) intra2_links.push_back(i);
    if (links[i].cls == EdgeClass::Cross) cross_links.push_back(i);
  }

  OracleResult out;
  std::int64_t best_u1 = 0;  // scaled by D
  bool found = false;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> argmax;
  std::vector<std::int64_t> argmax_u2;

  const std::uint32_t n_op1 = 1u << op1_links.size();
  for (std::uint32_t s1 = 0; s1 < n_op1; ++s1) {
    std::uint32_t mask1 = 0;
    std::int64_t cost1 = 0;
    for (std::size_t b = 0; b < op1_links.size(); ++b)
      if ((s1 >> b) & 1u) {
        int i = op1_links[b];
        mask1 |= 1u << i;
        cost1 += links[i].cls == EdgeClass::Cross ? w12 : w1;
      }
    ++out.op1_strategies;

    std::vector<int> free2;
    for (int i : intra2_links) free2.push_back(i);
    for (int i : cross_links)
      if (!((mask1 >> i) & 1u)) free2.push_back(i);

    // Operator 2: keep the empty set unless something is strictly better.
    std::uint32_t best2 = 0;
    std::int64_t best_u2 = secure(mask1) ? D : 0;
    for (std::uint32_t s2 = 1; s2 < (1u << free2.size()); ++s2) {
      std::uint32_t mask2 = 0;
      std::int64_t cost2 = 0;
      for (std::size_t b = 0; b < free2.size(); ++b)
        if ((s2 >> b) & 1u) {
          int i = free2[b];
          mask2 |= 1u << i;
          cost2 += links[i].cls == EdgeClass::Cross ? w21 : w2;
        }
      std::int64_t u2 = (secure(mask1 | mask2) ? D : 0) - cost2;
      if (u2 > best_u2) {
        best_u2 = u2;
        best2 = mask2;
      }
    }
    std::int64_t u1 = (secure(mask1 | best2) ? D : 0) - cost1;
    if (!found || u1 > best_u1) {
      found = true;
      best_u1 = u1;
      argmax.clear();
      argmax_u2.clear();
    }
    if (u1 == best_u1) {
      argmax.emplace_back(mask1, best2);
      argmax_u2.push_back(best_u2);
    }
  }

  if (best_u1 <= 0) {
    out.is_null = true;
    out.u1 = 0;
    out.u2_values = {Rational(0)};
    return out;
  }
  out.is_null = false;
  out.u1 = Rational(best_u1, D);
  out.op1_cost = Rational(1) - out.u1;
  for (std::int64_t u2 : argmax_u2) out.u2_values.insert(Rational(u2, D));

  auto [m1, m2] = argmax.front();
  for (int i = 0; i < m; ++i) {
    const L& l = links[i];
    if ((m1 >> i) & 1u) {
      Edge e{l.u, l.v, Owner::Operator1, l.cls};
      (l.cls == EdgeClass::Cross ? out.witness.e1_cross : out.witness.e1_intra).push_back(e);
    }
    if ((m2 >> i) & 1u) {
      Edge e{l.u, l.v, Owner::Operator2, l.cls};
      (l.cls == EdgeClass::Cross ? out.witness.e2_cross : out.witness.e2_intra).push_back(e);
    }
  }
  return out;
}

}  // namespace secnet
