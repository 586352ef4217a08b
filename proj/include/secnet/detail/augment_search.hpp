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

// Minimum-cost augmentation of a base network to a target edge connectivity,
// choosing links from priced pools. Used for operator 2's best response, the
// coordinated optimum and the swapped-order game.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "secnet/connectivity.hpp"
#include "secnet/error.hpp"
#include "secnet/rational.hpp"

namespace secnet::detail {

using Link = std::pair<NodeId, NodeId>;

struct LinkPool {
  std::vector<Link> links;
  Rational unit_cost;
};

struct Augmentation {
  std::vector<std::vector<Link>> chosen;  // per pool
  std::vector<int> counts;
  Rational cost;
};

class SearchBudget {
 public:
  explicit SearchBudget(std::uint64_t cap) : cap_(cap) {}

  void charge(std::uint64_t n = 1) {
    used_ += n;
    if (used_ > cap_)
      throw SearchCapExceeded("exact search exceeded its cap of " + std::to_string(cap_) +
                              " evaluated subsets");
  }
  std::uint64_t used() const { return used_; }
  std::uint64_t cap() const { return cap_; }

 private:
  std::uint64_t cap_;
  std::uint64_t used_ = 0;
};

class AugmentSearch {
 public:
  AugmentSearch(int n1, int n2, std::span<const Link> base, std::span<const LinkPool> pools, int target,
                SearchBudget& budget)
      : n1_(n1), n_(n1 + n2), target_(target), base_(base.begin(), base.end()), budget_(budget) {
    deg0_.assign(static_cast<std::size_t>(n_), 0);
    for (auto [u, v] : base_) {
      ++deg0_[static_cast<std::size_t>(u)];
      ++deg0_[static_cast<std::size_t>(v)];
      if (is_cross(u, v)) ++base_cross_;
    }
    for (std::size_t c = 0; c < pools.size(); ++c) {
      class_begin_.push_back(static_cast<int>(flat_.size()));
      PoolInfo info;
      info.cost = pools[c].unit_cost;
      for (auto [u, v] : pools[c].links) {
        if (u > v) std::swap(u, v);
        flat_.push_back({u, v, static_cast<int>(c)});
        info.touch1 = (u < n1_) + (v < n1_);
        info.touch2 = 2 - info.touch1;
        info.cross = is_cross(u, v);
      }
      info.size = static_cast<int>(pools[c].links.size());
      info.avail.assign(static_cast<std::size_t>(n_), 0);
      for (auto [u, v] : pools[c].links) {
        ++info.avail[static_cast<std::size_t>(u)];
        ++info.avail[static_cast<std::size_t>(v)];
      }
      info_.push_back(std::move(info));
    }
    class_begin_.push_back(static_cast<int>(flat_.size()));
  }

  // Cheapest selection with cost strictly below `limit` reaching lambda >= target.
  std::optional<Augmentation> run(const Rational& limit) {
    std::vector<CountVector> levels;
    std::vector<int> counts(info_.size(), 0);
    enumerate_counts(0, Rational(0), limit, counts, levels);
    std::stable_sort(levels.begin(), levels.end(), [](const CountVector& a, const CountVector& b) {
      if (a.cost != b.cost) return a.cost < b.cost;
      return a.total < b.total;
    });
    for (const CountVector& level : levels) {
      if (!root_feasible(level.counts)) continue;
      if (auto sol = search_level(level.counts)) {
        sol->cost = level.cost;
        return sol;
      }
    }
    return std::nullopt;
  }

 private:
  struct FlatLink {
    NodeId u, v;
    int pool;
  };
  struct PoolInfo {
    Rational cost;
    int size = 0;
    int touch1 = 0, touch2 = 0;
    bool cross = false;
    std::vector<int> avail;
  };
  struct CountVector {
    std::vector<int> counts;
    Rational cost;
    int total = 0;
  };

  bool is_cross(NodeId u, NodeId v) const { return (u < n1_) != (v < n1_); }

  void enumerate_counts(std::size_t c, const Rational& cost, const Rational& limit, std::vector<int>& counts,
                        std::vector<CountVector>& out) const {
    if (c == info_.size()) {
      int total = 0;
      for (int x : counts) total += x;
      out.push_back({counts, cost, total});
      return;
    }
    for (int x = 0; x <= info_[c].size; ++x) {
      Rational next = cost + info_[c].cost * x;
      if (next >= limit) break;
      counts[c] = x;
      enumerate_counts(c + 1, next, limit, counts, out);
    }
    counts[c] = 0;
  }

  bool root_feasible(const std::vector<int>& counts) const {
    long long d1 = 0, d2 = 0;
    for (NodeId v = 0; v < n_; ++v) {
      int need = target_ - deg0_[static_cast<std::size_t>(v)];
      if (need <= 0) continue;
      (v < n1_ ? d1 : d2) += need;
      int reach = 0;
      for (std::size_t c = 0; c < info_.size(); ++c)
        reach += std::min(info_[c].avail[static_cast<std::size_t>(v)], counts[c]);
      if (reach < need) return false;
    }
    long long s1 = 0, s2 = 0;
    int cross = base_cross_;
    for (std::size_t c = 0; c < info_.size(); ++c) {
      s1 += static_cast<long long>(counts[c]) * info_[c].touch1;
      s2 += static_cast<long long>(counts[c]) * info_[c].touch2;
      if (info_[c].cross) cross += counts[c];
    }
    if (d1 > s1 || d2 > s2) return false;
    return cross >= target_ || n_ <= 1;
  }

  std::optional<Augmentation> search_level(const std::vector<int>& counts) {
    deg_ = deg0_;
    avail_.assign(static_cast<std::size_t>(n_), 0);
    for (const FlatLink& f : flat_)
      if (counts[static_cast<std::size_t>(f.pool)] > 0) {
        ++avail_[static_cast<std::size_t>(f.u)];
        ++avail_[static_cast<std::size_t>(f.v)];
      }
    rem_ = counts;
    deficit1_ = deficit2_ = 0;
    for (NodeId v = 0; v < n_; ++v) {
      int need = std::max(0, target_ - deg_[static_cast<std::size_t>(v)]);
      (v < n1_ ? deficit1_ : deficit2_) += need;
    }
    picked_.clear();
    if (!dfs(0)) return std::nullopt;
    Augmentation aug;
    aug.chosen.resize(info_.size());
    aug.counts = counts;
    for (int idx : picked_) {
      const FlatLink& f = flat_[static_cast<std::size_t>(idx)];
      aug.chosen[static_cast<std::size_t>(f.pool)].emplace_back(f.u, f.v);
    }
    return aug;
  }

  bool supply_covers_deficit() const {
    long long s1 = 0, s2 = 0;
    for (std::size_t c = 0; c < info_.size(); ++c) {
      s1 += static_cast<long long>(rem_[c]) * info_[c].touch1;
      s2 += static_cast<long long>(rem_[c]) * info_[c].touch2;
    }
    return deficit1_ <= s1 && deficit2_ <= s2;
  }

  bool node_ok(NodeId v) const {
    return deg_[static_cast<std::size_t>(v)] + avail_[static_cast<std::size_t>(v)] >= target_;
  }

  void include(const FlatLink& f) {
    for (NodeId x : {f.u, f.v}) {
      auto i = static_cast<std::size_t>(x);
      if (deg_[i] < target_) (x < n1_ ? deficit1_ : deficit2_) -= 1;
      ++deg_[i];
      --avail_[i];
    }
    --rem_[static_cast<std::size_t>(f.pool)];
  }
  void undo_include(const FlatLink& f) {
    ++rem_[static_cast<std::size_t>(f.pool)];
    for (NodeId x : {f.u, f.v}) {
      auto i = static_cast<std::size_t>(x);
      ++avail_[i];
      --deg_[i];
      if (deg_[i] < target_) (x < n1_ ? deficit1_ : deficit2_) += 1;
    }
  }

  bool leaf() {
    if (deficit1_ != 0 || deficit2_ != 0) return false;
    budget_.charge();
    std::vector<Link> links = base_;
    for (int idx : picked_) links.emplace_back(flat_[static_cast<std::size_t>(idx)].u, flat_[static_cast<std::size_t>(idx)].v);
    return edge_connectivity_at_least(n_, links, target_);
  }

  // Position `i` in the flattened pool list; links of a pool are contiguous.
  bool dfs(int i) {
    bool done = std::all_of(rem_.begin(), rem_.end(), [](int r) { return r == 0; });
    if (done) return leaf();
    if (i >= static_cast<int>(flat_.size())) return false;
    const FlatLink& f = flat_[static_cast<std::size_t>(i)];
    const auto pool = static_cast<std::size_t>(f.pool);
    const int left_in_pool = class_begin_[pool + 1] - i;
    if (rem_[pool] > left_in_pool) return false;
    if (rem_[pool] == 0) return dfs(class_begin_[pool + 1]);

    if (rem_[pool] > 0) {
      include(f);
      picked_.push_back(i);
      if (supply_covers_deficit() && dfs(i + 1)) return true;
      picked_.pop_back();
      undo_include(f);
    }
    if (rem_[pool] < left_in_pool) {
      --avail_[static_cast<std::size_t>(f.u)];
      --avail_[static_cast<std::size_t>(f.v)];
      bool ok = node_ok(f.u) && node_ok(f.v) && dfs(i + 1);
      ++avail_[static_cast<std::size_t>(f.u)];
      ++avail_[static_cast<std::size_t>(f.v)];
      if (ok) return true;
    }
    return false;
  }

  int n1_;
  int n_;
  int target_;
  std::vector<Link> base_;
  SearchBudget& budget_;
  std::vector<int> deg0_;
  int base_cross_ = 0;
  std::vector<FlatLink> flat_;
  std::vector<int> class_begin_;
  std::vector<PoolInfo> info_;

  std::vector<int> deg_;
  std::vector<int> avail_;
  std::vector<int> rem_;
  long long deficit1_ = 0, deficit2_ = 0;
  std::vector<int> picked_;
};

inline std::optional<Augmentation> min_cost_augmentation(int n1, int n2, std::span<const Link> base,
                                                         std::span<const LinkPool> pools, int target,
                                                         const Rational& strict_limit, SearchBudget& budget) {
  AugmentSearch search(n1, n2, base, pools, target, budget);
  return search.run(strict_limit);
}

}  // namespace secnet::detail
