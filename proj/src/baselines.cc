// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "wsmc/baselines.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <queue>
#include <random>
#include <string>

#include "wsmc/error.h"

namespace wsmc {

namespace {

ItemMask positive_mask(const std::vector<int>& residual) {
  ItemMask mask = 0;
  for (std::size_t g = 0; g < residual.size(); ++g) {
    if (residual[g] > 0) mask |= ItemMask{1} << g;
  }
  return mask;
}

double ratio(int count, double weight) {
  if (weight == 0.0) return std::numeric_limits<double>::infinity();
  return count / weight;
}

struct Entry {
  double ratio;
  double weight;
  std::size_t index;
  int count;
};

// Priority order: larger ratio, then smaller weight, then smaller index.
struct Lower {
  bool operator()(const Entry& a, const Entry& b) const {
    if (a.ratio != b.ratio) return a.ratio < b.ratio;
    if (a.weight != b.weight) return a.weight > b.weight;
    return a.index > b.index;
  }
};

}  // namespace

std::vector<std::size_t> greedy_cover(const Instance& instance,
                                      std::vector<int> residual,
                                      const std::vector<bool>& available) {
  const std::size_t n = instance.num_sets();
  if (residual.size() != instance.num_items() || available.size() != n) {
    throw ArgumentError("greedy_cover: residual or availability has the wrong size");
  }
  for (int& q : residual) q = std::max(q, 0);

  ItemMask open = positive_mask(residual);
  std::priority_queue<Entry, std::vector<Entry>, Lower> queue;
  for (std::size_t t = 0; t < n; ++t) {
    if (!available[t]) continue;
    const SetRecord& s = instance.set(t);
    const int count = std::popcount(s.items & open);
    if (count > 0) queue.push({ratio(count, s.weight), s.weight, t, count});
  }

  std::vector<std::size_t> chosen;
  while (open != 0 && !queue.empty()) {
    Entry top = queue.top();
    queue.pop();
    const SetRecord& s = instance.set(top.index);
    const int count = std::popcount(s.items & open);
    if (count == 0) continue;
    if (count != top.count) {
      top.count = count;
      top.ratio = ratio(count, s.weight);
      queue.push(top);
      continue;
    }
    chosen.push_back(top.index);
    for (std::size_t g : items_of(s.items)) {
      if (residual[g] > 0 && --residual[g] == 0) open &= ~(ItemMask{1} << g);
    }
  }

  if (open != 0) {
    FeasibilityReport report;
    report.feasible = false;
    report.demand = residual;
    report.capacity.assign(instance.num_items(), 0);
    for (std::size_t t = 0; t < n; ++t) {
      if (!available[t]) continue;
      for (std::size_t g : items_of(instance.set(t).items)) ++report.capacity[g];
    }
    throw InfeasibleError(std::move(report));
  }
  return chosen;
}

Solution solve_greedy(const Instance& instance) {
  require_feasible(instance);
  std::vector<bool> available(instance.num_sets(), true);
  return make_solution(instance,
                       greedy_cover(instance, instance.demands(), available),
                       "greedy");
}

LinearProgram build_set_lp(const Instance& instance) {
  LinearProgram lp;
  for (std::size_t t = 0; t < instance.num_sets(); ++t) {
    VarLabel label;
    label.kind = VarLabel::Kind::kSet;
    label.bucket = instance.set(t).items;
    label.position = t;
    lp.add_variable(instance.set(t).weight, 0.0, 1.0, label);
  }
  for (std::size_t g = 0; g < instance.num_items(); ++g) {
    CoveringRow row;
    row.rhs = instance.demands()[g];
    for (std::size_t t = 0; t < instance.num_sets(); ++t) {
      if (instance.set(t).contains(g)) row.terms.emplace_back(t, 1.0);
    }
    lp.add_row(std::move(row));
  }
  return lp;
}

Solution solve_rrlp(const Instance& instance, std::uint64_t seed) {
  require_feasible(instance);
  const std::size_t n = instance.num_sets();
  const LinearProgram lp = build_set_lp(instance);
  const LpSolution sol = solve_lp(lp);
  if (sol.status != LpStatus::kOptimal) {
    throw SolverError("rrlp: LP ended with status " + to_string(sol.status) +
                      " after " + std::to_string(sol.iterations) +
                      " iterations");
  }

  std::mt19937_64 rng(seed);
  const double scale = n > 0 ? std::log(static_cast<double>(n)) : 0.0;
  std::vector<std::size_t> selected;
  std::vector<bool> available(n, true);
  std::vector<int> residual = instance.demands();
  for (std::size_t t = 0; t < n; ++t) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    const double p = std::min(1.0, scale * sol.values[t]);
    if (u < p) {
      selected.push_back(t);
      available[t] = false;
      for (std::size_t g : items_of(instance.set(t).items)) --residual[g];
    }
  }
  for (std::size_t t : greedy_cover(instance, residual, available)) {
    selected.push_back(t);
  }
  Solution out = make_solution(instance, std::move(selected), "rrlp");
  out.seed = seed;
  return out;
}

}  // namespace wsmc
