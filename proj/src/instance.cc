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

#include "wsmc/instance.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <sstream>
#include <utility>

namespace wsmc {

namespace {

std::string describe_shortfall(const FeasibilityReport& report) {
  std::ostringstream out;
  out << "instance is infeasible:";
  for (std::size_t g = 0; g < report.demand.size(); ++g) {
    if (report.demand[g] > report.capacity[g]) {
      out << " item " << g << " demands " << report.demand[g] << " but only "
          << report.capacity[g] << " sets contain it;";
    }
  }
  return out.str();
}

}  // namespace

Instance::Instance(std::vector<std::string> item_names,
                   std::vector<int> demands, std::vector<SetRecord> sets)
    : item_names_(std::move(item_names)),
      demands_(std::move(demands)),
      sets_(std::move(sets)) {
  if (item_names_.empty()) {
    throw ArgumentError("instance needs at least one item");
  }
  if (item_names_.size() > kMaxItems) {
    throw ArgumentError("instance has " + std::to_string(item_names_.size()) +
                        " items; at most " + std::to_string(kMaxItems) +
                        " are supported");
  }
  if (demands_.size() != item_names_.size()) {
    throw ArgumentError("expected " + std::to_string(item_names_.size()) +
                        " demands, got " + std::to_string(demands_.size()));
  }
  for (std::size_t g = 0; g < demands_.size(); ++g) {
    if (demands_[g] < 0) {
      throw ArgumentError("demand of item " + std::to_string(g) +
                          " is negative");
    }
  }
  const ItemMask universe = universe_mask();
  for (std::size_t t = 0; t < sets_.size(); ++t) {
    const SetRecord& s = sets_[t];
    if (!std::isfinite(s.weight) || s.weight < 0.0) {
      throw ArgumentError("set " + std::to_string(t) +
                          " has a negative or non-finite weight");
    }
    if ((s.items & ~universe) != 0) {
      throw ArgumentError("set " + std::to_string(t) +
                          " references an item outside the universe");
    }
  }
}

ItemMask Instance::universe_mask() const {
  const std::size_t l = item_names_.size();
  return l >= 64 ? ~ItemMask{0} : ((ItemMask{1} << l) - 1);
}

Instance Instance::with_set(SetRecord record) const {
  std::vector<SetRecord> sets = sets_;
  sets.push_back(record);
  return Instance(item_names_, demands_, std::move(sets));
}

Instance Instance::with_demands(std::vector<int> demands) const {
  return Instance(item_names_, std::move(demands), sets_);
}

std::vector<std::string> default_item_names(std::size_t num_items) {
  std::vector<std::string> names;
  names.reserve(num_items);
  for (std::size_t g = 0; g < num_items; ++g) {
    names.push_back("g" + std::to_string(g + 1));
  }
  return names;
}

ItemMask mask_of(const std::vector<std::size_t>& items,
                 std::size_t num_items) {
  ItemMask mask = 0;
  for (std::size_t g : items) {
    if (g >= num_items || g >= kMaxItems) {
      throw ArgumentError("item index " + std::to_string(g) +
                          " is outside the universe");
    }
    mask |= ItemMask{1} << g;
  }
  return mask;
}

std::vector<std::size_t> items_of(ItemMask mask) {
  std::vector<std::size_t> items;
  while (mask != 0) {
    items.push_back(static_cast<std::size_t>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return items;
}

FeasibilityReport validate(const Instance& instance) {
  FeasibilityReport report;
  report.demand = instance.demands();
  report.capacity.assign(instance.num_items(), 0);
  for (const SetRecord& s : instance.sets()) {
    for (std::size_t g : items_of(s.items)) ++report.capacity[g];
  }
  for (std::size_t g = 0; g < instance.num_items(); ++g) {
    if (report.demand[g] > report.capacity[g]) report.feasible = false;
  }
  return report;
}

InfeasibleError::InfeasibleError(FeasibilityReport report)
    : Error(describe_shortfall(report)), report_(std::move(report)) {}

void require_feasible(const Instance& instance) {
  FeasibilityReport report = validate(instance);
  if (!report.feasible) throw InfeasibleError(std::move(report));
}

Solution make_solution(const Instance& instance,
                       std::vector<std::size_t> selected,
                       std::string algorithm) {
  std::sort(selected.begin(), selected.end());
  if (std::adjacent_find(selected.begin(), selected.end()) != selected.end()) {
    throw InvalidSolutionError("solution selects a set more than once");
  }
  Solution solution;
  for (std::size_t t : selected) {
    if (t >= instance.num_sets()) {
      throw InvalidSolutionError("set index " + std::to_string(t) +
                                 " is out of range");
    }
    solution.total_weight += instance.set(t).weight;
  }
  solution.selected = std::move(selected);
  solution.algorithm = std::move(algorithm);
  return solution;
}

CoverageVector coverage(const Instance& instance,
                        const std::vector<std::size_t>& selected) {
  CoverageVector cover;
  cover.counts.assign(instance.num_items(), 0);
  for (std::size_t t : selected) {
    if (t >= instance.num_sets()) {
      throw InvalidSolutionError("set index " + std::to_string(t) +
                                 " is out of range");
    }
    for (std::size_t g : items_of(instance.set(t).items)) ++cover.counts[g];
  }
  return cover;
}

CoverageVector coverage(const Instance& instance, const Solution& solution) {
  return coverage(instance, solution.selected);
}

bool satisfies_demands(const Instance& instance, const CoverageVector& cover) {
  for (std::size_t g = 0; g < instance.num_items(); ++g) {
    if (cover.counts.at(g) < instance.demands()[g]) return false;
  }
  return true;
}

BucketIndex::BucketIndex(const Instance& instance) {
  for (std::size_t t = 0; t < instance.num_sets(); ++t) {
    const ItemMask key = instance.set(t).items;
    Bucket& bucket = buckets_[key];
    bucket.key = key;
    bucket.sets.push_back(t);
  }
  for (auto& [key, bucket] : buckets_) {
    std::stable_sort(bucket.sets.begin(), bucket.sets.end(),
                     [&](std::size_t a, std::size_t b) {
                       return instance.set(a).weight < instance.set(b).weight;
                     });
    bucket.weights.reserve(bucket.size());
    bucket.prefix.assign(1, 0.0);
    for (std::size_t t : bucket.sets) {
      bucket.weights.push_back(instance.set(t).weight);
      bucket.prefix.push_back(bucket.prefix.back() + instance.set(t).weight);
    }
  }
}

const Bucket* BucketIndex::find(ItemMask key) const {
  auto it = buckets_.find(key);
  return it == buckets_.end() ? nullptr : &it->second;
}

}  // namespace wsmc
