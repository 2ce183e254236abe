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

// Problem data model for weighted set multi-cover over a small universe.
//
// Items are addressed by index in [0, num_items()) and a set's content is a
// bitmask over those indices, so the universe is capped at kMaxItems.

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wsmc/error.h"

namespace wsmc {

using ItemMask = std::uint64_t;

inline constexpr std::size_t kMaxItems = 62;

struct SetRecord {
  ItemMask items = 0;
  double weight = 0.0;

  bool contains(std::size_t item) const { return (items >> item) & 1U; }
  friend bool operator==(const SetRecord&, const SetRecord&) = default;
};

class Instance {
 public:
  Instance() = default;

  /// Throws ArgumentError if the structural invariants do not hold: at least
  /// one and at most kMaxItems items, non-negative demands, finite
  /// non-negative weights, set masks within the universe.
  Instance(std::vector<std::string> item_names, std::vector<int> demands,
           std::vector<SetRecord> sets);

  std::size_t num_items() const { return item_names_.size(); }
  std::size_t num_sets() const { return sets_.size(); }

  const std::vector<std::string>& item_names() const { return item_names_; }
  const std::vector<int>& demands() const { return demands_; }
  const std::vector<SetRecord>& sets() const { return sets_; }
  const SetRecord& set(std::size_t index) const { return sets_.at(index); }

  ItemMask universe_mask() const;

  /// Returns a copy with one more set appended.
  Instance with_set(SetRecord record) const;
  /// Returns a copy with the given demands.
  Instance with_demands(std::vector<int> demands) const;

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  std::vector<std::string> item_names_;
  std::vector<int> demands_;
  std::vector<SetRecord> sets_;
};

/// Default item names "g1", "g2", ...
std::vector<std::string> default_item_names(std::size_t num_items);

/// Builds a mask from a list of item indices. Throws ArgumentError when an
/// index is outside [0, num_items).
ItemMask mask_of(const std::vector<std::size_t>& items, std::size_t num_items);

/// Item indices contained in `mask`, ascending.
std::vector<std::size_t> items_of(ItemMask mask);

struct FeasibilityReport {
  bool feasible = true;
  std::vector<int> capacity;  // |{t : g in t}| per item
  std::vector<int> demand;
};

FeasibilityReport validate(const Instance& instance);

/// Raised by solvers handed an instance whose demands cannot be met.
class InfeasibleError : public Error {
 public:
  explicit InfeasibleError(FeasibilityReport report);
  const FeasibilityReport& report() const { return report_; }

 private:
  FeasibilityReport report_;
};

/// Throws InfeasibleError unless validate(instance).feasible.
void require_feasible(const Instance& instance);

struct Solution {
  std::vector<std::size_t> selected;  // ascending, distinct
  double total_weight = 0.0;
  std::string algorithm;
  std::optional<std::uint64_t> seed;
};

/// Sorts the indices, checks them against the instance and sums the weights.
/// Throws InvalidSolutionError on duplicates or out-of-range indices.
Solution make_solution(const Instance& instance,
                       std::vector<std::size_t> selected,
                       std::string algorithm);

struct CoverageVector {
  std::vector<int> counts;
};

/// counts[g] = number of selected sets containing g. Throws
/// InvalidSolutionError for out-of-range indices.
CoverageVector coverage(const Instance& instance, const Solution& solution);
CoverageVector coverage(const Instance& instance,
                        const std::vector<std::size_t>& selected);

bool satisfies_demands(const Instance& instance, const CoverageVector& cover);

/// One bucket B(H): all sets whose content is exactly `key`, cheapest first.
struct Bucket {
  ItemMask key = 0;
  std::vector<std::size_t> sets;  // set indices, ascending weight then index
  std::vector<double> weights;    // weights[i] = weight of sets[i]
  std::vector<double> prefix;     // prefix[x] = f_H(x), prefix.size() == size()+1

  std::size_t size() const { return sets.size(); }
  /// f_H(x) for integral x in [0, size()].
  double cost(std::size_t x) const { return prefix.at(x); }
};

/// Partition of the sets into buckets keyed by content. Iteration follows
/// ascending key order.
class BucketIndex {
 public:
  BucketIndex() = default;
  explicit BucketIndex(const Instance& instance);

  const std::map<ItemMask, Bucket>& buckets() const { return buckets_; }
  const Bucket* find(ItemMask key) const;
  std::size_t num_buckets() const { return buckets_.size(); }

 private:
  std::map<ItemMask, Bucket> buckets_;
};

inline BucketIndex partition_buckets(const Instance& instance) {
  return BucketIndex(instance);
}

}  // namespace wsmc
