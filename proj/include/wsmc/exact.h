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

// Exact solvers: the demand-vector dynamic program and an exhaustive oracle.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "wsmc/instance.h"

namespace wsmc {

/// DP state table over clamped residual-demand vectors (q_1, ..., q_l) with
/// 0 <= q_g <= Q_g. Holds the layer for the current prefix of processed sets
/// and, per processed set, the states in which taking that set was strictly
/// better than skipping it.
class DpTable {
 public:
  static constexpr double kUnreached = std::numeric_limits<double>::infinity();

  explicit DpTable(std::vector<int> demands);

  std::size_t num_states() const { return layer_.size(); }
  const std::vector<int>& dims() const { return dims_; }  // Q_g + 1 per item
  std::span<const double> layer() const { return layer_; }

  std::size_t index_of(std::span<const int> state) const;
  std::vector<int> state_of(std::size_t index) const;
  double at(std::span<const int> state) const { return layer_[index_of(state)]; }

  /// Applies one set: layer[q] = min(layer[q], w + layer[clamp(q - 1[g in t])]).
  void process(const SetRecord& set);

  std::size_t num_processed() const { return choice_log_.size(); }
  bool taken(std::size_t set_position, std::size_t state_index) const;

  /// Index of the transition target max(0, q - 1[g in t]) for each state.
  std::size_t predecessor(std::size_t state_index, ItemMask items) const;

 private:
  std::vector<int> dims_;
  std::vector<std::size_t> strides_;
  std::vector<double> layer_;
  std::vector<std::vector<std::uint64_t>> choice_log_;
};

/// Called after the initial layer (stage 0) and after every processed set.
using DpObserver = std::function<void(std::size_t stage, const DpTable& table)>;

/// Upper bound on DP states times sets (bits of choice log) before solve_dp
/// refuses with SolverError.
inline constexpr std::uint64_t kDpChoiceBitLimit = std::uint64_t{1} << 33;

/// Exact optimum. Sets are processed in index order; on equal take/skip
/// weights the set is skipped. Throws InfeasibleError for infeasible input.
Solution solve_dp(const Instance& instance, const DpObserver& observer = {});

inline constexpr std::size_t kBruteforceMaxSets = 24;

/// Enumerates every sub-family. Ties on weight go to the lexicographically
/// smallest index list. Throws ArgumentError above kBruteforceMaxSets sets.
Solution solve_bruteforce(const Instance& instance);

}  // namespace wsmc
