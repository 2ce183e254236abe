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

#include "wsmc/exact.h"

#include <bit>
#include <string>

namespace wsmc {

DpTable::DpTable(std::vector<int> demands) : dims_(std::move(demands)) {
  std::size_t states = 1;
  strides_.resize(dims_.size());
  for (std::size_t g = 0; g < dims_.size(); ++g) {
    dims_[g] += 1;
    strides_[g] = states;
    if (states > (std::size_t{1} << 31) / static_cast<std::size_t>(dims_[g])) {
      throw SolverError("DP state space exceeds 2^31 states");
    }
    states *= static_cast<std::size_t>(dims_[g]);
  }
  layer_.assign(states, kUnreached);
  layer_[0] = 0.0;
}

std::size_t DpTable::index_of(std::span<const int> state) const {
  if (state.size() != dims_.size()) {
    throw ArgumentError("DP state has the wrong number of items");
  }
  std::size_t index = 0;
  for (std::size_t g = 0; g < dims_.size(); ++g) {
    if (state[g] < 0 || state[g] >= dims_[g]) {
      throw ArgumentError("DP state component out of range");
    }
    index += strides_[g] * static_cast<std::size_t>(state[g]);
  }
  return index;
}

std::vector<int> DpTable::state_of(std::size_t index) const {
  std::vector<int> state(dims_.size());
  for (std::size_t g = 0; g < dims_.size(); ++g) {
    state[g] = static_cast<int>(index % static_cast<std::size_t>(dims_[g]));
    index /= static_cast<std::size_t>(dims_[g]);
  }
  return state;
}

std::size_t DpTable::predecessor(std::size_t state_index,
                                 ItemMask items) const {
  std::size_t pred = state_index;
  std::size_t rest = state_index;
  for (std::size_t g = 0; g < dims_.size(); ++g) {
    const auto q = rest % static_cast<std::size_t>(dims_[g]);
    rest /= static_cast<std::size_t>(dims_[g]);
    if (q > 0 && ((items >> g) & 1U)) pred -= strides_[g];
  }
  return pred;
}

void DpTable::process(const SetRecord& set) {
  const std::size_t n = layer_.size();
  std::vector<std::uint64_t> taken((n + 63) / 64, 0);

  // Descending order keeps the update in place: the clamped predecessor of a
  // state never has a larger index, and equals it only when taking the set
  // cannot help.
  std::vector<int> q(dims_.size());
  for (std::size_t g = 0; g < dims_.size(); ++g) q[g] = dims_[g] - 1;
  for (std::size_t idx = n; idx-- > 0;) {
    std::size_t pred = idx;
    for (std::size_t g = 0; g < dims_.size(); ++g) {
      if (q[g] > 0 && ((set.items >> g) & 1U)) pred -= strides_[g];
    }
    const double base = layer_[pred];
    if (base != kUnreached) {
      const double candidate = base + set.weight;
      if (candidate < layer_[idx]) {
        layer_[idx] = candidate;
        taken[idx / 64] |= std::uint64_t{1} << (idx % 64);
      }
    }
    for (std::size_t g = 0; g < dims_.size(); ++g) {
      if (q[g] > 0) {
        --q[g];
        break;
      }
      q[g] = dims_[g] - 1;
    }
  }
  choice_log_.push_back(std::move(taken));
}

bool DpTable::taken(std::size_t set_position, std::size_t state_index) const {
  const auto& bits = choice_log_.at(set_position);
  return (bits.at(state_index / 64) >> (state_index % 64)) & 1U;
}

Solution solve_dp(const Instance& instance, const DpObserver& observer) {
  require_feasible(instance);
  DpTable table(instance.demands());
  const std::uint64_t bits = static_cast<std::uint64_t>(table.num_states()) *
                             std::max<std::uint64_t>(instance.num_sets(), 1);
  if (bits > kDpChoiceBitLimit) {
    throw SolverError("DP choice log would need " + std::to_string(bits) +
                      " bits; instance too large for the exact solver");
  }
  if (observer) observer(0, table);
  for (std::size_t i = 0; i < instance.num_sets(); ++i) {
    table.process(instance.set(i));
    if (observer) observer(i + 1, table);
  }

  std::size_t state = table.index_of(instance.demands());
  if (table.layer()[state] == DpTable::kUnreached) {
    throw InfeasibleError(validate(instance));
  }
  std::vector<std::size_t> selected;
  for (std::size_t i = instance.num_sets(); i-- > 0;) {
    if (table.taken(i, state)) {
      selected.push_back(i);
      state = table.predecessor(state, instance.set(i).items);
    }
  }
  return make_solution(instance, std::move(selected), "dp");
}

namespace {

// True when the ascending index list of `a` precedes that of `b`.
bool lex_less(std::uint32_t a, std::uint32_t b) {
  const std::uint32_t diff = a ^ b;
  if (diff == 0) return false;
  const std::uint32_t low = diff & (~diff + 1);
  // The list containing the lowest differing index is smaller, unless the
  // other list ends there (it has no larger index), making it a prefix.
  const std::uint32_t with = (a & low) ? a : b;
  const std::uint32_t without = (a & low) ? b : a;
  const bool without_continues = (without & ~(low | (low - 1))) != 0;
  const bool a_smaller = without_continues ? (with == a) : (without == a);
  return a_smaller;
}

}  // namespace

Solution solve_bruteforce(const Instance& instance) {
  const std::size_t n = instance.num_sets();
  if (n > kBruteforceMaxSets) {
    throw ArgumentError("brute force is limited to " +
                        std::to_string(kBruteforceMaxSets) + " sets, got " +
                        std::to_string(n));
  }
  require_feasible(instance);

  const std::size_t l = instance.num_items();
  std::vector<std::uint32_t> members(l, 0);
  for (std::size_t t = 0; t < n; ++t) {
    for (std::size_t g : items_of(instance.set(t).items)) {
      members[g] |= std::uint32_t{1} << t;
    }
  }
  const std::size_t low_bits = n / 2;
  const std::size_t high_bits = n - low_bits;
  std::vector<double> low_sum(std::size_t{1} << low_bits, 0.0);
  std::vector<double> high_sum(std::size_t{1} << high_bits, 0.0);
  for (std::size_t m = 1; m < low_sum.size(); ++m) {
    const auto t = static_cast<std::size_t>(std::countr_zero(m));
    low_sum[m] = low_sum[m & (m - 1)] + instance.set(t).weight;
  }
  for (std::size_t m = 1; m < high_sum.size(); ++m) {
    const auto t = static_cast<std::size_t>(std::countr_zero(m));
    high_sum[m] = high_sum[m & (m - 1)] + instance.set(low_bits + t).weight;
  }

  const auto& demands = instance.demands();
  bool found = false;
  std::uint32_t best = 0;
  double best_weight = 0.0;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t m64 = 0; m64 < total; ++m64) {
    const auto m = static_cast<std::uint32_t>(m64);
    bool ok = true;
    for (std::size_t g = 0; g < l && ok; ++g) {
      ok = std::popcount(m & members[g]) >= demands[g];
    }
    if (!ok) continue;
    const double w = low_sum[m & ((std::uint32_t{1} << low_bits) - 1)] +
                     high_sum[m >> low_bits];
    if (!found || w < best_weight || (w == best_weight && lex_less(m, best))) {
      found = true;
      best = m;
      best_weight = w;
    }
  }
  if (!found) throw InfeasibleError(validate(instance));
  std::vector<std::size_t> selected;
  for (std::size_t t = 0; t < n; ++t) {
    if ((best >> t) & 1U) selected.push_back(t);
  }
  return make_solution(instance, std::move(selected), "bf");
}

}  // namespace wsmc
