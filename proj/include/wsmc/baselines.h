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

// Comparison algorithms: ratio greedy and randomized rounding of the
// per-set LP relaxation.

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "wsmc/instance.h"
#include "wsmc/lp.h"

namespace wsmc {

/// Greedy completion of `residual` demands using only sets marked in
/// `available`. Each step takes the set maximizing
///   |{g in set : residual_g > 0}| / weight,
/// ties broken by lower weight, then lower index; zero-weight sets that cover
/// something rank first. Returns the chosen indices in selection order.
/// Throws InfeasibleError when the available sets cannot finish the job.
std::vector<std::size_t> greedy_cover(const Instance& instance,
                                      std::vector<int> residual,
                                      const std::vector<bool>& available);

Solution solve_greedy(const Instance& instance);

/// One [0, 1] variable per set with cost w_t, one covering row per item.
LinearProgram build_set_lp(const Instance& instance);

/// Solves the per-set LP, keeps set t with probability min(1, ln(n) x_t)
/// (mt19937_64 seeded with `seed`, one draw per set in index order), then
/// repairs any shortfall with greedy_cover.
Solution solve_rrlp(const Instance& instance, std::uint64_t seed);

}  // namespace wsmc
