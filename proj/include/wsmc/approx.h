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

// LP-based 2-approximation and its compressed (2 + epsilon) variant.

#pragma once

#include <cstddef>
#include <map>

#include "wsmc/instance.h"
#include "wsmc/lp.h"

namespace wsmc {

/// x_H per bucket: how many sets of bucket H the LP takes, fractionally.
struct BucketFractions {
  std::map<ItemMask, double> xhat;
};

/// One [0, 1] variable per set, grouped by bucket and ordered cheapest first
/// inside each bucket; one covering row per item.
LinearProgram build_full_lp(const Instance& instance,
                            const BucketIndex& buckets);

/// One variable per piece of compress_bucket(H, epsilon), bounded by the
/// piece length and priced at its slope.
LinearProgram build_compressed_lp(const Instance& instance,
                                  const BucketIndex& buckets, double epsilon);

/// Sums the per-set or per-piece values of each bucket. Throws SolverError
/// unless the solution is optimal.
BucketFractions extract_bucket_fractions(const LinearProgram& lp,
                                         const LpSolution& sol);

inline constexpr std::size_t kDefaultBruteforceCap = 1'000'000;

struct RoundingReport {
  std::size_t r = 0;
  std::size_t residual_buckets = 0;
  std::size_t candidates = 0;  // size of the enumeration space
  bool used_fallback = false;
};

/// Takes the floor(x_H) cheapest sets of every bucket, then adds, for the
/// cheapest feasible vector y with 0 <= y_H <= min(r, remaining sets), the
/// y_H cheapest remaining sets of each bucket, where r = ceil(sum of the
/// fractional parts). Among equally cheap vectors the first in odometer
/// order wins, with the smallest bucket key varying fastest. Spaces larger
/// than `bruteforce_cap` are completed greedily instead.
Solution round_solution(const Instance& instance, const BucketIndex& buckets,
                        const BucketFractions& fractions,
                        std::size_t bruteforce_cap = kDefaultBruteforceCap,
                        RoundingReport* report = nullptr);

struct PipelineReport {
  LinearProgram lp;
  LpSolution lp_solution;
  BucketFractions fractions;
  RoundingReport rounding;
};

Solution solve_2approx(const Instance& instance,
                       PipelineReport* report = nullptr);

/// Uses compression parameter epsilon / 2 so the result is within
/// (2 + epsilon) of the optimum.
Solution solve_2eps(const Instance& instance, double epsilon,
                    PipelineReport* report = nullptr);

}  // namespace wsmc
