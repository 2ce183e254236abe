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

// Instance generators and solution metrics.

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "wsmc/instance.h"

namespace wsmc {

/// Demand distributions. Textual forms:
///   random:LO:HI      uniform integers in [LO, HI]     (default 1..10)
///   constant:C        every demand equals C            (default 5)
///   normal:MU:SIGMA   Gaussian                         (default 5, 2)
///   exponential:RATE  exponential                      (default 0.2)
///   poisson:LAMBDA    Poisson                          (default 5)
///   zipf:S            Zipf on [1, 10 * ell]            (default 2)
/// Draws are rounded half away from zero and raised to at least 1.
struct DemandSpec {
  enum class Kind { kRandom, kConstant, kNormal, kExponential, kPoisson, kZipf };
  Kind kind = Kind::kRandom;
  double a = 1.0;
  double b = 10.0;
};

/// Throws ArgumentError for unknown tags or bad parameters.
DemandSpec parse_demand_spec(const std::string& text);
std::string to_string(const DemandSpec& spec);

std::vector<int> sample_demands(const DemandSpec& spec, std::size_t ell,
                                std::uint64_t seed);

/// Uniform weights in [lo, hi], integers unless `integral` is false.
struct WeightSpec {
  double lo = 1.0;
  double hi = 1000.0;
  bool integral = true;
};

/// Nested family: set i (1-based) holds items 1..i and weighs 1/(ell-i+1),
/// except the last set which weighs 1.01. Every demand is 1.
Instance generate_adversarial(std::size_t ell);

/// n sets over ell items. Membership is an independent coin per item with
/// probability `density`; an empty draw is redrawn once. Demands come from
/// `demands` and are clamped to each item's capacity, so the result is
/// always feasible.
Instance generate_random(std::size_t n, std::size_t ell,
                         const DemandSpec& demands, const WeightSpec& weights,
                         std::uint64_t seed, double density = 0.3);

/// Sum over items of (coverage - demand)^2. Throws ArgumentError when the
/// solution does not satisfy the demands.
double rss(const Instance& instance, const Solution& solution);

/// SplitMix64 finalizer, used to derive independent seeds.
std::uint64_t splitmix64(std::uint64_t x);

}  // namespace wsmc
