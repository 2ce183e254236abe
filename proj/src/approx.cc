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

#include "wsmc/approx.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "wsmc/baselines.h"
#include "wsmc/error.h"
#include "wsmc/piecewise.h"

namespace wsmc {

namespace {

constexpr double kIntegralSnap = 1e-9;
constexpr double kCoverageSlack = 1e-7;

std::vector<CoveringRow> covering_rows(const Instance& instance,
                                       const LinearProgram& lp) {
  std::vector<CoveringRow> rows(instance.num_items());
  for (std::size_t g = 0; g < rows.size(); ++g) {
    rows[g].rhs = instance.demands()[g];
  }
  for (std::size_t j = 0; j < lp.num_vars(); ++j) {
    for (std::size_t g : items_of(lp.labels[j].bucket)) {
      rows[g].terms.emplace_back(j, 1.0);
    }
  }
  return rows;
}

}  // namespace

LinearProgram build_full_lp(const Instance& instance,
                            const BucketIndex& buckets) {
  LinearProgram lp;
  for (const auto& [key, bucket] : buckets.buckets()) {
    for (std::size_t i = 0; i < bucket.size(); ++i) {
      lp.add_variable(bucket.weights[i], 0.0, 1.0,
                      {VarLabel::Kind::kBucketSet, key, i});
    }
  }
  lp.rows = covering_rows(instance, lp);
  return lp;
}

LinearProgram build_compressed_lp(const Instance& instance,
                                  const BucketIndex& buckets, double epsilon) {
  LinearProgram lp;
  for (const auto& [key, bucket] : buckets.buckets()) {
    const PiecewiseLinear g = compress_bucket(bucket, epsilon);
    for (std::size_t j = 0; j < g.num_pieces(); ++j) {
      lp.add_variable(std::max(0.0, g.slope(j)), 0.0, g.length(j),
                      {VarLabel::Kind::kBucketPiece, key, j});
    }
  }
  lp.rows = covering_rows(instance, lp);
  return lp;
}

BucketFractions extract_bucket_fractions(const LinearProgram& lp,
                                         const LpSolution& sol) {
  if (sol.status != LpStatus::kOptimal) {
    throw SolverError("cannot read bucket fractions from a " +
                      to_string(sol.status) + " LP solution");
  }
  if (sol.values.size() != lp.num_vars()) {
    throw ArgumentError("LP solution does not match the problem");
  }
  BucketFractions out;
  for (std::size_t j = 0; j < lp.num_vars(); ++j) {
    const VarLabel& label = lp.labels[j];
    if (label.kind != VarLabel::Kind::kBucketSet &&
        label.kind != VarLabel::Kind::kBucketPiece) {
      continue;
    }
    out.xhat[label.bucket] += std::max(0.0, sol.values[j]);
  }
  return out;
}

Solution round_solution(const Instance& instance, const BucketIndex& buckets,
                        const BucketFractions& fractions,
                        std::size_t bruteforce_cap, RoundingReport* report) {
  const std::size_t num_items = instance.num_items();
  std::vector<double> covered(num_items, 0.0);
  for (const auto& [key, x] : fractions.xhat) {
    const Bucket* bucket = buckets.find(key);
    if (bucket == nullptr) {
      throw ArgumentError("fractions name a bucket with no sets");
    }
    if (!(x >= -kIntegralSnap &&
          x <= static_cast<double>(bucket->size()) + kIntegralSnap)) {
      throw ArgumentError("fraction " + std::to_string(x) +
                          " outside the bucket's range");
    }
    for (std::size_t g : items_of(key)) covered[g] += x;
  }
  for (std::size_t g = 0; g < num_items; ++g) {
    if (covered[g] < instance.demands()[g] - kCoverageSlack) {
      throw ArgumentError("fractions leave item " + instance.item_names()[g] +
                          " under-covered");
    }
  }

  // Integral parts.
  std::vector<std::size_t> selected;
  std::vector<int> residual = instance.demands();
  std::map<ItemMask, std::size_t> floor_of;
  double fractional = 0.0;
  for (const auto& [key, bucket] : buckets.buckets()) {
    double x = 0.0;
    if (auto it = fractions.xhat.find(key); it != fractions.xhat.end()) {
      x = std::max(0.0, it->second);
    }
    const double nearest = std::round(x);
    if (std::abs(x - nearest) <= kIntegralSnap) x = nearest;
    const auto xbar = std::min(static_cast<std::size_t>(std::floor(x)),
                               bucket.size());
    fractional += x - static_cast<double>(xbar);
    floor_of[key] = xbar;
    for (std::size_t i = 0; i < xbar; ++i) selected.push_back(bucket.sets[i]);
    for (std::size_t g : items_of(key)) residual[g] -= static_cast<int>(xbar);
  }
  const auto r =
      static_cast<std::size_t>(std::max(0.0, std::ceil(fractional - kIntegralSnap)));

  // Residual buckets that can still contribute.
  struct Digit {
    const Bucket* bucket;
    std::size_t start;
    std::size_t limit;
  };
  std::vector<Digit> digits;
  for (const auto& [key, bucket] : buckets.buckets()) {
    const std::size_t start = floor_of[key];
    if (key == 0 || start >= bucket.size()) continue;
    const std::size_t limit = std::min(r, bucket.size() - start);
    if (limit > 0) digits.push_back({&bucket, start, limit});
  }
  std::size_t space = 1;
  bool too_large = false;
  for (const Digit& d : digits) {
    if (space > bruteforce_cap / (d.limit + 1)) {
      too_large = true;
      break;
    }
    space *= d.limit + 1;
  }

  RoundingReport local;
  local.r = r;
  local.residual_buckets = digits.size();
  local.candidates = too_large ? 0 : space;

  auto finish_greedy = [&]() {
    local.used_fallback = true;
    std::vector<bool> available(instance.num_sets(), true);
    for (std::size_t t : selected) available[t] = false;
    for (std::size_t t : greedy_cover(instance, residual, available)) {
      selected.push_back(t);
    }
  };

  if (too_large || space > bruteforce_cap) {
    finish_greedy();
  } else {
    std::vector<std::size_t> y(digits.size(), 0), best_y;
    std::vector<int> cover(num_items, 0);
    double cost = 0.0;
    double best = 0.0;
    bool found = false;
    auto feasible = [&]() {
      for (std::size_t g = 0; g < num_items; ++g) {
        if (cover[g] < residual[g]) return false;
      }
      return true;
    };
    while (true) {
      if (feasible() &&
          (!found || cost < best - 1e-12 * std::max(1.0, std::abs(best)))) {
        best = cost;
        best_y = y;
        found = true;
      }
      // Advance the odometer, first digit fastest.
      std::size_t k = 0;
      for (; k < digits.size(); ++k) {
        const Digit& d = digits[k];
        const std::vector<std::size_t> items = items_of(d.bucket->key);
        if (y[k] < d.limit) {
          cost += d.bucket->weights[d.start + y[k]];
          ++y[k];
          for (std::size_t g : items) ++cover[g];
          break;
        }
        cost -= d.bucket->prefix[d.start + y[k]] - d.bucket->prefix[d.start];
        for (std::size_t g : items) cover[g] -= static_cast<int>(y[k]);
        y[k] = 0;
      }
      if (k == digits.size()) break;
      // Recompute exactly now and then to keep drift out of comparisons.
      if (k > 0) {
        cost = 0.0;
        for (std::size_t i = 0; i < digits.size(); ++i) {
          const Digit& d = digits[i];
          cost += d.bucket->prefix[d.start + y[i]] - d.bucket->prefix[d.start];
        }
      }
    }
    if (!found) {
      finish_greedy();
    } else {
      for (std::size_t i = 0; i < digits.size(); ++i) {
        const Digit& d = digits[i];
        for (std::size_t a = 0; a < best_y[i]; ++a) {
          selected.push_back(d.bucket->sets[d.start + a]);
        }
      }
    }
  }
  if (report != nullptr) *report = local;
  return make_solution(instance, std::move(selected), "rounding");
}

namespace {

Solution run_pipeline(const Instance& instance, LinearProgram lp,
                      const BucketIndex& buckets, const char* algorithm,
                      PipelineReport* report) {
  const LpSolution sol = solve_lp(lp);
  if (sol.status != LpStatus::kOptimal) {
    throw SolverError(std::string(algorithm) + ": LP ended with status " +
                      to_string(sol.status) + " after " +
                      std::to_string(sol.iterations) + " iterations (" +
                      std::to_string(lp.num_vars()) + " variables, " +
                      std::to_string(lp.num_constraints()) + " rows)");
  }
  BucketFractions fractions = extract_bucket_fractions(lp, sol);
  RoundingReport rounding;
  Solution out = round_solution(instance, buckets, fractions,
                                kDefaultBruteforceCap, &rounding);
  out.algorithm = algorithm;
  if (report != nullptr) {
    report->lp = std::move(lp);
    report->lp_solution = sol;
    report->fractions = std::move(fractions);
    report->rounding = rounding;
  }
  return out;
}

}  // namespace

Solution solve_2approx(const Instance& instance, PipelineReport* report) {
  require_feasible(instance);
  const BucketIndex buckets(instance);
  return run_pipeline(instance, build_full_lp(instance, buckets), buckets,
                      "2approx", report);
}

Solution solve_2eps(const Instance& instance, double epsilon,
                    PipelineReport* report) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw ArgumentError("epsilon must be positive and finite");
  }
  require_feasible(instance);
  const BucketIndex buckets(instance);
  return run_pipeline(instance,
                      build_compressed_lp(instance, buckets, epsilon / 2),
                      buckets, "2eps", report);
}

}  // namespace wsmc
