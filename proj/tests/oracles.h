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

// Shared fixtures and independent reference implementations for the tests.

#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <vector>

#include "wsmc/instance.h"
#include "wsmc/lp.h"

namespace wsmc::testing {

// Six sets over two items, demands (2, 2). Optimum 6 via sets 0, 2, 4.
inline Instance example_3_2() {
  return Instance(default_item_names(2), {2, 2},
                  {{1, 1}, {1, 8}, {2, 2}, {2, 9}, {3, 3}, {3, 5}});
}

// Gamma1..3 = {g1} (1, 3, 4), Delta1..2 = {g2} (2, 8), E1..3 = {g1, g2}
// (4, 5, 6), demands (3, 2).
inline Instance example_4_1() {
  return Instance(default_item_names(2), {3, 2},
                  {{1, 1}, {1, 3}, {1, 4}, {2, 2}, {2, 8}, {3, 4}, {3, 5}, {3, 6}});
}

struct CorpusOptions {
  std::size_t max_sets = 12;
  std::size_t max_items = 4;
  int max_weight = 20;
  int max_demand = 3;
  bool allow_zero_weight = false;
};

// Small random instances with demands clamped to capacity. Uses its own
// generator so it shares no code with the library's.
inline Instance random_small_instance(std::mt19937_64& rng,
                                      const CorpusOptions& opt = {}) {
  auto pick = [&](long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
  };
  const auto ell = static_cast<std::size_t>(pick(1, static_cast<long>(opt.max_items)));
  const auto n = static_cast<std::size_t>(pick(1, static_cast<long>(opt.max_sets)));
  std::vector<SetRecord> sets(n);
  std::vector<int> capacity(ell, 0);
  for (SetRecord& s : sets) {
    s.items = static_cast<ItemMask>(pick(1, (1L << ell) - 1));
    s.weight = static_cast<double>(pick(opt.allow_zero_weight ? 0 : 1, opt.max_weight));
    for (std::size_t g = 0; g < ell; ++g) capacity[g] += s.contains(g);
  }
  std::vector<int> demands(ell);
  for (std::size_t g = 0; g < ell; ++g) {
    demands[g] = std::min(static_cast<int>(pick(0, opt.max_demand)), capacity[g]);
  }
  return Instance(default_item_names(ell), demands, sets);
}

// Recompute-everything greedy with the documented tie-break.
inline std::vector<std::size_t> naive_greedy(const Instance& instance) {
  std::vector<int> residual = instance.demands();
  std::vector<bool> used(instance.num_sets(), false);
  std::vector<std::size_t> chosen;
  auto open_mask = [&] {
    ItemMask m = 0;
    for (std::size_t g = 0; g < residual.size(); ++g) {
      if (residual[g] > 0) m |= ItemMask{1} << g;
    }
    return m;
  };
  while (open_mask() != 0) {
    std::optional<std::size_t> best;
    double best_ratio = -1.0;
    for (std::size_t t = 0; t < instance.num_sets(); ++t) {
      if (used[t]) continue;
      const SetRecord& s = instance.set(t);
      const int count = std::popcount(s.items & open_mask());
      if (count == 0) continue;
      const double ratio = s.weight == 0.0
                               ? std::numeric_limits<double>::infinity()
                               : count / s.weight;
      bool better = !best || ratio > best_ratio;
      if (best && ratio == best_ratio) {
        const double bw = instance.set(*best).weight;
        better = s.weight < bw || (s.weight == bw && t < *best);
      }
      if (better) {
        best = t;
        best_ratio = ratio;
      }
    }
    if (!best) break;
    used[*best] = true;
    chosen.push_back(*best);
    for (std::size_t g = 0; g < residual.size(); ++g) {
      if (instance.set(*best).contains(g) && residual[g] > 0) --residual[g];
    }
  }
  return chosen;
}

// Solves a k x k system by Gaussian elimination with partial pivoting.
inline std::optional<std::vector<double>> solve_square(
    std::vector<std::vector<double>> a, std::vector<double> b) {
  const std::size_t k = b.size();
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t p = c;
    for (std::size_t r = c + 1; r < k; ++r) {
      if (std::abs(a[r][c]) > std::abs(a[p][c])) p = r;
    }
    if (std::abs(a[p][c]) < 1e-12) return std::nullopt;
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (std::size_t r = 0; r < k; ++r) {
      if (r == c) continue;
      const double f = a[r][c] / a[c][c];
      for (std::size_t j = c; j < k; ++j) a[r][j] -= f * a[c][j];
      b[r] -= f * b[c];
    }
  }
  std::vector<double> x(k);
  for (std::size_t i = 0; i < k; ++i) x[i] = b[i] / a[i][i];
  return x;
}

// Exact LP optimum by vertex enumeration: every vertex makes k rows tight,
// leaves k columns free and pins the rest at a bound. Only for tiny LPs.
inline std::optional<double> vertex_enumeration_optimum(const LinearProgram& lp) {
  const std::size_t n = lp.num_vars();
  const std::size_t m = lp.num_constraints();
  std::vector<std::vector<double>> dense(m, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < m; ++i) {
    for (auto [j, a] : lp.rows[i].terms) dense[i][j] += a;
  }
  std::optional<double> best;
  for (std::uint32_t rows = 0; rows < (1U << m); ++rows) {
    const auto k = static_cast<std::size_t>(std::popcount(rows));
    if (k > n) continue;
    for (std::uint32_t cols = 0; cols < (1U << n); ++cols) {
      if (static_cast<std::size_t>(std::popcount(cols)) != k) continue;
      for (std::uint32_t at_upper = 0; at_upper < (1U << n); ++at_upper) {
        if (at_upper & cols) continue;
        std::vector<double> x(n);
        for (std::size_t j = 0; j < n; ++j) {
          x[j] = (at_upper >> j) & 1U ? lp.upper[j] : lp.lower[j];
        }
        std::vector<std::size_t> free_cols, tight_rows;
        for (std::size_t j = 0; j < n; ++j) {
          if ((cols >> j) & 1U) free_cols.push_back(j);
        }
        for (std::size_t i = 0; i < m; ++i) {
          if ((rows >> i) & 1U) tight_rows.push_back(i);
        }
        if (k > 0) {
          std::vector<std::vector<double>> a(k, std::vector<double>(k));
          std::vector<double> b(k);
          for (std::size_t r = 0; r < k; ++r) {
            const std::size_t i = tight_rows[r];
            b[r] = lp.rows[i].rhs;
            for (std::size_t j = 0; j < n; ++j) {
              if (!((cols >> j) & 1U)) b[r] -= dense[i][j] * x[j];
            }
            for (std::size_t c = 0; c < k; ++c) a[r][c] = dense[i][free_cols[c]];
          }
          auto sol = solve_square(a, b);
          if (!sol) continue;
          for (std::size_t c = 0; c < k; ++c) x[free_cols[c]] = (*sol)[c];
        }
        bool ok = true;
        for (std::size_t j = 0; j < n && ok; ++j) {
          ok = x[j] >= lp.lower[j] - 1e-9 && x[j] <= lp.upper[j] + 1e-9;
        }
        for (std::size_t i = 0; i < m && ok; ++i) {
          double lhs = 0.0;
          for (std::size_t j = 0; j < n; ++j) lhs += dense[i][j] * x[j];
          ok = lhs >= lp.rows[i].rhs - 1e-9;
        }
        if (!ok) continue;
        double value = 0.0;
        for (std::size_t j = 0; j < n; ++j) value += lp.objective[j] * x[j];
        if (!best || value < *best) best = value;
      }
    }
  }
  return best;
}

// Minimum over the grid {0, 0.25, ..., upper} of a small LP; an upper bound
// on the LP optimum.
inline std::optional<double> grid_optimum(const LinearProgram& lp,
                                          double step = 0.25) {
  const std::size_t n = lp.num_vars();
  std::vector<int> steps(n);
  for (std::size_t j = 0; j < n; ++j) {
    steps[j] = static_cast<int>(std::floor((lp.upper[j] - lp.lower[j]) / step + 1e-9));
  }
  std::vector<int> k(n, 0);
  std::optional<double> best;
  while (true) {
    std::vector<double> x(n);
    for (std::size_t j = 0; j < n; ++j) x[j] = lp.lower[j] + k[j] * step;
    bool ok = true;
    for (const CoveringRow& row : lp.rows) {
      double lhs = 0.0;
      for (auto [j, a] : row.terms) lhs += a * x[j];
      if (lhs < row.rhs - 1e-12) {
        ok = false;
        break;
      }
    }
    if (ok) {
      const double v = lp.evaluate(x);
      if (!best || v < *best) best = v;
    }
    std::size_t j = 0;
    while (j < n && k[j] == steps[j]) k[j++] = 0;
    if (j == n) break;
    ++k[j];
  }
  return best;
}

}  // namespace wsmc::testing
