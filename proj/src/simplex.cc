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

#include <algorithm>
#include <cmath>
#include <limits>

#include "wsmc/lp.h"

namespace wsmc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Dense tableau over columns [structural | surplus | artificial]. Row i reads
//   sum_j a_ij x_j - s_i + r_i = b_i,
// where the artificial r_i exists only for rows whose residual at the lower
// bounds is positive. The tableau stores B^-1 [A | -I | R], so the columns of
// the surplus variables carry -B^-1.
class DenseSimplex {
 public:
  DenseSimplex(const LinearProgram& lp, const SimplexOptions& options)
      : lp_(lp),
        opt_(options),
        m_(lp.num_constraints()),
        n_(lp.num_vars()),
        cap_(options.iteration_cap_factor * (lp.num_vars() + lp.num_constraints()) +
             1) {}

  LpSolution run() {
    setup();

    set_phase_one_costs();
    LpStatus status = iterate();
    if (status == LpStatus::kIterationLimit) return finish(status);
    double infeasibility = 0.0;
    for (std::size_t j = first_art_; j < cols_; ++j) infeasibility += x_[j];
    if (infeasibility > opt_.feasibility_tolerance) {
      return finish(LpStatus::kInfeasible);
    }
    // Artificials are pinned at zero from here on; basic ones at zero behave
    // as fixed variables and leave the basis through degenerate pivots.
    for (std::size_t j = first_art_; j < cols_; ++j) {
      upper_[j] = 0.0;
      x_[j] = 0.0;
    }
    recompute_basic_values();

    set_phase_two_costs();
    status = iterate();
    return finish(status);
  }

 private:
  double& t(std::size_t i, std::size_t j) { return tab_[i * cols_ + j]; }
  double t(std::size_t i, std::size_t j) const { return tab_[i * cols_ + j]; }

  void setup() {
    std::vector<double> residual(m_);
    std::size_t num_art = 0;
    for (std::size_t i = 0; i < m_; ++i) {
      double r = lp_.rows[i].rhs;
      for (auto [j, a] : lp_.rows[i].terms) r -= a * lp_.lower[j];
      residual[i] = r;
      if (r > 0.0) ++num_art;
    }
    first_art_ = n_ + m_;
    cols_ = n_ + m_ + num_art;
    tab_.assign(m_ * cols_, 0.0);
    lower_.assign(cols_, 0.0);
    upper_.assign(cols_, kInf);
    x_.assign(cols_, 0.0);
    basis_.assign(m_, 0);
    row_of_.assign(cols_, kNone);
    for (std::size_t j = 0; j < n_; ++j) {
      lower_[j] = lp_.lower[j];
      upper_[j] = lp_.upper[j];
      x_[j] = lp_.lower[j];
    }
    std::size_t art = first_art_;
    for (std::size_t i = 0; i < m_; ++i) {
      const bool needs_art = residual[i] > 0.0;
      const double sign = needs_art ? 1.0 : -1.0;
      for (auto [j, a] : lp_.rows[i].terms) t(i, j) += sign * a;
      t(i, n_ + i) = -sign;
      if (needs_art) {
        t(i, art) = 1.0;
        basis_[i] = art;
        x_[art] = residual[i];
        ++art;
      } else {
        basis_[i] = n_ + i;
        x_[n_ + i] = -residual[i];
      }
      row_of_[basis_[i]] = i;
    }
  }

  void set_phase_one_costs() {
    cost_.assign(cols_, 0.0);
    for (std::size_t j = first_art_; j < cols_; ++j) cost_[j] = 1.0;
    recompute_reduced_costs();
  }

  void set_phase_two_costs() {
    cost_.assign(cols_, 0.0);
    for (std::size_t j = 0; j < n_; ++j) cost_[j] = lp_.objective[j];
    recompute_reduced_costs();
  }

  void recompute_reduced_costs() {
    d_ = cost_;
    for (std::size_t i = 0; i < m_; ++i) {
      const double cb = cost_[basis_[i]];
      if (cb == 0.0) continue;
      const double* row = &tab_[i * cols_];
      for (std::size_t j = 0; j < cols_; ++j) d_[j] -= cb * row[j];
    }
    for (std::size_t i = 0; i < m_; ++i) d_[basis_[i]] = 0.0;
  }

  // x_B = B^-1 b - sum_{j nonbasic} (B^-1 a_j) x_j, with B^-1 = -T[:, surplus].
  void recompute_basic_values() {
    for (std::size_t i = 0; i < m_; ++i) {
      double v = 0.0;
      for (std::size_t k = 0; k < m_; ++k) v -= t(i, n_ + k) * lp_.rows[k].rhs;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (row_of_[j] == kNone && x_[j] != 0.0) v -= t(i, j) * x_[j];
      }
      x_[basis_[i]] = v;
    }
  }

  bool at_upper(std::size_t j) const { return x_[j] >= upper_[j]; }

  LpStatus iterate() {
    std::size_t streak = 0;
    while (true) {
      if (iterations_ >= cap_) return LpStatus::kIterationLimit;
      const bool bland = streak >= opt_.degeneracy_streak;

      // Pricing.
      std::size_t enter = kNone;
      double best = 0.0;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (row_of_[j] != kNone || lower_[j] == upper_[j]) continue;
        double score = 0.0;
        if (at_upper(j)) {
          if (d_[j] > opt_.optimality_tolerance) score = d_[j];
        } else if (d_[j] < -opt_.optimality_tolerance) {
          score = -d_[j];
        }
        if (score <= 0.0) continue;
        if (bland) {
          enter = j;
          break;
        }
        if (score > best) {
          best = score;
          enter = j;
        }
      }
      if (enter == kNone) return LpStatus::kOptimal;
      ++iterations_;

      const double dir = at_upper(enter) ? -1.0 : 1.0;

      // Ratio test. Moving x_enter by dir * step changes basic row i by
      // -T[i][enter] * dir * step.
      double step = upper_[enter] - lower_[enter];
      std::size_t leave_row = kNone;
      double leave_alpha = 0.0;
      for (std::size_t i = 0; i < m_; ++i) {
        const double alpha = t(i, enter) * dir;
        if (std::abs(alpha) <= opt_.pivot_tolerance) continue;
        const std::size_t b = basis_[i];
        double limit;
        if (alpha > 0.0) {
          limit = (x_[b] - lower_[b]) / alpha;
        } else {
          if (upper_[b] == kInf) continue;
          limit = (upper_[b] - x_[b]) / -alpha;
        }
        limit = std::max(limit, 0.0);
        if (limit < step) {
          step = limit;
          leave_row = i;
          leave_alpha = alpha;
        } else if (leave_row != kNone && limit == step) {
          const bool better = bland ? b < basis_[leave_row]
                                    : std::abs(alpha) > std::abs(leave_alpha);
          if (better) {
            leave_row = i;
            leave_alpha = alpha;
          }
        }
      }
      if (step == kInf) {
        // Costs are non-negative and structural bounds finite, so only a
        // malformed problem can get here.
        return LpStatus::kIterationLimit;
      }
      streak = step <= 1e-12 ? streak + 1 : 0;

      for (std::size_t i = 0; i < m_; ++i) {
        x_[basis_[i]] -= t(i, enter) * dir * step;
      }
      if (leave_row == kNone) {
        x_[enter] = dir > 0 ? upper_[enter] : lower_[enter];
        continue;
      }
      x_[enter] += dir * step;
      const std::size_t leaving = basis_[leave_row];
      x_[leaving] = leave_alpha > 0.0 ? lower_[leaving] : upper_[leaving];
      pivot(leave_row, enter);
    }
  }

  void pivot(std::size_t r, std::size_t q) {
    double* prow = &tab_[r * cols_];
    const double inv = 1.0 / prow[q];
    for (std::size_t j = 0; j < cols_; ++j) prow[j] *= inv;
    prow[q] = 1.0;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r) continue;
      double* row = &tab_[i * cols_];
      const double f = row[q];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < cols_; ++j) row[j] -= f * prow[j];
      row[q] = 0.0;
    }
    const double fd = d_[q];
    if (fd != 0.0) {
      for (std::size_t j = 0; j < cols_; ++j) d_[j] -= fd * prow[j];
    }
    d_[q] = 0.0;
    row_of_[basis_[r]] = kNone;
    basis_[r] = q;
    row_of_[q] = r;
  }

  LpSolution finish(LpStatus status) {
    LpSolution sol;
    sol.status = status;
    sol.iterations = iterations_;
    if (status != LpStatus::kOptimal) return sol;
    recompute_basic_values();
    sol.values.assign(x_.begin(), x_.begin() + static_cast<std::ptrdiff_t>(n_));
    for (std::size_t j = 0; j < n_; ++j) {
      double& v = sol.values[j];
      if (std::abs(v - lp_.lower[j]) <= 1e-9) v = lp_.lower[j];
      if (std::abs(v - lp_.upper[j]) <= 1e-9) v = lp_.upper[j];
    }
    sol.duals.resize(m_);
    for (std::size_t k = 0; k < m_; ++k) sol.duals[k] = d_[n_ + k];
    sol.objective_value = lp_.evaluate(sol.values);
    return sol;
  }

  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  const LinearProgram& lp_;
  SimplexOptions opt_;
  std::size_t m_;
  std::size_t n_;
  std::size_t cap_;
  std::size_t cols_ = 0;
  std::size_t first_art_ = 0;
  std::size_t iterations_ = 0;
  std::vector<double> tab_;
  std::vector<double> lower_, upper_, x_, cost_, d_;
  std::vector<std::size_t> basis_, row_of_;
};

}  // namespace

LpSolution solve_lp(const LinearProgram& lp, const SimplexOptions& options) {
  lp.validate();
  return DenseSimplex(lp, options).run();
}

}  // namespace wsmc
