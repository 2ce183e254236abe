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

// Bounded-variable linear programs in covering form and a dense-tableau
// primal simplex solver.
//
//   minimize    sum_j c_j x_j
//   subject to  sum_j a_ij x_j >= b_i      for every row i
//               l_j <= x_j <= u_j

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "wsmc/instance.h"

namespace wsmc {

/// Maps an LP column back to the problem: bucket H and the i-th cheapest set
/// (kBucketSet), the j-th piece of a compressed cost function (kBucketPiece),
/// or a raw set index (kSet).
struct VarLabel {
  enum class Kind : std::uint8_t { kNone, kBucketSet, kBucketPiece, kSet };
  Kind kind = Kind::kNone;
  ItemMask bucket = 0;
  std::size_t position = 0;

  friend bool operator==(const VarLabel&, const VarLabel&) = default;
};

struct CoveringRow {
  std::vector<std::pair<std::size_t, double>> terms;  // (column, coefficient)
  double rhs = 0.0;
};

struct LinearProgram {
  std::vector<double> objective;
  std::vector<double> lower;
  std::vector<double> upper;
  std::vector<VarLabel> labels;
  std::vector<CoveringRow> rows;

  std::size_t num_vars() const { return objective.size(); }
  std::size_t num_constraints() const { return rows.size(); }

  std::size_t add_variable(double cost, double lo, double hi,
                           VarLabel label = {});
  void add_row(CoveringRow row) { rows.push_back(std::move(row)); }

  /// Throws ArgumentError unless costs and right-hand sides are finite and
  /// non-negative, 0 <= lower <= upper < inf, and rows reference valid
  /// columns.
  void validate() const;

  double evaluate(const std::vector<double>& x) const;
};

enum class LpStatus { kOptimal, kInfeasible, kIterationLimit };

std::string to_string(LpStatus status);

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  std::vector<double> values;
  std::vector<double> duals;  // one per row, from the final basis
  double objective_value = 0.0;
  std::size_t iterations = 0;
};

struct SimplexOptions {
  double pivot_tolerance = 1e-10;
  double feasibility_tolerance = 1e-7;
  double optimality_tolerance = 1e-9;
  // Consecutive degenerate steps before switching to Bland's rule.
  std::size_t degeneracy_streak = 50;
  // Total iterations allowed: factor * (num_vars + num_constraints).
  std::size_t iteration_cap_factor = 50;
};

/// Deterministic for identical input.
LpSolution solve_lp(const LinearProgram& lp, const SimplexOptions& options = {});

struct LpResidualReport {
  double primal_infeasibility = 0.0;  // max row shortfall or bound violation
  double dual_infeasibility = 0.0;    // max negative dual or wrong-sign reduced cost
  double complementarity = 0.0;       // max |y_i * slack_i| and |d_j * gap_j|
  double duality_gap = 0.0;           // |primal - dual| / max(1, |primal|)
  double max_residual() const;
};

/// Recomputes feasibility and optimality certificates of `sol` directly from
/// the problem data.
LpResidualReport lp_duality_check(const LinearProgram& lp,
                                  const LpSolution& sol);

}  // namespace wsmc
