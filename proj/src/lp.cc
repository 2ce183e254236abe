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

#include "wsmc/lp.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "wsmc/error.h"

namespace wsmc {

std::size_t LinearProgram::add_variable(double cost, double lo, double hi,
                                        VarLabel label) {
  objective.push_back(cost);
  lower.push_back(lo);
  upper.push_back(hi);
  labels.push_back(label);
  return objective.size() - 1;
}

void LinearProgram::validate() const {
  const std::size_t n = objective.size();
  if (lower.size() != n || upper.size() != n || labels.size() != n) {
    throw ArgumentError("LP column arrays have mismatched lengths");
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (!std::isfinite(objective[j]) || objective[j] < 0.0) {
      throw ArgumentError("LP cost of column " + std::to_string(j) +
                          " must be finite and non-negative");
    }
    if (!std::isfinite(lower[j]) || !std::isfinite(upper[j]) ||
        lower[j] < 0.0 || lower[j] > upper[j]) {
      throw ArgumentError("LP bounds of column " + std::to_string(j) +
                          " must satisfy 0 <= lower <= upper < inf");
    }
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const CoveringRow& row = rows[i];
    if (!std::isfinite(row.rhs) || row.rhs < 0.0) {
      throw ArgumentError("LP right-hand side of row " + std::to_string(i) +
                          " must be finite and non-negative");
    }
    for (auto [j, a] : row.terms) {
      if (j >= n) {
        throw ArgumentError("LP row " + std::to_string(i) +
                            " references unknown column " + std::to_string(j));
      }
      if (!std::isfinite(a)) {
        throw ArgumentError("LP row " + std::to_string(i) +
                            " has a non-finite coefficient");
      }
    }
  }
}

double LinearProgram::evaluate(const std::vector<double>& x) const {
  if (x.size() != objective.size()) {
    throw ArgumentError("LP point has the wrong dimension");
  }
  double total = 0.0;
  for (std::size_t j = 0; j < x.size(); ++j) total += objective[j] * x[j];
  return total;
}

std::string to_string(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kIterationLimit:
      return "iteration-limit";
  }
  return "unknown";
}

double LpResidualReport::max_residual() const {
  return std::max({primal_infeasibility, dual_infeasibility, complementarity,
                   duality_gap});
}

LpResidualReport lp_duality_check(const LinearProgram& lp,
                                  const LpSolution& sol) {
  const std::size_t n = lp.num_vars();
  const std::size_t m = lp.num_constraints();
  if (sol.values.size() != n || sol.duals.size() != m) {
    throw ArgumentError("LP solution does not match the problem dimensions");
  }
  LpResidualReport report;
  const std::vector<double>& x = sol.values;
  const std::vector<double>& y = sol.duals;

  // Dual quantities scale with the costs, primal ones with the objective.
  double cost_scale = 1.0;
  for (double c : lp.objective) cost_scale = std::max(cost_scale, std::abs(c));
  const double primal = lp.evaluate(x);
  const double value_scale = std::max(1.0, std::abs(primal));

  for (std::size_t j = 0; j < n; ++j) {
    report.primal_infeasibility =
        std::max({report.primal_infeasibility, lp.lower[j] - x[j],
                  x[j] - lp.upper[j]});
  }
  std::vector<double> reduced(lp.objective);
  for (std::size_t i = 0; i < m; ++i) {
    double lhs = 0.0;
    for (auto [j, a] : lp.rows[i].terms) {
      lhs += a * x[j];
      reduced[j] -= a * y[i];
    }
    const double slack = lhs - lp.rows[i].rhs;
    report.primal_infeasibility = std::max(report.primal_infeasibility, -slack);
    report.dual_infeasibility =
        std::max(report.dual_infeasibility, -y[i] / cost_scale);
    report.complementarity = std::max(
        report.complementarity, std::abs(y[i] * slack) / value_scale);
  }

  double dual = 0.0;
  for (std::size_t i = 0; i < m; ++i) dual += lp.rows[i].rhs * y[i];
  for (std::size_t j = 0; j < n; ++j) {
    const double d = reduced[j];
    // d > 0 is only allowed at the lower bound, d < 0 only at the upper one.
    if (d > 0.0) {
      report.complementarity = std::max(
          report.complementarity, d * (x[j] - lp.lower[j]) / value_scale);
      dual += lp.lower[j] * d;
    } else if (d < 0.0) {
      report.complementarity = std::max(
          report.complementarity, -d * (lp.upper[j] - x[j]) / value_scale);
      dual += lp.upper[j] * d;
    }
  }
  report.duality_gap = std::abs(primal - dual) / value_scale;
  return report;
}

}  // namespace wsmc
