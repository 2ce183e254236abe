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

#include <random>

#include "doctest.h"
#include "oracles.h"
#include "wsmc/approx.h"
#include "wsmc/error.h"
#include "wsmc/lp.h"

using namespace wsmc;

namespace {

LinearProgram random_lp(std::mt19937_64& rng, std::size_t n, std::size_t m) {
  auto pick = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  LinearProgram lp;
  for (std::size_t j = 0; j < n; ++j) {
    // Few distinct costs so ties and degeneracy are common.
    lp.add_variable(pick(0, 4), 0.0, pick(1, 2));
  }
  for (std::size_t i = 0; i < m; ++i) {
    CoveringRow row;
    double reach = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const int a = pick(0, 2);
      if (a == 0) continue;
      row.terms.emplace_back(j, a);
      reach += a * lp.upper[j];
    }
    row.rhs = std::min<double>(pick(0, 4), reach + pick(0, 1));
    lp.add_row(row);
  }
  return lp;
}

}  // namespace

TEST_CASE("simplex matches vertex enumeration on small LPs") {
  std::mt19937_64 rng(5);
  int optimal = 0, infeasible = 0;
  for (int k = 0; k < 400; ++k) {
    const std::size_t n = 1 + rng() % 5;
    const std::size_t m = 1 + rng() % 3;
    const LinearProgram lp = random_lp(rng, n, m);
    const auto expected = testing::vertex_enumeration_optimum(lp);
    const LpSolution sol = solve_lp(lp);
    if (!expected) {
      CHECK(sol.status == LpStatus::kInfeasible);
      ++infeasible;
      continue;
    }
    REQUIRE(sol.status == LpStatus::kOptimal);
    ++optimal;
    CHECK(sol.objective_value == doctest::Approx(*expected).epsilon(1e-9));
    CHECK(lp_duality_check(lp, sol).max_residual() <= 1e-7);
    const auto grid = testing::grid_optimum(lp);
    REQUIRE(grid.has_value());
    CHECK(sol.objective_value <= *grid + 1e-9);
  }
  CHECK(optimal > 200);
  CHECK(infeasible > 5);
}

TEST_CASE("covering LP of the bucket example") {
  const Instance ex = testing::example_4_1();
  const LinearProgram lp = build_full_lp(ex, BucketIndex(ex));
  CHECK(lp.num_vars() == 8);
  CHECK(lp.num_constraints() == 2);
  const LpSolution sol = solve_lp(lp);
  REQUIRE(sol.status == LpStatus::kOptimal);
  CHECK(sol.objective_value == doctest::Approx(10.0));
  CHECK(sol.duals.size() == 2);
  CHECK(lp_duality_check(lp, sol).max_residual() <= 1e-9);
  CHECK(*testing::vertex_enumeration_optimum(lp) == doctest::Approx(10.0));
}

TEST_CASE("degenerate LPs with duplicate costs terminate") {
  // Many identical columns over the same rows: heavy degeneracy.
  LinearProgram lp;
  for (int j = 0; j < 60; ++j) lp.add_variable(1.0, 0.0, 1.0);
  for (int i = 0; i < 6; ++i) {
    CoveringRow row;
    for (int j = 0; j < 60; ++j) {
      if ((j + i) % 3 != 0) row.terms.emplace_back(j, 1.0);
    }
    row.rhs = 5.0;
    lp.add_row(row);
  }
  const LpSolution sol = solve_lp(lp);
  REQUIRE(sol.status == LpStatus::kOptimal);
  CHECK(sol.iterations <= 50 * (lp.num_vars() + lp.num_constraints()));
  CHECK(lp_duality_check(lp, sol).max_residual() <= 1e-7);
  CHECK(sol.objective_value == doctest::Approx(7.5));
}

TEST_CASE("status reporting and validation") {
  LinearProgram lp;
  lp.add_variable(1.0, 0.0, 1.0);
  lp.add_row({{{0, 1.0}}, 2.0});
  CHECK(solve_lp(lp).status == LpStatus::kInfeasible);

  LinearProgram trivial;
  trivial.add_variable(3.0, 0.0, 4.0);
  const LpSolution t = solve_lp(trivial);
  CHECK(t.status == LpStatus::kOptimal);
  CHECK(t.objective_value == 0.0);

  std::mt19937_64 rng(1);
  LinearProgram busy = random_lp(rng, 5, 3);
  busy.rows[0].rhs = 1.0;
  busy.rows[0].terms = {{0, 1.0}, {1, 1.0}};
  SimplexOptions tight;
  tight.iteration_cap_factor = 0;
  CHECK(solve_lp(busy, tight).status == LpStatus::kIterationLimit);

  CHECK(to_string(LpStatus::kOptimal) == "optimal");
  CHECK(to_string(LpStatus::kIterationLimit) == "iteration-limit");

  LinearProgram bad;
  bad.add_variable(-1.0, 0.0, 1.0);
  CHECK_THROWS_AS(solve_lp(bad), ArgumentError);
  LinearProgram bad_bounds;
  bad_bounds.add_variable(1.0, 2.0, 1.0);
  CHECK_THROWS_AS(bad_bounds.validate(), ArgumentError);
  LinearProgram bad_row;
  bad_row.add_variable(1.0, 0.0, 1.0);
  bad_row.add_row({{{3, 1.0}}, 1.0});
  CHECK_THROWS_AS(bad_row.validate(), ArgumentError);
  CHECK_THROWS_AS(lp.evaluate({1.0, 2.0}), ArgumentError);
}

TEST_CASE("nonzero lower bounds") {
  LinearProgram lp;
  lp.add_variable(2.0, 1.0, 3.0);
  lp.add_variable(1.0, 0.5, 1.0);
  lp.add_row({{{0, 1.0}, {1, 1.0}}, 3.0});
  const LpSolution sol = solve_lp(lp);
  REQUIRE(sol.status == LpStatus::kOptimal);
  CHECK(sol.values[0] == doctest::Approx(2.0));
  CHECK(sol.values[1] == doctest::Approx(1.0));
  CHECK(sol.objective_value == doctest::Approx(5.0));
  CHECK(lp_duality_check(lp, sol).max_residual() <= 1e-9);
}

TEST_CASE("larger covering LPs certify optimality") {
  std::mt19937_64 rng(12);
  for (int k = 0; k < 30; ++k) {
    const std::size_t ell = 3 + k % 6;
    std::vector<SetRecord> sets;
    for (int t = 0; t < 250; ++t) {
      sets.push_back({1 + rng() % ((ItemMask{1} << ell) - 1),
                      static_cast<double>(1 + rng() % 50)});
    }
    std::vector<int> demand(ell);
    for (std::size_t g = 0; g < ell; ++g) demand[g] = 1 + static_cast<int>(rng() % 30);
    const Instance inst(default_item_names(ell), demand, sets);
    if (!validate(inst).feasible) continue;
    const LinearProgram lp = build_full_lp(inst, BucketIndex(inst));
    const LpSolution sol = solve_lp(lp);
    REQUIRE(sol.status == LpStatus::kOptimal);
    CHECK(lp_duality_check(lp, sol).max_residual() <= 1e-9);
  }
}
