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

#include <map>
#include <random>
#include <utility>

#include "doctest.h"
#include "oracles.h"
#include "wsmc/exact.h"

using namespace wsmc;

namespace {

using Layer = std::map<std::pair<int, int>, double>;

Layer finite_entries(const DpTable& table) {
  Layer out;
  for (std::size_t i = 0; i < table.num_states(); ++i) {
    if (table.layer()[i] == DpTable::kUnreached) continue;
    const std::vector<int> q = table.state_of(i);
    out[{q[0], q[1]}] = table.layer()[i];
  }
  return out;
}

}  // namespace

TEST_CASE("dp layers of the two-item example") {
  std::vector<Layer> layers;
  const Solution s = solve_dp(testing::example_3_2(),
                              [&](std::size_t, const DpTable& t) {
                                layers.push_back(finite_entries(t));
                              });
  REQUIRE(layers.size() == 7);
  CHECK(layers[0] == Layer{{{0, 0}, 0}});
  CHECK(layers[1] == Layer{{{0, 0}, 0}, {{1, 0}, 1}});
  CHECK(layers[2] == Layer{{{0, 0}, 0}, {{1, 0}, 1}, {{2, 0}, 9}});
  const Layer after3{{{0, 0}, 0}, {{1, 0}, 1}, {{2, 0}, 9},
                     {{1, 1}, 3}, {{2, 1}, 11}, {{0, 1}, 2}};
  CHECK(layers[3] == after3);
  Layer after4 = after3;
  after4[{0, 2}] = 11;
  after4[{1, 2}] = 12;
  after4[{2, 2}] = 20;
  CHECK(layers[4] == after4);
  const Layer after5{{{0, 0}, 0}, {{1, 0}, 1}, {{2, 0}, 4}, {{1, 1}, 3},
                     {{2, 1}, 4},  {{0, 1}, 2}, {{0, 2}, 5}, {{1, 2}, 5},
                     {{2, 2}, 6}};
  CHECK(layers[5] == after5);
  CHECK(layers[6] == after5);

  CHECK(s.total_weight == 6.0);
  CHECK(s.selected == std::vector<std::size_t>{0, 2, 4});
  CHECK(s.algorithm == "dp");
}

TEST_CASE("dp table indexing") {
  DpTable t({2, 1, 3});
  CHECK(t.num_states() == 24);
  CHECK(t.dims() == std::vector<int>{3, 2, 4});
  for (std::size_t i = 0; i < t.num_states(); ++i) {
    const std::vector<int> q = t.state_of(i);
    CHECK(t.index_of(q) == i);
  }
  const std::vector<int> q{2, 0, 1};
  const std::size_t pred = t.predecessor(t.index_of(q), 0b101);
  CHECK(t.state_of(pred) == std::vector<int>{1, 0, 0});
}

TEST_CASE("exact solvers on edge cases") {
  const Instance zero(default_item_names(2), {0, 0}, {{1, 3.0}});
  CHECK(solve_dp(zero).selected.empty());
  CHECK(solve_bruteforce(zero).total_weight == 0.0);

  const Instance infeasible(default_item_names(1), {2}, {{1, 1.0}});
  CHECK_THROWS_AS(solve_dp(infeasible), InfeasibleError);
  CHECK_THROWS_AS(solve_bruteforce(infeasible), InfeasibleError);

  std::vector<SetRecord> many(25, SetRecord{1, 1.0});
  const Instance big(default_item_names(1), {1}, many);
  CHECK_THROWS_AS(solve_bruteforce(big), ArgumentError);
  CHECK(solve_dp(big).total_weight == 1.0);

  // Ties: the first cheapest family in index order.
  const Instance tie(default_item_names(1), {1}, {{1, 2.0}, {1, 2.0}});
  CHECK(solve_bruteforce(tie).selected == std::vector<std::size_t>{0});
  CHECK(solve_dp(tie).total_weight == 2.0);
}

TEST_CASE("dp equals exhaustive search on random instances") {
  std::mt19937_64 rng(11);
  testing::CorpusOptions opt;
  opt.allow_zero_weight = true;
  for (int k = 0; k < 300; ++k) {
    const Instance inst = testing::random_small_instance(rng, opt);
    const Solution dp = solve_dp(inst);
    const Solution bf = solve_bruteforce(inst);
    CHECK(dp.total_weight == bf.total_weight);
    CHECK(satisfies_demands(inst, coverage(inst, dp)));
    CHECK(satisfies_demands(inst, coverage(inst, bf)));
  }
}
