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
#include "wsmc/error.h"
#include "wsmc/exact.h"
#include "wsmc/generators.h"
#include "wsmc/io.h"

using namespace wsmc;

TEST_CASE("adversarial family") {
  const Instance a4 = generate_adversarial(4);
  CHECK(a4.num_sets() == 4);
  CHECK(a4.set(0).weight == 0.25);
  CHECK(a4.set(1).weight == doctest::Approx(1.0 / 3));
  CHECK(a4.set(2).weight == 0.5);
  CHECK(a4.set(3).weight == 1.01);
  CHECK(a4.set(2).items == 0b111);
  CHECK(a4.demands() == std::vector<int>{1, 1, 1, 1});

  const Instance a2 = generate_adversarial(2);
  CHECK(a2.set(0).weight == 0.5);
  CHECK(solve_dp(a2).total_weight == 1.01);
  for (std::size_t ell = 2; ell <= 20; ++ell) {
    CHECK(solve_dp(generate_adversarial(ell)).total_weight == 1.01);
  }
  CHECK_THROWS_AS(generate_adversarial(1), ArgumentError);
}

TEST_CASE("demand specs") {
  CHECK(to_string(parse_demand_spec("random")) == "random:1:10");
  CHECK(to_string(parse_demand_spec("random:1:4096")) == "random:1:4096");
  CHECK(to_string(parse_demand_spec("constant")) == "constant:5");
  CHECK(to_string(parse_demand_spec("normal")) == "normal:5:2");
  CHECK(to_string(parse_demand_spec("exponential")) == "exponential:0.2");
  CHECK(to_string(parse_demand_spec("poisson:3")) == "poisson:3");
  CHECK(to_string(parse_demand_spec("zipf")) == "zipf:2");
  CHECK_THROWS_AS(parse_demand_spec("pareto"), ArgumentError);
  CHECK_THROWS_AS(parse_demand_spec("random:5:1"), ArgumentError);
  CHECK_THROWS_AS(parse_demand_spec("random:1:x"), ArgumentError);
  CHECK_THROWS_AS(parse_demand_spec("constant:1:2"), ArgumentError);
  CHECK_THROWS_AS(parse_demand_spec("poisson:0"), ArgumentError);
}

TEST_CASE("demand sampling") {
  CHECK(sample_demands(parse_demand_spec("constant"), 6, 1) == std::vector<int>(6, 5));
  for (const char* spec : {"random", "normal", "exponential", "poisson", "zipf"}) {
    const DemandSpec d = parse_demand_spec(spec);
    const std::vector<int> q = sample_demands(d, 2000, 42);
    CHECK(q == sample_demands(d, 2000, 42));
    CHECK(q != sample_demands(d, 2000, 43));
    for (int v : q) CHECK(v >= 1);
    double mean = 0.0;
    for (int v : q) mean += v;
    mean /= static_cast<double>(q.size());
    // Rough location checks; rounding and the floor at 1 shift the means.
    if (std::string(spec) == "random") {
      for (int v : q) CHECK(v <= 10);
      CHECK(mean == doctest::Approx(5.5).epsilon(0.05));
    } else if (std::string(spec) == "zipf") {
      for (int v : q) CHECK(v <= 20000);
      CHECK(mean < 5.0);
    } else {
      CHECK(mean == doctest::Approx(5.0).epsilon(0.1));
    }
  }
}

TEST_CASE("random instances") {
  const DemandSpec spec = parse_demand_spec("random:1:10");
  const Instance a = generate_random(50, 5, spec, {}, 7);
  CHECK(a == generate_random(50, 5, spec, {}, 7));
  CHECK_FALSE(a == generate_random(50, 5, spec, {}, 8));
  CHECK(validate(a).feasible);
  for (const SetRecord& s : a.sets()) {
    CHECK(s.weight >= 1.0);
    CHECK(s.weight <= 1000.0);
    CHECK(s.weight == std::floor(s.weight));
  }
  const Instance big = generate_random(4096, 7, spec, {}, 1);
  CHECK(validate(big).feasible);
  CHECK(instance_from_json(nlohmann::json::parse(dump_instance(big))) == big);

  const Instance clamped = generate_random(3, 4, parse_demand_spec("constant:9"), {}, 2);
  CHECK(validate(clamped).feasible);
  for (int q : clamped.demands()) CHECK(q <= 3);

  CHECK_THROWS_AS(generate_random(0, 3, spec, {}, 1), ArgumentError);
  CHECK_THROWS_AS(generate_random(3, 3, spec, {}, 1, 1.5), ArgumentError);
  CHECK_THROWS_AS(generate_random(3, 3, spec, {2.5, 2.7, true}, 1), ArgumentError);
}

TEST_CASE("residual sum of squares") {
  // male, female, young; demands (1, 2, 1).
  const Instance d(std::vector<std::string>{"male", "female", "young"}, {1, 2, 1},
                   {{0b101, 1}, {0b110, 1}, {0b001, 1}, {0b010, 1}});
  CHECK(rss(d, make_solution(d, {1, 2, 3}, "s1")) == 0.0);
  CHECK(rss(d, make_solution(d, {0, 3, 1}, "s2")) == 1.0);
  CHECK_THROWS_AS(rss(d, make_solution(d, {0}, "short")), ArgumentError);

  const Instance unit(default_item_names(3), {1, 1, 1}, {{0b111, 1}, {0b111, 1}});
  CHECK(rss(unit, make_solution(unit, {0, 1}, "x")) == 3.0);

  std::mt19937_64 rng(2);
  for (int k = 0; k < 200; ++k) {
    const Instance inst = testing::random_small_instance(rng);
    std::vector<std::size_t> all(inst.num_sets());
    for (std::size_t t = 0; t < all.size(); ++t) all[t] = t;
    const Solution s = make_solution(inst, all, "all");
    const CoverageVector c = coverage(inst, s);
    CHECK((rss(inst, s) == 0.0) == (c.counts == inst.demands()));
  }
}
