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

// Algorithm dispatch and the benchmark runner behind `wsmc bench`.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "wsmc/generators.h"
#include "wsmc/instance.h"

namespace wsmc {

/// Algorithm tags: dp, bf, 2approx, 2eps, greedy, rrlp.
const std::vector<std::string>& algorithm_names();

/// Runs one algorithm. `epsilon` only matters for 2eps and `seed` only for
/// rrlp. Throws ArgumentError for unknown tags.
Solution run_algorithm(const Instance& instance, const std::string& algorithm,
                       double epsilon, std::uint64_t seed);

struct BenchmarkRow {
  std::string algorithm;
  std::size_t n = 0;
  std::size_t ell = 0;
  std::string demand_spec;
  std::uint64_t seed = 0;
  std::optional<double> total_weight;
  std::optional<double> rss;
  std::optional<double> runtime_ms;
  std::string status;  // ok, infeasible or solver-error
};

struct RandomSweep {
  std::vector<std::size_t> n;
  std::vector<std::size_t> ell;
  std::vector<std::string> demands{"random:1:10"};
  WeightSpec weights;
  double density = 0.3;
};

struct BenchConfig {
  std::vector<std::string> algorithms;
  double epsilon = 0.2;
  std::size_t repetitions = 1;
  std::vector<std::uint64_t> seeds{1};
  std::vector<std::string> instances;  // JSON instance files
  std::vector<std::size_t> adversarial;  // ell values
  std::vector<RandomSweep> random;
  std::size_t threads = 1;
};

/// Throws ArgumentError on unknown keys, algorithms or malformed values.
BenchConfig parse_bench_config(const std::string& json_text);

/// One row per (instance, seed, algorithm, repetition), in that nesting
/// order. Instance files are read before any timing starts. Cells that fail
/// are reported through their status; the run continues.
std::vector<BenchmarkRow> run_benchmark(const BenchConfig& config);

inline constexpr const char* kCsvHeader =
    "algorithm,n,ell,demand_spec,seed,total_weight,rss,runtime_ms,status";

void write_csv(std::ostream& out, const std::vector<BenchmarkRow>& rows);

/// Averages repetitions of the same (algorithm, n, ell, demand_spec, seed)
/// cell over their successful runs, keeping first-appearance order.
std::vector<BenchmarkRow> aggregate_mean(const std::vector<BenchmarkRow>& rows);

/// Shortest text that reads back as the same double.
std::string format_double(double value);

}  // namespace wsmc
