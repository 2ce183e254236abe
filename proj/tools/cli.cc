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

#include "cli.h"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "wsmc/benchmark.h"
#include "wsmc/error.h"
#include "wsmc/generators.h"
#include "wsmc/io.h"

namespace wsmc::cli {

namespace {

using nlohmann::json;

struct InputOptions {
  std::string path;
  std::vector<std::string> items;
  std::string weight_column = "weight";
  std::vector<int> demands;

  void attach(CLI::App* cmd) {
    cmd->add_option("--input", path, "Instance file (.json or .csv)")
        ->required();
    cmd->add_option("--items", items, "CSV item columns (default: all but the weight)")
        ->delimiter(',');
    cmd->add_option("--weight-col", weight_column, "CSV weight column");
    cmd->add_option("--demands", demands, "CSV demands, one per item column")
        ->delimiter(',');
  }

  Instance load() const {
    const std::filesystem::path file(path);
    std::string ext = file.extension().string();
    for (char& c : ext) c = static_cast<char>(std::tolower(c));
    if (ext != ".csv") return load_instance_json(file);
    const Table table = load_csv(file);
    std::vector<std::string> columns = items;
    if (columns.empty()) {
      for (const std::string& h : table.header) {
        if (h != weight_column) columns.push_back(h);
      }
    }
    if (demands.size() != columns.size()) {
      throw ArgumentError("--demands needs one value per item column (" +
                          std::to_string(columns.size()) + " expected, " +
                          std::to_string(demands.size()) + " given)");
    }
    return ingest_tabular(table, columns, weight_column, demands);
  }
};

// Writes to --output when given, otherwise to `out`.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : out_(&fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw IngestError("cannot write " + path);
      out_ = &file_;
    }
  }
  std::ostream& stream() { return *out_; }

 private:
  std::ofstream file_;
  std::ostream* out_;
};

json report_json(const FeasibilityReport& report) {
  return json{{"feasible", report.feasible},
              {"capacity", report.capacity},
              {"demand", report.demand}};
}

int solve(const InputOptions& input, const std::string& algo, double eps,
          std::uint64_t seed, const std::string& format,
          const std::string& output, bool timing, std::ostream& out) {
  const Instance instance = input.load();
  const auto start = std::chrono::steady_clock::now();
  const Solution sol = run_algorithm(instance, algo, eps, seed);
  const auto stop = std::chrono::steady_clock::now();
  const double ms =
      static_cast<double>(
          std::chrono::duration_cast<std::chrono::microseconds>(stop - start)
              .count()) /
      1000.0;
  const double residual = rss(instance, sol);

  Sink sink(output, out);
  if (format == "csv") {
    BenchmarkRow row;
    row.algorithm = algo;
    row.n = instance.num_sets();
    row.ell = instance.num_items();
    row.demand_spec =
        "file:" + std::filesystem::path(input.path).filename().string();
    row.seed = seed;
    row.total_weight = sol.total_weight;
    row.rss = residual;
    if (timing) row.runtime_ms = ms;
    row.status = "ok";
    write_csv(sink.stream(), {row});
    return kOk;
  }
  json doc{{"algorithm", sol.algorithm},
           {"selected", sol.selected},
           {"total_weight", sol.total_weight},
           {"rss", residual},
           {"runtime_ms", timing ? json(ms) : json(nullptr)},
           {"seed", sol.seed ? json(*sol.seed) : json(nullptr)}};
  sink.stream() << doc.dump(2) << '\n';
  return kOk;
}

int generate(const std::string& family, std::size_t ell, std::size_t n,
             std::uint64_t seed, const std::string& demand_spec,
             double density, double weight_min, double weight_max,
             const std::string& output, std::ostream& out) {
  Instance instance;
  if (family == "adversarial") {
    instance = generate_adversarial(ell);
  } else {
    if (n == 0) throw ArgumentError("random instances need --n >= 1");
    WeightSpec weights{weight_min, weight_max, true};
    instance = generate_random(n, ell, parse_demand_spec(demand_spec), weights,
                               seed, density);
  }
  Sink sink(output, out);
  sink.stream() << dump_instance(instance);
  return kOk;
}

int bench(const std::string& config_path, const std::string& output,
          bool aggregate, std::optional<std::size_t> threads,
          std::ostream& out) {
  std::ifstream in(config_path);
  if (!in) throw IngestError("cannot open " + config_path);
  std::stringstream text;
  text << in.rdbuf();
  BenchConfig config = parse_bench_config(text.str());
  if (threads) config.threads = std::max<std::size_t>(*threads, 1);
  std::vector<BenchmarkRow> rows = run_benchmark(config);
  if (aggregate) rows = aggregate_mean(rows);
  Sink sink(output, out);
  write_csv(sink.stream(), rows);
  return kOk;
}

int validate_cmd(const InputOptions& input, std::ostream& out) {
  const Instance instance = input.load();
  const FeasibilityReport report = validate(instance);
  json doc = report_json(report);
  doc["items"] = instance.num_items();
  doc["sets"] = instance.num_sets();
  doc["buckets"] = BucketIndex(instance).num_buckets();
  out << doc.dump(2) << '\n';
  return report.feasible ? kOk : kInfeasible;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Weighted set multi-cover solvers", "wsmc"};
  app.require_subcommand(1);

  // solve
  InputOptions solve_input;
  std::string algo;
  double eps = 0.2;
  std::uint64_t seed = 1;
  std::string format = "json";
  std::string solve_output;
  bool no_timing = false;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Solve one instance");
  solve_input.attach(solve_cmd);
  solve_cmd->add_option("--algo", algo, "Algorithm")
      ->required()
      ->check(CLI::IsMember(algorithm_names()));
  solve_cmd->add_option("--eps", eps, "Slack for 2eps")->capture_default_str();
  solve_cmd->add_option("--seed", seed, "Seed for rrlp")->capture_default_str();
  solve_cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  solve_cmd->add_option("--output", solve_output, "Output file");
  solve_cmd->add_flag("--no-timing", no_timing,
                      "Omit runtime_ms for reproducible output");

  // generate
  std::string family;
  std::size_t gen_ell = 0;
  std::size_t gen_n = 0;
  std::uint64_t gen_seed = 1;
  std::string gen_demands = "random:1:10";
  double density = 0.3;
  double weight_min = 1.0;
  double weight_max = 1000.0;
  std::string gen_output;
  CLI::App* gen_cmd = app.add_subcommand("generate", "Write a generated instance");
  gen_cmd->add_option("family", family, "adversarial or random")
      ->required()
      ->check(CLI::IsMember({"adversarial", "random"}));
  gen_cmd->add_option("--ell", gen_ell, "Number of items")->required();
  gen_cmd->add_option("--n", gen_n, "Number of sets (random)");
  gen_cmd->add_option("--seed", gen_seed, "Seed")->capture_default_str();
  gen_cmd->add_option("--demands", gen_demands, "Demand distribution")
      ->capture_default_str();
  gen_cmd->add_option("--density", density, "Membership probability")
      ->capture_default_str();
  gen_cmd->add_option("--weight-min", weight_min)->capture_default_str();
  gen_cmd->add_option("--weight-max", weight_max)->capture_default_str();
  gen_cmd->add_option("--output", gen_output, "Output file");

  // bench
  std::string config_path;
  std::string bench_output;
  bool aggregate = false;
  std::optional<std::size_t> threads;
  CLI::App* bench_cmd = app.add_subcommand("bench", "Run a benchmark sweep");
  bench_cmd->add_option("--config", config_path, "JSON config")->required();
  bench_cmd->add_option("--output", bench_output, "CSV file");
  bench_cmd->add_flag("--aggregate", aggregate, "Average repetitions");
  bench_cmd->add_option("--threads", threads, "Worker threads");

  // validate
  InputOptions validate_input;
  CLI::App* validate_sub = app.add_subcommand("validate", "Check feasibility");
  validate_input.attach(validate_sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageOrSolverError;
  }

  try {
    if (solve_cmd->parsed()) {
      return solve(solve_input, algo, eps, seed, format, solve_output,
                   !no_timing, out);
    }
    if (gen_cmd->parsed()) {
      return generate(family, gen_ell, gen_n, gen_seed, gen_demands, density,
                      weight_min, weight_max, gen_output, out);
    }
    if (bench_cmd->parsed()) {
      return bench(config_path, bench_output, aggregate, threads, out);
    }
    return validate_cmd(validate_input, out);
  } catch (const InfeasibleError& e) {
    err << "error: instance is infeasible: "
        << report_json(e.report()).dump() << '\n';
    return kInfeasible;
  } catch (const IngestError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageOrSolverError;
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("wsmc");
  for (const std::string& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace wsmc::cli
