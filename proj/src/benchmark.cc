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

#include "wsmc/benchmark.h"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <map>
#include <thread>
#include <tuple>

#include "json.hpp"
#include "wsmc/approx.h"
#include "wsmc/baselines.h"
#include "wsmc/error.h"
#include "wsmc/exact.h"
#include "wsmc/io.h"

namespace wsmc {

using nlohmann::json;

const std::vector<std::string>& algorithm_names() {
  static const std::vector<std::string> names{"dp",     "bf",     "2approx",
                                              "2eps",   "greedy", "rrlp"};
  return names;
}

Solution run_algorithm(const Instance& instance, const std::string& algorithm,
                       double epsilon, std::uint64_t seed) {
  if (algorithm == "dp") return solve_dp(instance);
  if (algorithm == "bf") return solve_bruteforce(instance);
  if (algorithm == "2approx") return solve_2approx(instance);
  if (algorithm == "2eps") return solve_2eps(instance, epsilon);
  if (algorithm == "greedy") return solve_greedy(instance);
  if (algorithm == "rrlp") return solve_rrlp(instance, seed);
  throw ArgumentError("unknown algorithm \"" + algorithm + "\"");
}

namespace {

template <typename T>
std::vector<T> list_of(const json& value, const char* key) {
  if (value.is_array()) return value.get<std::vector<T>>();
  if (value.is_number()) return {value.get<T>()};
  throw ArgumentError(std::string("\"") + key +
                      "\" must be a number or a list of numbers");
}

void reject_unknown_keys(const json& object,
                         const std::vector<std::string>& known,
                         const std::string& where) {
  for (const auto& [key, _] : object.items()) {
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      throw ArgumentError("unknown key \"" + key + "\" in " + where);
    }
  }
}

RandomSweep parse_random_sweep(const json& doc) {
  if (!doc.is_object()) throw ArgumentError("random sweeps must be objects");
  reject_unknown_keys(doc, {"n", "ell", "demands", "weights", "density"},
                      "random sweep");
  RandomSweep sweep;
  if (!doc.contains("n") || !doc.contains("ell")) {
    throw ArgumentError("random sweeps need \"n\" and \"ell\"");
  }
  sweep.n = list_of<std::size_t>(doc["n"], "n");
  sweep.ell = list_of<std::size_t>(doc["ell"], "ell");
  if (doc.contains("demands")) {
    const json& d = doc["demands"];
    sweep.demands = d.is_string() ? std::vector<std::string>{d.get<std::string>()}
                                  : d.get<std::vector<std::string>>();
  }
  for (const std::string& spec : sweep.demands) parse_demand_spec(spec);
  if (doc.contains("weights")) {
    const auto w = doc["weights"].get<std::vector<double>>();
    if (w.size() != 2) throw ArgumentError("\"weights\" must be [lo, hi]");
    sweep.weights.lo = w[0];
    sweep.weights.hi = w[1];
  }
  if (doc.contains("density")) sweep.density = doc["density"].get<double>();
  return sweep;
}

struct Source {
  Instance instance;
  std::string demand_spec;
  std::vector<std::uint64_t> seeds;
};

std::string file_label(const std::string& path) {
  return "file:" + std::filesystem::path(path).filename().string();
}

std::vector<Source> build_sources(const BenchConfig& config) {
  std::vector<Source> sources;
  for (const std::string& path : config.instances) {
    sources.push_back({load_instance_json(path), file_label(path), config.seeds});
  }
  for (std::size_t ell : config.adversarial) {
    sources.push_back({generate_adversarial(ell), "adversarial", config.seeds});
  }
  for (const RandomSweep& sweep : config.random) {
    for (std::size_t n : sweep.n) {
      for (std::size_t ell : sweep.ell) {
        for (const std::string& text : sweep.demands) {
          const DemandSpec spec = parse_demand_spec(text);
          for (std::uint64_t seed : config.seeds) {
            sources.push_back({generate_random(n, ell, spec, sweep.weights,
                                               seed, sweep.density),
                               to_string(spec),
                               {seed}});
          }
        }
      }
    }
  }
  return sources;
}

struct Cell {
  const Source* source;
  std::string algorithm;
  std::uint64_t seed;
};

BenchmarkRow run_cell(const Cell& cell, double epsilon) {
  const Instance& instance = cell.source->instance;
  BenchmarkRow row;
  row.algorithm = cell.algorithm;
  row.n = instance.num_sets();
  row.ell = instance.num_items();
  row.demand_spec = cell.source->demand_spec;
  row.seed = cell.seed;
  try {
    const auto start = std::chrono::steady_clock::now();
    const Solution sol = run_algorithm(instance, cell.algorithm, epsilon, cell.seed);
    const auto stop = std::chrono::steady_clock::now();
    const auto us =
        std::chrono::duration_cast<std::chrono::microseconds>(stop - start);
    row.total_weight = sol.total_weight;
    row.rss = rss(instance, sol);
    row.runtime_ms = static_cast<double>(us.count()) / 1000.0;
    row.status = "ok";
  } catch (const InfeasibleError&) {
    row.status = "infeasible";
  } catch (const std::exception&) {
    row.status = "solver-error";
  }
  return row;
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n\r") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

BenchConfig parse_bench_config(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ArgumentError(std::string("bench config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ArgumentError("bench config must be a JSON object");
  reject_unknown_keys(doc,
                      {"algorithms", "eps", "repetitions", "seeds", "instances",
                       "sweeps", "threads"},
                      "bench config");
  BenchConfig config;
  try {
    if (doc.contains("algorithms")) {
      config.algorithms = doc["algorithms"].get<std::vector<std::string>>();
    }
    for (const std::string& a : config.algorithms) {
      const auto& names = algorithm_names();
      if (std::find(names.begin(), names.end(), a) == names.end()) {
        throw ArgumentError("unknown algorithm \"" + a + "\" in bench config");
      }
    }
    if (doc.contains("eps")) config.epsilon = doc["eps"].get<double>();
    if (!(config.epsilon > 0.0)) throw ArgumentError("eps must be positive");
    if (doc.contains("repetitions")) {
      config.repetitions = doc["repetitions"].get<std::size_t>();
    }
    if (config.repetitions == 0) throw ArgumentError("repetitions must be >= 1");
    if (doc.contains("seeds")) {
      config.seeds = list_of<std::uint64_t>(doc["seeds"], "seeds");
    }
    if (config.seeds.empty()) throw ArgumentError("seeds must not be empty");
    if (doc.contains("instances")) {
      config.instances = doc["instances"].get<std::vector<std::string>>();
    }
    if (doc.contains("threads")) config.threads = doc["threads"].get<std::size_t>();
    if (config.threads == 0) config.threads = 1;
    if (doc.contains("sweeps")) {
      const json& sweeps = doc["sweeps"];
      if (!sweeps.is_object()) throw ArgumentError("\"sweeps\" must be an object");
      reject_unknown_keys(sweeps, {"adversarial", "random"}, "sweeps");
      if (sweeps.contains("adversarial")) {
        const json& adv = sweeps["adversarial"];
        const json& ell = adv.is_object() ? adv.at("ell") : adv;
        config.adversarial = list_of<std::size_t>(ell, "ell");
      }
      if (sweeps.contains("random")) {
        const json& random = sweeps["random"];
        if (random.is_array()) {
          for (const json& s : random) config.random.push_back(parse_random_sweep(s));
        } else {
          config.random.push_back(parse_random_sweep(random));
        }
      }
    }
  } catch (const json::exception& e) {
    throw ArgumentError(std::string("bad bench config: ") + e.what());
  }
  return config;
}

std::vector<BenchmarkRow> run_benchmark(const BenchConfig& config) {
  const std::vector<Source> sources = build_sources(config);
  std::vector<Cell> cells;
  for (const Source& source : sources) {
    for (std::uint64_t seed : source.seeds) {
      for (const std::string& algorithm : config.algorithms) {
        for (std::size_t rep = 0; rep < config.repetitions; ++rep) {
          cells.push_back({&source, algorithm, seed});
        }
      }
    }
  }
  std::vector<BenchmarkRow> rows(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      rows[i] = run_cell(cells[i], config.epsilon);
    }
  };
  const std::size_t threads = std::min(config.threads, std::max<std::size_t>(cells.size(), 1));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
  }
  return rows;
}

std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

void write_csv(std::ostream& out, const std::vector<BenchmarkRow>& rows) {
  out << kCsvHeader << '\n';
  for (const BenchmarkRow& row : rows) {
    out << csv_field(row.algorithm) << ',' << row.n << ',' << row.ell << ','
        << csv_field(row.demand_spec) << ',' << row.seed << ',';
    if (row.total_weight) out << format_double(*row.total_weight);
    out << ',';
    if (row.rss) out << format_double(*row.rss);
    out << ',';
    if (row.runtime_ms) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3f", *row.runtime_ms);
      out << buf;
    }
    out << ',' << row.status << '\n';
  }
}

std::vector<BenchmarkRow> aggregate_mean(const std::vector<BenchmarkRow>& rows) {
  using Key = std::tuple<std::string, std::size_t, std::size_t, std::string,
                         std::uint64_t>;
  struct Accumulator {
    BenchmarkRow first;
    std::size_t ok = 0;
    double weight = 0.0, rss = 0.0, runtime = 0.0;
  };
  std::map<Key, std::size_t> slot;
  std::vector<Accumulator> acc;
  for (const BenchmarkRow& row : rows) {
    const Key key{row.algorithm, row.n, row.ell, row.demand_spec, row.seed};
    auto [it, inserted] = slot.emplace(key, acc.size());
    if (inserted) acc.push_back({row});
    Accumulator& a = acc[it->second];
    if (row.status != "ok") continue;
    ++a.ok;
    a.weight += row.total_weight.value_or(0.0);
    a.rss += row.rss.value_or(0.0);
    a.runtime += row.runtime_ms.value_or(0.0);
  }
  std::vector<BenchmarkRow> out;
  for (const Accumulator& a : acc) {
    BenchmarkRow row = a.first;
    if (a.ok > 0) {
      const auto k = static_cast<double>(a.ok);
      row.total_weight = a.weight / k;
      row.rss = a.rss / k;
      row.runtime_ms = a.runtime / k;
      row.status = "ok";
    }
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace wsmc
