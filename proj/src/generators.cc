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

#include "wsmc/generators.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "wsmc/error.h"

namespace wsmc {

namespace {

// Bit-exact across platforms, unlike the std:: distributions.
class Uniform {
 public:
  explicit Uniform(std::uint64_t seed) : rng_(seed) {}
  double operator()() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }
  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<double>(hi - lo + 1);
    const auto k = static_cast<std::int64_t>(std::floor((*this)() * span));
    return lo + std::min<std::int64_t>(k, hi - lo);
  }

 private:
  std::mt19937_64 rng_;
};

double parse_number(const std::string& text, const std::string& whole) {
  double value = 0.0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || !std::isfinite(value)) {
    throw ArgumentError("bad number \"" + text + "\" in demand spec \"" +
                        whole + "\"");
  }
  return value;
}

std::string format_number(double v) {
  std::ostringstream out;
  out << v;
  return out.str();
}

int to_demand(double draw) {
  const double rounded = std::round(draw);
  if (!(rounded >= 1.0)) return 1;
  return static_cast<int>(std::min(rounded, 1e9));
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

DemandSpec parse_demand_spec(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream stream(text);
  for (std::string part; std::getline(stream, part, ':');) parts.push_back(part);
  if (parts.empty()) throw ArgumentError("empty demand spec");

  const std::string& tag = parts[0];
  DemandSpec spec;
  std::size_t max_params = 1;
  if (tag == "random" || tag == "uniform") {
    spec = {DemandSpec::Kind::kRandom, 1.0, 10.0};
    max_params = 2;
  } else if (tag == "constant") {
    spec = {DemandSpec::Kind::kConstant, 5.0, 0.0};
  } else if (tag == "normal") {
    spec = {DemandSpec::Kind::kNormal, 5.0, 2.0};
    max_params = 2;
  } else if (tag == "exponential") {
    spec = {DemandSpec::Kind::kExponential, 0.2, 0.0};
  } else if (tag == "poisson") {
    spec = {DemandSpec::Kind::kPoisson, 5.0, 0.0};
  } else if (tag == "zipf") {
    spec = {DemandSpec::Kind::kZipf, 2.0, 0.0};
  } else {
    throw ArgumentError("unknown demand distribution \"" + tag + "\"");
  }
  if (parts.size() - 1 > max_params) {
    throw ArgumentError("too many parameters in demand spec \"" + text + "\"");
  }
  if (parts.size() > 1) spec.a = parse_number(parts[1], text);
  if (parts.size() > 2) spec.b = parse_number(parts[2], text);

  switch (spec.kind) {
    case DemandSpec::Kind::kRandom:
      if (spec.a != std::floor(spec.a) || spec.b != std::floor(spec.b) ||
          spec.a > spec.b || spec.a < 0) {
        throw ArgumentError("random demands need integers 0 <= LO <= HI");
      }
      break;
    case DemandSpec::Kind::kConstant:
      if (spec.a != std::floor(spec.a) || spec.a < 0) {
        throw ArgumentError("constant demand must be a non-negative integer");
      }
      break;
    case DemandSpec::Kind::kNormal:
      if (spec.b < 0) throw ArgumentError("normal sigma must be >= 0");
      break;
    case DemandSpec::Kind::kExponential:
    case DemandSpec::Kind::kPoisson:
      if (spec.a <= 0) throw ArgumentError("rate must be positive");
      break;
    case DemandSpec::Kind::kZipf:
      if (spec.a <= 0) throw ArgumentError("zipf exponent must be positive");
      break;
  }
  return spec;
}

std::string to_string(const DemandSpec& spec) {
  switch (spec.kind) {
    case DemandSpec::Kind::kRandom:
      return "random:" + format_number(spec.a) + ":" + format_number(spec.b);
    case DemandSpec::Kind::kConstant:
      return "constant:" + format_number(spec.a);
    case DemandSpec::Kind::kNormal:
      return "normal:" + format_number(spec.a) + ":" + format_number(spec.b);
    case DemandSpec::Kind::kExponential:
      return "exponential:" + format_number(spec.a);
    case DemandSpec::Kind::kPoisson:
      return "poisson:" + format_number(spec.a);
    case DemandSpec::Kind::kZipf:
      return "zipf:" + format_number(spec.a);
  }
  return "unknown";
}

std::vector<int> sample_demands(const DemandSpec& spec, std::size_t ell,
                                std::uint64_t seed) {
  Uniform u(seed);
  std::vector<int> out(ell);
  std::vector<double> zipf_cdf;
  if (spec.kind == DemandSpec::Kind::kZipf) {
    double total = 0.0;
    for (std::size_t k = 1; k <= 10 * std::max<std::size_t>(ell, 1); ++k) {
      total += std::pow(static_cast<double>(k), -spec.a);
      zipf_cdf.push_back(total);
    }
  }
  for (int& q : out) {
    switch (spec.kind) {
      case DemandSpec::Kind::kRandom:
        q = static_cast<int>(u.integer(static_cast<std::int64_t>(spec.a),
                                       static_cast<std::int64_t>(spec.b)));
        break;
      case DemandSpec::Kind::kConstant:
        q = static_cast<int>(spec.a);
        break;
      case DemandSpec::Kind::kNormal: {
        const double u1 = 1.0 - u();  // (0, 1]
        const double u2 = u();
        const double z = std::sqrt(-2.0 * std::log(u1)) *
                         std::cos(2.0 * std::numbers::pi * u2);
        q = to_demand(spec.a + spec.b * z);
        break;
      }
      case DemandSpec::Kind::kExponential:
        q = to_demand(-std::log(1.0 - u()) / spec.a);
        break;
      case DemandSpec::Kind::kPoisson: {
        const double limit = std::exp(-spec.a);
        int k = 0;
        double p = 1.0;
        do {
          ++k;
          p *= u();
        } while (p > limit && k < 1000000);
        q = to_demand(k - 1);
        break;
      }
      case DemandSpec::Kind::kZipf: {
        const double target = u() * zipf_cdf.back();
        const auto it =
            std::upper_bound(zipf_cdf.begin(), zipf_cdf.end(), target);
        const auto k = std::min<std::size_t>(
            static_cast<std::size_t>(it - zipf_cdf.begin()),
            zipf_cdf.size() - 1);
        q = static_cast<int>(k + 1);
        break;
      }
    }
    if (spec.kind != DemandSpec::Kind::kRandom &&
        spec.kind != DemandSpec::Kind::kConstant) {
      q = std::max(q, 1);
    }
  }
  return out;
}

Instance generate_adversarial(std::size_t ell) {
  if (ell < 2) throw ArgumentError("adversarial instances need ell >= 2");
  if (ell > kMaxItems) {
    throw ArgumentError("adversarial instances support ell <= " +
                        std::to_string(kMaxItems));
  }
  std::vector<SetRecord> sets;
  for (std::size_t i = 1; i <= ell; ++i) {
    const ItemMask items = (ItemMask{1} << i) - 1;
    const double weight =
        i == ell ? 1.01 : 1.0 / static_cast<double>(ell - i + 1);
    sets.push_back({items, weight});
  }
  return Instance(default_item_names(ell), std::vector<int>(ell, 1),
                  std::move(sets));
}

Instance generate_random(std::size_t n, std::size_t ell,
                         const DemandSpec& demands, const WeightSpec& weights,
                         std::uint64_t seed, double density) {
  if (n < 1 || ell < 1) throw ArgumentError("need n >= 1 and ell >= 1");
  if (ell > kMaxItems) {
    throw ArgumentError("ell must be at most " + std::to_string(kMaxItems));
  }
  if (!(density >= 0.0 && density <= 1.0)) {
    throw ArgumentError("density must lie in [0, 1]");
  }
  if (!(weights.lo >= 0.0 && weights.lo <= weights.hi) ||
      !std::isfinite(weights.hi)) {
    throw ArgumentError("weights need 0 <= lo <= hi < inf");
  }
  if (weights.integral && std::ceil(weights.lo) > std::floor(weights.hi)) {
    throw ArgumentError("integral weights need an integer in [lo, hi]");
  }
  Uniform u(seed);
  auto draw_items = [&] {
    ItemMask mask = 0;
    for (std::size_t g = 0; g < ell; ++g) {
      if (u() < density) mask |= ItemMask{1} << g;
    }
    return mask;
  };
  std::vector<SetRecord> sets(n);
  std::vector<int> capacity(ell, 0);
  for (SetRecord& s : sets) {
    s.items = draw_items();
    if (s.items == 0) s.items = draw_items();
    if (weights.integral) {
      s.weight = static_cast<double>(
          u.integer(static_cast<std::int64_t>(std::ceil(weights.lo)),
                    static_cast<std::int64_t>(std::floor(weights.hi))));
    } else {
      s.weight = weights.lo + (weights.hi - weights.lo) * u();
    }
    for (std::size_t g : items_of(s.items)) ++capacity[g];
  }
  std::vector<int> q = sample_demands(demands, ell, splitmix64(seed));
  for (std::size_t g = 0; g < ell; ++g) q[g] = std::min(q[g], capacity[g]);
  return Instance(default_item_names(ell), std::move(q), std::move(sets));
}

double rss(const Instance& instance, const Solution& solution) {
  const CoverageVector cover = coverage(instance, solution);
  if (!satisfies_demands(instance, cover)) {
    throw ArgumentError("RSS is only defined for solutions meeting all demands");
  }
  double total = 0.0;
  for (std::size_t g = 0; g < instance.num_items(); ++g) {
    const double d = cover.counts[g] - instance.demands()[g];
    total += d * d;
  }
  return total;
}

}  // namespace wsmc
