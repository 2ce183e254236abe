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

#include "wsmc/piecewise.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "wsmc/error.h"

namespace wsmc {

namespace {

constexpr double kSlopeTolerance = 1e-9;
constexpr double kBisectionTolerance = 1e-9;

double domain_slack(double a, double b) {
  return 1e-12 * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace

PiecewiseLinear::PiecewiseLinear() : xs_{0.0}, ys_{0.0} {}

PiecewiseLinear::PiecewiseLinear(std::vector<double> breakpoints,
                                 std::vector<double> values)
    : xs_(std::move(breakpoints)), ys_(std::move(values)) {
  if (xs_.empty() || xs_.size() != ys_.size()) {
    throw ArgumentError(
        "piecewise function needs matching, non-empty breakpoints and values");
  }
  for (std::size_t j = 0; j < xs_.size(); ++j) {
    if (!std::isfinite(xs_[j]) || !std::isfinite(ys_[j])) {
      throw ArgumentError("piecewise function has a non-finite breakpoint");
    }
    if (j > 0 && !(xs_[j] > xs_[j - 1])) {
      throw ArgumentError("breakpoints must be strictly increasing");
    }
  }
  double previous = 0.0;
  for (std::size_t j = 0; j + 1 < xs_.size(); ++j) {
    const double s = slope(j);
    const double tol = kSlopeTolerance * std::max(1.0, std::abs(s));
    if (s < -tol) {
      throw ArgumentError("piece " + std::to_string(j) + " is decreasing");
    }
    if (j > 0 && s < previous - tol) {
      throw ArgumentError("slopes must be non-decreasing (piece " +
                          std::to_string(j) + ")");
    }
    previous = s;
  }
}

double PiecewiseLinear::slope(std::size_t piece) const {
  return (ys_.at(piece + 1) - ys_[piece]) / (xs_[piece + 1] - xs_[piece]);
}

double PiecewiseLinear::length(std::size_t piece) const {
  return xs_.at(piece + 1) - xs_[piece];
}

std::vector<double> PiecewiseLinear::slopes() const {
  std::vector<double> out(num_pieces());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = slope(j);
  return out;
}

double PiecewiseLinear::operator()(double x) const {
  const double lo = xs_.front();
  const double hi = xs_.back();
  const double slack = domain_slack(lo, hi);
  if (!(x >= lo - slack && x <= hi + slack)) {
    throw ArgumentError("x = " + std::to_string(x) + " outside [" +
                        std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  if (x <= lo) return ys_.front();
  if (x >= hi) return ys_.back();
  const auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
  const std::size_t k = static_cast<std::size_t>(it - xs_.begin()) - 1;
  return ys_[k] + slope(k) * (x - xs_[k]);
}

PiecewiseLinear PiecewiseLinear::merged(double relative_tolerance) const {
  if (xs_.size() <= 2) return *this;
  std::vector<double> xs{xs_.front()};
  std::vector<double> ys{ys_.front()};
  for (std::size_t j = 1; j + 1 < xs_.size(); ++j) {
    const double left = (ys_[j] - ys.back()) / (xs_[j] - xs.back());
    const double right = slope(j);
    const double scale = std::max({std::abs(left), std::abs(right), 1e-300});
    if (std::abs(left - right) <= relative_tolerance * scale ||
        (left == 0.0 && right == 0.0)) {
      continue;
    }
    xs.push_back(xs_[j]);
    ys.push_back(ys_[j]);
  }
  xs.push_back(xs_.back());
  ys.push_back(ys_.back());
  return PiecewiseLinear(std::move(xs), std::move(ys));
}

EnvelopeParams envelope_params(const ConvexFunction& f, double epsilon,
                               double alpha, double beta) {
  return EnvelopeParams{epsilon, alpha, beta, f(alpha), f(beta)};
}

double eval_fhat(const Bucket& bucket, double x) {
  const double n = static_cast<double>(bucket.size());
  if (!(x >= 0.0 && x <= n)) {
    throw ArgumentError("x = " + std::to_string(x) + " outside [0, " +
                        std::to_string(bucket.size()) + "]");
  }
  const auto z = static_cast<std::size_t>(std::floor(x));
  if (z >= bucket.size()) return bucket.prefix.back();
  return bucket.prefix[z] + bucket.weights[z] * (x - static_cast<double>(z));
}

PiecewiseLinear fhat_function(const Bucket& bucket) {
  if (bucket.size() == 0) return PiecewiseLinear();
  std::vector<double> xs(bucket.size() + 1);
  for (std::size_t z = 0; z < xs.size(); ++z) xs[z] = static_cast<double>(z);
  return PiecewiseLinear(std::move(xs), bucket.prefix);
}

namespace {

void check_largest_val_args(double fx, double x_i, double budget,
                            double beta) {
  if (x_i > beta) {
    throw ArgumentError("largest_val: start point lies beyond beta");
  }
  if (fx > budget + 1e-12 * std::max(1.0, std::abs(budget))) {
    throw ArgumentError("largest_val: f(x_i) exceeds the budget");
  }
}

}  // namespace

double largest_val(const ConvexFunction& f, double x_i, double budget,
                   double beta) {
  check_largest_val_args(f(x_i), x_i, budget, beta);
  if (f(beta) <= budget) return beta;
  double lo = x_i;
  double hi = beta;
  while (hi - lo > kBisectionTolerance) {
    const double mid = lo + (hi - lo) / 2;
    if (f(mid) <= budget) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

double largest_val(const PiecewiseLinear& f, double x_i, double budget,
                   double beta) {
  check_largest_val_args(f(x_i), x_i, budget, beta);
  if (f(beta) <= budget) return beta;
  const std::vector<double>& xs = f.breakpoints();
  const std::vector<double>& ys = f.values();
  auto it = std::upper_bound(xs.begin(), xs.end(), x_i);
  std::size_t k = static_cast<std::size_t>(it - xs.begin());
  // f(beta) > budget guarantees a crossing before beta.
  while (k < xs.size() && xs[k] < beta && ys[k] <= budget) ++k;
  const std::size_t piece = k - 1;
  const double s = f.slope(piece);
  const double start = std::max(x_i, xs[piece]);
  const double x = start + (budget - f(start)) / s;
  return std::clamp(x, x_i, beta);
}

namespace {

void check_params(const EnvelopeParams& p) {
  if (!(p.epsilon > 0.0) || !std::isfinite(p.epsilon)) {
    throw ArgumentError("epsilon must be positive and finite");
  }
  if (!(p.alpha <= p.beta)) {
    throw ArgumentError("envelope domain needs alpha <= beta");
  }
  if (!(p.gamma <= p.delta)) {
    throw ArgumentError("envelope range needs gamma <= delta");
  }
  if (p.gamma <= 0.0 && p.delta > p.gamma) {
    throw ArgumentError("envelope needs f(alpha) > 0 for a non-constant f");
  }
}

template <typename F, typename Next>
PiecewiseLinear build_envelope(const F& f, const EnvelopeParams& p,
                               Next next_breakpoint) {
  check_params(p);
  if (p.alpha == p.beta) {
    return PiecewiseLinear({p.alpha}, {f(p.alpha)});
  }
  std::vector<double> xs{p.alpha};
  std::vector<double> ys{f(p.alpha)};
  double x = p.alpha;
  while (x < p.beta) {
    double next = next_breakpoint(x, (1.0 + p.epsilon) * ys.back());
    if (!(next > x)) next = std::min(p.beta, x + kBisectionTolerance);
    // Avoid a sliver piece from bisection landing just short of beta.
    if (p.beta - next <= kBisectionTolerance && f(p.beta) <= (1.0 + p.epsilon) * ys.back()) {
      next = p.beta;
    }
    xs.push_back(next);
    ys.push_back(f(next));
    x = next;
  }
  return PiecewiseLinear(std::move(xs), std::move(ys)).merged();
}

}  // namespace

PiecewiseLinear approx_convex(const ConvexFunction& f,
                              const EnvelopeParams& params) {
  return build_envelope(f, params, [&](double x, double budget) {
    return largest_val(f, x, budget, params.beta);
  });
}

PiecewiseLinear approx_convex(const PiecewiseLinear& f,
                              const EnvelopeParams& params) {
  const std::vector<double>& xs = f.breakpoints();
  return build_envelope(f, params, [&](double x, double budget) {
    const double reach = largest_val(f, x, budget, params.beta);
    const auto it = std::upper_bound(xs.begin(), xs.end(), x);
    const double piece_end = it == xs.end() ? params.beta : *it;
    return std::min(params.beta, std::max(reach, piece_end));
  });
}

PiecewiseLinear compress_bucket(const Bucket& bucket, double epsilon) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw ArgumentError("epsilon must be positive and finite");
  }
  const std::size_t n = bucket.size();
  if (n == 0) return PiecewiseLinear();
  const PiecewiseLinear fhat = fhat_function(bucket);
  std::size_t first_positive = 1;
  while (first_positive <= n && bucket.prefix[first_positive] <= 0.0) {
    ++first_positive;
  }
  if (first_positive > n) return fhat.merged();

  std::vector<double> xs;
  std::vector<double> ys;
  for (std::size_t z = 0; z <= first_positive; ++z) {
    xs.push_back(static_cast<double>(z));
    ys.push_back(bucket.prefix[z]);
  }
  const auto alpha = static_cast<double>(first_positive);
  const auto beta = static_cast<double>(n);
  const EnvelopeParams params{epsilon, alpha, beta, fhat(alpha), fhat(beta)};
  const PiecewiseLinear tail = approx_convex(fhat, params);
  for (std::size_t j = 1; j < tail.breakpoints().size(); ++j) {
    xs.push_back(tail.breakpoints()[j]);
    ys.push_back(tail.values()[j]);
  }
  return PiecewiseLinear(std::move(xs), std::move(ys)).merged();
}

}  // namespace wsmc
