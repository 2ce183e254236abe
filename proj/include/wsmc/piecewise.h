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

// Convex, non-decreasing piecewise-linear functions: evaluation of a bucket's
// interpolated cost, and multiplicative upper envelopes with few pieces.

#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "wsmc/instance.h"

namespace wsmc {

class PiecewiseLinear {
 public:
  /// The zero function on [0, 0].
  PiecewiseLinear();
  /// Throws ArgumentError unless breakpoints strictly increase and the
  /// derived slopes are non-negative and non-decreasing (up to rounding).
  PiecewiseLinear(std::vector<double> breakpoints, std::vector<double> values);

  const std::vector<double>& breakpoints() const { return xs_; }
  const std::vector<double>& values() const { return ys_; }
  std::size_t num_pieces() const { return xs_.size() - 1; }
  double domain_begin() const { return xs_.front(); }
  double domain_end() const { return xs_.back(); }
  double slope(std::size_t piece) const;
  double length(std::size_t piece) const;
  std::vector<double> slopes() const;

  /// Throws ArgumentError outside the domain.
  double operator()(double x) const;

  /// Joins neighbouring pieces whose slopes agree to a relative tolerance.
  PiecewiseLinear merged(double relative_tolerance = 1e-12) const;

 private:
  std::vector<double> xs_;
  std::vector<double> ys_;
};

using ConvexFunction = std::function<double(double)>;

struct EnvelopeParams {
  double epsilon = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;  // f(alpha)
  double delta = 0.0;  // f(beta)
};

EnvelopeParams envelope_params(const ConvexFunction& f, double epsilon,
                               double alpha, double beta);

/// Linear interpolation of the bucket's prefix sums on [0, size].
double eval_fhat(const Bucket& bucket, double x);
PiecewiseLinear fhat_function(const Bucket& bucket);

/// Largest x' in [x_i, beta] with f(x') <= budget. The general version
/// bisects to 1e-9 in x; the piecewise one inverts the crossing piece.
double largest_val(const ConvexFunction& f, double x_i, double budget,
                   double beta);
double largest_val(const PiecewiseLinear& f, double x_i, double budget,
                   double beta);

/// Upper envelope g with f <= g <= (1 + epsilon) f on [alpha, beta], built by
/// chaining largest_val from alpha.
PiecewiseLinear approx_convex(const ConvexFunction& f,
                              const EnvelopeParams& params);

/// Same contract for piecewise-linear input. A step never stops short of the
/// end of the piece it starts in, so inputs with few pieces are reproduced
/// exactly when epsilon is tiny.
PiecewiseLinear approx_convex(const PiecewiseLinear& f,
                              const EnvelopeParams& params);

/// Envelope of the bucket's interpolated cost: exact up to the first integer
/// with positive cost, then approx_convex for the remainder.
PiecewiseLinear compress_bucket(const Bucket& bucket, double epsilon);

}  // namespace wsmc
