// Copyright 2026 The chordgap Authors
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


#pragma once

#include "generators.hpp"

namespace chordgap {

// Validated (alpha, beta, gamma) triple of the chord gap divergence.
// gamma must lie in the closed interval between alpha and beta; lambda is
// the position of gamma on that interval measured from alpha. When
// alpha == beta the triple must satisfy gamma == alpha and lambda is 0.
class ChordGapParams {
 public:
  ChordGapParams(double alpha, double beta, double gamma);

  // alpha = beta = gamma = a: the skew Jensen divergence.
  static ChordGapParams skew(double a) { return {a, a, a}; }

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  double gamma() const { return gamma_; }
  double lambda() const { return lambda_; }

  // gamma(1-gamma) - (gamma-alpha)(beta-gamma); the divergence is a
  // positive multiple of a squared Hessian norm iff this is positive.
  double remainder_weight() const;

  // True when the divergence vanishes identically (gamma in {0,1}, or
  // alpha = 0 with beta = 1 where both chords coincide).
  bool degenerate() const { return remainder_weight() <= 1e-15; }

 private:
  double alpha_;
  double beta_;
  double gamma_;
  double lambda_;
};

// (1 - lambda) p + lambda q.
Vector interpolate(const Vector& p, const Vector& q, double lambda);

double skew_jensen(const ConvexGenerator& f, const Vector& p, const Vector& q, double alpha);

// J^alpha / (alpha (1 - alpha)); alpha must be strictly inside (0, 1).
double scaled_skew_jensen(const ConvexGenerator& f, const Vector& p, const Vector& q,
                          double alpha);

double bregman(const ConvexGenerator& f, const Vector& p, const Vector& q);

// (1 - alpha) B(p : m) + alpha B(q : m) with m = (pq)_alpha. Equal to the
// skew Jensen divergence; kept separate to test that identity.
double jensen_bregman(const ConvexGenerator& f, const Vector& p, const Vector& q, double alpha);

// Vertical gap at abscissa (pq)_gamma between the chord over [p, q] and the
// chord over [(pq)_alpha, (pq)_beta].
double chord_gap(const ConvexGenerator& f, const Vector& p, const Vector& q,
                 const ChordGapParams& params);

// alpha = 0 subfamily: gamma((1/beta - 1) F(p) + F(q) - F((pq)_beta) / beta),
// requires 0 < gamma <= beta <= 1.
double chord_gap_biparam_alpha0(const ConvexGenerator& f, const Vector& p, const Vector& q,
                                double beta, double gamma);

// beta = 1 - alpha subfamily, alpha in [0, 1/2], gamma in [alpha, 1 - alpha].
double chord_gap_biparam_symmetric(const ConvexGenerator& f, const Vector& p, const Vector& q,
                                   double alpha, double gamma);

struct TaylorBounds {
  double lower = 0.0;
  double upper = 0.0;
};

inline constexpr int kHessianSamples = 101;

// Sandwich bounds from the Taylor-Lagrange remainder form. Hessian
// eigenvalue extremes are estimated on `samples` uniform points of [p, q]
// and widened by the largest jump between neighbouring samples.
TaylorBounds taylor_lagrange_bounds(const ConvexGenerator& f, const Vector& p, const Vector& q,
                                    const ChordGapParams& params, int samples = kHessianSamples);

}  // namespace chordgap
