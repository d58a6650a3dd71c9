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


#include "divergences.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "errors.hpp"

namespace chordgap {

namespace {

void require_unit(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw ParameterError(std::string(name) + " must lie in [0, 1], got " + std::to_string(v));
  }
}

void require_pair(const ConvexGenerator& f, const Vector& p, const Vector& q) {
  f.require_point(p, "first argument");
  f.require_point(q, "second argument");
}

}  // namespace

ChordGapParams::ChordGapParams(double alpha, double beta, double gamma)
    : alpha_(alpha), beta_(beta), gamma_(gamma), lambda_(0.0) {
  require_unit(alpha, "alpha");
  require_unit(beta, "beta");
  require_unit(gamma, "gamma");
  if (alpha == beta) {
    if (gamma != alpha) {
      throw ParameterError("alpha == beta forces gamma == alpha");
    }
    return;
  }
  const double lo = std::min(alpha, beta);
  const double hi = std::max(alpha, beta);
  if (gamma < lo || gamma > hi) {
    throw ParameterError("gamma must lie between alpha and beta");
  }
  lambda_ = std::clamp((gamma - alpha) / (beta - alpha), 0.0, 1.0);
}

double ChordGapParams::remainder_weight() const {
  return gamma_ * (1.0 - gamma_) - (gamma_ - alpha_) * (beta_ - gamma_);
}

Vector interpolate(const Vector& p, const Vector& q, double lambda) {
  if (p.size() != q.size()) throw DataError("interpolate: dimension mismatch");
  return (1.0 - lambda) * p + lambda * q;
}

double skew_jensen(const ConvexGenerator& f, const Vector& p, const Vector& q, double alpha) {
  require_unit(alpha, "alpha");
  require_pair(f, p, q);
  if (p == q) return 0.0;
  return (1.0 - alpha) * f.eval(p) + alpha * f.eval(q) - f.eval(interpolate(p, q, alpha));
}

double scaled_skew_jensen(const ConvexGenerator& f, const Vector& p, const Vector& q,
                          double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw ParameterError("scaled skew Jensen needs alpha in (0, 1); use bregman at the ends");
  }
  return skew_jensen(f, p, q, alpha) / (alpha * (1.0 - alpha));
}

double bregman(const ConvexGenerator& f, const Vector& p, const Vector& q) {
  require_pair(f, p, q);
  return f.eval(p) - f.eval(q) - (p - q).dot(f.grad(q));
}

double jensen_bregman(const ConvexGenerator& f, const Vector& p, const Vector& q, double alpha) {
  require_unit(alpha, "alpha");
  require_pair(f, p, q);
  if (p == q) return 0.0;
  const Vector m = interpolate(p, q, alpha);
  const double fm = f.eval(m);
  const Vector gm = f.grad(m);
  const double bp = f.eval(p) - fm - (p - m).dot(gm);
  const double bq = f.eval(q) - fm - (q - m).dot(gm);
  return (1.0 - alpha) * bp + alpha * bq;
}

double chord_gap(const ConvexGenerator& f, const Vector& p, const Vector& q,
                 const ChordGapParams& params) {
  require_pair(f, p, q);
  // (1-t)p + tp need not round to p; coincident arguments are exactly 0.
  if (p == q) return 0.0;
  const double fp = f.eval(p);
  const double fq = f.eval(q);
  const double upper = (1.0 - params.gamma()) * fp + params.gamma() * fq;
  const double lambda = params.lambda();
  const double fa = f.eval(interpolate(p, q, params.alpha()));
  if (params.alpha() == params.beta()) return upper - fa;
  const double fb = f.eval(interpolate(p, q, params.beta()));
  return upper - ((1.0 - lambda) * fa + lambda * fb);
}

double chord_gap_biparam_alpha0(const ConvexGenerator& f, const Vector& p, const Vector& q,
                                double beta, double gamma) {
  if (!(beta > 0.0 && beta <= 1.0)) {
    throw ParameterError("beta must lie in (0, 1]; the beta -> 0 limit is a Bregman divergence");
  }
  if (!(gamma > 0.0 && gamma <= beta)) throw ParameterError("gamma must lie in (0, beta]");
  require_pair(f, p, q);
  if (p == q) return 0.0;
  const double fb = f.eval(interpolate(p, q, beta));
  return gamma * ((1.0 / beta - 1.0) * f.eval(p) + f.eval(q) - fb / beta);
}

double chord_gap_biparam_symmetric(const ConvexGenerator& f, const Vector& p, const Vector& q,
                                   double alpha, double gamma) {
  if (!(alpha >= 0.0 && alpha <= 0.5)) throw ParameterError("alpha must lie in [0, 1/2]");
  return chord_gap(f, p, q, ChordGapParams(alpha, 1.0 - alpha, gamma));
}

TaylorBounds taylor_lagrange_bounds(const ConvexGenerator& f, const Vector& p, const Vector& q,
                                    const ChordGapParams& params, int samples) {
  require_pair(f, p, q);
  if (samples < 2) throw ParameterError("need at least two Hessian samples");
  const double dist2 = (p - q).squaredNorm();
  if (dist2 == 0.0) return {0.0, 0.0};

  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  double prev_lo = 0.0;
  double prev_hi = 0.0;
  double jump = 0.0;
  for (int k = 0; k < samples; ++k) {
    const double t = static_cast<double>(k) / (samples - 1);
    Eigen::SelfAdjointEigenSolver<Matrix> es(f.hessian(interpolate(p, q, t)),
                                             Eigen::EigenvaluesOnly);
    const double e_lo = es.eigenvalues().minCoeff();
    const double e_hi = es.eigenvalues().maxCoeff();
    if (k > 0) {
      jump = std::max({jump, std::abs(e_lo - prev_lo), std::abs(e_hi - prev_hi)});
    }
    prev_lo = e_lo;
    prev_hi = e_hi;
    lo = std::min(lo, e_lo);
    hi = std::max(hi, e_hi);
  }
  lo = std::max(0.0, lo - jump);
  hi += jump;

  // J = (1/2)|p-q|^2 [gamma(1-gamma) h' - lambda(1-lambda)(alpha-beta)^2 h''] with
  // h', h'' directional curvatures somewhere on [p, q].
  const double outer = params.gamma() * (1.0 - params.gamma());
  const double diff = params.alpha() - params.beta();
  const double inner = params.lambda() * (1.0 - params.lambda()) * diff * diff;
  TaylorBounds b;
  b.lower = std::max(0.0, 0.5 * dist2 * (outer * lo - inner * hi));
  b.upper = 0.5 * dist2 * (outer * hi - inner * lo);
  return b;
}

}  // namespace chordgap
