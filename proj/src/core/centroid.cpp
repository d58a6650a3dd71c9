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


#include "centroid.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "errors.hpp"

namespace chordgap {

WeightedPointSet::WeightedPointSet(std::vector<Vector> points, std::vector<double> weights)
    : points_(std::move(points)), weights_(std::move(weights)) {
  if (points_.empty()) throw DataError("point set is empty");
  if (weights_.size() != points_.size()) throw DataError("one weight per point is required");
  const Eigen::Index d = points_.front().size();
  double total = 0.0;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i].size() != d) {
      throw DataError("point " + std::to_string(i) + " has the wrong dimension");
    }
    if (!(weights_[i] > 0.0) || !std::isfinite(weights_[i])) {
      throw DataError("weight " + std::to_string(i) + " is not positive");
    }
    total += weights_[i];
  }
  for (double& w : weights_) w /= total;
}

WeightedPointSet WeightedPointSet::uniform(std::vector<Vector> points) {
  std::vector<double> w(points.size(), 1.0);
  return {std::move(points), std::move(w)};
}

WeightedPointSet WeightedPointSet::subset(const std::vector<std::size_t>& indices) const {
  std::vector<Vector> pts;
  std::vector<double> w;
  for (std::size_t i : indices) {
    pts.push_back(points_.at(i));
    w.push_back(weights_.at(i));
  }
  return {std::move(pts), std::move(w)};
}

WeightedPointSet WeightedPointSet::canonical() const {
  std::vector<std::size_t> order(size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const Vector& pa = points_[a];
    const Vector& pb = points_[b];
    for (Eigen::Index k = 0; k < pa.size(); ++k) {
      if (pa(k) != pb(k)) return pa(k) < pb(k);
    }
    return weights_[a] < weights_[b];
  });
  // Weights are already normalized; keep them bit-exact.
  WeightedPointSet out = *this;
  for (std::size_t i = 0; i < order.size(); ++i) {
    out.points_[i] = points_[order[i]];
    out.weights_[i] = weights_[order[i]];
  }
  return out;
}

double centroid_energy(const ConvexGenerator& f, const WeightedPointSet& set, const Vector& x,
                       const ChordGapParams& params) {
  double e = 0.0;
  for (std::size_t i = 0; i < set.size(); ++i) {
    e += set.weight(i) * chord_gap(f, set.point(i), x, params);
  }
  return e;
}

Vector concave_part_gradient(const ConvexGenerator& f, const WeightedPointSet& set,
                             const Vector& x, const ChordGapParams& params) {
  const double a = params.alpha();
  const double b = params.beta();
  const double lambda = params.lambda();
  Vector g = Vector::Zero(x.size());
  for (std::size_t i = 0; i < set.size(); ++i) {
    const Vector& p = set.point(i);
    Vector term = (1.0 - lambda) * a * f.grad(interpolate(p, x, a));
    if (lambda > 0.0) term += lambda * b * f.grad(interpolate(p, x, b));
    g += set.weight(i) * term;
  }
  return g;
}

double fixed_point_residual(const ConvexGenerator& f, const WeightedPointSet& set,
                            const Vector& x, const ChordGapParams& params) {
  return (params.gamma() * f.grad(x) - concave_part_gradient(f, set, x, params))
      .lpNorm<Eigen::Infinity>();
}

Vector cccp_step(const ConvexGenerator& f, const WeightedPointSet& set, const Vector& x,
                 const ChordGapParams& params) {
  if (!(params.gamma() > 0.0)) throw ParameterError("CCCP centroid needs gamma > 0");
  f.require_point(x, "iterate");
  const Vector target = concave_part_gradient(f, set, x, params) / params.gamma();
  Vector next;
  try {
    next = f.grad_inverse(target);
  } catch (const DomainError& e) {
    throw NumericalError(std::string("CCCP inverse gradient failed: ") + e.what());
  }
  if (!f.contains(next)) next = f.project_inward(next);
  if (!f.contains(next)) throw NumericalError("CCCP iterate left the generator domain");
  return next;
}

Vector gradient_mean(const ConvexGenerator& f, const WeightedPointSet& set) {
  Vector g = Vector::Zero(static_cast<Eigen::Index>(set.coordinates()));
  for (std::size_t i = 0; i < set.size(); ++i) g += set.weight(i) * f.grad(set.point(i));
  Vector x = f.grad_inverse(g);
  if (!f.contains(x)) x = f.project_inward(x);
  return x;
}

CentroidResult solve_centroid_from(const ConvexGenerator& f, const WeightedPointSet& set,
                                   const ChordGapParams& params, const Vector& start,
                                   const CentroidOptions& options) {
  if (!(options.tol > 0.0)) throw ParameterError("tol must be positive");
  if (options.max_iter < 0) throw ParameterError("max_iter must be nonnegative");
  for (std::size_t i = 0; i < set.size(); ++i) f.require_point(set.point(i), "data point");

  CentroidResult r;
  if (set.size() == 1) {
    r.centroid = set.point(0);
    r.energy_trace = {0.0};
    r.converged = true;
    return r;
  }
  Vector x = start;
  f.require_point(x, "initial centroid");
  r.energy_trace.push_back(centroid_energy(f, set, x, params));
  for (int it = 0; it < options.max_iter; ++it) {
    const Vector next = cccp_step(f, set, x, params);
    const double step = (next - x).lpNorm<Eigen::Infinity>();
    x = next;
    r.energy_trace.push_back(centroid_energy(f, set, x, params));
    r.iterations = it + 1;
    if (step < options.tol) {
      r.converged = true;
      break;
    }
  }
  r.centroid = x;
  return r;
}

CentroidResult solve_centroid(const ConvexGenerator& f, const WeightedPointSet& set,
                              const ChordGapParams& params, const CentroidOptions& options) {
  // Sums run in canonical order so that the result does not depend on how
  // the caller ordered the points.
  const WeightedPointSet canon = set.canonical();
  const Vector start =
      options.init == CentroidInit::kFirstPoint ? set.point(0) : gradient_mean(f, canon);
  return solve_centroid_from(f, canon, params, start, options);
}

}  // namespace chordgap
