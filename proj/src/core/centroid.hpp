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

#include <cstddef>
#include <vector>

#include "divergences.hpp"

namespace chordgap {

// Points with positive weights, renormalized to sum to one.
class WeightedPointSet {
 public:
  WeightedPointSet(std::vector<Vector> points, std::vector<double> weights);
  static WeightedPointSet uniform(std::vector<Vector> points);

  std::size_t size() const { return points_.size(); }
  std::size_t coordinates() const { return static_cast<std::size_t>(points_.front().size()); }
  const Vector& point(std::size_t i) const { return points_[i]; }
  double weight(std::size_t i) const { return weights_[i]; }
  const std::vector<Vector>& points() const { return points_; }
  const std::vector<double>& weights() const { return weights_; }

  // Renormalized subset in the given index order.
  WeightedPointSet subset(const std::vector<std::size_t>& indices) const;

  // Copy sorted lexicographically by (coordinates, weight).
  WeightedPointSet canonical() const;

 private:
  std::vector<Vector> points_;
  std::vector<double> weights_;
};

enum class CentroidInit {
  kGradientMean,  // grad_inverse(sum w_i grad F(p_i))
  kFirstPoint,    // p_1
};

struct CentroidOptions {
  double tol = 1e-10;
  int max_iter = 1000;
  CentroidInit init = CentroidInit::kGradientMean;
};

struct CentroidResult {
  Vector centroid;
  std::vector<double> energy_trace;  // E(x_0), E(x_1), ...
  int iterations = 0;
  bool converged = false;

  double energy() const { return energy_trace.back(); }
};

// E(x) = sum w_i J^{alpha,beta,gamma}(p_i : x).
double centroid_energy(const ConvexGenerator& f, const WeightedPointSet& set, const Vector& x,
                       const ChordGapParams& params);

// Gradient of the convex part B(x) = sum w_i [(1-lambda) F((p_i x)_alpha) + lambda F((p_i x)_beta)].
Vector concave_part_gradient(const ConvexGenerator& f, const WeightedPointSet& set,
                             const Vector& x, const ChordGapParams& params);

// || gamma grad F(x) - grad B(x) ||_inf; zero at a stationary point of E.
double fixed_point_residual(const ConvexGenerator& f, const WeightedPointSet& set,
                            const Vector& x, const ChordGapParams& params);

// One CCCP update x_{t+1} = grad F^{-1}(grad B(x_t) / gamma).
// Throws ParameterError if gamma == 0, NumericalError if the inverse fails.
Vector cccp_step(const ConvexGenerator& f, const WeightedPointSet& set, const Vector& x,
                 const ChordGapParams& params);

Vector gradient_mean(const ConvexGenerator& f, const WeightedPointSet& set);

CentroidResult solve_centroid(const ConvexGenerator& f, const WeightedPointSet& set,
                              const ChordGapParams& params, const CentroidOptions& options = {});

// CCCP from a given start; used by the variational Lloyd update.
CentroidResult solve_centroid_from(const ConvexGenerator& f, const WeightedPointSet& set,
                                   const ChordGapParams& params, const Vector& start,
                                   const CentroidOptions& options);

}  // namespace chordgap
