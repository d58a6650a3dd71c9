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
#include <variant>

#include "divergences.hpp"
#include "generators.hpp"

namespace chordgap {

struct GaussianParams {
  Vector mean;
  Matrix cov;
};

struct CategoricalParams {
  Vector prob;
};

using SourceParams = std::variant<GaussianParams, CategoricalParams>;

enum class FamilyKind { kGaussian, kMultinoulli };

// Smallest probability accepted in a categorical distribution.
inline constexpr double kMinProbability = 1e-300;

// Maps source parameters of an exponential family to natural parameters and
// back; the family's cumulant is exposed as a convex generator on the
// natural parameter space.
//
//   gaussian(d):   theta = (Sigma^{-1} mu, svec(-Sigma^{-1} / 2))
//   multinoulli(m): theta_i = log(p_i / p_m), i < m, cumulant log(1 + sum e^theta)
class ExponentialFamilyModel {
 public:
  static ExponentialFamilyModel gaussian(std::size_t d);
  static ExponentialFamilyModel multinoulli(std::size_t categories);

  FamilyKind kind() const { return kind_; }
  // Variate dimension for the Gaussian, number of categories for multinoulli.
  std::size_t size() const { return size_; }
  const ConvexGenerator& cumulant() const { return *cumulant_; }
  const GeneratorPtr& cumulant_ptr() const { return cumulant_; }

  Vector to_natural(const SourceParams& params) const;
  SourceParams from_natural(const Vector& theta) const;

 private:
  ExponentialFamilyModel(FamilyKind kind, std::size_t size, GeneratorPtr cumulant)
      : kind_(kind), size_(size), cumulant_(std::move(cumulant)) {}

  FamilyKind kind_;
  std::size_t size_;
  GeneratorPtr cumulant_;
};

// Strictly positive probability vector summing to one within 1e-12.
class DiscreteDistribution {
 public:
  explicit DiscreteDistribution(Vector prob);
  const Vector& prob() const { return prob_; }
  std::size_t size() const { return static_cast<std::size_t>(prob_.size()); }

 private:
  Vector prob_;
};

// -log int p^{1-alpha} q^alpha, evaluated as the skew Jensen divergence of
// the cumulant on natural parameters.
double bhattacharyya_skew(const ExponentialFamilyModel& model, const SourceParams& p,
                          const SourceParams& q, double alpha);

// Same quantity by direct summation over a finite support.
double bhattacharyya_discrete_oracle(const DiscreteDistribution& p, const DiscreteDistribution& q,
                                     double alpha);

// Chord gap divergence of the cumulant on natural parameters.
double generalized_bhattacharyya(const ExponentialFamilyModel& model, const SourceParams& p,
                                 const SourceParams& q, const ChordGapParams& params);

// -log(sum p^{1-gamma} q^gamma / sum Gamma_alpha^{1-lambda} Gamma_beta^lambda) by summation.
double generalized_bhattacharyya_discrete(const DiscreteDistribution& p,
                                          const DiscreteDistribution& q,
                                          const ChordGapParams& params);

// Normalized geometric mixture p^{1-delta} q^delta / Z_delta.
DiscreteDistribution interpolated_distribution(const DiscreteDistribution& p,
                                               const DiscreteDistribution& q, double delta);
double z_normalizer(const DiscreteDistribution& p, const DiscreteDistribution& q, double delta);

double gaussian_skew_jensen_closed_form(const Vector& mean_p, const Matrix& cov_p,
                                        const Vector& mean_q, const Matrix& cov_q, double alpha);

// KL(p : q) as the Bregman divergence of the cumulant, B_F(theta_q : theta_p).
double kl_divergence(const ExponentialFamilyModel& model, const SourceParams& p,
                     const SourceParams& q);

}  // namespace chordgap
