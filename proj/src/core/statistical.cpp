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


#include "statistical.hpp"

#include <cmath>

#include "errors.hpp"

namespace chordgap {

namespace {

void require_same_support(const DiscreteDistribution& p, const DiscreteDistribution& q) {
  if (p.size() != q.size()) throw DataError("distributions have different supports");
}

void require_delta(double delta, const char* name) {
  if (!(delta >= 0.0 && delta <= 1.0)) {
    throw ParameterError(std::string(name) + " must lie in [0, 1]");
  }
}

double sum_geometric(const Vector& p, const Vector& q, double delta) {
  return (p.array().pow(1.0 - delta) * q.array().pow(delta)).sum();
}

}  // namespace

ExponentialFamilyModel ExponentialFamilyModel::gaussian(std::size_t d) {
  return {FamilyKind::kGaussian, d, gaussian_cumulant_generator(d)};
}

ExponentialFamilyModel ExponentialFamilyModel::multinoulli(std::size_t categories) {
  if (categories < 2) throw ParameterError("multinoulli needs at least two categories");
  return {FamilyKind::kMultinoulli, categories, logsumexp_generator(categories - 1)};
}

Vector ExponentialFamilyModel::to_natural(const SourceParams& params) const {
  if (kind_ == FamilyKind::kGaussian) {
    const auto* g = std::get_if<GaussianParams>(&params);
    if (!g) throw DataError("expected Gaussian parameters");
    const auto d = static_cast<Eigen::Index>(size_);
    if (g->mean.size() != d || g->cov.rows() != d || g->cov.cols() != d) {
      throw DataError("Gaussian parameters do not match dimension " + std::to_string(size_));
    }
    if (!g->cov.isApprox(g->cov.transpose(), 1e-12) || !is_spd(g->cov, kDomainMargin)) {
      throw DomainError("covariance matrix is not symmetric positive definite");
    }
    const Matrix prec = spd_inverse(g->cov);
    Vector theta(static_cast<Eigen::Index>(cumulant_->coordinates()));
    theta.head(d) = prec * g->mean;
    theta.tail(theta.size() - d) = svec(-0.5 * prec);
    return theta;
  }
  const auto* c = std::get_if<CategoricalParams>(&params);
  if (!c) throw DataError("expected categorical parameters");
  if (static_cast<std::size_t>(c->prob.size()) != size_) {
    throw DataError("probability vector does not have " + std::to_string(size_) + " entries");
  }
  const DiscreteDistribution dist(c->prob);
  const Eigen::Index m = dist.prob().size() - 1;
  return (dist.prob().head(m).array().log() - std::log(dist.prob()(m))).matrix();
}

SourceParams ExponentialFamilyModel::from_natural(const Vector& theta) const {
  cumulant_->require_point(theta, "natural parameter");
  if (kind_ == FamilyKind::kGaussian) {
    const auto d = static_cast<Eigen::Index>(size_);
    const Matrix prec = -2.0 * smat(theta.tail(theta.size() - d), size_);
    const Matrix cov = spd_inverse(prec);
    return GaussianParams{cov * theta.head(d), cov};
  }
  // The gradient of the cumulant is the first m-1 probabilities.
  const Vector head = cumulant_->grad(theta);
  Vector prob(head.size() + 1);
  prob.head(head.size()) = head;
  prob(head.size()) = 1.0 - head.sum();
  return CategoricalParams{prob};
}

DiscreteDistribution::DiscreteDistribution(Vector prob) : prob_(std::move(prob)) {
  if (prob_.size() < 1) throw DataError("empty probability vector");
  if (!prob_.allFinite() || (prob_.array() < kMinProbability).any()) {
    throw DomainError("probabilities must be strictly positive");
  }
  if (std::abs(prob_.sum() - 1.0) > 1e-12) {
    throw DomainError("probabilities must sum to one");
  }
}

double bhattacharyya_skew(const ExponentialFamilyModel& model, const SourceParams& p,
                          const SourceParams& q, double alpha) {
  return skew_jensen(model.cumulant(), model.to_natural(p), model.to_natural(q), alpha);
}

double bhattacharyya_discrete_oracle(const DiscreteDistribution& p, const DiscreteDistribution& q,
                                     double alpha) {
  require_same_support(p, q);
  require_delta(alpha, "alpha");
  return -std::log(sum_geometric(p.prob(), q.prob(), alpha));
}

double generalized_bhattacharyya(const ExponentialFamilyModel& model, const SourceParams& p,
                                 const SourceParams& q, const ChordGapParams& params) {
  return chord_gap(model.cumulant(), model.to_natural(p), model.to_natural(q), params);
}

double generalized_bhattacharyya_discrete(const DiscreteDistribution& p,
                                          const DiscreteDistribution& q,
                                          const ChordGapParams& params) {
  require_same_support(p, q);
  const double numerator = sum_geometric(p.prob(), q.prob(), params.gamma());
  const Vector ga = interpolated_distribution(p, q, params.alpha()).prob();
  const Vector gb = interpolated_distribution(p, q, params.beta()).prob();
  const double denominator = sum_geometric(ga, gb, params.lambda());
  return std::log(denominator) - std::log(numerator);
}

double z_normalizer(const DiscreteDistribution& p, const DiscreteDistribution& q, double delta) {
  require_same_support(p, q);
  require_delta(delta, "delta");
  return sum_geometric(p.prob(), q.prob(), delta);
}

DiscreteDistribution interpolated_distribution(const DiscreteDistribution& p,
                                               const DiscreteDistribution& q, double delta) {
  require_same_support(p, q);
  require_delta(delta, "delta");
  if (delta == 0.0) return p;
  if (delta == 1.0) return q;
  Vector g = (p.prob().array().pow(1.0 - delta) * q.prob().array().pow(delta)).matrix();
  g /= g.sum();
  // Renormalizing leaves |sum - 1| at roundoff, well inside the 1e-12 check.
  return DiscreteDistribution(std::move(g));
}

double gaussian_skew_jensen_closed_form(const Vector& mean_p, const Matrix& cov_p,
                                        const Vector& mean_q, const Matrix& cov_q, double alpha) {
  require_delta(alpha, "alpha");
  const Eigen::Index d = mean_p.size();
  if (mean_q.size() != d || cov_p.rows() != d || cov_p.cols() != d || cov_q.rows() != d ||
      cov_q.cols() != d) {
    throw DataError("Gaussian parameters have inconsistent dimensions");
  }
  if (!is_spd(cov_p, kDomainMargin) || !is_spd(cov_q, kDomainMargin)) {
    throw DomainError("covariance matrix is not symmetric positive definite");
  }
  // Weights pair alpha with Sigma_p: this is -log int p^{1-alpha} q^alpha.
  const Matrix mixed = symmetrize(alpha * cov_p + (1.0 - alpha) * cov_q);
  const Vector dmu = mean_q - mean_p;
  const double mahalanobis = dmu.dot(mixed.llt().solve(dmu));
  const double log_ratio =
      spd_logdet(mixed) - alpha * spd_logdet(cov_p) - (1.0 - alpha) * spd_logdet(cov_q);
  return 0.5 * alpha * (1.0 - alpha) * mahalanobis + 0.5 * log_ratio;
}

double kl_divergence(const ExponentialFamilyModel& model, const SourceParams& p,
                     const SourceParams& q) {
  return bregman(model.cumulant(), model.to_natural(q), model.to_natural(p));
}

}  // namespace chordgap
