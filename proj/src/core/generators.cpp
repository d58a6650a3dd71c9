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


#include "generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "errors.hpp"

namespace chordgap {

void ConvexGenerator::require_size(const Vector& x) const {
  if (static_cast<std::size_t>(x.size()) != coordinates()) {
    throw DataError(id() + ": expected " + std::to_string(coordinates()) +
                    " coordinates, got " + std::to_string(x.size()));
  }
  if (!x.allFinite()) throw DomainError(id() + ": non-finite coordinate");
}

void ConvexGenerator::require_point(const Vector& x, const char* what) const {
  require_size(x);
  if (!contains(x)) {
    throw DomainError(id() + ": " + what + " lies outside the generator domain");
  }
}

Vector ConvexGenerator::grad_inverse(const Vector& y) const {
  require_size(y);
  return newton_grad_inverse(*this, y, interior_point());
}

Vector ConvexGenerator::project_inward(const Vector& x) const { return x; }

Vector ConvexGenerator::encode(const Vector& dense) const {
  require_size(dense);
  return dense;
}

Vector ConvexGenerator::decode(const Vector& coords) const {
  require_size(coords);
  return coords;
}

std::size_t ConvexGenerator::dense_size() const { return coordinates(); }

Vector newton_grad_inverse(const ConvexGenerator& f, const Vector& y, const Vector& start,
                           const NewtonOptions& options) {
  Vector x = start;
  auto objective = [&](const Vector& z) { return f.eval(z) - y.dot(z); };
  const double scale = std::max(1.0, y.lpNorm<Eigen::Infinity>());
  Vector residual = f.grad(x) - y;
  for (int it = 0; it < options.max_iterations; ++it) {
    const double rnorm = residual.lpNorm<Eigen::Infinity>();
    if (rnorm <= options.tolerance * scale) return x;
    const Vector step = f.hessian(x).ldlt().solve(-residual);
    const double phi = objective(x);
    double t = 1.0;
    bool accepted = false;
    for (int halving = 0; halving < 60; ++halving, t *= 0.5) {
      const Vector trial = x + t * step;
      if (!f.contains(trial)) continue;
      const Vector trial_residual = f.grad(trial) - y;
      if (objective(trial) <= phi + 1e-4 * t * residual.dot(step) ||
          trial_residual.lpNorm<Eigen::Infinity>() < rnorm) {
        x = trial;
        residual = trial_residual;
        accepted = true;
        break;
      }
    }
    if (!accepted) break;
  }
  if (residual.lpNorm<Eigen::Infinity>() <= options.tolerance * scale) return x;
  throw NumericalError(f.id() + ": Newton inverse gradient did not converge (residual " +
                       std::to_string(residual.lpNorm<Eigen::Infinity>()) + ")");
}

namespace {

class QuadraticGenerator final : public ConvexGenerator {
 public:
  explicit QuadraticGenerator(std::size_t d) : d_(d) {}
  std::string id() const override { return "quadratic"; }
  DomainDescriptor domain() const override { return {d_, d_, DomainKind::kFullSpace}; }
  bool contains(const Vector& x) const override {
    return static_cast<std::size_t>(x.size()) == d_ && x.allFinite();
  }
  double eval(const Vector& x) const override {
    require_point(x, "point");
    return x.squaredNorm();
  }
  Vector grad(const Vector& x) const override {
    require_point(x, "point");
    return 2.0 * x;
  }
  Vector grad_inverse(const Vector& y) const override {
    require_size(y);
    return 0.5 * y;
  }
  Matrix hessian(const Vector& x) const override {
    require_point(x, "point");
    return 2.0 * Matrix::Identity(x.size(), x.size());
  }
  Vector interior_point() const override { return Vector::Zero(static_cast<Eigen::Index>(d_)); }

 private:
  std::size_t d_;
};

class NegentropyGenerator final : public ConvexGenerator {
 public:
  explicit NegentropyGenerator(std::size_t d) : d_(d) {}
  std::string id() const override { return "negentropy"; }
  DomainDescriptor domain() const override { return {d_, d_, DomainKind::kPositiveOrthant}; }
  bool contains(const Vector& x) const override {
    return static_cast<std::size_t>(x.size()) == d_ && x.allFinite() &&
           (x.array() > kDomainMargin).all();
  }
  double eval(const Vector& x) const override {
    require_point(x, "point");
    return (x.array() * x.array().log()).sum();
  }
  Vector grad(const Vector& x) const override {
    require_point(x, "point");
    return (x.array().log() + 1.0).matrix();
  }
  Vector grad_inverse(const Vector& y) const override {
    require_size(y);
    return (y.array() - 1.0).exp().matrix();
  }
  Matrix hessian(const Vector& x) const override {
    require_point(x, "point");
    return x.cwiseInverse().asDiagonal();
  }
  Vector project_inward(const Vector& x) const override {
    return x.cwiseMax(2.0 * kDomainMargin);
  }
  Vector interior_point() const override { return Vector::Ones(static_cast<Eigen::Index>(d_)); }

 private:
  std::size_t d_;
};

class LogSumExpGenerator final : public ConvexGenerator {
 public:
  explicit LogSumExpGenerator(std::size_t d) : d_(d) {}
  std::string id() const override { return "logsumexp"; }
  DomainDescriptor domain() const override { return {d_, d_, DomainKind::kFullSpace}; }
  bool contains(const Vector& x) const override {
    return static_cast<std::size_t>(x.size()) == d_ && x.allFinite();
  }
  double eval(const Vector& x) const override {
    require_point(x, "point");
    // log(exp(0) + sum exp(x_i)), shifted for stability.
    const double m = std::max(0.0, x.maxCoeff());
    return m + std::log(std::exp(-m) + (x.array() - m).exp().sum());
  }
  Vector grad(const Vector& x) const override {
    require_point(x, "point");
    return softmax(x);
  }
  Vector grad_inverse(const Vector& y) const override {
    require_size(y);
    const double rest = 1.0 - y.sum();
    if (!y.allFinite() || (y.array() <= 0.0).any() || rest <= 0.0) {
      throw DomainError("logsumexp: gradient value outside the open simplex");
    }
    return (y.array().log() - std::log(rest)).matrix();
  }
  Matrix hessian(const Vector& x) const override {
    require_point(x, "point");
    const Vector p = softmax(x);
    Matrix h = -p * p.transpose();
    h.diagonal() += p;
    return h;
  }
  Vector interior_point() const override { return Vector::Zero(static_cast<Eigen::Index>(d_)); }

 private:
  static Vector softmax(const Vector& x) {
    const double m = std::max(0.0, x.maxCoeff());
    const Eigen::ArrayXd e = (x.array() - m).exp();
    const double z = std::exp(-m) + e.sum();
    return (e / z).matrix();
  }
  std::size_t d_;
};

// Shared dense layout helpers for matrix-valued coordinates.
Matrix dense_rows_to_matrix(const Eigen::Ref<const Vector>& dense, std::size_t d) {
  const auto n = static_cast<Eigen::Index>(d);
  Matrix a(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) a(i, j) = dense(i * n + j);
  return a;
}

Vector matrix_to_dense_rows(const Matrix& a) {
  const Eigen::Index n = a.rows();
  Vector dense(n * n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) dense(i * n + j) = a(i, j);
  return dense;
}

Matrix clamp_spectrum(const Matrix& a, double floor) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(symmetrize(a));
  const Vector lambda = es.eigenvalues().cwiseMax(floor);
  return symmetrize(es.eigenvectors() * lambda.asDiagonal() * es.eigenvectors().transpose());
}

class LogDetGenerator final : public ConvexGenerator {
 public:
  explicit LogDetGenerator(std::size_t d) : d_(d) {}
  std::string id() const override { return "logdet"; }
  DomainDescriptor domain() const override {
    return {d_, svec_size(d_), DomainKind::kSpdCone};
  }
  bool contains(const Vector& x) const override {
    if (static_cast<std::size_t>(x.size()) != coordinates() || !x.allFinite()) return false;
    return is_spd(smat(x, d_), kDomainMargin);
  }
  double eval(const Vector& x) const override {
    require_point(x, "point");
    return -spd_logdet(smat(x, d_));
  }
  Vector grad(const Vector& x) const override {
    require_point(x, "point");
    return svec(-spd_inverse(smat(x, d_)));
  }
  Vector grad_inverse(const Vector& y) const override {
    require_size(y);
    const Matrix g = smat(y, d_);
    if (!is_spd(-g, 0.0)) throw DomainError("logdet: gradient value is not negative definite");
    return svec(spd_inverse(-g));
  }
  Matrix hessian(const Vector& x) const override {
    require_point(x, "point");
    const Matrix inv = spd_inverse(smat(x, d_));
    const auto n = static_cast<Eigen::Index>(coordinates());
    Matrix h(n, n);
    for (Eigen::Index a = 0; a < n; ++a) {
      const Matrix e = svec_basis(static_cast<std::size_t>(a), d_);
      h.col(a) = svec(inv * e * inv);
    }
    return symmetrize(h);
  }
  Vector project_inward(const Vector& x) const override {
    return svec(clamp_spectrum(smat(x, d_), 2.0 * kDomainMargin));
  }
  Vector interior_point() const override {
    return svec(Matrix::Identity(static_cast<Eigen::Index>(d_), static_cast<Eigen::Index>(d_)));
  }
  Vector encode(const Vector& dense) const override {
    if (static_cast<std::size_t>(dense.size()) != d_ * d_) {
      throw DataError("logdet: expected " + std::to_string(d_ * d_) + " matrix entries");
    }
    const Matrix a = dense_rows_to_matrix(dense, d_);
    if (!a.isApprox(a.transpose(), 1e-12)) throw DomainError("logdet: matrix is not symmetric");
    return svec(a);
  }
  Vector decode(const Vector& coords) const override {
    require_size(coords);
    return matrix_to_dense_rows(smat(coords, d_));
  }
  std::size_t dense_size() const override { return d_ * d_; }

 private:
  std::size_t d_;
};

// Natural coordinates theta = (v, svec(M)) with v = Sigma^{-1} mu and
// M = -Sigma^{-1} / 2.
class GaussianCumulantGenerator final : public ConvexGenerator {
 public:
  explicit GaussianCumulantGenerator(std::size_t d) : d_(d) {}
  std::string id() const override { return "gaussian_cumulant"; }
  DomainDescriptor domain() const override {
    return {d_, d_ + svec_size(d_), DomainKind::kGaussianNatural};
  }
  bool contains(const Vector& x) const override {
    if (static_cast<std::size_t>(x.size()) != coordinates() || !x.allFinite()) return false;
    return is_spd(-precision_half(x), kDomainMargin);
  }
  double eval(const Vector& x) const override {
    require_point(x, "point");
    const auto n = static_cast<double>(d_);
    const Matrix s = -precision_half(x);  // S = -M
    const Vector v = x.head(static_cast<Eigen::Index>(d_));
    const double quad = v.dot(s.llt().solve(v));
    return 0.5 * n * std::log(2.0 * std::numbers::pi) -
           0.5 * (n * std::log(2.0) + spd_logdet(s)) + 0.25 * quad;
  }
  Vector grad(const Vector& x) const override {
    require_point(x, "point");
    const Matrix s_inv = spd_inverse(-precision_half(x));
    const Vector mu = 0.5 * s_inv * x.head(static_cast<Eigen::Index>(d_));
    Vector g(x.size());
    g.head(static_cast<Eigen::Index>(d_)) = mu;
    g.tail(static_cast<Eigen::Index>(svec_size(d_))) = svec(0.5 * s_inv + mu * mu.transpose());
    return g;
  }
  Vector grad_inverse(const Vector& y) const override {
    require_size(y);
    const Vector mu = y.head(static_cast<Eigen::Index>(d_));
    const Matrix second = smat(y.tail(static_cast<Eigen::Index>(svec_size(d_))), d_);
    const Matrix cov = symmetrize(second - mu * mu.transpose());
    if (!is_spd(cov, 0.0)) {
      throw DomainError("gaussian_cumulant: moment values do not define an SPD covariance");
    }
    const Matrix prec = spd_inverse(cov);
    Vector theta(y.size());
    theta.head(static_cast<Eigen::Index>(d_)) = prec * mu;
    theta.tail(static_cast<Eigen::Index>(svec_size(d_))) = svec(-0.5 * prec);
    return theta;
  }
  Matrix hessian(const Vector& x) const override {
    require_point(x, "point");
    const auto d = static_cast<Eigen::Index>(d_);
    const Matrix m_inv = -spd_inverse(-precision_half(x));
    const Vector mu = -0.5 * m_inv * x.head(d);
    const auto n = static_cast<Eigen::Index>(coordinates());
    Matrix h(n, n);
    for (Eigen::Index a = 0; a < n; ++a) {
      Vector dv = Vector::Zero(d);
      Matrix dm = Matrix::Zero(d, d);
      if (a < d) {
        dv(a) = 1.0;
      } else {
        dm = svec_basis(static_cast<std::size_t>(a - d), d_);
      }
      const Vector dmu = -m_inv * dm * mu - 0.5 * m_inv * dv;
      const Matrix dsecond = 0.5 * m_inv * dm * m_inv + dmu * mu.transpose() + mu * dmu.transpose();
      h.col(a).head(d) = dmu;
      h.col(a).tail(n - d) = svec(dsecond);
    }
    return symmetrize(h);
  }
  Vector project_inward(const Vector& x) const override {
    Vector y = x;
    const Matrix s = clamp_spectrum(-precision_half(x), 2.0 * kDomainMargin);
    y.tail(static_cast<Eigen::Index>(svec_size(d_))) = svec(-s);
    return y;
  }
  Vector interior_point() const override {
    const auto d = static_cast<Eigen::Index>(d_);
    Vector x = Vector::Zero(static_cast<Eigen::Index>(coordinates()));
    x.tail(static_cast<Eigen::Index>(svec_size(d_))) = svec(-0.5 * Matrix::Identity(d, d));
    return x;
  }
  Vector encode(const Vector& dense) const override {
    const auto d = static_cast<Eigen::Index>(d_);
    if (static_cast<std::size_t>(dense.size()) != dense_size()) {
      throw DataError("gaussian_cumulant: expected " + std::to_string(dense_size()) + " values");
    }
    const Matrix m = dense_rows_to_matrix(dense.tail(d * d), d_);
    if (!m.isApprox(m.transpose(), 1e-12)) {
      throw DomainError("gaussian_cumulant: M block is not symmetric");
    }
    Vector x(static_cast<Eigen::Index>(coordinates()));
    x.head(d) = dense.head(d);
    x.tail(static_cast<Eigen::Index>(svec_size(d_))) = svec(m);
    return x;
  }
  Vector decode(const Vector& coords) const override {
    require_size(coords);
    const auto d = static_cast<Eigen::Index>(d_);
    Vector dense(d + d * d);
    dense.head(d) = coords.head(d);
    dense.tail(d * d) = matrix_to_dense_rows(precision_half(coords));
    return dense;
  }
  std::size_t dense_size() const override { return d_ + d_ * d_; }

 private:
  Matrix precision_half(const Vector& x) const {
    return smat(x.tail(static_cast<Eigen::Index>(svec_size(d_))), d_);
  }
  std::size_t d_;
};

void require_dimension(std::size_t d) {
  if (d < 1) throw ParameterError("generator dimension must be at least 1");
}

}  // namespace

GeneratorPtr quadratic_generator(std::size_t d) {
  require_dimension(d);
  return std::make_shared<QuadraticGenerator>(d);
}

GeneratorPtr negentropy_generator(std::size_t d) {
  require_dimension(d);
  return std::make_shared<NegentropyGenerator>(d);
}

GeneratorPtr logsumexp_generator(std::size_t d) {
  require_dimension(d);
  return std::make_shared<LogSumExpGenerator>(d);
}

GeneratorPtr gaussian_cumulant_generator(std::size_t d) {
  require_dimension(d);
  return std::make_shared<GaussianCumulantGenerator>(d);
}

GeneratorPtr logdet_generator(std::size_t d) {
  require_dimension(d);
  return std::make_shared<LogDetGenerator>(d);
}

std::vector<std::string> generator_ids() {
  return {"quadratic", "negentropy", "logsumexp", "gaussian_cumulant", "logdet"};
}

GeneratorPtr make_generator(std::string_view id, std::size_t d) {
  if (id == "quadratic") return quadratic_generator(d);
  if (id == "negentropy") return negentropy_generator(d);
  if (id == "logsumexp") return logsumexp_generator(d);
  if (id == "gaussian_cumulant") return gaussian_cumulant_generator(d);
  if (id == "logdet") return logdet_generator(d);
  throw ParameterError("unknown generator '" + std::string(id) + "'");
}

std::size_t dense_size_for(std::string_view id, std::size_t d) {
  return make_generator(id, d)->dense_size();
}

std::size_t dimension_from_dense(std::string_view id, std::size_t dense_values) {
  make_generator(id, 1);  // validates the id
  if (dense_values == 0) throw DataError("points have no coordinates");
  for (std::size_t d = 1; dense_size_for(id, d) <= dense_values; ++d) {
    if (dense_size_for(id, d) == dense_values) return d;
  }
  throw DataError(std::string(id) + ": " + std::to_string(dense_values) +
                  " values per point do not match any dimension");
}

}  // namespace chordgap
