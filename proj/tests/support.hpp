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


// Shared sampling helpers and independent oracles for the test suites.
// Oracles work on the dense user-facing layout with textbook formulas, so
// they share no code path with the library's coordinates or derivatives.

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "core/divergences.hpp"
#include "core/generators.hpp"

namespace testsupport {

using chordgap::ChordGapParams;
using chordgap::ConvexGenerator;
using chordgap::GeneratorPtr;
using chordgap::Matrix;
using chordgap::Vector;

inline const std::vector<std::string>& all_generators() {
  static const std::vector<std::string> ids = {"quadratic", "negentropy", "logsumexp", "logdet",
                                               "gaussian_cumulant"};
  return ids;
}

inline double rel_err(double a, double b) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : eng_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(eng_);
  }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng_); }

  Matrix spd(std::size_t d) {
    Matrix a(d, d);
    for (auto& x : a.reshaped()) x = uniform(-1.0, 1.0);
    return a * a.transpose() / static_cast<double>(d) + 0.5 * Matrix::Identity(d, d);
  }

  Vector vec(std::size_t d, double lo, double hi) {
    Vector v(d);
    for (auto& x : v) x = uniform(lo, hi);
    return v;
  }

  // Dense point strictly inside the domain of generator `id` of dimension d.
  Vector dense_point(const std::string& id, std::size_t d) {
    if (id == "quadratic" || id == "logsumexp") return vec(d, -2.0, 2.0);
    if (id == "negentropy") return vec(d, 0.2, 3.0);
    if (id == "logdet") return spd(d).reshaped<Eigen::RowMajor>();
    // gaussian_cumulant: (Sigma^-1 mu, -1/2 Sigma^-1)
    const Vector mu = vec(d, -1.0, 1.0);
    const Matrix prec = spd(d).inverse();
    Vector out(d + d * d);
    out.head(d) = prec * mu;
    const Matrix m = -0.5 * prec;
    out.tail(d * d) = m.reshaped<Eigen::RowMajor>();
    return out;
  }

  // Non-degenerate triple with all three parameters in [0.05, 0.95].
  ChordGapParams params() {
    for (;;) {
      double a = uniform(0.05, 0.95);
      double b = uniform(0.05, 0.95);
      if (std::abs(a - b) < 0.05) continue;
      const double g = uniform(std::min(a, b), std::max(a, b));
      ChordGapParams p(a, b, g);
      if (p.remainder_weight() > 1e-3) return p;
    }
  }

  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

// Relative error of a divergence is ill-conditioned as q -> p (the value is
// O(|p - q|^2) while rounding is O(eps |F|)), so relative checks draw pairs
// with |p - q| >= 0.25 max(1, |p|) in coordinates.
inline bool separated(const Vector& p, const Vector& q) {
  return (p - q).norm() >= 0.25 * std::max(1.0, p.norm());
}

inline std::size_t sample_dimension(const std::string& id, Sampler& s) {
  if (id == "logdet" || id == "gaussian_cumulant") return static_cast<std::size_t>(s.integer(1, 3));
  return static_cast<std::size_t>(s.integer(1, 4));
}

// ---- oracles on dense values ----

inline Matrix dense_matrix(const Vector& dense, std::size_t offset, std::size_t d) {
  Matrix m(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) m(i, j) = dense[offset + i * d + j];
  return m;
}

inline double oracle_eval(const std::string& id, const Vector& x, std::size_t d) {
  if (id == "quadratic") return x.squaredNorm();
  if (id == "negentropy") {
    double s = 0.0;
    for (double v : x) s += v * std::log(v);
    return s;
  }
  if (id == "logsumexp") {
    double s = 1.0;
    for (double v : x) s += std::exp(v);
    return std::log(s);
  }
  if (id == "logdet") return -std::log(dense_matrix(x, 0, d).fullPivLu().determinant());
  // d/2 log 2pi - 1/2 log|-2M| - 1/4 v^T M^-1 v
  const Vector v = x.head(d);
  const Matrix m = dense_matrix(x, d, d);
  return 0.5 * static_cast<double>(d) * std::log(2.0 * std::numbers::pi) -
         0.5 * std::log((-2.0 * m).fullPivLu().determinant()) -
         0.25 * v.dot(m.fullPivLu().solve(v));
}

inline Vector lerp(const Vector& p, const Vector& q, double t) { return (1.0 - t) * p + t * q; }

inline double oracle_skew_jensen(const std::string& id, const Vector& p, const Vector& q,
                                 double a, std::size_t d) {
  return (1.0 - a) * oracle_eval(id, p, d) + a * oracle_eval(id, q, d) -
         oracle_eval(id, lerp(p, q, a), d);
}

// Boxed definition: chord over [p, q] minus chord over [(pq)_a, (pq)_b] at (pq)_g.
inline double oracle_chord_gap(const std::string& id, const Vector& p, const Vector& q, double a,
                               double b, double g, std::size_t d) {
  const double lambda = a == b ? 0.0 : (g - a) / (b - a);
  const double upper = (1.0 - g) * oracle_eval(id, p, d) + g * oracle_eval(id, q, d);
  const double lower = (1.0 - lambda) * oracle_eval(id, lerp(p, q, a), d) +
                       lambda * oracle_eval(id, lerp(p, q, b), d);
  return upper - lower;
}

// Textbook closed forms of B_F(p : q) for each generator.
inline double oracle_bregman(const std::string& id, const Vector& p, const Vector& q,
                             std::size_t d) {
  if (id == "quadratic") return (p - q).squaredNorm();
  if (id == "negentropy") {
    double s = 0.0;
    for (Eigen::Index i = 0; i < p.size(); ++i) s += p[i] * std::log(p[i] / q[i]) - p[i] + q[i];
    return s;
  }
  if (id == "logsumexp") {
    // KL(categorical(q) : categorical(p)) with last category as reference.
    auto probs = [](const Vector& t) {
      Vector pr(t.size() + 1);
      double z = 1.0;
      for (double v : t) z += std::exp(v);
      for (Eigen::Index i = 0; i < t.size(); ++i) pr[i] = std::exp(t[i]) / z;
      pr[t.size()] = 1.0 / z;
      return pr;
    };
    const Vector pp = probs(p);
    const Vector pq = probs(q);
    double s = 0.0;
    for (Eigen::Index i = 0; i < pq.size(); ++i) s += pq[i] * std::log(pq[i] / pp[i]);
    return s;
  }
  if (id == "logdet") {
    const Matrix r = dense_matrix(p, 0, d) * dense_matrix(q, 0, d).inverse();
    return r.trace() - std::log(r.determinant()) - static_cast<double>(d);
  }
  // KL(N_q : N_p) between the Gaussians with natural parameters q and p.
  auto moments = [d](const Vector& t, Vector& mu, Matrix& cov) {
    const Matrix m = dense_matrix(t, d, d);
    cov = -0.5 * m.inverse();
    mu = cov * t.head(d);
  };
  Vector mp, mq;
  Matrix sp, sq;
  moments(p, mp, sp);
  moments(q, mq, sq);
  const Matrix spi = sp.inverse();
  const Vector dm = mp - mq;
  return 0.5 * ((spi * sq).trace() + dm.dot(spi * dm) - static_cast<double>(d) +
                std::log(sp.determinant() / sq.determinant()));
}

// Direct summation over a finite support.
inline double oracle_bhattacharyya(const std::vector<double>& p, const std::vector<double>& q,
                                   double a) {
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) s += std::pow(p[i], 1.0 - a) * std::pow(q[i], a);
  return -std::log(s);
}

inline double oracle_kl(const std::vector<double>& p, const std::vector<double>& q) {
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) s += p[i] * std::log(p[i] / q[i]);
  return s;
}

inline std::vector<double> random_simplex(Sampler& s, std::size_t n) {
  std::vector<double> p(n);
  double total = 0.0;
  for (double& x : p) {
    x = s.uniform(0.05, 1.0);
    total += x;
  }
  for (double& x : p) x /= total;
  return p;
}

// Multinoulli natural parameters, last category as reference.
inline Vector oracle_natural(const std::vector<double>& p) {
  Vector t(p.size() - 1);
  for (std::size_t i = 0; i + 1 < p.size(); ++i) t[i] = std::log(p[i] / p.back());
  return t;
}

}  // namespace testsupport
