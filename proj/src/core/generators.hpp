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
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "linalg.hpp"

namespace chordgap {

// Interior margin for open domains.
inline constexpr double kDomainMargin = 1e-12;

enum class DomainKind {
  kFullSpace,        // R^n
  kOpenSimplex,      // {x : x_i > 0, sum x_i < 1}
  kPositiveOrthant,  // {x : x_i > 0}
  kSpdCone,          // svec of symmetric positive definite matrices
  kGaussianNatural,  // (v, svec(M)) with -M positive definite
};

struct DomainDescriptor {
  std::size_t dimension = 0;    // vector length, or matrix order for matrix domains
  std::size_t coordinates = 0;  // length of the coordinate vector of a point
  DomainKind kind = DomainKind::kFullSpace;
};

struct NewtonOptions {
  double tolerance = 1e-12;
  int max_iterations = 100;
};

// A strictly convex, twice differentiable function F on an open convex
// domain. Points are coordinate vectors; matrix-valued points use svec
// coordinates (see linalg.hpp). Instances are immutable.
class ConvexGenerator {
 public:
  virtual ~ConvexGenerator() = default;

  virtual std::string id() const = 0;
  virtual DomainDescriptor domain() const = 0;

  // Throws DomainError when x is outside the open domain.
  virtual double eval(const Vector& x) const = 0;
  virtual Vector grad(const Vector& x) const = 0;
  virtual Matrix hessian(const Vector& x) const = 0;

  // Solves grad(x) == y. The default runs damped Newton on F(x) - <y, x>;
  // generators with a closed form override it.
  virtual Vector grad_inverse(const Vector& y) const;

  virtual bool contains(const Vector& x) const = 0;

  // Pulls a point that left the domain through roundoff back inside.
  virtual Vector project_inward(const Vector& x) const;

  // Some point strictly inside the domain, used to start Newton.
  virtual Vector interior_point() const = 0;

  // Conversions between coordinates and the dense user-facing layout.
  // Vector domains use the identity. Matrix domains store matrices
  // row-major in dense form.
  virtual Vector encode(const Vector& dense) const;
  virtual Vector decode(const Vector& coords) const;
  virtual std::size_t dense_size() const;

  std::size_t coordinates() const { return domain().coordinates; }

  void require_point(const Vector& x, const char* what) const;

 protected:
  void require_size(const Vector& x) const;
};

using GeneratorPtr = std::shared_ptr<const ConvexGenerator>;

// Newton's method for grad(x) == y starting from `start`, with backtracking
// so that iterates stay in the domain and F(x) - <y, x> decreases.
// Throws NumericalError if the residual stays above tolerance.
Vector newton_grad_inverse(const ConvexGenerator& f, const Vector& y,
                           const Vector& start, const NewtonOptions& options = {});

// F(x) = sum x_i^2.
GeneratorPtr quadratic_generator(std::size_t d);
// F(x) = sum x_i log x_i on the positive orthant.
GeneratorPtr negentropy_generator(std::size_t d);
// F(theta) = log(1 + sum exp(theta_i)); cumulant of a (d+1)-category multinoulli.
GeneratorPtr logsumexp_generator(std::size_t d);
// Cumulant of the d-variate Gaussian in natural coordinates (v, svec(M)).
GeneratorPtr gaussian_cumulant_generator(std::size_t d);
// F(X) = -log det X on d x d SPD matrices.
GeneratorPtr logdet_generator(std::size_t d);

// Looks up one of "quadratic", "negentropy", "logsumexp",
// "gaussian_cumulant", "logdet". Throws ParameterError on unknown ids.
GeneratorPtr make_generator(std::string_view id, std::size_t d);

std::vector<std::string> generator_ids();

// Number of dense values for a point of the given generator and dimension.
std::size_t dense_size_for(std::string_view id, std::size_t d);

// Infers the generator dimension from the number of dense values per point.
std::size_t dimension_from_dense(std::string_view id, std::size_t dense_values);

}  // namespace chordgap
