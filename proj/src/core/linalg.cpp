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


#include "linalg.hpp"

#include <cmath>

#include "errors.hpp"

namespace chordgap {

namespace {
constexpr double kSqrt2 = 1.41421356237309504880;
}

std::size_t svec_size(std::size_t d) { return d * (d + 1) / 2; }

std::size_t svec_order(std::size_t coords) {
  std::size_t d = 0;
  while (svec_size(d) < coords) ++d;
  if (svec_size(d) != coords || d == 0) {
    throw DataError("coordinate count " + std::to_string(coords) +
                    " is not a triangular number");
  }
  return d;
}

Vector svec(const Matrix& a) {
  const auto d = static_cast<std::size_t>(a.rows());
  Vector v(static_cast<Eigen::Index>(svec_size(d)));
  Eigen::Index k = 0;
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    v(k++) = a(j, j);
    for (Eigen::Index i = j + 1; i < a.rows(); ++i) {
      v(k++) = kSqrt2 * 0.5 * (a(i, j) + a(j, i));
    }
  }
  return v;
}

Matrix smat(const Eigen::Ref<const Vector>& v, std::size_t d) {
  if (static_cast<std::size_t>(v.size()) != svec_size(d)) {
    throw DataError("svec length does not match matrix order");
  }
  const auto n = static_cast<Eigen::Index>(d);
  Matrix a(n, n);
  Eigen::Index k = 0;
  for (Eigen::Index j = 0; j < n; ++j) {
    a(j, j) = v(k++);
    for (Eigen::Index i = j + 1; i < n; ++i) {
      a(i, j) = a(j, i) = v(k++) / kSqrt2;
    }
  }
  return a;
}

Matrix svec_basis(std::size_t index, std::size_t d) {
  Vector e = Vector::Zero(static_cast<Eigen::Index>(svec_size(d)));
  e(static_cast<Eigen::Index>(index)) = 1.0;
  return smat(e, d);
}

Matrix symmetrize(const Matrix& a) { return 0.5 * (a + a.transpose()); }

double min_eigenvalue(const Matrix& a) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(symmetrize(a), Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

bool is_spd(const Matrix& a, double margin) {
  if (a.rows() != a.cols() || a.rows() == 0) return false;
  if (!a.allFinite()) return false;
  Eigen::LLT<Matrix> llt(a);
  if (llt.info() != Eigen::Success) return false;
  return min_eigenvalue(a) > margin;
}

Matrix spd_inverse(const Matrix& a) {
  Eigen::LLT<Matrix> llt(a);
  if (llt.info() != Eigen::Success) throw DomainError("matrix is not positive definite");
  return symmetrize(llt.solve(Matrix::Identity(a.rows(), a.cols())));
}

double spd_logdet(const Matrix& a) {
  Eigen::LLT<Matrix> llt(a);
  if (llt.info() != Eigen::Success) throw DomainError("matrix is not positive definite");
  return 2.0 * llt.matrixLLT().diagonal().array().log().sum();
}

}  // namespace chordgap
