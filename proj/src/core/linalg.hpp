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

#include <Eigen/Dense>

#include <cstddef>

namespace chordgap {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// Isometric half-vectorization of symmetric matrices. Lower triangle,
// column-major, off-diagonal entries scaled by sqrt(2) so that
// svec(A).dot(svec(B)) == trace(A * B).
std::size_t svec_size(std::size_t d);
std::size_t svec_order(std::size_t coords);  // inverse of svec_size; throws DataError
Vector svec(const Matrix& a);
Matrix smat(const Eigen::Ref<const Vector>& v, std::size_t d);

// Symmetric basis matrix whose svec is the unit vector e_index.
Matrix svec_basis(std::size_t index, std::size_t d);

Matrix symmetrize(const Matrix& a);

// Smallest eigenvalue of the symmetric part of a.
double min_eigenvalue(const Matrix& a);

// True if a is symmetric positive definite with every eigenvalue above margin.
bool is_spd(const Matrix& a, double margin);

// Inverse of an SPD matrix through its Cholesky factor.
Matrix spd_inverse(const Matrix& a);

// log det of an SPD matrix through its Cholesky factor.
double spd_logdet(const Matrix& a);

}  // namespace chordgap
