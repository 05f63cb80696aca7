// Copyright 2026 The entpower Authors
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

#include <random>
#include <vector>

#include "entpower/matrix.hpp"

namespace entpower {

/// Kronecker product; entry (i*p+k, j*q+l) = a(i,j) * b(k,l).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Kronecker product of a list, left to right.
ComplexMatrix kron_all(const std::vector<ComplexMatrix>& factors);

struct EigenDecomposition {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // column i pairs with values[i]
};

/**
 * Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi
 * rotations.
 *
 * Throws std::invalid_argument when the input deviates from Hermitian by
 * more than 1e-10 (max-norm).
 */
EigenDecomposition eigh(const ComplexMatrix& m);

/// Eigenvalues only (ascending). Same solver, no vector accumulation.
std::vector<double> eigvalsh(const ComplexMatrix& m);

struct SingularValueDecomposition {
  ComplexMatrix u;             // rows x k, orthonormal columns
  std::vector<double> values;  // k = min(rows, cols), descending, >= 0
  ComplexMatrix v;             // cols x k, orthonormal columns
};

/// Thin SVD m = U diag(s) V^dagger by one-sided (Hestenes) Jacobi.
SingularValueDecomposition svd(const ComplexMatrix& m);

/// Singular values only, descending.
std::vector<double> singular_values(const ComplexMatrix& m);

/// Haar-random unitary of dimension n (QR of a Ginibre matrix, phase fixed).
ComplexMatrix random_unitary(std::size_t n, std::mt19937_64& rng);

/// Uniformly random unit vector in C^n.
std::vector<cplx> random_unit_vector(std::size_t n, std::mt19937_64& rng);

namespace detail {

/**
 * In-place Jacobi diagonalisation of a Hermitian n x n row-major array.
 * On return the diagonal of `a` holds the (unsorted) eigenvalues and, when
 * `v` is non-null, its columns hold the eigenvectors. No validation.
 */
void jacobi_hermitian(cplx* a, std::size_t n, cplx* v);

}  // namespace detail

}  // namespace entpower
