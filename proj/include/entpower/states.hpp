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

#include <cstddef>
#include <span>
#include <vector>

#include "entpower/matrix.hpp"

namespace entpower {

using Dims = std::vector<std::size_t>;

std::size_t total_dim(const Dims& dims);

/**
 * Index bijection between a multipartite basis index and a (row, col) pair
 * where the row enumerates the `left` parties and the column the remaining
 * ones. Both sides use mixed radix in ascending party order, most
 * significant first.
 */
struct Matricization {
  std::size_t rows = 1;
  std::size_t cols = 1;
  std::vector<std::size_t> row_of;  // full index -> row
  std::vector<std::size_t> col_of;  // full index -> col
};

/// `left` must be a subset of [0, dims.size()); duplicates are rejected.
Matricization matricize(const Dims& dims, const std::vector<std::size_t>& left);

class PureState {
 public:
  /// Validates norm (1e-12) and length == product of dims.
  PureState(std::vector<cplx> amplitudes, Dims dims);

  /// |0...0> on the given dims.
  static PureState basis(const Dims& dims, std::size_t index = 0);
  /// Tensor product, parties appended in order.
  static PureState product(const std::vector<PureState>& parts);

  const std::vector<cplx>& amplitudes() const { return amps_; }
  const Dims& dims() const { return dims_; }

 private:
  std::vector<cplx> amps_;
  Dims dims_;
};

class DensityOperator {
 public:
  /// Validates Hermiticity (1e-10), unit trace (1e-10) and min eigenvalue
  /// >= -1e-9.
  DensityOperator(ComplexMatrix matrix, Dims dims);

  static DensityOperator from_pure(const PureState& psi);

  const ComplexMatrix& matrix() const { return m_; }
  const Dims& dims() const { return dims_; }

 private:
  struct Unchecked {};
  DensityOperator(ComplexMatrix matrix, Dims dims, Unchecked);

  ComplexMatrix m_;
  Dims dims_;

  friend DensityOperator partial_trace(const DensityOperator&,
                                       const std::vector<std::size_t>&);
};

/// Reduced operator on `keep` (party indices, any order; result uses
/// ascending party order).
DensityOperator partial_trace(const DensityOperator& rho,
                              const std::vector<std::size_t>& keep);

/// Reduced operator of a pure state on `keep`, as M M^dagger.
ComplexMatrix reduced_matrix(std::span<const cplx> amps, const Dims& dims,
                             const std::vector<std::size_t>& keep);

/// -sum p log2 p after clamping; entries below -1e-9 are rejected.
double spectrum_entropy(std::span<const double> eigenvalues);

double von_neumann_entropy(const DensityOperator& rho);

/// Entropy of the `left` reduction of a pure state, in ebits.
double entanglement_entropy(std::span<const cplx> amps, const Dims& dims,
                            const std::vector<std::size_t>& left);

/// H(p, 1 - p) in bits. Throws for p outside [0, 1] by more than 1e-12.
double binary_entropy(double p);

}  // namespace entpower
