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

#include <string>
#include <vector>

#include "entpower/matrix.hpp"
#include "entpower/unitary.hpp"

namespace entpower {

/// A split of n parties into `left` and its complement; both nonempty.
class Bipartition {
 public:
  /// Throws std::invalid_argument for empty, full, duplicate or
  /// out-of-range `left`. The index list is stored sorted.
  Bipartition(std::vector<std::size_t> left, std::size_t n_parties);

  /// Parses "AD:BC" style labels (letters A.. name parties 0..) or a
  /// comma-separated index list for the left side ("0,3").
  static Bipartition parse(const std::string& text, std::size_t n_parties);

  const std::vector<std::size_t>& left() const { return left_; }
  std::vector<std::size_t> right() const;
  std::size_t n_parties() const { return n_; }
  bool contains(std::size_t party) const;

  /// "AD:BC". Parties beyond Z are written as "P26" etc.
  std::string label() const;

  bool operator==(const Bipartition&) const = default;

 private:
  std::vector<std::size_t> left_;
  std::size_t n_;
};

/**
 * U = sum_j c_j A_j (x) B_j with (1/d_L) Tr(A_j^dagger A_k) = delta_jk,
 * (1/d_R) Tr(B_j^dagger B_k) = delta_jk and sum_j c_j^2 = 1. Factor A_j acts
 * on the left parties in ascending order, B_j on the rest.
 */
struct SchmidtDecomposition {
  std::vector<double> coefficients;  // descending, all above the rank cutoff
  std::vector<ComplexMatrix> left_factors;
  std::vector<ComplexMatrix> right_factors;
  Bipartition bipartition;
  std::size_t d_left = 1;
  std::size_t d_right = 1;

  std::size_t rank() const { return coefficients.size(); }
  /// sum_j c_j A_j (x) B_j in left-right party order.
  ComplexMatrix reconstruct() const;
};

/// Operator in left-right order for `cut` (left parties first, each block in
/// ascending party order).
ComplexMatrix to_cut_order(const Unitary& u, const Bipartition& cut);

/// Singular values below 1e-8 times the largest are dropped.
SchmidtDecomposition schmidt_decompose(const Unitary& u, const Bipartition& cut);

std::size_t schmidt_rank(const Unitary& u, const Bipartition& cut);

struct EpBounds {
  double lower = 0.0;  // K_Sch = -sum c_j^2 log2 c_j^2
  double upper = 0.0;  // log2 rank
};

EpBounds ep_bounds(const Unitary& u, const Bipartition& cut);
EpBounds ep_bounds(const SchmidtDecomposition& sd);

}  // namespace entpower
