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

#include "entpower/matrix.hpp"
#include "entpower/states.hpp"

namespace entpower {

/// A unitary on a multipartite space. Party 0 is the most significant
/// tensor factor.
class Unitary {
 public:
  /// Throws std::invalid_argument unless the matrix is unitary within
  /// `tol` (max-norm) and the dims multiply to its size.
  Unitary(ComplexMatrix matrix, Dims dims, std::string label = {},
          double tol = 1e-10);

  const ComplexMatrix& matrix() const { return m_; }
  const Dims& dims() const { return dims_; }
  const std::string& label() const { return label_; }
  std::size_t n_parties() const { return dims_.size(); }
  std::size_t dim() const { return m_.rows(); }

 private:
  ComplexMatrix m_;
  Dims dims_;
  std::string label_;
};

/// Same operator with its parties reordered: party k of the result is
/// party order[k] of the input.
ComplexMatrix permute_parties(const ComplexMatrix& m, const Dims& dims,
                              const std::vector<std::size_t>& order);

}  // namespace entpower
