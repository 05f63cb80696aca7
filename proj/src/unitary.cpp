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

#include "entpower/unitary.hpp"

#include <stdexcept>

namespace entpower {

Unitary::Unitary(ComplexMatrix matrix, Dims dims, std::string label, double tol)
    : m_(std::move(matrix)), dims_(std::move(dims)), label_(std::move(label)) {
  if (!m_.is_square()) throw std::invalid_argument("Unitary: matrix is not square");
  if (dims_.empty() || total_dim(dims_) != m_.rows()) {
    throw std::invalid_argument("Unitary: product of dims != matrix dimension");
  }
  for (auto d : dims_) {
    if (d == 0) throw std::invalid_argument("Unitary: zero party dimension");
  }
  if (!is_unitary(m_, tol)) throw std::invalid_argument("Unitary: matrix is not unitary");
}

ComplexMatrix permute_parties(const ComplexMatrix& m, const Dims& dims,
                              const std::vector<std::size_t>& order) {
  const std::size_t n = dims.size();
  if (order.size() != n) throw std::invalid_argument("permute_parties: bad order");
  std::vector<bool> seen(n, false);
  for (auto p : order) {
    if (p >= n || seen[p]) throw std::invalid_argument("permute_parties: bad order");
    seen[p] = true;
  }
  const std::size_t d = total_dim(dims);
  if (m.rows() != d || m.cols() != d) {
    throw std::invalid_argument("permute_parties: dims do not match matrix");
  }
  std::vector<std::size_t> old_stride(n), new_stride(n);
  std::size_t s = 1;
  for (std::size_t p = n; p-- > 0;) {
    old_stride[p] = s;
    s *= dims[p];
  }
  s = 1;
  for (std::size_t k = n; k-- > 0;) {
    new_stride[order[k]] = s;
    s *= dims[order[k]];
  }
  std::vector<std::size_t> map(d);
  for (std::size_t i = 0; i < d; ++i) {
    std::size_t j = 0;
    for (std::size_t p = 0; p < n; ++p) j += ((i / old_stride[p]) % dims[p]) * new_stride[p];
    map[i] = j;
  }
  ComplexMatrix out(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) out(map[i], map[j]) = m(i, j);
  }
  return out;
}

}  // namespace entpower
