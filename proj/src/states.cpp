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

#include "entpower/states.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "entpower/linalg.hpp"

namespace entpower {

std::size_t total_dim(const Dims& dims) {
  std::size_t d = 1;
  for (auto x : dims) d *= x;
  return d;
}

Matricization matricize(const Dims& dims, const std::vector<std::size_t>& left) {
  const std::size_t n = dims.size();
  std::vector<bool> is_left(n, false);
  for (auto p : left) {
    if (p >= n) throw std::invalid_argument("matricize: party index out of range");
    if (is_left[p]) throw std::invalid_argument("matricize: duplicate party index");
    is_left[p] = true;
  }
  Matricization m;
  for (std::size_t p = 0; p < n; ++p) (is_left[p] ? m.rows : m.cols) *= dims[p];
  const std::size_t total = m.rows * m.cols;
  m.row_of.resize(total);
  m.col_of.resize(total);

  // Per-party strides inside the full index and inside its side.
  std::vector<std::size_t> full_stride(n), side_stride(n);
  std::size_t fs = 1, rs = 1, cs = 1;
  for (std::size_t p = n; p-- > 0;) {
    full_stride[p] = fs;
    fs *= dims[p];
    if (is_left[p]) {
      side_stride[p] = rs;
      rs *= dims[p];
    } else {
      side_stride[p] = cs;
      cs *= dims[p];
    }
  }
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t r = 0, c = 0;
    for (std::size_t p = 0; p < n; ++p) {
      const std::size_t digit = (idx / full_stride[p]) % dims[p];
      (is_left[p] ? r : c) += digit * side_stride[p];
    }
    m.row_of[idx] = r;
    m.col_of[idx] = c;
  }
  return m;
}

PureState::PureState(std::vector<cplx> amplitudes, Dims dims)
    : amps_(std::move(amplitudes)), dims_(std::move(dims)) {
  if (dims_.empty() || total_dim(dims_) != amps_.size()) {
    throw std::invalid_argument("PureState: product of dims != amplitude count");
  }
  double nrm = 0.0;
  for (const auto& z : amps_) nrm += std::norm(z);
  if (std::abs(std::sqrt(nrm) - 1.0) > 1e-12) {
    throw std::invalid_argument("PureState: amplitudes are not normalized");
  }
}

PureState PureState::basis(const Dims& dims, std::size_t index) {
  std::vector<cplx> v(total_dim(dims), 0.0);
  if (index >= v.size()) throw std::invalid_argument("PureState::basis: index out of range");
  v[index] = 1.0;
  return PureState(std::move(v), dims);
}

PureState PureState::product(const std::vector<PureState>& parts) {
  if (parts.empty()) throw std::invalid_argument("PureState::product: no factors");
  std::vector<cplx> v = parts.front().amps_;
  Dims dims = parts.front().dims_;
  for (std::size_t k = 1; k < parts.size(); ++k) {
    const auto& w = parts[k].amps_;
    std::vector<cplx> next(v.size() * w.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      for (std::size_t j = 0; j < w.size(); ++j) next[i * w.size() + j] = v[i] * w[j];
    }
    v = std::move(next);
    dims.insert(dims.end(), parts[k].dims_.begin(), parts[k].dims_.end());
  }
  // Renormalise away rounding drift from the products.
  double nrm = 0.0;
  for (const auto& z : v) nrm += std::norm(z);
  nrm = std::sqrt(nrm);
  for (auto& z : v) z /= nrm;
  return PureState(std::move(v), std::move(dims));
}

DensityOperator::DensityOperator(ComplexMatrix matrix, Dims dims)
    : m_(std::move(matrix)), dims_(std::move(dims)) {
  if (!m_.is_square() || dims_.empty() || total_dim(dims_) != m_.rows()) {
    throw std::invalid_argument("DensityOperator: dims do not match matrix");
  }
  if (!is_hermitian(m_, 1e-10)) {
    throw std::invalid_argument("DensityOperator: not Hermitian");
  }
  if (std::abs(m_.trace() - cplx{1.0, 0.0}) > 1e-10) {
    throw std::invalid_argument("DensityOperator: trace != 1");
  }
  const auto vals = eigvalsh(m_);
  if (!vals.empty() && vals.front() < -1e-9) {
    throw std::invalid_argument("DensityOperator: negative eigenvalue");
  }
}

DensityOperator::DensityOperator(ComplexMatrix matrix, Dims dims, Unchecked)
    : m_(std::move(matrix)), dims_(std::move(dims)) {}

DensityOperator DensityOperator::from_pure(const PureState& psi) {
  return DensityOperator(ComplexMatrix::outer(psi.amplitudes(), psi.amplitudes()),
                         psi.dims());
}

DensityOperator partial_trace(const DensityOperator& rho,
                              const std::vector<std::size_t>& keep) {
  if (keep.empty()) throw std::invalid_argument("partial_trace: empty keep set");
  std::vector<std::size_t> sorted = keep;
  std::sort(sorted.begin(), sorted.end());
  const Matricization mz = matricize(rho.dims(), sorted);

  ComplexMatrix out(mz.rows, mz.rows);
  const auto& m = rho.matrix();
  const std::size_t d = m.rows();
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      if (mz.col_of[i] != mz.col_of[j]) continue;
      out(mz.row_of[i], mz.row_of[j]) += m(i, j);
    }
  }
  Dims kept;
  for (auto p : sorted) kept.push_back(rho.dims()[p]);
  // Trace and positivity are inherited from the (validated) input.
  return DensityOperator(std::move(out), std::move(kept), DensityOperator::Unchecked{});
}

ComplexMatrix reduced_matrix(std::span<const cplx> amps, const Dims& dims,
                             const std::vector<std::size_t>& keep) {
  if (amps.size() != total_dim(dims)) {
    throw std::invalid_argument("reduced_matrix: amplitude count mismatch");
  }
  const Matricization mz = matricize(dims, keep);
  ComplexMatrix m(mz.rows, mz.cols);
  for (std::size_t i = 0; i < amps.size(); ++i) m(mz.row_of[i], mz.col_of[i]) = amps[i];
  return m * m.adjoint();
}

double spectrum_entropy(std::span<const double> eigenvalues) {
  double s = 0.0;
  for (double l : eigenvalues) {
    if (l < -1e-9) throw std::invalid_argument("entropy: negative eigenvalue");
    if (l <= 1e-12) continue;
    s -= l * std::log2(l);
  }
  return std::max(s, 0.0);
}

double von_neumann_entropy(const DensityOperator& rho) {
  const auto vals = eigvalsh(rho.matrix());
  return spectrum_entropy(vals);
}

double entanglement_entropy(std::span<const cplx> amps, const Dims& dims,
                            const std::vector<std::size_t>& left) {
  if (amps.size() != total_dim(dims)) {
    throw std::invalid_argument("entanglement_entropy: amplitude count mismatch");
  }
  const Matricization mz = matricize(dims, left);
  ComplexMatrix m(mz.rows, mz.cols);
  for (std::size_t i = 0; i < amps.size(); ++i) m(mz.row_of[i], mz.col_of[i]) = amps[i];
  const ComplexMatrix rho = mz.rows <= mz.cols ? m * m.adjoint() : m.adjoint() * m;
  std::vector<cplx> a(rho.data().begin(), rho.data().end());
  detail::jacobi_hermitian(a.data(), rho.rows(), nullptr);
  std::vector<double> vals(rho.rows());
  for (std::size_t k = 0; k < vals.size(); ++k) vals[k] = a[k * rho.rows() + k].real();
  return spectrum_entropy(vals);
}

double binary_entropy(double p) {
  if (!(p >= -1e-12 && p <= 1.0 + 1e-12)) {
    throw std::invalid_argument("binary_entropy: p outside [0, 1]");
  }
  p = std::clamp(p, 0.0, 1.0);
  double h = 0.0;
  if (p > 0.0) h -= p * std::log2(p);
  if (p < 1.0) h -= (1.0 - p) * std::log2(1.0 - p);
  return h;
}

}  // namespace entpower
