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

#include "entpower/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace entpower {

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t p = b.rows(), q = b.cols();
  ComplexMatrix out(a.rows() * p, a.cols() * q);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const cplx aij = a(i, j);
      if (aij == cplx{0.0, 0.0}) continue;
      for (std::size_t k = 0; k < p; ++k) {
        for (std::size_t l = 0; l < q; ++l) out(i * p + k, j * q + l) = aij * b(k, l);
      }
    }
  }
  return out;
}

ComplexMatrix kron_all(const std::vector<ComplexMatrix>& factors) {
  if (factors.empty()) return ComplexMatrix::identity(1);
  ComplexMatrix out = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) out = kron(out, factors[i]);
  return out;
}

namespace {

// Rotation parameters that annihilate the (p, q) entry of a Hermitian 2x2
// block [[app, apq], [conj(apq), aqq]]. The rotation is
//   J = [[c, s], [-s * conj(e), c * conj(e)]],  e = apq / |apq|.
struct Rotation {
  double c;
  double s;
  cplx e;
};

Rotation jacobi_rotation(double app, double aqq, cplx apq) {
  const double b = std::abs(apq);
  const cplx e = apq / b;
  const double tau = (aqq - app) / (2.0 * b);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  return {c, t * c, e};
}

// Columns p, q of an (rows x ld) row-major array times J.
void rotate_columns(cplx* m, std::size_t rows, std::size_t ld, std::size_t p,
                    std::size_t q, const Rotation& r) {
  const cplx ebar = std::conj(r.e);
  for (std::size_t i = 0; i < rows; ++i) {
    cplx* row = m + i * ld;
    const cplx xp = row[p], xq = row[q];
    row[p] = r.c * xp - r.s * ebar * xq;
    row[q] = r.s * xp + r.c * ebar * xq;
  }
}

}  // namespace

namespace detail {

void jacobi_hermitian(cplx* a, std::size_t n, cplx* v) {
  if (v != nullptr) {
    std::fill(v, v + n * n, cplx{0.0, 0.0});
    for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;
  }
  if (n < 2) return;

  double total = 0.0;
  for (std::size_t k = 0; k < n * n; ++k) total += std::norm(a[k]);
  if (total == 0.0) return;
  const double stop = 1e-30 * total;

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a[p * n + q]);
    }
    if (off <= stop) break;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx apq = a[p * n + q];
        const double b = std::abs(apq);
        if (b == 0.0) continue;
        const double app = a[p * n + p].real();
        const double aqq = a[q * n + q].real();
        if (sweep > 3 && b < 1e-18 * (std::abs(app) + std::abs(aqq))) {
          a[p * n + q] = a[q * n + p] = 0.0;
          continue;
        }
        const Rotation r = jacobi_rotation(app, aqq, apq);
        rotate_columns(a, n, n, p, q, r);
        // Rows: J^dagger A.
        cplx* rp = a + p * n;
        cplx* rq = a + q * n;
        for (std::size_t j = 0; j < n; ++j) {
          const cplx xp = rp[j], xq = rq[j];
          rp[j] = r.c * xp - r.s * r.e * xq;
          rq[j] = r.s * xp + r.c * r.e * xq;
        }
        a[p * n + q] = a[q * n + p] = 0.0;
        a[p * n + p] = a[p * n + p].real();
        a[q * n + q] = a[q * n + q].real();
        if (v != nullptr) rotate_columns(v, n, n, p, q, r);
      }
    }
  }
}

}  // namespace detail

namespace {

void check_hermitian(const ComplexMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("eigh: matrix is not square");
  const double tol = 1e-10 * std::max(1.0, m.max_abs());
  if (!is_hermitian(m, tol)) throw std::invalid_argument("eigh: matrix is not Hermitian");
}

}  // namespace

EigenDecomposition eigh(const ComplexMatrix& m) {
  check_hermitian(m);
  const std::size_t n = m.rows();
  std::vector<cplx> a(m.data().begin(), m.data().end());
  std::vector<cplx> v(n * n);
  detail::jacobi_hermitian(a.data(), n, v.data());

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a[x * n + x].real() < a[y * n + y].real();
  });

  EigenDecomposition out{std::vector<double>(n), ComplexMatrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t src = order[k];
    out.values[k] = a[src * n + src].real();
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v[i * n + src];
  }
  return out;
}

std::vector<double> eigvalsh(const ComplexMatrix& m) {
  check_hermitian(m);
  const std::size_t n = m.rows();
  std::vector<cplx> a(m.data().begin(), m.data().end());
  detail::jacobi_hermitian(a.data(), n, nullptr);
  std::vector<double> vals(n);
  for (std::size_t k = 0; k < n; ++k) vals[k] = a[k * n + k].real();
  std::sort(vals.begin(), vals.end());
  return vals;
}

namespace {

// One-sided Jacobi on a tall (rows >= cols) matrix.
SingularValueDecomposition svd_tall(const ComplexMatrix& m) {
  const std::size_t r = m.rows(), c = m.cols();
  std::vector<cplx> w(m.data().begin(), m.data().end());
  std::vector<cplx> v(c * c, 0.0);
  for (std::size_t i = 0; i < c; ++i) v[i * c + i] = 1.0;

  auto col_dot = [&](std::size_t p, std::size_t q) {
    cplx s = 0.0;
    for (std::size_t i = 0; i < r; ++i) s += std::conj(w[i * c + p]) * w[i * c + q];
    return s;
  };

  for (int sweep = 0; sweep < 100 && c > 1; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < c; ++p) {
      for (std::size_t q = p + 1; q < c; ++q) {
        const double alpha = col_dot(p, p).real();
        const double beta = col_dot(q, q).real();
        const cplx gamma = col_dot(p, q);
        const double g = std::abs(gamma);
        if (g == 0.0 || g <= 1e-15 * std::sqrt(alpha * beta)) continue;
        rotated = true;
        const Rotation rot = jacobi_rotation(alpha, beta, gamma);
        rotate_columns(w.data(), r, c, p, q, rot);
        rotate_columns(v.data(), c, c, p, q, rot);
      }
    }
    if (!rotated) break;
  }

  std::vector<double> sigma(c);
  for (std::size_t j = 0; j < c; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < r; ++i) s += std::norm(w[i * c + j]);
    sigma[j] = std::sqrt(s);
  }
  std::vector<std::size_t> order(c);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return sigma[x] > sigma[y]; });

  SingularValueDecomposition out{ComplexMatrix(r, c), std::vector<double>(c),
                                 ComplexMatrix(c, c)};
  const double smax = c == 0 ? 0.0 : sigma[order[0]];
  const double tiny = std::max(smax, 1.0) * 1e-300;
  std::vector<bool> filled(c, false);
  for (std::size_t k = 0; k < c; ++k) {
    const std::size_t src = order[k];
    out.values[k] = sigma[src];
    for (std::size_t i = 0; i < c; ++i) out.v(i, k) = v[i * c + src];
    if (sigma[src] > tiny && sigma[src] > 1e-14 * smax) {
      for (std::size_t i = 0; i < r; ++i) out.u(i, k) = w[i * c + src] / sigma[src];
      filled[k] = true;
    }
  }

  // Complete U for (numerically) zero singular values by Gram-Schmidt over
  // the standard basis.
  std::size_t basis = 0;
  for (std::size_t k = 0; k < c; ++k) {
    if (filled[k]) continue;
    while (basis < r) {
      std::vector<cplx> cand(r, 0.0);
      cand[basis++] = 1.0;
      for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t j = 0; j < c; ++j) {
          if (!filled[j]) continue;
          cplx d = 0.0;
          for (std::size_t i = 0; i < r; ++i) d += std::conj(out.u(i, j)) * cand[i];
          for (std::size_t i = 0; i < r; ++i) cand[i] -= d * out.u(i, j);
        }
      }
      double nrm = 0.0;
      for (const auto& z : cand) nrm += std::norm(z);
      nrm = std::sqrt(nrm);
      if (nrm > 1e-8) {
        for (std::size_t i = 0; i < r; ++i) out.u(i, k) = cand[i] / nrm;
        filled[k] = true;
        break;
      }
    }
  }
  return out;
}

}  // namespace

SingularValueDecomposition svd(const ComplexMatrix& m) {
  if (m.rows() >= m.cols()) return svd_tall(m);
  SingularValueDecomposition t = svd_tall(m.adjoint());
  return {std::move(t.v), std::move(t.values), std::move(t.u)};
}

std::vector<double> singular_values(const ComplexMatrix& m) { return svd(m).values; }

ComplexMatrix random_unitary(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix q(n, n);
  for (auto& z : q.data()) z = cplx{gauss(rng), gauss(rng)};
  // Modified Gram-Schmidt on columns (applied twice); R gets a positive
  // diagonal, which is the phase fix that makes Q Haar-distributed.
  for (std::size_t k = 0; k < n; ++k) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t j = 0; j < k; ++j) {
        cplx d = 0.0;
        for (std::size_t i = 0; i < n; ++i) d += std::conj(q(i, j)) * q(i, k);
        for (std::size_t i = 0; i < n; ++i) q(i, k) -= d * q(i, j);
      }
    }
    double nrm = 0.0;
    for (std::size_t i = 0; i < n; ++i) nrm += std::norm(q(i, k));
    nrm = std::sqrt(nrm);
    for (std::size_t i = 0; i < n; ++i) q(i, k) /= nrm;
  }
  return q;
}

std::vector<cplx> random_unit_vector(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<cplx> v(n);
  double nrm = 0.0;
  for (auto& z : v) {
    z = cplx{gauss(rng), gauss(rng)};
    nrm += std::norm(z);
  }
  nrm = std::sqrt(nrm);
  for (auto& z : v) z /= nrm;
  return v;
}

}  // namespace entpower
