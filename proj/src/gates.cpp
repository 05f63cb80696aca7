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

#include "entpower/gates.hpp"

#include <bit>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "entpower/linalg.hpp"

namespace entpower {

namespace {

Dims qubits(std::size_t n) { return Dims(n, 2); }

// Permutation matrix with out[map(i)][i] = 1.
ComplexMatrix permutation(std::size_t d, const std::function<std::size_t(std::size_t)>& map) {
  ComplexMatrix m(d, d);
  for (std::size_t i = 0; i < d; ++i) m(map(i), i) = 1.0;
  return m;
}

ComplexMatrix diagonal_of(const std::vector<cplx>& diag) { return ComplexMatrix::diagonal(diag); }

}  // namespace

Unitary identity_gate(const Dims& dims) {
  return Unitary(ComplexMatrix::identity(total_dim(dims)), dims, "identity");
}

Unitary cnot() {
  return Unitary(permutation(4, [](std::size_t i) { return i >= 2 ? (i ^ 1U) : i; }),
                 qubits(2), "cnot");
}

Unitary cz() { return Unitary(diagonal_of({1.0, 1.0, 1.0, -1.0}), qubits(2), "cz"); }

Unitary swap_gate() {
  return Unitary(permutation(4, [](std::size_t i) { return ((i & 1U) << 1) | (i >> 1); }),
                 qubits(2), "swap");
}

Unitary toffoli(std::size_t n) {
  if (n < 3) throw std::invalid_argument("toffoli: need n >= 3");
  const std::size_t d = std::size_t{1} << n;
  const std::size_t controls = (d - 1) & ~std::size_t{1};
  return Unitary(permutation(d, [&](std::size_t i) {
                   return (i & controls) == controls ? (i ^ 1U) : i;
                 }),
                 qubits(n), "toffoli" + std::to_string(n));
}

Unitary ccp(double phi) {
  if (!(phi > 0.0 && phi < kTwoPi)) throw std::invalid_argument("ccp: phi must lie in (0, 2pi)");
  std::vector<cplx> diag(8, 1.0);
  diag[7] = std::polar(1.0, phi);
  return Unitary(diagonal_of(diag), qubits(3), "ccp");
}

Unitary fredkin3() {
  return Unitary(permutation(8,
                             [](std::size_t i) {
                               if (!(i & 4U)) return i;
                               const std::size_t b = (i >> 1) & 1U, c = i & 1U;
                               return 4U | (c << 1) | b;
                             }),
                 qubits(3), "fredkin3");
}

Unitary fredkin4() {
  return Unitary(permutation(16,
                             [](std::size_t i) {
                               if ((i & 12U) != 12U) return i;
                               const std::size_t c = (i >> 1) & 1U, d = i & 1U;
                               return 12U | (d << 1) | c;
                             }),
                 qubits(4), "fredkin4");
}

Unitary cyclic_shift3() {
  // |a, b, c> -> |c, a, b>.
  return Unitary(permutation(8,
                             [](std::size_t i) {
                               const std::size_t a = (i >> 2) & 1U, b = (i >> 1) & 1U,
                                                 c = i & 1U;
                               return (c << 2) | (a << 1) | b;
                             }),
                 qubits(3), "cyclic_shift3");
}

Unitary table1_gate(const TableISpec& spec) {
  spec.validate();
  const std::size_t n = spec.n;
  const std::size_t d = std::size_t{1} << n;
  const std::size_t half = d / 2;
  std::vector<cplx> diag(d, 1.0);
  // Parity of the last n - 1 qubits gives the Z^{(x)(n-1)} eigenvalue.
  auto z_sign = [](std::size_t rest) {
    return (std::popcount(rest) & 1) ? -1.0 : 1.0;
  };
  using F = TableISpec::Family;
  std::string label;
  switch (spec.family) {
    case F::kN:
      diag[0] = std::polar(1.0, spec.phi);
      label = "table1_k=n";
      break;
    case F::kNMinus1:
      diag[0] = std::polar(1.0, spec.phi);
      diag[1] = std::polar(1.0, spec.theta);
      label = "table1_k=n-1";
      break;
    case F::k2:
      for (std::size_t i = half; i < d; ++i) {
        double phase = 0.0;
        for (std::size_t l = 0; l < spec.betas.size(); ++l) {
          // beta_{l+2} sits on qubit l + 1, bit n - 2 - l of the index.
          if (i >> (n - 2 - l) & 1U) phase += spec.betas[l];
        }
        diag[i] = std::polar(1.0, phase);
      }
      label = "table1_k=2";
      break;
    case F::k1:
      for (std::size_t i = 0; i < half; ++i) diag[i] = std::polar(1.0, spec.alpha * z_sign(i));
      label = "table1_k=1";
      break;
    case F::k0:
      for (std::size_t i = 0; i < half; ++i) {
        diag[i] = std::polar(1.0, spec.alpha * z_sign(i));
        diag[half + i] = std::polar(1.0, spec.beta * z_sign(i));
      }
      label = "table1_k=0";
      break;
  }
  return Unitary(diagonal_of(diag), qubits(n), label);
}

Unitary three_qubit_sr2_gate(const ThreeQubitSr2Spec& spec) {
  std::vector<cplx> diag(8);
  for (std::size_t k = 0; k < 2; ++k) {
    for (std::size_t t = 0; t < 2; ++t) {
      diag[2 * k + t] = std::polar(1.0, spec.theta[k][t]);
      diag[4 + 2 * k + t] = std::polar(1.0, spec.omega[k][t]);
    }
  }
  return Unitary(diagonal_of(diag), qubits(3), "three_qubit_sr2");
}

Unitary controlled_diagonal(const ControlledDiagonalSpec& spec, std::size_t d_a,
                            std::size_t rank_of_p1) {
  if (spec.phases.empty()) throw std::invalid_argument("controlled_diagonal: no phases");
  if (rank_of_p1 < 1 || rank_of_p1 >= d_a) {
    throw std::invalid_argument("controlled_diagonal: need 1 <= rank_of_p1 < d_a");
  }
  const std::size_t db = spec.d_b();
  std::vector<cplx> diag(d_a * db, 1.0);
  for (std::size_t a = rank_of_p1; a < d_a; ++a) {
    for (std::size_t j = 0; j < db; ++j) diag[a * db + j] = std::polar(1.0, spec.phases[j]);
  }
  return Unitary(diagonal_of(diag), Dims{d_a, db}, "controlled_diagonal");
}

Unitary controlled_unitary(const std::vector<std::size_t>& ranks,
                           const std::vector<Unitary>& branches) {
  if (ranks.size() != branches.size() || branches.empty()) {
    throw std::invalid_argument("controlled_unitary: need one rank per branch");
  }
  const Dims& bd = branches.front().dims();
  std::size_t dc = 0;
  for (std::size_t j = 0; j < ranks.size(); ++j) {
    if (ranks[j] == 0) throw std::invalid_argument("controlled_unitary: zero projector rank");
    if (branches[j].dims() != bd) {
      throw std::invalid_argument("controlled_unitary: branch dims differ");
    }
    dc += ranks[j];
  }
  const std::size_t db = branches.front().dim();
  ComplexMatrix m(dc * db, dc * db);
  std::size_t row = 0;
  for (std::size_t j = 0; j < ranks.size(); ++j) {
    const auto& u = branches[j].matrix();
    for (std::size_t r = 0; r < ranks[j]; ++r, ++row) {
      for (std::size_t x = 0; x < db; ++x) {
        for (std::size_t y = 0; y < db; ++y) m(row * db + x, row * db + y) = u(x, y);
      }
    }
  }
  Dims dims{dc};
  dims.insert(dims.end(), bd.begin(), bd.end());
  return Unitary(std::move(m), std::move(dims), "controlled");
}

}  // namespace entpower
