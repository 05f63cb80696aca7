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

#include <vector>

#include "entpower/analytic_ep.hpp"
#include "entpower/unitary.hpp"

namespace entpower {

Unitary identity_gate(const Dims& dims);
Unitary cnot();
Unitary cz();
Unitary swap_gate();

/// n-qubit Toffoli: the last qubit flips iff the first n - 1 are all 1.
Unitary toffoli(std::size_t n);

/// diag(1, ..., 1, e^{i phi}) on three qubits; phi in (0, 2pi).
Unitary ccp(double phi);

/// Controlled SWAP, control A, targets B and C.
Unitary fredkin3();

/// Doubly controlled SWAP, controls A and B, targets C and D.
Unitary fredkin4();

/// U|a, b, c> = |c, a, b>.
Unitary cyclic_shift3();

Unitary table1_gate(const TableISpec& spec);

/// Two-qubit-factor form (P1)_A (x) U1 + (P2)_A (x) U2 with P1 = |0><0|.
Unitary three_qubit_sr2_gate(const ThreeQubitSr2Spec& spec);

/// P1 (x) I + P2 (x) diag(e^{i phases}) with P1 the projector on the first
/// `rank_of_p1` basis states of a d_a-dimensional control.
Unitary controlled_diagonal(const ControlledDiagonalSpec& spec, std::size_t d_a,
                            std::size_t rank_of_p1);

/**
 * sum_j P_j (x) U_j with P_j consecutive diagonal projectors on the control
 * of ranks `ranks[j]`. Parties: the control, then the parties of the
 * branches (all branches must share dims).
 */
Unitary controlled_unitary(const std::vector<std::size_t>& ranks,
                           const std::vector<Unitary>& branches);

}  // namespace entpower
