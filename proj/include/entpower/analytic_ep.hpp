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

#include <array>
#include <string>
#include <vector>

#include "entpower/phase_geometry.hpp"

namespace entpower {

/// U = P1 (x) I + P2 (x) sum_j e^{i phases[j]} |j><j|, controlled side of
/// dimension phases.size().
struct ControlledDiagonalSpec {
  std::vector<double> phases;

  std::size_t d_b() const { return phases.size(); }
  PhaseMultiset phase_set() const { return normalize_phases(phases); }
};

/**
 * Three-qubit controlled unitary (P1)_A (x) U1 + (P2)_A (x) U2 with
 * U1 = sum e^{i theta[k][t]} |k,t><k,t| and U2 likewise with omega, on BC.
 */
struct ThreeQubitSr2Spec {
  std::array<std::array<double, 2>, 2> theta{};
  std::array<std::array<double, 2>, 2> omega{};

  /// From flat lists ordered (00, 01, 10, 11).
  static ThreeQubitSr2Spec from_flat(const std::vector<double>& theta,
                                     const std::vector<double>& omega);
};

/**
 * One of the five families of genuine n-qubit Schmidt-rank-two gates,
 * labelled by singular number k. Constructed through the named factories,
 * which validate parameter ranges.
 */
struct TableISpec {
  enum class Family { kN, kNMinus1, k2, k1, k0 };

  Family family = Family::kN;
  std::size_t n = 4;
  double phi = 0.0;             // k = n, n-1
  double theta = 0.0;           // k = n-1
  std::vector<double> betas;    // k = 2: beta_2 .. beta_n
  double alpha = 0.0;           // k = 1, 0
  double beta = 0.0;            // k = 0

  static TableISpec k_n(std::size_t n, double phi);
  static TableISpec k_n_minus_1(std::size_t n, double theta, double phi);
  static TableISpec k_2(std::vector<double> betas);
  static TableISpec k_1(std::size_t n, double alpha);
  static TableISpec k_0(std::size_t n, double alpha, double beta);

  /// Dispatch on the numeric singular number (k == n, n-1, 2, 1 or 0).
  static TableISpec from_k(std::size_t n, std::size_t k, const std::vector<double>& params);

  std::size_t singular_number() const;
  /// Throws std::invalid_argument when parameters leave their ranges.
  void validate() const;
};

struct AnalyticResult {
  double value_ebits = 0.0;
  /// Minimum convex sum governing the value, value = H((1 - m) / 2).
  double min_convex_sum = 1.0;
  /// The phase set the value was read from.
  std::vector<double> governing_set;
  /// "hull" if the origin lies in the hull of the governing set, else
  /// "otherwise".
  std::string branch;
  /// Value of the same construction with unrestricted simplex weights. It
  /// upper-bounds the product-input value and coincides with it except for
  /// families where the weights factorize over several qubits.
  double simplex_value_ebits = 0.0;
  /// Set when the spec has Schmidt rank 1 across the control cut.
  bool degenerate = false;
};

/// H((1 - m) / 2, (1 + m) / 2).
double ep_from_min_convex_sum(double m);

AnalyticResult ep_controlled_diagonal(const ControlledDiagonalSpec& spec);

/// A1, A2, A3 difference sets.
std::array<PhaseMultiset, 3> phase_sets_3qubit(const ThreeQubitSr2Spec& spec);

/**
 * Per-cut 2x2 phase tables: entry [a][b] is the phase weighted by the
 * product distribution p_a q_b across cut A:BC (j = 0), B:AC (j = 1) and
 * C:AB (j = 2). Their entries are exactly the sets of phase_sets_3qubit.
 */
std::array<std::array<std::array<double, 2>, 2>, 3> phase_tables_3qubit(
    const ThreeQubitSr2Spec& spec);

AnalyticResult ep_3qubit_sr2(const ThreeQubitSr2Spec& spec);

/// Governing phase set of a rank-two family (subset sums for k = 2).
PhaseMultiset phase_set_nqubit(const TableISpec& spec);

AnalyticResult ep_nqubit_sr2(const TableISpec& spec);

bool aep_is_maximal_3qubit(const ThreeQubitSr2Spec& spec);
bool aep_is_maximal_nqubit(const TableISpec& spec);

/// log2 m for an m-term controlled unitary.
double aep_ceiling(std::size_t m);

}  // namespace entpower
