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

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "entpower/schmidt.hpp"
#include "entpower/unitary.hpp"

namespace entpower {

/// Ancilla dimension attached to each party.
struct AncillaPolicy {
  enum class Kind { kMatchParty, kFixed, kExplicit };
  Kind kind = Kind::kMatchParty;
  std::size_t dim = 1;
  std::vector<std::size_t> dims;

  static AncillaPolicy match_party() { return {}; }
  static AncillaPolicy none() { return {Kind::kFixed, 1, {}}; }
  static AncillaPolicy fixed(std::size_t d) { return {Kind::kFixed, d, {}}; }
  static AncillaPolicy explicit_dims(std::vector<std::size_t> d) {
    return {Kind::kExplicit, 1, std::move(d)};
  }

  Dims resolve(const Dims& party_dims) const;
};

/// One vector per party, of length d_i * a_i, indexed s * a_i + r.
using ProductInput = std::vector<std::vector<cplx>>;

struct OptimizerConfig {
  std::size_t restarts = 64;
  std::size_t max_iters = 2000;
  /// Stop a restart once an accepted step is shorter than this.
  double step_tol = 1e-9;
  /// Slack used when comparing numeric values against targets.
  double value_tol = 1e-3;
  std::uint64_t seed = 42;
  AncillaPolicy ancilla;
  /// Start restart 0 from maximally entangled party-ancilla pairs. With
  /// ancillas at least as large as the parties this start already reaches
  /// the Schmidt-coefficient entropy, which makes it a certified lower
  /// bound.
  bool choi_start = true;
  /// Extra product starts, tried before the random ones.
  std::vector<ProductInput> seeded_starts;
  /// Threads for independent restarts. Results do not depend on it.
  std::size_t workers = 1;
  /// Cap on the ancilla-extended dimension.
  std::size_t max_total_dim = 4096;

  /// Throws std::invalid_argument for restarts == 0 or tolerances <= 0.
  void validate() const;
};

struct EpResult {
  double value = 0.0;
  /// "variational", "analytic" or "bound".
  std::string method = "variational";
  std::optional<Bipartition> bipartition;
  /// Product certificate (empty for assisted results).
  ProductInput party_states;
  /// Full input state in interleaved order A1 R1 A2 R2 ... (for the
  /// controlled reduction: the controlled parties only).
  std::vector<cplx> state;
  Dims state_dims;
  /// Simplex weights of the controlled reduction.
  std::vector<double> weights;
  double lower = 0.0;
  double upper = 0.0;
  std::size_t restarts_run = 0;
  std::size_t best_restart = 0;
  std::uint64_t seed = 0;
  /// (cut label, best value) for every cut examined.
  std::vector<std::pair<std::string, double>> per_cut;
};

/// All 2^{n-1} - 1 unordered splits. The left side is the smaller one (ties:
/// the side holding party 0), ordered by size then lexicographically.
std::vector<Bipartition> enumerate_bipartitions(std::size_t n);

/// Entropy across `cut` of (U (x) I_R) applied to the product input. Used to
/// verify certificates; independent of the optimizer's internals.
double product_input_entropy(const Unitary& u, const Bipartition& cut,
                             const Dims& ancilla_dims, const ProductInput& parts);

/// E(U psi) - E(psi) across `cut` for an interleaved full input.
double assisted_gain(const Unitary& u, const Bipartition& cut, const Dims& ancilla_dims,
                     const std::vector<cplx>& state);

/// S(sum_j q_j (U_j (x) I) rho (U_j (x) I)^dagger) for a product rho.
double controlled_mixture_entropy(const std::vector<Unitary>& branches,
                                  const Dims& ancilla_dims, const ProductInput& parts,
                                  const std::vector<double>& weights);

EpResult numeric_ep_cut(const Unitary& u, const Bipartition& cut, const OptimizerConfig& cfg);
EpResult numeric_ep(const Unitary& u, const OptimizerConfig& cfg);

/// The controlled reduction: maximizes the entropy of the branch mixture
/// over simplex weights and product inputs on the controlled parties.
EpResult controlled_ep_cut(const std::vector<std::size_t>& controls,
                           const std::vector<Unitary>& branch_unitaries,
                           const OptimizerConfig& cfg);

EpResult numeric_aep_cut(const Unitary& u, const Bipartition& cut, const OptimizerConfig& cfg);
EpResult numeric_aep(const Unitary& u, const OptimizerConfig& cfg);

struct ConjectureProbeReport {
  EpResult search;
  double seeded_value = 0.0;
  ProductInput seeded_input;
  double interval_lower = 2.0;
  double interval_upper = 0.0;  // log2 of the Schmidt rank across AD:BC
  std::size_t schmidt_rank = 0;
  /// search.value - 2.
  double excess = 0.0;
  /// Best value above 2 + value_tol.
  bool exceeded = false;
  /// Re-evaluating the certificate reproduced the value within 1e-10.
  bool certificate_sound = false;
};

/// Searches the AD:BC cut of the doubly controlled SWAP.
ConjectureProbeReport fredkin4_conjecture_probe(const OptimizerConfig& cfg);

namespace detail {

/**
 * Objective used by the product-input optimizer: the cut entropy of
 * (U (x) I) applied to the unnormalized product of `parts`, and its
 * Wirtinger gradient G with dS = 2 Re sum_i <G_i, d parts_i>. Exposed for
 * gradient checks.
 */
double product_entropy_gradient(const Unitary& u, const Bipartition& cut,
                                const Dims& ancilla_dims, const ProductInput& parts,
                                ProductInput* grad);

}  // namespace detail

/// Maximally entangled party-ancilla start (needs a_i >= 1).
ProductInput choi_input(const Dims& party_dims, const Dims& ancilla_dims);

}  // namespace entpower
