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

#include "entpower/analytic_ep.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "entpower/states.hpp"

namespace entpower {

ThreeQubitSr2Spec ThreeQubitSr2Spec::from_flat(const std::vector<double>& theta,
                                               const std::vector<double>& omega) {
  if (theta.size() != 4 || omega.size() != 4) {
    throw std::invalid_argument("three-qubit spec needs 4 theta and 4 omega angles");
  }
  ThreeQubitSr2Spec s;
  for (std::size_t i = 0; i < 4; ++i) {
    s.theta[i / 2][i % 2] = theta[i];
    s.omega[i / 2][i % 2] = omega[i];
  }
  return s;
}

namespace {

bool in_open(double x, double lo, double hi) { return x > lo && x < hi; }

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

bool valid_alpha(double a) { return (in_open(a, 0.0, kPi / 2) || in_open(a, kPi / 2, kPi)); }

}  // namespace

TableISpec TableISpec::k_n(std::size_t n, double phi) {
  TableISpec s;
  s.family = Family::kN;
  s.n = n;
  s.phi = phi;
  s.validate();
  return s;
}

TableISpec TableISpec::k_n_minus_1(std::size_t n, double theta, double phi) {
  TableISpec s;
  s.family = Family::kNMinus1;
  s.n = n;
  s.theta = theta;
  s.phi = phi;
  s.validate();
  return s;
}

TableISpec TableISpec::k_2(std::vector<double> betas) {
  TableISpec s;
  s.family = Family::k2;
  s.n = betas.size() + 1;
  s.betas = std::move(betas);
  s.validate();
  return s;
}

TableISpec TableISpec::k_1(std::size_t n, double alpha) {
  TableISpec s;
  s.family = Family::k1;
  s.n = n;
  s.alpha = alpha;
  s.validate();
  return s;
}

TableISpec TableISpec::k_0(std::size_t n, double alpha, double beta) {
  TableISpec s;
  s.family = Family::k0;
  s.n = n;
  s.alpha = alpha;
  s.beta = beta;
  s.validate();
  return s;
}

TableISpec TableISpec::from_k(std::size_t n, std::size_t k, const std::vector<double>& p) {
  require(n >= 4, "rank-two families need n >= 4");
  auto need = [&](std::size_t count) {
    require(p.size() == count, "singular number " + std::to_string(k) + " takes " +
                                   std::to_string(count) + " parameter(s), got " +
                                   std::to_string(p.size()));
  };
  if (k == n) {
    need(1);
    return k_n(n, p[0]);
  }
  if (k == n - 1) {
    need(2);
    return k_n_minus_1(n, p[0], p[1]);
  }
  if (k == 2) {
    need(n - 1);
    return k_2(p);
  }
  if (k == 1) {
    need(1);
    return k_1(n, p[0]);
  }
  if (k == 0) {
    need(2);
    return k_0(n, p[0], p[1]);
  }
  throw std::invalid_argument("singular number must be n, n-1, 2, 1 or 0");
}

std::size_t TableISpec::singular_number() const {
  switch (family) {
    case Family::kN: return n;
    case Family::kNMinus1: return n - 1;
    case Family::k2: return 2;
    case Family::k1: return 1;
    case Family::k0: return 0;
  }
  return 0;
}

void TableISpec::validate() const {
  require(n >= 4, "rank-two families need n >= 4");
  switch (family) {
    case Family::kN:
      require(in_open(phi, 0.0, kTwoPi), "phi must lie in (0, 2pi)");
      break;
    case Family::kNMinus1:
      require(in_open(phi, 0.0, kTwoPi) && in_open(theta, 0.0, kTwoPi),
              "theta and phi must lie in (0, 2pi)");
      require(theta != phi, "theta must differ from phi");
      break;
    case Family::k2:
      require(betas.size() == n - 1, "k = 2 needs n - 1 beta angles");
      for (double b : betas) require(in_open(b, 0.0, kTwoPi), "beta must lie in (0, 2pi)");
      break;
    case Family::k1:
      require(valid_alpha(alpha), "alpha must lie in (0, pi/2) or (pi/2, pi)");
      break;
    case Family::k0:
      require(valid_alpha(alpha) && valid_alpha(beta),
              "alpha and beta must lie in (0, pi/2) or (pi/2, pi)");
      break;
  }
}

double ep_from_min_convex_sum(double m) {
  m = std::clamp(m, 0.0, 1.0);
  return binary_entropy((1.0 - m) / 2.0);
}

namespace {

std::string branch_of(double m) { return m <= kHullTol ? "hull" : "otherwise"; }

cplx unit(double a) { return std::polar(1.0, a); }

}  // namespace

AnalyticResult ep_controlled_diagonal(const ControlledDiagonalSpec& spec) {
  const PhaseMultiset set = spec.phase_set();
  AnalyticResult r;
  r.min_convex_sum = min_convex_sum(set);
  r.value_ebits = ep_from_min_convex_sum(r.min_convex_sum);
  r.simplex_value_ebits = r.value_ebits;
  r.governing_set = set.angles();
  r.branch = origin_in_hull(set) ? "hull" : "otherwise";
  r.degenerate = r.min_convex_sum >= 1.0 - 1e-15;
  return r;
}

std::array<std::array<std::array<double, 2>, 2>, 3> phase_tables_3qubit(
    const ThreeQubitSr2Spec& s) {
  std::array<std::array<std::array<double, 2>, 2>, 3> t{};
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      t[0][a][b] = s.omega[a][b] - s.theta[a][b];
    }
  }
  for (int b = 0; b < 2; ++b) {
    t[1][0][b] = s.theta[1][b] - s.theta[0][b];
    t[1][1][b] = s.omega[1][b] - s.omega[0][b];
    t[2][0][b] = s.theta[b][1] - s.theta[b][0];
    t[2][1][b] = s.omega[b][1] - s.omega[b][0];
  }
  return t;
}

std::array<PhaseMultiset, 3> phase_sets_3qubit(const ThreeQubitSr2Spec& spec) {
  const auto t = phase_tables_3qubit(spec);
  auto flat = [&](int j) {
    return normalize_phases({t[j][0][0], t[j][0][1], t[j][1][0], t[j][1][1]});
  };
  return {flat(0), flat(1), flat(2)};
}

AnalyticResult ep_3qubit_sr2(const ThreeQubitSr2Spec& spec) {
  const auto tables = phase_tables_3qubit(spec);
  const auto sets = phase_sets_3qubit(spec);
  AnalyticResult r;
  double best_simplex = 1.0;
  std::size_t arg = 0;
  for (std::size_t j = 0; j < 3; ++j) {
    std::array<std::array<cplx, 2>, 2> z{};
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) z[a][b] = unit(tables[j][a][b]);
    }
    const double m = min_product_convex_sum(z);
    if (j == 0 || m < r.min_convex_sum) {
      r.min_convex_sum = m;
      arg = j;
    }
    best_simplex = std::min(best_simplex, min_convex_sum(sets[j]));
  }
  r.value_ebits = ep_from_min_convex_sum(r.min_convex_sum);
  r.simplex_value_ebits = ep_from_min_convex_sum(best_simplex);
  r.governing_set = sets[arg].angles();
  r.branch = branch_of(r.min_convex_sum);
  // U1 proportional to U2: the control cut carries Schmidt rank 1.
  const auto& a1 = sets[0].angles();
  r.degenerate = std::all_of(a1.begin(), a1.end(), [&](double x) {
    return std::abs(unit(x) - unit(a1.front())) <= kHullTol;
  });
  return r;
}

PhaseMultiset phase_set_nqubit(const TableISpec& spec) {
  spec.validate();
  using F = TableISpec::Family;
  switch (spec.family) {
    case F::kN:
      return normalize_phases({0.0, spec.phi});
    case F::kNMinus1:
      return normalize_phases({0.0, spec.theta, spec.phi});
    case F::k2: {
      const std::size_t count = std::size_t{1} << spec.betas.size();
      std::vector<double> sums(count, 0.0);
      for (std::size_t mask = 0; mask < count; ++mask) {
        for (std::size_t l = 0; l < spec.betas.size(); ++l) {
          if (mask >> l & 1U) sums[mask] += spec.betas[l];
        }
      }
      return normalize_phases(sums);
    }
    case F::k1:
      return normalize_phases({0.0, 2 * spec.alpha, -2 * spec.alpha});
    case F::k0:
      return normalize_phases({2 * spec.alpha, -2 * spec.alpha, 2 * spec.beta, -2 * spec.beta});
  }
  throw std::logic_error("unreachable");
}

AnalyticResult ep_nqubit_sr2(const TableISpec& spec) {
  const PhaseMultiset set = phase_set_nqubit(spec);
  AnalyticResult r;
  r.governing_set = set.angles();
  const double simplex_m = min_convex_sum(set);
  if (spec.family == TableISpec::Family::k2) {
    // Product inputs across A1 : rest weight the subset sums by a product
    // distribution, so the reachable convex sums are prod_l of points on
    // the chords [1, e^{i beta_l}].
    double prod = 1.0, single = 1.0;
    for (double b : spec.betas) {
      const double g = std::abs(std::cos(b / 2.0));
      prod *= g;
      single = std::min(single, g);
    }
    r.min_convex_sum = prod;
    r.simplex_value_ebits = ep_from_min_convex_sum(std::min(simplex_m, single));
  } else {
    r.min_convex_sum = simplex_m;
    r.simplex_value_ebits = ep_from_min_convex_sum(simplex_m);
  }
  r.value_ebits = ep_from_min_convex_sum(r.min_convex_sum);
  r.branch = branch_of(r.min_convex_sum);
  return r;
}

bool aep_is_maximal_3qubit(const ThreeQubitSr2Spec& spec) {
  const auto sets = phase_sets_3qubit(spec);
  return std::any_of(sets.begin(), sets.end(),
                     [](const PhaseMultiset& s) { return origin_in_hull(s); });
}

bool aep_is_maximal_nqubit(const TableISpec& spec) {
  const PhaseMultiset set = phase_set_nqubit(spec);
  if (spec.family == TableISpec::Family::k2) {
    for (double b : spec.betas) {
      if (std::abs(b - kPi) <= kHullTol) return true;
    }
  }
  return origin_in_hull(set);
}

double aep_ceiling(std::size_t m) {
  if (m < 1) throw std::invalid_argument("aep_ceiling: term count must be >= 1");
  return std::log2(static_cast<double>(m));
}

}  // namespace entpower
