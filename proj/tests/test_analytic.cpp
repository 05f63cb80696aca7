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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "entpower/analytic_ep.hpp"
#include "oracles.hpp"

namespace entpower {
namespace {

namespace t = entpower::testing;

ThreeQubitSr2Spec ccp_spec(double phi) {
  return ThreeQubitSr2Spec::from_flat({0, 0, 0, 0}, {0, 0, 0, phi});
}

TEST(Analytic, EntropyOfConvexSum) {
  EXPECT_DOUBLE_EQ(ep_from_min_convex_sum(0.0), 1.0);
  EXPECT_NEAR(ep_from_min_convex_sum(1.0), 0.0, 1e-15);
  EXPECT_NEAR(ep_from_min_convex_sum(0.5), t::h2(0.25), 1e-14);
}

TEST(Analytic, CcpCurve) {
  for (double phi : {kPi / 6, kPi / 3, kPi / 2, 2 * kPi / 3, kPi, 1.5 * kPi}) {
    const auto r = ep_3qubit_sr2(ccp_spec(phi));
    EXPECT_NEAR(r.value_ebits, t::h2((1 - std::abs(std::cos(phi / 2))) / 2), 1e-12) << phi;
  }
  EXPECT_DOUBLE_EQ(ep_3qubit_sr2(ccp_spec(kPi)).value_ebits, 1.0);
  EXPECT_EQ(ep_3qubit_sr2(ccp_spec(kPi)).branch, "hull");
  EXPECT_EQ(ep_3qubit_sr2(ccp_spec(kPi / 2)).branch, "otherwise");
}

TEST(Analytic, ThreeQubitTrivialAndDegenerate) {
  const auto zero = ep_3qubit_sr2(ThreeQubitSr2Spec::from_flat({0, 0, 0, 0}, {0, 0, 0, 0}));
  EXPECT_NEAR(zero.value_ebits, 0.0, 1e-15);
  // Equal controlled blocks: still a two-qubit CZ on BC, one ebit.
  const auto cz = ep_3qubit_sr2(ThreeQubitSr2Spec::from_flat({0, 0, 0, kPi}, {0, 0, 0, kPi}));
  EXPECT_TRUE(cz.degenerate);
  EXPECT_NEAR(cz.value_ebits, 1.0, 1e-12);
  EXPECT_THROW(ThreeQubitSr2Spec::from_flat({0, 0, 0}, {0, 0, 0, 0}), std::invalid_argument);
}

TEST(Analytic, ThreeQubitMatchesProductOracle) {
  std::mt19937_64 rng(21);
  for (int rep = 0; rep < 40; ++rep) {
    const auto th = t::random_angles(rng, 4), om = t::random_angles(rng, 4);
    const auto spec = ThreeQubitSr2Spec::from_flat(th, om);
    const auto tables = phase_tables_3qubit(spec);
    double m = 1.0;
    for (const auto& tab : tables) {
      std::array<std::array<cplx, 2>, 2> z;
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) z[a][b] = std::polar(1.0, tab[a][b]);
      m = std::min(m, t::product_min(z));
    }
    const auto r = ep_3qubit_sr2(spec);
    EXPECT_NEAR(r.value_ebits, t::h2((1 - m) / 2), 1e-6);
    EXPECT_LE(r.value_ebits, r.simplex_value_ebits + 1e-12);
  }
}

TEST(Analytic, TableOneClosedForms) {
  for (std::size_t n : {4u, 5u}) {
    EXPECT_DOUBLE_EQ(ep_nqubit_sr2(TableISpec::k_n(n, kPi)).value_ebits, 1.0);
    const double phi = 1.1;
    EXPECT_NEAR(ep_nqubit_sr2(TableISpec::k_n(n, phi)).value_ebits,
                t::h2((1 - std::cos(phi / 2)) / 2), 1e-12);
  }
  // k = n-1 reduces to k = n as theta -> 0.
  const double a = ep_nqubit_sr2(TableISpec::k_n(4, 2.0)).value_ebits;
  const double b = ep_nqubit_sr2(TableISpec::k_n_minus_1(4, 1e-9, 2.0)).value_ebits;
  EXPECT_NEAR(a, b, 1e-6);
  // k = 1: points 0, +-2 alpha.
  const double al = 0.3;
  EXPECT_NEAR(ep_nqubit_sr2(TableISpec::k_1(4, al)).value_ebits,
              t::h2((1 - std::cos(2 * al)) / 2), 1e-12);
  EXPECT_NEAR(ep_nqubit_sr2(TableISpec::k_1(4, 1.0)).value_ebits, 1.0, 1e-12);
  // k = 2: product of half-angle cosines.
  const std::vector<double> betas{kPi / 2, kPi / 2, kPi / 2};
  const double m = std::pow(std::cos(kPi / 4), 3);
  EXPECT_NEAR(ep_nqubit_sr2(TableISpec::k_2(betas)).value_ebits, t::h2((1 - m) / 2), 1e-12);
  EXPECT_DOUBLE_EQ(ep_nqubit_sr2(TableISpec::k_2({kPi, 0.7, 1.9})).value_ebits, 1.0);
}

TEST(Analytic, TableOneValidation) {
  EXPECT_THROW(TableISpec::k_n(4, 0.0), std::invalid_argument);
  EXPECT_THROW(TableISpec::k_n(3, 1.0), std::invalid_argument);
  EXPECT_THROW(TableISpec::k_n_minus_1(4, 1.0, 1.0), std::invalid_argument);
  EXPECT_THROW(TableISpec::k_1(4, kPi / 2), std::invalid_argument);
  EXPECT_THROW(TableISpec::k_0(4, 0.3, kPi / 2), std::invalid_argument);
  EXPECT_THROW(TableISpec::from_k(4, 3, {1.0}), std::invalid_argument);
  EXPECT_EQ(TableISpec::from_k(5, 5, {1.0}).singular_number(), 5u);
  EXPECT_EQ(TableISpec::from_k(5, 2, {1, 1, 1, 1}).singular_number(), 2u);
}

TEST(Analytic, ControlledDiagonal) {
  EXPECT_NEAR(ep_controlled_diagonal({{0.0, kPi}}).value_ebits, 1.0, 1e-12);
  EXPECT_NEAR(ep_controlled_diagonal({{0.0, kPi / 2}}).value_ebits, t::h2((1 - std::sqrt(0.5)) / 2),
              1e-12);
}

TEST(Analytic, AepMaximality) {
  EXPECT_TRUE(aep_is_maximal_3qubit(ccp_spec(kPi)));
  EXPECT_FALSE(aep_is_maximal_3qubit(ccp_spec(kPi / 2)));
  EXPECT_TRUE(aep_is_maximal_nqubit(TableISpec::k_n(4, kPi)));
  EXPECT_FALSE(aep_is_maximal_nqubit(TableISpec::k_n(4, kPi / 3)));
  EXPECT_TRUE(aep_is_maximal_nqubit(TableISpec::k_2({0.3, kPi, 1.0})));
  EXPECT_FALSE(aep_is_maximal_nqubit(TableISpec::k_2({0.3, 0.4, 1.0})));
  EXPECT_DOUBLE_EQ(aep_ceiling(2), 1.0);
  EXPECT_DOUBLE_EQ(aep_ceiling(4), 2.0);
  EXPECT_THROW(aep_ceiling(0), std::invalid_argument);
}

TEST(Analytic, PhaseSets) {
  const auto sets = phase_sets_3qubit(ccp_spec(kPi));
  for (const auto& s : sets) EXPECT_EQ(s.size(), 4u);
  EXPECT_EQ(phase_set_nqubit(TableISpec::k_2({1, 2, 3})).size(), 8u);
}

}  // namespace
}  // namespace entpower
