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

#include "entpower/gates.hpp"
#include "entpower/linalg.hpp"
#include "entpower/schmidt.hpp"

namespace entpower {
namespace {

TEST(Bipartition, ParseAndLabel) {
  const auto b = Bipartition::parse("AD:BC", 4);
  EXPECT_EQ(b.left(), (std::vector<std::size_t>{0, 3}));
  EXPECT_EQ(b.right(), (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(b.label(), "AD:BC");
  EXPECT_EQ(Bipartition::parse("3,0", 4), b);
  EXPECT_EQ(Bipartition::parse("C:AB", 3).left(), (std::vector<std::size_t>{2}));
  EXPECT_THROW(Bipartition::parse("AB:BC", 3), std::invalid_argument);
  EXPECT_THROW(Bipartition::parse("ABC:", 3), std::invalid_argument);
  EXPECT_THROW(Bipartition({}, 3), std::invalid_argument);
  EXPECT_THROW(Bipartition({0, 1, 2}, 3), std::invalid_argument);
  EXPECT_THROW(Bipartition({5}, 3), std::invalid_argument);
}

TEST(Schmidt, ProductGateHasRankOne) {
  std::mt19937_64 rng(1);
  const Unitary u(kron(random_unitary(2, rng), random_unitary(3, rng)), {2, 3});
  const auto sd = schmidt_decompose(u, Bipartition({0}, 2));
  EXPECT_EQ(sd.rank(), 1u);
  EXPECT_NEAR(sd.coefficients[0], 1.0, 1e-12);
  const auto b = ep_bounds(sd);
  EXPECT_NEAR(b.lower, 0.0, 1e-12);
  EXPECT_NEAR(b.upper, 0.0, 1e-12);
}

TEST(Schmidt, NamedTwoQubitGates) {
  const Bipartition ab({0}, 2);
  const auto c = schmidt_decompose(cnot(), ab);
  ASSERT_EQ(c.rank(), 2u);
  EXPECT_NEAR(c.coefficients[0], 1 / std::sqrt(2.0), 1e-12);
  const auto s = schmidt_decompose(swap_gate(), ab);
  ASSERT_EQ(s.rank(), 4u);
  for (double x : s.coefficients) EXPECT_NEAR(x, 0.5, 1e-12);
  EXPECT_NEAR(ep_bounds(s).lower, 2.0, 1e-12);
}

TEST(Schmidt, ReconstructionAndNormalization) {
  std::mt19937_64 rng(2);
  const Unitary u(random_unitary(12, rng), {2, 3, 2});
  for (const auto& cut : {Bipartition({0}, 3), Bipartition({1}, 3), Bipartition({0, 2}, 3)}) {
    const auto sd = schmidt_decompose(u, cut);
    EXPECT_LT(max_abs_diff(sd.reconstruct(), to_cut_order(u, cut)), 1e-10);
    double sum = 0;
    for (double x : sd.coefficients) sum += x * x;
    EXPECT_NEAR(sum, 1.0, 1e-12);
    for (std::size_t j = 0; j < sd.rank(); ++j) {
      for (std::size_t k = 0; k < sd.rank(); ++k) {
        const cplx gl = (sd.left_factors[j].adjoint() * sd.left_factors[k]).trace() /
                        static_cast<double>(sd.d_left);
        const cplx gr = (sd.right_factors[j].adjoint() * sd.right_factors[k]).trace() /
                        static_cast<double>(sd.d_right);
        EXPECT_NEAR(std::abs(gl - cplx(j == k ? 1.0 : 0.0)), 0.0, 1e-10);
        EXPECT_NEAR(std::abs(gr - cplx(j == k ? 1.0 : 0.0)), 0.0, 1e-10);
      }
    }
  }
}

TEST(Schmidt, SymmetricUnderSideSwap) {
  std::mt19937_64 rng(3);
  const Unitary u(random_unitary(8, rng), {2, 2, 2});
  const auto a = schmidt_decompose(u, Bipartition({0}, 3));
  const auto b = schmidt_decompose(u, Bipartition({1, 2}, 3));
  ASSERT_EQ(a.rank(), b.rank());
  for (std::size_t j = 0; j < a.rank(); ++j) {
    EXPECT_NEAR(a.coefficients[j], b.coefficients[j], 1e-12);
  }
}

TEST(Schmidt, FredkinRanks) {
  EXPECT_EQ(schmidt_rank(fredkin3(), Bipartition::parse("C:AB", 3)), 4u);
  EXPECT_EQ(schmidt_rank(fredkin3(), Bipartition::parse("A:BC", 3)), 2u);
  const auto f4 = fredkin4();
  EXPECT_EQ(schmidt_rank(f4, Bipartition::parse("A:BCD", 4)), 2u);
  EXPECT_EQ(schmidt_rank(f4, Bipartition::parse("AB:CD", 4)), 2u);
  EXPECT_EQ(schmidt_rank(f4, Bipartition::parse("D:ABC", 4)), 4u);
  EXPECT_EQ(schmidt_rank(f4, Bipartition::parse("AD:BC", 4)), 5u);
  EXPECT_EQ(schmidt_rank(cyclic_shift3(), Bipartition::parse("A:BC", 3)), 4u);
}

TEST(Schmidt, CutOrderPermutesParties) {
  // Under the A:BC cut the cyclic shift puts C's input into A's output.
  const auto m = to_cut_order(cyclic_shift3(), Bipartition({2}, 3));
  EXPECT_TRUE(is_unitary(m));
  EXPECT_EQ(m.rows(), 8u);
}

}  // namespace
}  // namespace entpower
