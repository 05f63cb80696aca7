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

#include "entpower/gates.hpp"
#include "entpower/phase_geometry.hpp"

namespace entpower {
namespace {

// Column index the permutation sends basis state `in` to.
std::size_t image(const Unitary& u, std::size_t in) {
  for (std::size_t r = 0; r < u.dim(); ++r) {
    if (std::abs(u.matrix()(r, in) - cplx(1.0)) < 1e-15) return r;
  }
  return u.dim();
}

bool is_permutation(const Unitary& u) {
  for (const auto& z : u.matrix().data()) {
    if (z != cplx(0.0) && z != cplx(1.0)) return false;
  }
  return true;
}

TEST(Gates, ToffoliTruthTable) {
  for (std::size_t n : {3u, 4u, 5u}) {
    const auto t = toffoli(n);
    ASSERT_TRUE(is_permutation(t));
    const std::size_t d = t.dim();
    for (std::size_t in = 0; in < d; ++in) {
      const bool controls = (in >> 1) == (d >> 1) - 1;
      EXPECT_EQ(image(t, in), controls ? in ^ 1u : in);
    }
    EXPECT_LT(max_abs_diff(t.matrix() * t.matrix(), ComplexMatrix::identity(d)), 1e-15);
  }
  EXPECT_THROW(toffoli(2), std::invalid_argument);
}

TEST(Gates, FredkinTruthTables) {
  const auto f3 = fredkin3();
  ASSERT_TRUE(is_permutation(f3));
  for (std::size_t in = 0; in < 8; ++in) {
    const std::size_t a = in >> 2, b = (in >> 1) & 1, c = in & 1;
    EXPECT_EQ(image(f3, in), a ? (a << 2 | c << 1 | b) : in);
  }
  const auto f4 = fredkin4();
  ASSERT_TRUE(is_permutation(f4));
  for (std::size_t in = 0; in < 16; ++in) {
    const std::size_t ab = in >> 2, c = (in >> 1) & 1, d = in & 1;
    EXPECT_EQ(image(f4, in), ab == 3 ? (ab << 2 | d << 1 | c) : in);
  }
}

TEST(Gates, CyclicShiftIsThreeCycle) {
  const auto u = cyclic_shift3();
  ASSERT_TRUE(is_permutation(u));
  for (std::size_t in = 0; in < 8; ++in) {
    const std::size_t a = in >> 2, b = (in >> 1) & 1, c = in & 1;
    EXPECT_EQ(image(u, in), c << 2 | a << 1 | b);
  }
  const auto cube = u.matrix() * u.matrix() * u.matrix();
  EXPECT_LT(max_abs_diff(cube, ComplexMatrix::identity(8)), 1e-15);
}

TEST(Gates, CcpIsDiagonal) {
  const auto u = ccp(kPi / 3);
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = 0; j < 8; ++j) {
      const cplx want = i != j ? cplx(0.0) : i == 7 ? std::polar(1.0, kPi / 3) : cplx(1.0);
      EXPECT_NEAR(std::abs(u.matrix()(i, j) - want), 0.0, 1e-15);
    }
  }
  EXPECT_THROW(ccp(0.0), std::invalid_argument);
  EXPECT_THROW(ccp(kTwoPi), std::invalid_argument);
}

TEST(Gates, CczLocallyEquivalentToToffoli) {
  const double h = 1 / std::sqrt(2.0);
  const ComplexMatrix had{{h, h}, {h, -h}};
  const auto id4 = ComplexMatrix::identity(4);
  ComplexMatrix hc(8, 8);
  for (std::size_t b = 0; b < 4; ++b)
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) hc(2 * b + i, 2 * b + j) = id4(b, b) * had(i, j);
  EXPECT_LT(max_abs_diff(hc * ccp(kPi).matrix() * hc, toffoli(3).matrix()), 1e-14);
}

TEST(Gates, Table1Diagonals) {
  const auto kn = table1_gate(TableISpec::k_n(4, kPi / 2));
  EXPECT_NEAR(std::abs(kn.matrix()(0, 0) - std::polar(1.0, kPi / 2)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(kn.matrix()(15, 15) - cplx(1.0)), 0.0, 1e-15);
  for (const auto& spec : {TableISpec::k_n_minus_1(4, 0.3, 1.1), TableISpec::k_2({1, 2, 3}),
                           TableISpec::k_1(4, 0.4), TableISpec::k_0(4, 0.4, 0.9)}) {
    const auto u = table1_gate(spec);
    EXPECT_EQ(u.dims(), (Dims{2, 2, 2, 2}));
    for (std::size_t i = 0; i < 16; ++i)
      for (std::size_t j = 0; j < 16; ++j)
        if (i != j) EXPECT_EQ(u.matrix()(i, j), cplx(0.0));
  }
}

TEST(Gates, ControlledUnitaryBlocks) {
  const auto u = controlled_unitary({1, 1}, {identity_gate({2, 2}), swap_gate()});
  EXPECT_EQ(u.dims(), (Dims{2, 2, 2}));
  EXPECT_LT(max_abs_diff(u.matrix(), fredkin3().matrix()), 1e-15);
  const auto cd = controlled_diagonal({{0.0, kPi}}, 2, 1);
  EXPECT_LT(max_abs_diff(cd.matrix(), cz().matrix()), 1e-15);
  EXPECT_THROW(controlled_unitary({1}, {swap_gate(), cnot()}), std::invalid_argument);
}

TEST(Unitary, Validation) {
  EXPECT_THROW(Unitary(ComplexMatrix{{1, 1}, {0, 1}}, {2}), std::invalid_argument);
  EXPECT_THROW(Unitary(ComplexMatrix::identity(4), {3}), std::invalid_argument);
  const auto p = permute_parties(cnot().matrix(), {2, 2}, {1, 0});
  // CNOT with roles exchanged: |01> -> |11>.
  EXPECT_EQ(p(3, 1), cplx(1.0));
}

}  // namespace
}  // namespace entpower
