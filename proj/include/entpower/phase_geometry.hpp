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
#include <span>
#include <utility>
#include <vector>

#include "entpower/matrix.hpp"

namespace entpower {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;
inline constexpr double kPi = 3.141592653589793238462643383279;

/// Tolerance on half-circle comparisons; boundary cases count as in-hull.
inline constexpr double kHullTol = 1e-9;

/// Angles in [0, 2pi), sorted ascending, duplicates kept.
class PhaseMultiset {
 public:
  const std::vector<double>& angles() const { return angles_; }
  std::size_t size() const { return angles_.size(); }

 private:
  std::vector<double> angles_;
  friend PhaseMultiset normalize_phases(std::span<const double> raw);
};

/// Reduces mod 2pi and sorts. Throws for empty or non-finite input.
PhaseMultiset normalize_phases(std::span<const double> raw);
inline PhaseMultiset normalize_phases(std::initializer_list<double> raw) {
  return normalize_phases(std::span<const double>(raw.begin(), raw.size()));
}

/// True iff every circular gap between sorted neighbours is <= pi.
bool origin_in_hull(const PhaseMultiset& phases);

/// min over the simplex of |sum c_j e^{i theta_j}|.
double min_convex_sum(const PhaseMultiset& phases);

/// max over the simplex of |sum c_j e^{i theta_j}|; always 1.
double max_convex_sum(const PhaseMultiset& phases);

struct ConvexSumReport {
  double min = 0.0;
  double max = 1.0;
  bool in_hull = false;
  /// Endpoints of the widest circular gap. For an in-hull set this is still
  /// reported, but it does not determine the minimum.
  std::pair<double, double> binding_pair{0.0, 0.0};
};

ConvexSumReport convex_sum_report(const PhaseMultiset& phases);

/**
 * min over (x, y) in [0,1]^2 of |f(x, y)| with the bilinear interpolation
 *   f = (1-x)(1-y) z[0][0] + (1-x) y z[0][1] + x (1-y) z[1][0] + x y z[1][1].
 *
 * This is the smallest modulus of a convex sum of the four points when the
 * weights are restricted to product distributions p_a q_b.
 */
double min_product_convex_sum(const std::array<std::array<cplx, 2>, 2>& z);

}  // namespace entpower
