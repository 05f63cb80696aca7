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

#include <string>
#include <utility>
#include <vector>

#include "entpower/variational_ep.hpp"

namespace entpower::cli {

/**
 * Grid over one gate family. Families and their parameters, in column
 * order:
 *   kn: phi          kn-1: phi, theta       k2: beta2 .. beta<n>
 *   k1: alpha        k0: alpha, beta        ccp: phi
 */
struct SweepSpec {
  std::string family;
  std::size_t n = 4;
  /// (parameter, values); every parameter of the family must appear.
  std::vector<std::pair<std::string, std::vector<double>>> grid;
  bool numeric = false;
  OptimizerConfig cfg;
};

/// Parameter names of a family, in column order.
std::vector<std::string> sweep_parameters(const std::string& family, std::size_t n);

/// Reorders `spec.grid` into column order and checks it. Throws
/// std::invalid_argument.
void validate_sweep(SweepSpec& spec);

/// CSV text: header row, then one row per grid point with the first
/// parameter varying slowest.
std::string run_sweep(SweepSpec spec);

}  // namespace entpower::cli
