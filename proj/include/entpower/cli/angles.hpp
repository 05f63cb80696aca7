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
#include <vector>

namespace entpower::cli {

/**
 * Parses an angle: decimals ("0.25", "-1e-3") or pi expressions such as
 * "pi", "-pi/2", "3pi/4", "3*pi/4", "2.5pi". Throws std::invalid_argument.
 */
double parse_angle(const std::string& text);

/// Comma-separated angles.
std::vector<double> parse_angle_list(const std::string& text);

/// "start:stop:steps", inclusive linspace with steps >= 2.
std::vector<double> parse_range(const std::string& text);

/// %.12g formatting used for CSV and text output.
std::string format12(double v);

}  // namespace entpower::cli
