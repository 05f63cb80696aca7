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

#include "entpower/cli/angles.hpp"

#include <cmath>
#include <cstdio>
#include <regex>
#include <sstream>
#include <stdexcept>

#include "entpower/phase_geometry.hpp"

namespace entpower::cli {

namespace {

std::string strip(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

double parse_number(const std::string& s, const std::string& whole) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse angle '" + whole + "'");
  }
  if (pos != s.size() || !std::isfinite(v)) {
    throw std::invalid_argument("cannot parse angle '" + whole + "'");
  }
  return v;
}

}  // namespace

double parse_angle(const std::string& raw) {
  const std::string text = strip(raw);
  if (text.empty()) throw std::invalid_argument("empty angle");
  static const std::regex pi_form(
      R"(^([+-]?)((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*\*?\s*pi(?:\s*/\s*((?:\d+\.?\d*|\.\d+)))?$)");
  std::smatch m;
  if (std::regex_match(text, m, pi_form)) {
    double v = kPi;
    if (m[2].matched) v *= parse_number(m[2].str(), text);
    if (m[3].matched) {
      const double den = parse_number(m[3].str(), text);
      if (den == 0.0) throw std::invalid_argument("division by zero in angle '" + text + "'");
      v /= den;
    }
    return m[1].str() == "-" ? -v : v;
  }
  return parse_number(text, text);
}

std::vector<double> parse_angle_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_angle(item));
  if (out.empty()) throw std::invalid_argument("empty angle list");
  return out;
}

std::vector<double> parse_range(const std::string& text) {
  const auto a = text.find(':');
  const auto b = text.rfind(':');
  if (a == std::string::npos || a == b) {
    throw std::invalid_argument("range must look like start:stop:steps, got '" + text + "'");
  }
  const double start = parse_angle(text.substr(0, a));
  const double stop = parse_angle(text.substr(a + 1, b - a - 1));
  const std::string steps_s = strip(text.substr(b + 1));
  std::size_t pos = 0;
  long steps = 0;
  try {
    steps = std::stol(steps_s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != steps_s.size() || steps < 2) {
    throw std::invalid_argument("range needs an integer step count >= 2, got '" + text + "'");
  }
  std::vector<double> out(static_cast<std::size_t>(steps));
  for (long i = 0; i < steps; ++i) {
    out[static_cast<std::size_t>(i)] =
        i == steps - 1 ? stop : start + (stop - start) * static_cast<double>(i) / (steps - 1);
  }
  return out;
}

std::string format12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace entpower::cli
