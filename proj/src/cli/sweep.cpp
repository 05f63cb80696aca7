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

#include "entpower/cli/sweep.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "entpower/analytic_ep.hpp"
#include "entpower/cli/angles.hpp"
#include "entpower/gates.hpp"

namespace entpower::cli {

std::vector<std::string> sweep_parameters(const std::string& family, std::size_t n) {
  if (family == "kn" || family == "ccp") return {"phi"};
  if (family == "kn-1") return {"phi", "theta"};
  if (family == "k1") return {"alpha"};
  if (family == "k0") return {"alpha", "beta"};
  if (family == "k2") {
    if (n < 4) throw std::invalid_argument("k2 sweeps need n >= 4");
    std::vector<std::string> p;
    for (std::size_t l = 2; l <= n; ++l) p.push_back("beta" + std::to_string(l));
    return p;
  }
  throw std::invalid_argument("unknown sweep family '" + family +
                              "' (expected kn, kn-1, k2, k1, k0 or ccp)");
}

void validate_sweep(SweepSpec& spec) {
  if (spec.family != "ccp" && spec.n < 4) throw std::invalid_argument("family sweeps need n >= 4");
  const auto names = sweep_parameters(spec.family, spec.n);
  std::vector<std::pair<std::string, std::vector<double>>> ordered;
  for (const auto& name : names) {
    auto it = std::find_if(spec.grid.begin(), spec.grid.end(),
                           [&](const auto& g) { return g.first == name; });
    if (it == spec.grid.end()) throw std::invalid_argument("sweep is missing parameter '" + name + "'");
    if (it->second.empty()) throw std::invalid_argument("parameter '" + name + "' has no values");
    ordered.push_back(*it);
  }
  for (const auto& g : spec.grid) {
    if (std::find(names.begin(), names.end(), g.first) == names.end()) {
      throw std::invalid_argument("parameter '" + g.first + "' does not belong to family " +
                                  spec.family);
    }
  }
  spec.grid = std::move(ordered);
}

namespace {

struct Point {
  AnalyticResult analytic;
  std::optional<Unitary> gate;
};

Point evaluate(const SweepSpec& s, const std::vector<double>& v) {
  Point p;
  if (s.family == "ccp") {
    const auto spec = ThreeQubitSr2Spec::from_flat({0, 0, 0, 0}, {0, 0, 0, v[0]});
    p.analytic = ep_3qubit_sr2(spec);
    if (s.numeric) p.gate = ccp(v[0]);
    return p;
  }
  TableISpec spec;
  if (s.family == "kn") spec = TableISpec::k_n(s.n, v[0]);
  if (s.family == "kn-1") spec = TableISpec::k_n_minus_1(s.n, v[1], v[0]);
  if (s.family == "k2") spec = TableISpec::k_2(v);
  if (s.family == "k1") spec = TableISpec::k_1(s.n, v[0]);
  if (s.family == "k0") spec = TableISpec::k_0(s.n, v[0], v[1]);
  p.analytic = ep_nqubit_sr2(spec);
  if (s.numeric) p.gate = table1_gate(spec);
  return p;
}

}  // namespace

std::string run_sweep(SweepSpec spec) {
  validate_sweep(spec);
  if (spec.family == "ccp") {
    for (double phi : spec.grid[0].second) {
      if (!(phi > 0.0 && phi < kTwoPi)) throw std::invalid_argument("ccp sweep: phi must lie in (0, 2pi)");
    }
  }
  std::ostringstream out;
  for (const auto& g : spec.grid) out << g.first << ',';
  out << "value_ebits,simplex_bound_ebits";
  if (spec.numeric) out << ",numeric_ebits";
  out << '\n';

  const std::size_t k = spec.grid.size();
  std::vector<std::size_t> idx(k, 0);
  std::vector<double> v(k);
  while (true) {
    for (std::size_t j = 0; j < k; ++j) v[j] = spec.grid[j].second[idx[j]];
    Point p;
    try {
      p = evaluate(spec, v);
    } catch (const std::invalid_argument& ex) {
      std::string at;
      for (std::size_t j = 0; j < k; ++j) at += (j ? ", " : "") + spec.grid[j].first + "=" + format12(v[j]);
      throw std::invalid_argument("grid point (" + at + "): " + ex.what());
    }
    for (double x : v) out << format12(x) << ',';
    out << format12(p.analytic.value_ebits) << ',' << format12(p.analytic.simplex_value_ebits);
    if (spec.numeric) out << ',' << format12(numeric_ep(*p.gate, spec.cfg).value);
    out << '\n';

    std::size_t j = k;
    while (j-- > 0) {
      if (++idx[j] < spec.grid[j].second.size()) break;
      idx[j] = 0;
    }
    if (j == static_cast<std::size_t>(-1)) break;
  }
  return out.str();
}

}  // namespace entpower::cli
