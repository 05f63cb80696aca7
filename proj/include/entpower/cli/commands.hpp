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

#include <iosfwd>
#include <string>

#include "entpower/analytic_ep.hpp"
#include "entpower/unitary.hpp"
#include "entpower/variational_ep.hpp"
#include "json.hpp"

namespace entpower::cli {

/// Gate selection shared by `gate`, `ep-numeric`, `aep-numeric` and
/// `schmidt`. Angle fields hold unparsed text.
struct GateArgs {
  std::string name;
  std::size_t n = 3;
  std::size_t k = 0;
  bool k_set = false;
  std::string phi, theta, omega, alpha, beta, phases;
  std::string dims;
  std::size_t d_a = 2;
  std::size_t rank = 1;
};

/// Names accepted by build_gate.
const std::vector<std::string>& gate_names();

Unitary build_gate(const GateArgs& args);

/// Family spec from --n, --k and the family's angle flags.
TableISpec table1_spec(const GateArgs& args);
ThreeQubitSr2Spec three_qubit_spec(const GateArgs& args);

nlohmann::json analytic_json(const AnalyticResult& r, const std::string& family);
nlohmann::json ep_result_json(const EpResult& r, bool include_certificate = true);

/// Runs the command line; returns the process exit status. Result documents
/// go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace entpower::cli
