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

#include "entpower/unitary.hpp"
#include "json.hpp"

namespace entpower::cli {

/// {"dims": [...], "entries": [[re, im], ...], "label": "..."}.
nlohmann::json to_matrix_json(const Unitary& u);

/// Throws std::invalid_argument for malformed documents or non-unitary
/// matrices (tolerance 1e-9 to absorb text round-off).
Unitary from_matrix_json(const nlohmann::json& doc);

void write_matrix_file(const Unitary& u, const std::string& path);
Unitary read_matrix_file(const std::string& path);

}  // namespace entpower::cli
