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

#include "entpower/cli/matrix_file.hpp"

#include <fstream>
#include <stdexcept>

namespace entpower::cli {

nlohmann::json to_matrix_json(const Unitary& u) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& z : u.matrix().data()) entries.push_back({z.real(), z.imag()});
  return {{"dims", u.dims()}, {"entries", std::move(entries)}, {"label", u.label()}};
}

Unitary from_matrix_json(const nlohmann::json& doc) {
  try {
    const Dims dims = doc.at("dims").get<Dims>();
    const auto& entries = doc.at("entries");
    const std::size_t d = total_dim(dims);
    if (!entries.is_array() || entries.size() != d * d) {
      throw std::invalid_argument("matrix file: expected " + std::to_string(d * d) + " entries");
    }
    std::vector<cplx> data;
    data.reserve(d * d);
    for (const auto& e : entries) {
      if (!e.is_array() || e.size() != 2) {
        throw std::invalid_argument("matrix file: entries must be [re, im] pairs");
      }
      data.emplace_back(e[0].get<double>(), e[1].get<double>());
    }
    std::string label = doc.contains("label") ? doc["label"].get<std::string>() : "";
    return Unitary(ComplexMatrix(d, d, std::move(data)), dims, std::move(label), 1e-9);
  } catch (const nlohmann::json::exception& ex) {
    throw std::invalid_argument(std::string("matrix file: ") + ex.what());
  }
}

void write_matrix_file(const Unitary& u, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << to_matrix_json(u).dump() << '\n';
}

Unitary read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& ex) {
    throw std::invalid_argument("matrix file '" + path + "': " + ex.what());
  }
  return from_matrix_json(doc);
}

}  // namespace entpower::cli
