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

#include "entpower/schmidt.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "entpower/linalg.hpp"

namespace entpower {

Bipartition::Bipartition(std::vector<std::size_t> left, std::size_t n_parties)
    : left_(std::move(left)), n_(n_parties) {
  std::sort(left_.begin(), left_.end());
  if (left_.empty() || left_.size() >= n_) {
    throw std::invalid_argument("Bipartition: left side must be nonempty and proper");
  }
  if (std::adjacent_find(left_.begin(), left_.end()) != left_.end()) {
    throw std::invalid_argument("Bipartition: duplicate party");
  }
  if (left_.back() >= n_) throw std::invalid_argument("Bipartition: party out of range");
}

Bipartition Bipartition::parse(const std::string& text, std::size_t n_parties) {
  std::vector<std::size_t> left;
  if (!text.empty() && std::isdigit(static_cast<unsigned char>(text.front()))) {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      std::size_t pos = 0;
      const unsigned long v = std::stoul(item, &pos);
      if (pos != item.size()) throw std::invalid_argument("Bipartition: bad index list");
      left.push_back(v);
    }
    return Bipartition(std::move(left), n_parties);
  }
  const auto colon = text.find(':');
  const std::string lhs = text.substr(0, colon);
  for (char ch : lhs) {
    if (ch < 'A' || ch > 'Z') throw std::invalid_argument("Bipartition: bad label '" + text + "'");
    left.push_back(static_cast<std::size_t>(ch - 'A'));
  }
  Bipartition cut(std::move(left), n_parties);
  if (colon != std::string::npos) {
    std::vector<std::size_t> rhs;
    for (char ch : text.substr(colon + 1)) {
      if (ch < 'A' || ch > 'Z') throw std::invalid_argument("Bipartition: bad label '" + text + "'");
      rhs.push_back(static_cast<std::size_t>(ch - 'A'));
    }
    std::sort(rhs.begin(), rhs.end());
    if (rhs != cut.right()) {
      throw std::invalid_argument("Bipartition: sides of '" + text + "' are not complementary");
    }
  }
  return cut;
}

std::vector<std::size_t> Bipartition::right() const {
  std::vector<std::size_t> r;
  for (std::size_t p = 0; p < n_; ++p) {
    if (!contains(p)) r.push_back(p);
  }
  return r;
}

bool Bipartition::contains(std::size_t party) const {
  return std::binary_search(left_.begin(), left_.end(), party);
}

std::string Bipartition::label() const {
  auto name = [](std::size_t p) {
    return p < 26 ? std::string(1, static_cast<char>('A' + p)) : "P" + std::to_string(p);
  };
  std::string s;
  for (auto p : left_) s += name(p);
  s += ':';
  for (auto p : right()) s += name(p);
  return s;
}

ComplexMatrix SchmidtDecomposition::reconstruct() const {
  ComplexMatrix out(d_left * d_right, d_left * d_right);
  for (std::size_t j = 0; j < rank(); ++j) {
    out += kron(left_factors[j], right_factors[j]) * cplx{coefficients[j], 0.0};
  }
  return out;
}

namespace {

void check_cut(const Unitary& u, const Bipartition& cut) {
  if (cut.n_parties() != u.n_parties()) {
    throw std::invalid_argument("cut has " + std::to_string(cut.n_parties()) +
                                " parties but the unitary has " +
                                std::to_string(u.n_parties()));
  }
}

}  // namespace

ComplexMatrix to_cut_order(const Unitary& u, const Bipartition& cut) {
  check_cut(u, cut);
  std::vector<std::size_t> order = cut.left();
  for (auto p : cut.right()) order.push_back(p);
  return permute_parties(u.matrix(), u.dims(), order);
}

SchmidtDecomposition schmidt_decompose(const Unitary& u, const Bipartition& cut) {
  check_cut(u, cut);
  const Matricization mz = matricize(u.dims(), cut.left());
  const std::size_t dl = mz.rows, dr = mz.cols, d = u.dim();

  // Realignment: R((l, l'), (r, r')) = U((l, r), (l', r')).
  ComplexMatrix realigned(dl * dl, dr * dr);
  const auto& m = u.matrix();
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      realigned(mz.row_of[i] * dl + mz.row_of[j], mz.col_of[i] * dr + mz.col_of[j]) = m(i, j);
    }
  }
  const SingularValueDecomposition s = svd(realigned);

  SchmidtDecomposition out{{}, {}, {}, cut, dl, dr};
  const double smax = s.values.empty() ? 0.0 : s.values.front();
  const double scale = std::sqrt(static_cast<double>(dl * dr));
  const double sl = std::sqrt(static_cast<double>(dl));
  const double sr = std::sqrt(static_cast<double>(dr));
  for (std::size_t k = 0; k < s.values.size(); ++k) {
    if (!(s.values[k] > 1e-8 * smax)) break;
    out.coefficients.push_back(s.values[k] / scale);
    ComplexMatrix a(dl, dl), b(dr, dr);
    for (std::size_t x = 0; x < dl; ++x) {
      for (std::size_t y = 0; y < dl; ++y) a(x, y) = s.u(x * dl + y, k) * sl;
    }
    for (std::size_t x = 0; x < dr; ++x) {
      for (std::size_t y = 0; y < dr; ++y) b(x, y) = std::conj(s.v(x * dr + y, k)) * sr;
    }
    out.left_factors.push_back(std::move(a));
    out.right_factors.push_back(std::move(b));
  }
  return out;
}

std::size_t schmidt_rank(const Unitary& u, const Bipartition& cut) {
  return schmidt_decompose(u, cut).rank();
}

EpBounds ep_bounds(const SchmidtDecomposition& sd) {
  EpBounds b;
  for (double c : sd.coefficients) {
    const double p = c * c;
    if (p > 0.0) b.lower -= p * std::log2(p);
  }
  b.upper = std::log2(static_cast<double>(std::max<std::size_t>(sd.rank(), 1)));
  // The entropy of a flat distribution can exceed log2 rank by rounding.
  b.lower = std::clamp(b.lower, 0.0, b.upper);
  return b;
}

EpBounds ep_bounds(const Unitary& u, const Bipartition& cut) {
  return ep_bounds(schmidt_decompose(u, cut));
}

}  // namespace entpower
