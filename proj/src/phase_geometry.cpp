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

#include "entpower/phase_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace entpower {

PhaseMultiset normalize_phases(std::span<const double> raw) {
  if (raw.empty()) throw std::invalid_argument("normalize_phases: empty phase list");
  PhaseMultiset out;
  out.angles_.reserve(raw.size());
  for (double a : raw) {
    if (!std::isfinite(a)) throw std::invalid_argument("normalize_phases: non-finite angle");
    double r = std::fmod(a, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    if (r >= kTwoPi) r = 0.0;
    out.angles_.push_back(r);
  }
  std::sort(out.angles_.begin(), out.angles_.end());
  return out;
}

namespace {

// Widest circular gap and the index of its lower endpoint (the gap runs
// counter-clockwise from angles[i] to angles[i + 1 mod n]).
std::pair<double, std::size_t> widest_gap(const std::vector<double>& a) {
  const std::size_t n = a.size();
  double best = kTwoPi - (a.back() - a.front());
  std::size_t at = n - 1;
  for (std::size_t j = 0; j + 1 < n; ++j) {
    const double g = a[j + 1] - a[j];
    if (g > best) {
      best = g;
      at = j;
    }
  }
  return {best, at};
}

}  // namespace

bool origin_in_hull(const PhaseMultiset& phases) {
  if (phases.size() == 0) return false;
  return widest_gap(phases.angles()).first <= kPi + kHullTol;
}

double min_convex_sum(const PhaseMultiset& phases) {
  if (phases.size() == 0) throw std::invalid_argument("min_convex_sum: empty set");
  if (origin_in_hull(phases)) return 0.0;
  const auto& a = phases.angles();
  const std::size_t n = a.size();
  double m = std::abs(std::cos((kTwoPi - (a.back() - a.front())) / 2.0));
  for (std::size_t j = 0; j + 1 < n; ++j) {
    m = std::min(m, std::abs(std::cos((a[j + 1] - a[j]) / 2.0)));
  }
  return std::min(m, 1.0);
}

double max_convex_sum(const PhaseMultiset& phases) {
  if (phases.size() == 0) throw std::invalid_argument("max_convex_sum: empty set");
  return 1.0;
}

ConvexSumReport convex_sum_report(const PhaseMultiset& phases) {
  ConvexSumReport r;
  r.min = min_convex_sum(phases);
  r.max = max_convex_sum(phases);
  r.in_hull = origin_in_hull(phases);
  const auto& a = phases.angles();
  const auto [gap, at] = widest_gap(a);
  (void)gap;
  r.binding_pair = {a[at], a[(at + 1) % a.size()]};
  return r;
}

namespace {

using Poly = std::vector<double>;  // coefficients, lowest degree first

double eval(const Poly& p, double x) {
  double v = 0.0;
  for (std::size_t k = p.size(); k-- > 0;) v = v * x + p[k];
  return v;
}

Poly derivative(const Poly& p) {
  Poly d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(static_cast<double>(k) * p[k]);
  return d;
}

Poly multiply(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

Poly trim(Poly p) {
  double scale = 0.0;
  for (double c : p) scale = std::max(scale, std::abs(c));
  while (!p.empty() && std::abs(p.back()) <= 1e-14 * scale) p.pop_back();
  if (scale == 0.0) p.clear();
  return p;
}

// Real roots of p in [lo, hi]: split at the roots of p' so that p is
// monotone on each piece, then bisect sign changes.
void roots_in(const Poly& raw, double lo, double hi, std::vector<double>& out) {
  const Poly p = trim(raw);
  if (p.size() <= 1) return;
  std::vector<double> cuts{lo};
  std::vector<double> crit;
  roots_in(derivative(p), lo, hi, crit);
  std::sort(crit.begin(), crit.end());
  cuts.insert(cuts.end(), crit.begin(), crit.end());
  cuts.push_back(hi);
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    double a = cuts[k], b = cuts[k + 1];
    double fa = eval(p, a), fb = eval(p, b);
    if (fa == 0.0) {
      out.push_back(a);
      continue;
    }
    if (fb == 0.0) {
      out.push_back(b);
      continue;
    }
    if ((fa < 0.0) == (fb < 0.0)) continue;
    for (int it = 0; it < 200 && b - a > 0.0; ++it) {
      const double mid = 0.5 * (a + b);
      if (mid <= a || mid >= b) break;
      const double fm = eval(p, mid);
      if ((fm < 0.0) == (fa < 0.0)) {
        a = mid;
        fa = fm;
      } else {
        b = mid;
      }
    }
    out.push_back(0.5 * (a + b));
  }
}

double segment_distance(cplx p, cplx q) {
  const cplx d = q - p;
  const double len2 = std::norm(d);
  if (len2 == 0.0) return std::abs(p);
  const double t = std::clamp(-(std::conj(d) * p).real() / len2, 0.0, 1.0);
  return std::abs(p + t * d);
}

}  // namespace

double min_product_convex_sum(const std::array<std::array<cplx, 2>, 2>& z) {
  auto f = [&](double x, double y) {
    return (1 - x) * (1 - y) * z[0][0] + (1 - x) * y * z[0][1] + x * (1 - y) * z[1][0] +
           x * y * z[1][1];
  };
  double best = std::min({segment_distance(z[0][0], z[0][1]),
                          segment_distance(z[1][0], z[1][1]),
                          segment_distance(z[0][0], z[1][0]),
                          segment_distance(z[0][1], z[1][1])});

  // Interior: f = A(x) + y B(x); for fixed x the unconstrained minimum over y
  // is |Im(conj(B) A)| / |B|, so stationary x solve q (2 q' r - q r') = 0.
  const cplx a0 = z[0][0], a1 = z[1][0] - z[0][0];
  const cplx b0 = z[0][1] - z[0][0], b1 = z[1][1] - z[1][0] - z[0][1] + z[0][0];
  const cplx w0 = std::conj(b0) * a0;
  const cplx w1 = std::conj(b0) * a1 + std::conj(b1) * a0;
  const cplx w2 = std::conj(b1) * a1;
  const Poly q{w0.imag(), w1.imag(), w2.imag()};
  const Poly r{std::norm(b0), 2.0 * (std::conj(b0) * b1).real(), std::norm(b1)};
  Poly stationary = multiply({2.0}, multiply(derivative(q), r));
  const Poly qr = multiply(q, derivative(r));
  stationary.resize(std::max(stationary.size(), qr.size()), 0.0);
  for (std::size_t k = 0; k < qr.size(); ++k) stationary[k] -= qr[k];

  std::vector<double> xs;
  roots_in(q, 0.0, 1.0, xs);
  roots_in(stationary, 0.0, 1.0, xs);
  for (double x : xs) {
    const cplx A = a0 + x * a1, B = b0 + x * b1;
    const double nb = std::norm(B);
    if (nb == 0.0) continue;
    const double y = std::clamp(-(std::conj(B) * A).real() / nb, 0.0, 1.0);
    best = std::min(best, std::abs(f(x, y)));
  }
  return best;
}

}  // namespace entpower
