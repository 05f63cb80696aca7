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

// Acceptance suite: one PASS/FAIL line per criterion. Tolerances are fixed
// here; the exit status is nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "entpower/analytic_ep.hpp"
#include "entpower/cli/sweep.hpp"
#include "entpower/gates.hpp"
#include "entpower/linalg.hpp"
#include "entpower/phase_geometry.hpp"
#include "entpower/schmidt.hpp"
#include "entpower/states.hpp"
#include "entpower/variational_ep.hpp"
#include "oracles.hpp"

namespace {

using namespace entpower;
namespace t = entpower::testing;

// Pinned tolerances.
constexpr double kOracleTol = 1e-9;        // 1: convex sum vs hull oracle
constexpr double kMonotoneSlack = 1e-12;   // 2
constexpr double kExactTol = 1e-12;        // "exactly" for analytic values
constexpr double kToffoliFloor = 0.999;    // 3
constexpr double kOvershoot = 1e-6;        // numeric above a proven ceiling
constexpr double kNumericTol = 1e-2;       // 4, 5, 7, 8, 9, 10
constexpr double kSeededTol = 1e-9;        // 4, 5: seeded inputs
constexpr double kProbeThreshold = 1e-2;   // 6: reported, not judged
constexpr double kSweepTol = 1e-6;         // 12
constexpr double kResidualTol = 1e-9;      // 13
constexpr double kZeroTol = 1e-6;          // 10: ancilla-free cyclic shift

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) {
      out_.pass = false;
      if (failures_++ < 3) note("failed: " + what);
    }
  }
  void note(const std::string& s) {
    if (!out_.detail.empty()) out_.detail += "; ";
    out_.detail += s;
  }
  Outcome result() const { return out_; }

 private:
  Outcome out_;
  int failures_ = 0;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

OptimizerConfig config(std::size_t restarts, std::size_t iters = 2000) {
  OptimizerConfig cfg;
  cfg.restarts = restarts;
  cfg.max_iters = iters;
  return cfg;
}

ThreeQubitSr2Spec ccp_spec(double phi) {
  return ThreeQubitSr2Spec::from_flat({0, 0, 0, 0}, {0, 0, 0, phi});
}

double angle_in(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

// Angle in (0, 2pi) kept away from the excluded points.
double open_angle(std::mt19937_64& rng, std::vector<double> avoid = {}) {
  for (;;) {
    const double a = angle_in(rng, 0.05, kTwoPi - 0.05);
    bool ok = true;
    for (double x : avoid) ok = ok && std::abs(a - x) > 0.05;
    if (ok) return a;
  }
}

// Angle in (0, pi) away from pi/2, the range of the k = 1, 0 families.
double half_open_angle(std::mt19937_64& rng) {
  for (;;) {
    const double a = angle_in(rng, 0.05, kPi - 0.05);
    if (std::abs(a - kPi / 2) > 0.05) return a;
  }
}

// ---------------------------------------------------------------------------

Outcome convex_sum_oracle() {
  Checker c;
  std::mt19937_64 rng(101);
  double worst = 0.0;
  for (int rep = 0; rep < 10000; ++rep) {
    const std::size_t n = 1 + rep % 8;
    auto a = t::random_angles(rng, n);
    // Every other set is squeezed into an arc so both branches get coverage.
    if (rep % 2) {
      const double span = angle_in(rng, 0.1, 1.1 * kPi), off = angle_in(rng, 0, kTwoPi);
      for (auto& x : a) x = off + x / kTwoPi * span;
    }
    const double err = std::abs(min_convex_sum(normalize_phases(a)) - t::hull_distance(a));
    worst = std::max(worst, err);
    c.expect(err <= kOracleTol, "set " + std::to_string(rep));
  }
  c.note("10000 sets, max |diff| " + fmt(worst));
  return c.result();
}

Outcome nested_monotonicity() {
  Checker c;
  std::mt19937_64 rng(102);
  double worst = 0.0;
  for (int rep = 0; rep < 1000; ++rep) {
    auto small = t::random_angles(rng, 1 + rep % 5);
    if (rep % 2) for (auto& x : small) x *= 0.4;
    auto big = small;
    for (auto x : t::random_angles(rng, 1 + rep % 4)) big.push_back(rep % 3 ? x * 0.5 : x);
    const double m1 = min_convex_sum(normalize_phases(small));
    const double m2 = min_convex_sum(normalize_phases(big));
    worst = std::min(worst, m1 - m2);
    c.expect(m1 >= m2 - kMonotoneSlack, "pair " + std::to_string(rep));
  }
  c.note("1000 pairs, min(m1 - m2) " + fmt(worst));
  return c.result();
}

Outcome toffoli_family() {
  Checker c;
  const double ccz = ep_3qubit_sr2(ccp_spec(kPi)).value_ebits;
  const double k4 = ep_nqubit_sr2(TableISpec::k_n(4, kPi)).value_ebits;
  const double k5 = ep_nqubit_sr2(TableISpec::k_n(5, kPi)).value_ebits;
  c.expect(std::abs(ccz - 1) <= kExactTol, "CCZ analytic " + fmt(ccz));
  c.expect(std::abs(k4 - 1) <= kExactTol, "k=n n=4 analytic " + fmt(k4));
  c.expect(std::abs(k5 - 1) <= kExactTol, "k=n n=5 analytic " + fmt(k5));
  for (std::size_t n : {3u, 4u}) {
    const auto r = numeric_ep(toffoli(n), config(16));
    double top = 0.0;
    for (const auto& [label, v] : r.per_cut) top = std::max(top, v);
    c.expect(r.value >= kToffoliFloor, "T" + std::to_string(n) + " reached " + fmt(r.value));
    c.expect(top <= 1 + kOvershoot, "T" + std::to_string(n) + " exceeded 1: " + fmt(top));
    c.note("T" + std::to_string(n) + " numeric " + fmt(r.value));
  }
  return c.result();
}

Outcome fredkin3_check() {
  Checker c;
  const auto f3 = fredkin3();
  const auto r = numeric_ep(f3, config(16));
  c.expect(std::abs(r.value - 2) <= kNumericTol, "numeric " + fmt(r.value));
  const auto cab = Bipartition::parse("C:AB", 3);
  const auto sd = schmidt_decompose(f3, cab);
  c.expect(sd.rank() == 4, "rank across C:AB " + std::to_string(sd.rank()));
  c.expect(std::abs(ep_bounds(sd).upper - 2) <= kExactTol, "upper bound");
  const double h = 1 / std::sqrt(2.0);
  const ProductInput seeded{{0, 0, 1, 0}, {h, 0, 0, h}, {h, 0, 0, h}};
  const double sv = product_input_entropy(f3, cab, {2, 2, 2}, seeded);
  c.expect(std::abs(sv - 2) <= kSeededTol, "seeded input " + fmt(sv));
  c.note("numeric " + fmt(r.value) + " on " + r.bipartition->label() + ", rank 4, seeded " +
         fmt(sv));
  return c.result();
}

Outcome fredkin4_table() {
  Checker c;
  const auto f4 = fredkin4();
  struct Row {
    const char* cut;
    double value, bound;
  };
  for (const Row& row : {Row{"A:BCD", 1, 1}, Row{"AB:CD", 1, 1}, Row{"D:ABC", 2, 2}}) {
    const auto cut = Bipartition::parse(row.cut, 4);
    const auto r = numeric_ep_cut(f4, cut, config(16));
    const double ub = ep_bounds(f4, cut).upper;
    c.expect(std::abs(r.value - row.value) <= kNumericTol,
             std::string(row.cut) + " numeric " + fmt(r.value));
    c.expect(std::abs(ub - row.bound) <= kExactTol, std::string(row.cut) + " bound " + fmt(ub));
    c.note(std::string(row.cut) + " " + fmt(r.value));
  }
  const auto adbc = Bipartition::parse("AD:BC", 4);
  const double ub = ep_bounds(f4, adbc).upper;
  c.expect(std::abs(ub - std::log2(5.0)) <= kExactTol, "AD:BC bound " + fmt(ub));
  const double h = 1 / std::sqrt(2.0);
  const ProductInput seeded{{0, 0, 1, 0}, {0, 0, 1, 0}, {h, 0, 0, h}, {h, 0, 0, h}};
  const double sv = product_input_entropy(f4, adbc, {2, 2, 2, 2}, seeded);
  c.expect(std::abs(sv - 2) <= kSeededTol, "AD:BC seeded " + fmt(sv));
  c.note("AD:BC interval [2, " + fmt(ub) + "], seeded " + fmt(sv));
  return c.result();
}

Outcome conjecture_probe() {
  Checker c;
  auto cfg = config(200);
  const auto rep = fredkin4_conjecture_probe(cfg);
  c.expect(rep.certificate_sound, "certificate did not re-evaluate");
  c.expect(rep.search.restarts_run > 0, "no restarts ran");
  c.expect(std::abs(rep.seeded_value - 2) <= kSeededTol, "seeded " + fmt(rep.seeded_value));
  // Evidence only: the threshold decides the flag, not the verdict.
  const bool above = rep.search.value > 2 + kProbeThreshold;
  c.note("best " + fmt(rep.search.value) + " after " + std::to_string(rep.search.restarts_run) +
         " restarts, excess " + fmt(rep.excess) + ", exceeded 2+1e-2: " +
         (above ? "yes" : "no") + ", interval [2, " + fmt(rep.interval_upper) + "]");
  return c.result();
}

Outcome ccp_curve() {
  Checker c;
  for (double phi : {kPi / 6, kPi / 3, kPi / 2, 2 * kPi / 3, kPi}) {
    const double closed = t::h2((1 - std::abs(std::cos(phi / 2))) / 2);
    const double analytic = ep_3qubit_sr2(ccp_spec(phi)).value_ebits;
    const auto r = numeric_ep(ccp(phi), config(12));
    c.expect(std::abs(analytic - closed) <= kExactTol, "closed form at " + fmt(phi));
    c.expect(std::abs(r.value - analytic) <= kNumericTol,
             "phi " + fmt(phi) + ": numeric " + fmt(r.value) + " vs " + fmt(analytic));
    c.note(fmt(phi) + ":" + fmt(r.value));
  }
  const double at_pi = ep_3qubit_sr2(ccp_spec(kPi)).value_ebits;
  c.expect(at_pi == 1.0, "value at pi " + fmt(at_pi));
  return c.result();
}

Outcome random_sr2() {
  Checker c;
  std::mt19937_64 rng(108);
  double worst_gap = 0.0, worst_over = -1.0;
  auto compare = [&](const Unitary& u, double analytic, const std::string& tag) {
    const auto r = numeric_ep(u, config(12, 1500));
    worst_gap = std::max(worst_gap, analytic - r.value);
    worst_over = std::max(worst_over, r.value - analytic);
    c.expect(r.value >= analytic - kNumericTol,
             tag + " numeric " + fmt(r.value) + " < analytic " + fmt(analytic));
    c.expect(r.value <= analytic + kOvershoot,
             tag + " numeric " + fmt(r.value) + " > analytic " + fmt(analytic));
  };
  for (int rep = 0; rep < 50; ++rep) {
    const auto spec =
        ThreeQubitSr2Spec::from_flat(t::random_angles(rng, 4), t::random_angles(rng, 4));
    compare(three_qubit_sr2_gate(spec), ep_3qubit_sr2(spec).value_ebits,
            "3q#" + std::to_string(rep));
  }
  for (int rep = 0; rep < 30; ++rep) {
    const std::size_t k = std::vector<std::size_t>{4, 3, 2, 1, 0}[rep % 5];
    TableISpec spec;
    if (k == 4) {
      spec = TableISpec::k_n(4, open_angle(rng));
    } else if (k == 3) {
      const double phi = open_angle(rng);
      spec = TableISpec::k_n_minus_1(4, open_angle(rng, {phi}), phi);
    } else if (k == 2) {
      spec = TableISpec::k_2({open_angle(rng), open_angle(rng), open_angle(rng)});
    } else if (k == 1) {
      spec = TableISpec::k_1(4, half_open_angle(rng));
    } else {
      spec = TableISpec::k_0(4, half_open_angle(rng), half_open_angle(rng));
    }
    compare(table1_gate(spec), ep_nqubit_sr2(spec).value_ebits,
            "k=" + std::to_string(k) + "#" + std::to_string(rep));
  }
  c.note("80 instances, max(analytic - numeric) " + fmt(worst_gap) +
         ", max(numeric - analytic) " + fmt(worst_over));
  return c.result();
}

Outcome sandwich_bounds() {
  Checker c;
  std::mt19937_64 rng(109);
  const Bipartition ab({0}, 2);
  double worst_over = -1.0;
  for (int rep = 0; rep < 200; ++rep) {
    const Unitary u(random_unitary(4, rng), {2, 2});
    const auto r = numeric_ep_cut(u, ab, config(4, 1000));
    const double upper = ep_bounds(u, ab).upper;
    worst_over = std::max(worst_over, r.value - upper);
    c.expect(r.value <= upper + kOvershoot, "Haar #" + std::to_string(rep));
  }
  double worst_gap = 0.0;
  for (int rep = 0; rep < 50; ++rep) {
    const ControlledDiagonalSpec spec{t::random_angles(rng, 2 + rep % 3)};
    const auto u = controlled_diagonal(spec, 2 + rep % 2, 1);
    const auto cut = Bipartition({0}, 2);
    const auto r = numeric_ep_cut(u, cut, config(4, 1000));
    const auto b = ep_bounds(u, cut);
    worst_gap = std::max(worst_gap, b.lower - r.value);
    c.expect(r.value >= b.lower - kNumericTol, "controlled #" + std::to_string(rep));
    c.expect(r.value <= b.upper + kOvershoot, "controlled upper #" + std::to_string(rep));
  }
  c.note("200 Haar: max(value - log2 Sch) " + fmt(worst_over) +
         "; 50 controlled-diagonal: max(K_Sch - value) " + fmt(worst_gap));
  return c.result();
}

Outcome cyclic_shift() {
  Checker c;
  const auto u = cyclic_shift3();
  auto none = config(16);
  none.ancilla = AncillaPolicy::none();
  const auto bare = numeric_ep(u, none);
  double top = 0.0;
  for (const auto& [label, v] : bare.per_cut) top = std::max(top, std::abs(v));
  c.expect(top <= kZeroTol, "ancilla-free value " + fmt(top));
  const auto full = numeric_ep(u, config(16));
  c.expect(full.value >= 2 - kNumericTol, "with ancillas " + fmt(full.value));
  const double ub = ep_bounds(u, Bipartition::parse("A:BC", 3)).upper;
  c.expect(std::abs(ub - 2) <= kExactTol, "bound " + fmt(ub));
  c.note("ancilla-free " + fmt(top) + ", with ancillas " + fmt(full.value) + ", bound " +
         fmt(ub));
  return c.result();
}

Outcome aep_maximality() {
  Checker c;
  struct Case3 {
    const char* name;
    ThreeQubitSr2Spec spec;
    bool want;
  };
  // CCZ and Toffoli share a governing set up to local unitaries.
  for (const auto& k : {Case3{"CCZ", ccp_spec(kPi), true},
                        Case3{"CCP(pi/2)", ccp_spec(kPi / 2), false}}) {
    const bool got = aep_is_maximal_3qubit(k.spec);
    c.expect(got == k.want, k.name);
    const auto r = ep_3qubit_sr2(k.spec);
    c.expect(got == (std::abs(r.simplex_value_ebits - 1) <= kExactTol),
             std::string(k.name) + " inconsistent with analytic value");
  }
  struct CaseN {
    const char* name;
    TableISpec spec;
    bool want;
  };
  for (const auto& k : {CaseN{"T4 (k=n, phi=pi)", TableISpec::k_n(4, kPi), true},
                        CaseN{"T5 (k=n, phi=pi)", TableISpec::k_n(5, kPi), true},
                        CaseN{"k=2 beta3=pi", TableISpec::k_2({0.7, kPi, 2.0}), true},
                        CaseN{"k=2 beta2=pi n=5", TableISpec::k_2({kPi, 0.4, 0.9, 1.3}), true},
                        CaseN{"k=n phi=pi/3", TableISpec::k_n(4, kPi / 3), false}}) {
    const bool got = aep_is_maximal_nqubit(k.spec);
    c.expect(got == k.want, k.name);
    const auto r = ep_nqubit_sr2(k.spec);
    c.expect(got == (std::abs(r.simplex_value_ebits - 1) <= kExactTol),
             std::string(k.name) + " inconsistent with analytic value");
  }
  // Random consistency sweep over both test functions.
  std::mt19937_64 rng(111);
  for (int rep = 0; rep < 200; ++rep) {
    const auto s3 =
        ThreeQubitSr2Spec::from_flat(t::random_angles(rng, 4), t::random_angles(rng, 4));
    c.expect(aep_is_maximal_3qubit(s3) ==
                 (std::abs(ep_3qubit_sr2(s3).simplex_value_ebits - 1) <= kExactTol),
             "random 3-qubit #" + std::to_string(rep));
    const auto sn = TableISpec::k_n_minus_1(4, open_angle(rng), 0.03 + rep * 0.031);
    c.expect(aep_is_maximal_nqubit(sn) ==
                 (std::abs(ep_nqubit_sr2(sn).simplex_value_ebits - 1) <= kExactTol),
             "random k=n-1 #" + std::to_string(rep));
  }
  c.note("named cases and 400 random specs consistent");
  return c.result();
}

// value_ebits column of a sweep, in row order.
std::vector<std::vector<double>> sweep_rows(cli::SweepSpec spec) {
  std::istringstream in(cli::run_sweep(std::move(spec)));
  std::string line;
  std::getline(in, line);
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    std::vector<double> row;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(row);
  }
  return rows;
}

std::vector<double> open_grid(std::size_t points) {
  std::vector<double> g;
  for (std::size_t i = 1; i <= points; ++i) g.push_back(kTwoPi * i / (points + 1));
  return g;
}

Outcome figure_grids() {
  Checker c;
  // k = n curve: 101 points with pi at the centre.
  cli::SweepSpec kn;
  kn.family = "kn";
  kn.grid = {{"phi", open_grid(101)}};
  const auto curve = sweep_rows(kn);
  double asym = 0.0, peak = 0.0, peak_at = 0.0;
  for (std::size_t i = 0; i < curve.size(); ++i) {
    asym = std::max(asym, std::abs(curve[i][1] - curve[curve.size() - 1 - i][1]));
    if (curve[i][1] > peak) peak = curve[i][1], peak_at = curve[i][0];
  }
  c.expect(asym <= kSweepTol, "k=n asymmetry " + fmt(asym));
  c.expect(std::abs(peak - 1) <= kExactTol && std::abs(peak_at - kPi) <= 1e-9,
           "k=n peak " + fmt(peak) + " at " + fmt(peak_at));

  // k = n-1 surface at small theta against the k = n curve.
  cli::SweepSpec kn1;
  kn1.family = "kn-1";
  kn1.grid = {{"phi", open_grid(101)}, {"theta", {1e-8}}};
  const auto surf = sweep_rows(kn1);
  double dev = 0.0;
  for (std::size_t i = 0; i < surf.size(); ++i) dev = std::max(dev, std::abs(surf[i][2] - curve[i][1]));
  c.expect(dev <= kSweepTol, "k=n-1 deviation " + fmt(dev));

  // k = 2 plane at beta2 = pi.
  cli::SweepSpec plane;
  plane.family = "k2";
  plane.grid = {{"beta2", {kPi}}, {"beta3", open_grid(21)}, {"beta4", open_grid(21)}};
  double plane_dev = 0.0;
  for (const auto& row : sweep_rows(plane)) plane_dev = std::max(plane_dev, std::abs(row[3] - 1));
  c.expect(plane_dev <= kExactTol, "k=2 plane deviation " + fmt(plane_dev));

  // k = 2 decay toward the 0 / 2pi edges: monotone in beta3 and beta4 on each
  // side of pi, and vanishing when every beta approaches the edge.
  cli::SweepSpec decay;
  decay.family = "k2";
  const auto g = open_grid(41);
  decay.grid = {{"beta2", {0.3, 1.2, 2.5}}, {"beta3", g}, {"beta4", g}};
  const auto rows = sweep_rows(decay);
  const std::size_t m = g.size();
  bool monotone = true;
  for (std::size_t b2 = 0; b2 < 3; ++b2) {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j + 1 < m; ++j) {
        const auto at = [&](std::size_t x, std::size_t y) { return rows[b2 * m * m + x * m + y][3]; };
        const bool rising = g[j + 1] <= kPi;
        const double d4 = at(i, j + 1) - at(i, j), d3 = at(j + 1, i) - at(j, i);
        if (rising) monotone = monotone && d4 >= -kSweepTol && d3 >= -kSweepTol;
        else if (g[j] >= kPi) monotone = monotone && d4 <= kSweepTol && d3 <= kSweepTol;
      }
    }
  }
  c.expect(monotone, "k=2 values not monotone toward the edges");
  cli::SweepSpec edge;
  edge.family = "k2";
  edge.grid = {{"beta2", {1e-4, kTwoPi - 1e-4}}, {"beta3", {1e-4}}, {"beta4", {kTwoPi - 1e-4}}};
  double edge_max = 0.0;
  for (const auto& row : sweep_rows(edge)) edge_max = std::max(edge_max, row[3]);
  c.expect(edge_max <= kSweepTol, "k=2 corner value " + fmt(edge_max));
  // With beta2 held away from the edge the limit is the two-factor value, not 0.
  const double limit = ep_nqubit_sr2(TableISpec::k_2({1.2, 1e-6, 1e-6})).value_ebits;
  c.note("k=n asym " + fmt(asym) + ", k=n-1 dev " + fmt(dev) + ", plane dev " + fmt(plane_dev) +
         ", corner " + fmt(edge_max) + ", beta3,beta4->0 at beta2=1.2 gives " + fmt(limit));
  return c.result();
}

Outcome linalg_properties() {
  Checker c;
  std::mt19937_64 rng(113);
  std::normal_distribution<double> gauss;
  double worst = 0.0, worst_entropy = 0.0;
  for (int rep = 0; rep < 1000; ++rep) {
    const std::size_t n = 1 + rep % 32;
    ComplexMatrix a(n, n);
    for (auto& z : a.data()) z = {gauss(rng), gauss(rng)};
    const ComplexMatrix h = (a + a.adjoint()) * cplx{0.5, 0.0};
    const auto e = eigh(h);
    std::vector<cplx> d(e.values.begin(), e.values.end());
    const double scale = std::max(1.0, h.max_abs());
    double res = max_abs_diff(e.vectors * ComplexMatrix::diagonal(d) * e.vectors.adjoint(), h) / scale;
    res = std::max(res, max_abs_diff(e.vectors.adjoint() * e.vectors, ComplexMatrix::identity(n)));
    const std::size_t cols = 1 + (rep * 7) % 32;
    ComplexMatrix b(n, cols);
    for (auto& z : b.data()) z = {gauss(rng), gauss(rng)};
    const auto s = svd(b);
    std::vector<cplx> sv(s.values.begin(), s.values.end());
    res = std::max(res, max_abs_diff(s.u * ComplexMatrix::diagonal(sv) * s.v.adjoint(), b) /
                            std::max(1.0, b.max_abs()));
    worst = std::max(worst, res);
    c.expect(res <= kResidualTol, "instance " + std::to_string(rep));

    if (rep % 5 == 0) {
      // Entropy symmetry and local-unitary invariance on a random pure state.
      const Dims dims{2, 1 + static_cast<std::size_t>(rep % 3) + 1, 2};
      const auto v = random_unit_vector(total_dim(dims), rng);
      const double sa = entanglement_entropy(v, dims, {1});
      const double sb = entanglement_entropy(v, dims, {0, 2});
      const auto loc = kron_all({random_unitary(dims[0], rng), random_unitary(dims[1], rng),
                                 random_unitary(dims[2], rng)});
      const double su = entanglement_entropy(loc.apply(v), dims, {1});
      worst_entropy = std::max({worst_entropy, std::abs(sa - sb), std::abs(sa - su)});
      c.expect(std::abs(sa - sb) <= kResidualTol && std::abs(sa - su) <= kResidualTol,
               "entropy instance " + std::to_string(rep));
    }
  }
  c.note("max residual " + fmt(worst) + ", max entropy mismatch " + fmt(worst_entropy));
  return c.result();
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"convex-sum oracle equivalence", convex_sum_oracle},
      {"nested-set monotonicity", nested_monotonicity},
      {"Toffoli family", toffoli_family},
      {"Fredkin F3", fredkin3_check},
      {"F4 per-cut table", fredkin4_table},
      {"F4 AD:BC probe", conjecture_probe},
      {"CCP curve", ccp_curve},
      {"random Schmidt-rank-two cross-validation", random_sr2},
      {"sandwich bounds", sandwich_bounds},
      {"cyclic-shift demonstration", cyclic_shift},
      {"assisted maximality tests", aep_maximality},
      {"sweep grids", figure_grids},
      {"entropy and linear-algebra properties", linalg_properties},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failed += o.pass ? 0 : 1;
    std::printf("%s [%2zu] %s (%.1fs): %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].name,
                secs, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
