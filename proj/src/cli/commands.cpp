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

#include "entpower/cli/commands.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "entpower/cli/angles.hpp"
#include "entpower/cli/matrix_file.hpp"
#include "entpower/cli/sweep.hpp"
#include "entpower/gates.hpp"
#include "entpower/phase_geometry.hpp"
#include "entpower/schmidt.hpp"

namespace entpower::cli {

namespace {

using nlohmann::json;

double need_angle(const std::string& text, const char* flag) {
  if (text.empty()) throw std::invalid_argument(std::string("missing ") + flag);
  return parse_angle(text);
}

std::vector<double> need_angles(const std::string& text, const char* flag,
                                std::size_t count) {
  if (text.empty()) throw std::invalid_argument(std::string("missing ") + flag);
  auto v = parse_angle_list(text);
  if (count != 0 && v.size() != count) {
    throw std::invalid_argument(std::string(flag) + " takes " + std::to_string(count) +
                                " angle(s), got " + std::to_string(v.size()));
  }
  return v;
}

Dims parse_dims(const std::string& text) {
  Dims d;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(tok, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || pos != tok.size() || v == 0) {
      throw std::invalid_argument("bad dimension '" + tok + "'");
    }
    d.push_back(v);
  }
  if (d.empty()) throw std::invalid_argument("empty --dims");
  return d;
}

json complex_list(const std::vector<cplx>& v) {
  json a = json::array();
  for (const auto& z : v) a.push_back({z.real(), z.imag()});
  return a;
}

json bounds_json(double lower, double upper) { return {{"lower", lower}, {"upper", upper}}; }

struct ConfigArgs {
  std::size_t restarts = 64;
  std::size_t max_iters = 2000;
  std::uint64_t seed = 42;
  std::string ancilla = "match";
  std::size_t workers = 1;
  bool no_choi = false;
};

void add_config_options(CLI::App* cmd, ConfigArgs& c) {
  cmd->add_option("--restarts", c.restarts, "Optimizer restarts")->capture_default_str();
  cmd->add_option("--max-iters", c.max_iters, "Iterations per restart")->capture_default_str();
  cmd->add_option("--seed", c.seed, "Base RNG seed")->capture_default_str();
  cmd->add_option("--ancilla", c.ancilla, "match | none | <dim>")->capture_default_str();
  cmd->add_option("--workers", c.workers, "Threads for restarts")->capture_default_str();
  cmd->add_flag("--no-choi", c.no_choi, "Skip the maximally entangled start");
}

OptimizerConfig make_config(const ConfigArgs& c) {
  OptimizerConfig cfg;
  cfg.restarts = c.restarts;
  cfg.max_iters = c.max_iters;
  cfg.seed = c.seed;
  cfg.workers = c.workers;
  cfg.choi_start = !c.no_choi;
  if (c.ancilla == "match") {
    cfg.ancilla = AncillaPolicy::match_party();
  } else if (c.ancilla == "none") {
    cfg.ancilla = AncillaPolicy::none();
  } else {
    cfg.ancilla = AncillaPolicy::fixed(parse_dims(c.ancilla).at(0));
  }
  cfg.validate();
  return cfg;
}

void add_gate_options(CLI::App* cmd, GateArgs& g) {
  cmd->add_option("--n", g.n, "Qubit count (toffoli, table1)")->capture_default_str();
  cmd->add_option_function<std::size_t>(
      "--k", [&g](std::size_t k) { g.k = k, g.k_set = true; }, "Singular number (table1)");
  cmd->add_option("--phi", g.phi, "Angle phi");
  cmd->add_option("--theta", g.theta, "theta (table1 k=n-1) or 4 angles (three-qubit)");
  cmd->add_option("--omega", g.omega, "4 angles (three-qubit)");
  cmd->add_option("--alpha", g.alpha, "Angle alpha (table1 k=1, 0)");
  cmd->add_option("--beta", g.beta, "beta list (table1 k=2) or beta (k=0)");
  cmd->add_option("--phases", g.phases, "Phase list (controlled-diagonal)");
  cmd->add_option("--dims", g.dims, "Party dims, e.g. 2,2,2 (identity)");
  cmd->add_option("--d-a", g.d_a, "Control dimension (controlled-diagonal)")
      ->capture_default_str();
  cmd->add_option("--rank", g.rank, "Rank of P1 (controlled-diagonal)")->capture_default_str();
}

Unitary load_gate(const GateArgs& g, const std::string& file) {
  if (!file.empty() && !g.name.empty()) {
    throw std::invalid_argument("give either --gate or --file, not both");
  }
  if (!file.empty()) return read_matrix_file(file);
  if (g.name.empty()) throw std::invalid_argument("one of --gate or --file is required");
  return build_gate(g);
}

void emit(const json& doc, std::ostream& out) { out << doc.dump(2) << "\n"; }

}  // namespace

const std::vector<std::string>& gate_names() {
  static const std::vector<std::string> names = {
      "identity", "cnot",         "cz",    "swap",        "toffoli",
      "ccp",      "ccz",          "fredkin3", "fredkin4", "cyclic-shift",
      "table1",   "three-qubit",  "controlled-diagonal"};
  return names;
}

TableISpec table1_spec(const GateArgs& g) {
  if (!g.k_set) throw std::invalid_argument("table1 needs --k");
  const std::size_t n = g.n;
  if (n < 4) throw std::invalid_argument("table1 needs --n >= 4");
  if (g.k == n) return TableISpec::k_n(n, need_angle(g.phi, "--phi"));
  if (g.k == n - 1) {
    return TableISpec::k_n_minus_1(n, need_angle(g.theta, "--theta"),
                                   need_angle(g.phi, "--phi"));
  }
  if (g.k == 2) return TableISpec::k_2(need_angles(g.beta, "--beta", n - 1));
  if (g.k == 1) return TableISpec::k_1(n, need_angle(g.alpha, "--alpha"));
  if (g.k == 0) {
    return TableISpec::k_0(n, need_angle(g.alpha, "--alpha"), need_angle(g.beta, "--beta"));
  }
  throw std::invalid_argument("--k must be n, n-1, 2, 1 or 0");
}

ThreeQubitSr2Spec three_qubit_spec(const GateArgs& g) {
  return ThreeQubitSr2Spec::from_flat(need_angles(g.theta, "--theta", 4),
                                      need_angles(g.omega, "--omega", 4));
}

Unitary build_gate(const GateArgs& g) {
  const std::string& name = g.name;
  if (name == "identity") return identity_gate(parse_dims(g.dims.empty() ? "2,2,2" : g.dims));
  if (name == "cnot") return cnot();
  if (name == "cz") return cz();
  if (name == "swap") return swap_gate();
  if (name == "toffoli") return toffoli(g.n);
  if (name == "ccp") return ccp(need_angle(g.phi, "--phi"));
  if (name == "ccz") return ccp(kPi);
  if (name == "fredkin3") return fredkin3();
  if (name == "fredkin4") return fredkin4();
  if (name == "cyclic-shift") return cyclic_shift3();
  if (name == "table1") return table1_gate(table1_spec(g));
  if (name == "three-qubit") return three_qubit_sr2_gate(three_qubit_spec(g));
  if (name == "controlled-diagonal") {
    return controlled_diagonal({need_angles(g.phases, "--phases", 0)}, g.d_a, g.rank);
  }
  throw std::invalid_argument("unknown gate '" + name + "'");
}

json analytic_json(const AnalyticResult& r, const std::string& family) {
  return {{"value_ebits", r.value_ebits},
          {"method", "analytic"},
          {"family", family},
          {"bipartition", nullptr},
          {"bounds", bounds_json(r.value_ebits, r.value_ebits)},
          {"min_convex_sum", r.min_convex_sum},
          {"governing_set", r.governing_set},
          {"branch", r.branch},
          {"simplex_bound_ebits", r.simplex_value_ebits},
          {"degenerate", r.degenerate}};
}

json ep_result_json(const EpResult& r, bool include_certificate) {
  json doc = {{"value_ebits", r.value},
              {"method", r.method},
              {"bipartition", r.bipartition ? json(r.bipartition->label()) : json(nullptr)},
              {"bounds", bounds_json(r.lower, r.upper)},
              {"seed", r.seed},
              {"restarts", r.restarts_run},
              {"best_restart", r.best_restart}};
  json cuts = json::object();
  for (const auto& [label, v] : r.per_cut) cuts[label] = v;
  doc["per_cut"] = cuts;
  if (include_certificate) {
    json cert = {{"state_dims", r.state_dims}};
    if (!r.party_states.empty()) {
      json parts = json::array();
      for (const auto& p : r.party_states) parts.push_back(complex_list(p));
      cert["party_states"] = parts;
    } else {
      cert["state"] = complex_list(r.state);
    }
    if (!r.weights.empty()) cert["weights"] = r.weights;
    doc["certificate"] = cert;
  }
  return doc;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entangling power of multipartite unitaries", "entpower"};
  app.require_subcommand(1);

  // gate
  GateArgs gate_args;
  std::string gate_out;
  auto* gate_cmd = app.add_subcommand("gate", "Emit a gate matrix file");
  gate_cmd->add_option("name", gate_args.name, "Gate name")->required();
  add_gate_options(gate_cmd, gate_args);
  gate_cmd->add_option("-o,--out", gate_out, "Write to a file instead of stdout");

  // ep-analytic
  GateArgs an_args;
  auto* an_cmd = app.add_subcommand("ep-analytic", "Closed-form entangling power");
  an_cmd->add_option("family", an_args.name,
                     "ccp | ccz | toffoli | table1 | three-qubit | controlled-diagonal")
      ->required();
  add_gate_options(an_cmd, an_args);

  // aep-max
  GateArgs am_args;
  auto* am_cmd = app.add_subcommand("aep-max", "Test whether assisted power is maximal");
  am_cmd->add_option("family", am_args.name, "ccp | ccz | toffoli | table1 | three-qubit")
      ->required();
  add_gate_options(am_cmd, am_args);

  // ep-numeric, aep-numeric, schmidt share gate sourcing.
  struct Sourced {
    GateArgs gate;
    std::string file, cut, certificate;
    ConfigArgs cfg;
  };
  Sourced epn, aepn, sch;
  auto add_source = [](CLI::App* cmd, Sourced& s) {
    cmd->add_option("--gate", s.gate.name, "Gate name");
    cmd->add_option("--file", s.file, "Matrix file");
    cmd->add_option("--cut", s.cut, "Bipartition, e.g. A:BC or 0,2");
    add_gate_options(cmd, s.gate);
  };
  auto* epn_cmd = app.add_subcommand("ep-numeric", "Variational entangling power");
  add_source(epn_cmd, epn);
  add_config_options(epn_cmd, epn.cfg);
  epn_cmd->add_option("--certificate", epn.certificate, "Write the certificate to a file");

  auto* aepn_cmd = app.add_subcommand("aep-numeric", "Variational assisted entangling power");
  add_source(aepn_cmd, aepn);
  add_config_options(aepn_cmd, aepn.cfg);
  aepn_cmd->add_option("--certificate", aepn.certificate, "Write the certificate to a file");

  auto* sch_cmd = app.add_subcommand("schmidt", "Operator Schmidt decomposition");
  add_source(sch_cmd, sch);

  // convex-sum
  std::vector<std::string> cs_tokens;
  auto* cs_cmd = app.add_subcommand("convex-sum", "Minimum convex sum of unit phasors");
  cs_cmd->add_option("angles", cs_tokens, "Comma-separated angles")->required();

  // sweep
  std::string sw_family, sw_out;
  std::size_t sw_n = 4;
  std::vector<std::string> sw_grid;
  bool sw_numeric = false;
  ConfigArgs sw_cfg;
  sw_cfg.restarts = 16;
  auto* sw_cmd = app.add_subcommand("sweep", "Parameter sweep to CSV");
  sw_cmd->add_option("family", sw_family, "kn | kn-1 | k2 | k1 | k0 | ccp")->required();
  sw_cmd->add_option("--n", sw_n, "Qubit count")->capture_default_str();
  sw_cmd->add_option("--grid", sw_grid, "name=start:stop:steps or name=a,b,...")->required();
  sw_cmd->add_flag("--numeric", sw_numeric, "Add a variational column");
  sw_cmd->add_option("-o,--out", sw_out, "CSV path (default stdout)");
  add_config_options(sw_cmd, sw_cfg);

  // probe-f4
  ConfigArgs pr_cfg;
  pr_cfg.restarts = 200;
  auto* pr_cmd = app.add_subcommand("probe-f4", "Search the AD:BC cut of the 4-qubit Fredkin");
  add_config_options(pr_cmd, pr_cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (gate_cmd->parsed()) {
      const Unitary u = build_gate(gate_args);
      if (gate_out.empty()) {
        out << to_matrix_json(u).dump() << "\n";
      } else {
        write_matrix_file(u, gate_out);
      }
    } else if (an_cmd->parsed()) {
      const auto& f = an_args.name;
      AnalyticResult r;
      if (f == "ccp" || f == "ccz") {
        const double phi = f == "ccz" ? kPi : need_angle(an_args.phi, "--phi");
        r = ep_3qubit_sr2(ThreeQubitSr2Spec::from_flat({0, 0, 0, 0}, {0, 0, 0, phi}));
      } else if (f == "toffoli") {
        r = an_args.n == 3
                ? ep_3qubit_sr2(ThreeQubitSr2Spec::from_flat({0, 0, 0, 0}, {0, 0, 0, kPi}))
                : ep_nqubit_sr2(TableISpec::k_n(an_args.n, kPi));
      } else if (f == "table1") {
        r = ep_nqubit_sr2(table1_spec(an_args));
      } else if (f == "three-qubit") {
        r = ep_3qubit_sr2(three_qubit_spec(an_args));
      } else if (f == "controlled-diagonal") {
        r = ep_controlled_diagonal({need_angles(an_args.phases, "--phases", 0)});
      } else {
        throw std::invalid_argument("unknown family '" + f + "'");
      }
      emit(analytic_json(r, f), out);
    } else if (am_cmd->parsed()) {
      const auto& f = am_args.name;
      bool maximal = false;
      AnalyticResult r;
      if (f == "ccp" || f == "ccz" || f == "toffoli" || f == "three-qubit") {
        ThreeQubitSr2Spec s;
        if (f == "three-qubit") {
          s = three_qubit_spec(am_args);
        } else {
          const double phi = f == "ccp" ? need_angle(am_args.phi, "--phi") : kPi;
          s = ThreeQubitSr2Spec::from_flat({0, 0, 0, 0}, {0, 0, 0, phi});
        }
        maximal = aep_is_maximal_3qubit(s);
        r = ep_3qubit_sr2(s);
      } else if (f == "table1") {
        const auto s = table1_spec(am_args);
        maximal = aep_is_maximal_nqubit(s);
        r = ep_nqubit_sr2(s);
      } else {
        throw std::invalid_argument("unknown family '" + f + "'");
      }
      emit({{"maximal", maximal},
            {"ceiling_ebits", aep_ceiling(2)},
            {"value_ebits", r.value_ebits},
            {"method", "analytic"},
            {"family", f}},
           out);
    } else if (epn_cmd->parsed() || aepn_cmd->parsed()) {
      const bool assisted = aepn_cmd->parsed();
      Sourced& s = assisted ? aepn : epn;
      const Unitary u = load_gate(s.gate, s.file);
      const OptimizerConfig cfg = make_config(s.cfg);
      EpResult r;
      if (s.cut.empty()) {
        r = assisted ? numeric_aep(u, cfg) : numeric_ep(u, cfg);
      } else {
        const Bipartition cut = Bipartition::parse(s.cut, u.n_parties());
        r = assisted ? numeric_aep_cut(u, cut, cfg) : numeric_ep_cut(u, cut, cfg);
      }
      json doc = ep_result_json(r, s.certificate.empty());
      if (!s.certificate.empty()) {
        std::ofstream f(s.certificate);
        if (!f) throw std::invalid_argument("cannot write " + s.certificate);
        f << ep_result_json(r, true)["certificate"].dump(2) << "\n";
        doc["certificate_path"] = s.certificate;
      }
      emit(doc, out);
    } else if (sch_cmd->parsed()) {
      const Unitary u = load_gate(sch.gate, sch.file);
      std::vector<Bipartition> cuts;
      if (sch.cut.empty()) {
        cuts = enumerate_bipartitions(u.n_parties());
      } else {
        cuts.push_back(Bipartition::parse(sch.cut, u.n_parties()));
      }
      json list = json::array();
      for (const auto& cut : cuts) {
        const auto sd = schmidt_decompose(u, cut);
        const auto b = ep_bounds(sd);
        list.push_back({{"bipartition", cut.label()},
                        {"rank", sd.rank()},
                        {"coefficients", sd.coefficients},
                        {"bounds", bounds_json(b.lower, b.upper)}});
      }
      emit(cuts.size() == 1 ? list[0] : json{{"cuts", list}}, out);
    } else if (cs_cmd->parsed()) {
      std::string joined;
      for (const auto& t : cs_tokens) joined += (joined.empty() ? "" : ",") + t;
      const auto raw = parse_angle_list(joined);
      const auto set = normalize_phases(raw);
      const auto rep = convex_sum_report(set);
      emit({{"min", rep.min},
            {"max", rep.max},
            {"in_hull", rep.in_hull},
            {"binding_pair", {rep.binding_pair.first, rep.binding_pair.second}},
            {"phases", set.angles()}},
           out);
    } else if (sw_cmd->parsed()) {
      SweepSpec spec;
      spec.family = sw_family;
      spec.n = sw_n;
      spec.numeric = sw_numeric;
      spec.cfg = make_config(sw_cfg);
      for (const auto& g : sw_grid) {
        const auto eq = g.find('=');
        if (eq == std::string::npos || eq == 0) {
          throw std::invalid_argument("--grid expects name=values, got '" + g + "'");
        }
        const std::string values = g.substr(eq + 1);
        spec.grid.emplace_back(g.substr(0, eq), values.find(':') != std::string::npos
                                                    ? parse_range(values)
                                                    : parse_angle_list(values));
      }
      const std::string csv = run_sweep(std::move(spec));
      if (sw_out.empty()) {
        out << csv;
      } else {
        std::ofstream f(sw_out, std::ios::binary);
        if (!f) throw std::invalid_argument("cannot write " + sw_out);
        f << csv;
      }
    } else if (pr_cmd->parsed()) {
      const auto rep = fredkin4_conjecture_probe(make_config(pr_cfg));
      json doc = ep_result_json(rep.search, true);
      doc["bounds"] = bounds_json(rep.interval_lower, rep.interval_upper);
      doc["schmidt_rank"] = rep.schmidt_rank;
      doc["seeded_value"] = rep.seeded_value;
      doc["excess"] = rep.excess;
      doc["exceeded"] = rep.exceeded;
      doc["certificate_sound"] = rep.certificate_sound;
      emit(doc, out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace entpower::cli
