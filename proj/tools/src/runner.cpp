// Copyright 2026 The LatticeQS Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lqs/tools/runner.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "lqs/errors.hpp"
#include "lqs/evolution.hpp"
#include "lqs/fermion.hpp"
#include "lqs/models.hpp"
#include "lqs/numfmt.hpp"
#include "lqs/parallel.hpp"
#include "lqs/spectral.hpp"
#include "lqs/structure.hpp"
#include "lqs/thermal.hpp"
#include "lqs/vqe.hpp"

#ifndef LQS_VERSION
#define LQS_VERSION "unknown"
#endif

namespace lqs::tools {

namespace {

using nlohmann::json;

std::optional<std::string> def(const char* v) { return std::string(v); }
constexpr std::nullopt_t kRequired = std::nullopt;

void append(std::vector<KeySpec>& out, const std::vector<KeySpec>& more) {
  out.insert(out.end(), more.begin(), more.end());
}

std::vector<KeySpec> schwinger_keys(bool with_mass) {
  std::vector<KeySpec> keys{
      {"model", "n_sites", kRequired},
      {"model", "coupling", def("1")},
      {"model", "spacing", def("1")},
      {"model", "boundary_field", def("0")},
      {"model", "flux", def("gauss_law")},
  };
  if (with_mass) keys.push_back({"model", "mass", kRequired});
  return keys;
}

std::vector<KeySpec> thirring_keys() {
  return {{"model", "n_sites", kRequired}, {"model", "mass", kRequired}, {"model", "coupling", def("0")}};
}

std::vector<KeySpec> optimizer_keys(const char* budget) {
  return {{"optimizer", "budget", def(budget)},
          {"optimizer", "restarts", def("0")},
          {"optimizer", "initial_step", def("0.5")},
          {"optimizer", "value_tolerance", def("1e-8")}};
}

std::vector<KeySpec> ansatz_keys() {
  return {{"ansatz", "layers", kRequired},
          {"ansatz", "j0", def("1")},
          {"ansatz", "alpha", def("1")},
          {"ansatz", "b_field", def("0")},
          {"ansatz", "delta", def("1")}};
}

std::vector<KeySpec> state_keys() {
  return {{"state", "charge", def("0")}, {"state", "rank", def("0")}};
}

std::vector<KeySpec> propagation_keys() {
  return {{"propagation", "force_trotter", def("false")}, {"propagation", "trotter_steps", def("256")}};
}

// ---------------------------------------------------------------------------
// Output helpers

class OutputSet {
 public:
  OutputSet(const RunOptions& options, const Config& config) : options_(options) {
    std::ostringstream meta;
    meta << "# lqs " << LQS_VERSION << " " << options.subcommand << "\n";
    meta << "# seed = " << options.seed << "\n";
    for (const auto& [section, keys] : config.entries()) {
      for (const auto& [key, value] : keys) meta << "# [" << section << "] " << key << " = " << value << "\n";
    }
    metadata_ = meta.str();
  }

  void add_csv(const std::string& name, const std::vector<std::string>& extra_meta,
               const std::string& body) {
    std::string text = metadata_;
    for (const auto& line : extra_meta) text += "# " + line + "\n";
    text += body;
    files_.emplace_back(name, std::move(text));
  }

  void add_raw(const std::string& name, std::string bytes) { files_.emplace_back(name, std::move(bytes)); }

  void write_all(json& manifest) const {
    std::filesystem::create_directories(options_.out_dir);
    json outputs = json::array();
    for (const auto& [name, bytes] : files_) {
      const auto path = options_.out_dir / name;
      std::ofstream out(path, std::ios::binary);
      out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
      if (!out) throw ResourceError("cannot write " + path.string());
      outputs.push_back({{"file", name}, {"bytes", bytes.size()}, {"fnv1a64", fnv1a64_hex(bytes)}});
    }
    manifest["outputs"] = outputs;
  }

 private:
  const RunOptions& options_;
  std::string metadata_;
  std::vector<std::pair<std::string, std::string>> files_;
};

std::string row(std::initializer_list<std::string> cells) {
  std::string out;
  bool first = true;
  for (const auto& c : cells) {
    if (!first) out += ",";
    out += c;
    first = false;
  }
  return out + "\n";
}

std::string f(double v) { return format_double(v); }

// ---------------------------------------------------------------------------
// Model builders from config

SchwingerParams schwinger_from(const Config& c, bool with_mass) {
  SchwingerParams p;
  p.n_sites = c.get_int("model", "n_sites");
  if (with_mass) p.mass = c.get_double("model", "mass");
  p.coupling = c.get_double("model", "coupling");
  p.spacing = c.get_double("model", "spacing");
  p.boundary_field = c.get_double("model", "boundary_field");
  const auto flux = c.get_string("model", "flux");
  if (flux == "gauss_law") {
    p.flux = FluxNormalization::kGaussLaw;
  } else if (flux == "unhalved") {
    p.flux = FluxNormalization::kUnhalved;
  } else {
    throw ConfigError("[model] flux: expected gauss_law or unhalved, got '" + flux + "'");
  }
  return p;
}

ThirringParams thirring_from(const Config& c) {
  ThirringParams p;
  p.n_sites = c.get_int("model", "n_sites");
  p.mass = c.get_double("model", "mass");
  p.coupling = c.get_double("model", "coupling");
  return p;
}

OptimizerOptions optimizer_from(const Config& c, std::uint64_t seed) {
  OptimizerOptions o;
  o.budget = c.get_int("optimizer", "budget");
  o.restarts = c.get_int("optimizer", "restarts");
  o.initial_step = c.get_double("optimizer", "initial_step");
  o.value_tolerance = c.get_double("optimizer", "value_tolerance");
  o.seed = seed;
  return o;
}

ResourceParams resource_from(const Config& c, int n_sites) {
  ResourceParams r;
  r.n_sites = n_sites;
  r.j0 = c.get_double("ansatz", "j0");
  r.alpha = c.get_double("ansatz", "alpha");
  r.b_field = c.get_double("ansatz", "b_field");
  r.delta = c.get_double("ansatz", "delta");
  return r;
}

PropagationOptions propagation_from(const Config& c) {
  PropagationOptions p;
  p.force_trotter = c.get_bool("propagation", "force_trotter");
  p.trotter_steps = c.get_int("propagation", "trotter_steps");
  return p;
}

std::vector<double> uniform_grid(double lo, double hi, int points, const char* what) {
  if (points < 1) throw ConfigError(std::string(what) + ": need at least one point");
  if (points == 1) return {lo};
  if (!(hi > lo)) throw ConfigError(std::string(what) + ": upper bound must exceed lower bound");
  std::vector<double> out;
  for (int i = 0; i < points; ++i) out.push_back(lo + (hi - lo) * i / (points - 1));
  return out;
}

std::string vqe_csv(const VqeResult& r) {
  std::string body = "evaluation,energy,variance";
  const std::size_t n = r.best_params.size();
  for (std::size_t i = 0; i < n; ++i) body += ",p" + std::to_string(i);
  body += "\n";
  for (const auto& s : r.trace) {
    body += std::to_string(s.evaluation) + "," + f(s.energy) + "," + f(s.variance);
    for (double p : s.params) body += "," + f(p);
    body += "\n";
  }
  return body;
}

void dump_if_requested(const RunOptions& options, OutputSet& out, const PauliSum& h) {
  if (options.dump_hamiltonian) out.add_raw("hamiltonian.txt", serialize(h));
}

// ---------------------------------------------------------------------------
// Subcommands

void run_schwinger_quench(const RunOptions& options, const Config& c, OutputSet& out, json& summary) {
  const SchwingerParams p = schwinger_from(c, true);
  const double t_max = c.get_double("evolution", "t_max");
  const int steps = c.get_int("evolution", "steps");
  const int every = c.get_int("evolution", "record_every");
  const PauliSum h = build_schwinger(p);
  dump_if_requested(options, out, h);
  const PauliSum charge = charge_operator(p.n_sites);
  const CompiledPauliSum energy(h);

  auto trajectory = [&](bool exact) {
    std::string body = "step,time,energy,particle_density,charge\n";
    auto visit = [&](int step, double time, const StateVector& s) {
      body += row({std::to_string(step), f(time), f(energy.expectation(s)),
                   f(particle_density(s, p.n_sites)), f(expectation(charge, s))});
    };
    if (exact) {
      exact_trajectory(h, t_max, steps, bare_vacuum(p.n_sites), every, visit);
    } else {
      trotter_trajectory(EvolutionPlan(h, t_max, steps), bare_vacuum(p.n_sites), every, visit);
    }
    return body;
  };
  out.add_csv("trajectory.csv", {"propagator = first-order product formula"}, trajectory(false));
  if (c.get_bool("evolution", "exact_reference")) {
    out.add_csv("trajectory_exact.csv", {"propagator = exact eigendecomposition"}, trajectory(true));
  }
  summary["groups"] = EvolutionPlan(h, t_max, steps).groups().size();
}

void run_schwinger_vqe(const RunOptions& options, const Config& c, OutputSet& out, json& summary) {
  const SchwingerParams p = schwinger_from(c, true);
  const PauliSum h = build_schwinger(p);
  dump_if_requested(options, out, h);
  const Ansatz a = hva_schwinger_ansatz(resource_from(c, p.n_sites), c.get_int("ansatz", "layers"));
  const VqeResult r = optimize(h, a, std::vector<double>(static_cast<std::size_t>(a.parameter_count()), 0.0),
                               optimizer_from(c, options.seed));
  out.add_csv("vqe.csv", {}, vqe_csv(r));
  summary["energy"] = r.energy;
  summary["variance"] = r.variance;
  summary["evaluations"] = r.evaluations;
  summary["converged"] = r.converged;
  summary["order_parameter"] = expectation(staggered_order_operator(p.n_sites), a.prepare(r.best_params));
  if (p.n_sites <= kDefaultDenseQubitCap) {
    summary["oracle_energy"] = schwinger_sector_ground_state(p).energy;
  }
}

void run_deuteron_vqe(const RunOptions& options, const Config& c, OutputSet& out, json& summary) {
  const int levels = c.get_int("model", "levels");
  const PauliSum h = build_deuteron({levels});
  dump_if_requested(options, out, h);
  const Ansatz a = ucc_deuteron_ansatz(levels);
  const VqeResult r = optimize(h, a, std::vector<double>(static_cast<std::size_t>(a.parameter_count()), 0.0),
                               optimizer_from(c, options.seed));
  out.add_csv("vqe.csv", {}, vqe_csv(r));
  summary["energy"] = r.energy;
  summary["variance"] = r.variance;
  summary["evaluations"] = r.evaluations;
  summary["converged"] = r.converged;
  summary["oracle_energy"] = full_spectrum(h).energies(0);
}

void run_phase_scan(const RunOptions& options, const Config& c, OutputSet& out, json& summary) {
  const SchwingerParams base = schwinger_from(c, false);
  const auto masses = uniform_grid(c.get_double("scan", "mass_min"), c.get_double("scan", "mass_max"),
                                   c.get_int("scan", "points"), "[scan] points");
  ScanOptions so;
  so.n_layers = c.get_int("ansatz", "layers");
  so.layer_params = resource_from(c, base.n_sites);
  so.optimizer = optimizer_from(c, options.seed);
  so.first_point_restarts = c.get_int("scan", "first_point_restarts");
  so.dense_oracle = c.get_bool("scan", "dense_oracle");
  so.run_vqe = c.get_bool("scan", "vqe");
  if (options.dump_hamiltonian) {
    SchwingerParams at = base;
    at.mass = masses.front();
    dump_if_requested(options, out, build_schwinger(at));
  }
  const auto points = phase_scan(masses, base, so);

  std::string body = "mass,energy,variance,order_parameter\n";
  std::string oracle = "mass,energy,order_parameter,gap\n";
  std::vector<double> vqe_order, dense_order;
  bool all_converged = true;
  for (const auto& pt : points) {
    body += row({f(pt.mass), f(pt.energy), f(pt.variance), f(pt.order_parameter)});
    oracle += row({f(pt.mass), f(pt.oracle_energy), f(pt.oracle_order_parameter), f(pt.oracle_gap)});
    vqe_order.push_back(pt.order_parameter);
    dense_order.push_back(pt.oracle_order_parameter);
    all_converged = all_converged && (pt.converged || !so.run_vqe);
  }
  out.add_csv("phase_scan.csv", {"order_parameter = (1/N) sum_j (-1)^j <Z_j>"}, body);
  const bool have_oracle = so.dense_oracle && base.n_sites <= kDefaultDenseQubitCap;
  if (have_oracle) {
    out.add_csv("phase_scan_oracle.csv", {"zero-charge sector exact diagonalization"}, oracle);
  }
  if (masses.size() >= 2) {
    if (so.run_vqe) summary["steepest_change_vqe"] = steepest_change(masses, vqe_order);
    if (have_oracle) summary["steepest_change_oracle"] = steepest_change(masses, dense_order);
  }
  summary["converged"] = all_converged;
}

SectorState state_from(const Config& c, const PauliSum& h) {
  SectorSpec sector;
  sector.total_charge = c.get_int("state", "charge");
  sector.energy_rank = c.get_int("state", "rank");
  return prepare_sector_state(h, sector);
}

std::string correlator_csv(const CorrelatorTable& t) {
  std::string body = "y,t,re,im\n";
  for (std::size_t iy = 0; iy < t.positions.size(); ++iy) {
    for (std::size_t it = 0; it < t.times.size(); ++it) {
      const cplx v = t.at(iy, it);
      body += row({std::to_string(t.positions[iy]), f(t.times[it]), f(v.real()), f(v.imag())});
    }
  }
  return body;
}

std::string spectral_csv(const SpectralTable& t, std::vector<std::string>& meta) {
  for (const auto& [k, v] : t.metadata) meta.push_back(k + " = " + v);
  std::string body = "x_or_q,re,im\n";
  for (std::size_t i = 0; i < t.grid.size(); ++i) {
    body += row({f(t.grid[i]), f(t.values[i].real()), f(t.values[i].imag())});
  }
  return body;
}

void run_thirring_correlator(const RunOptions& options, const Config& c, OutputSet& out, json& summary) {
  const ThirringParams p = thirring_from(c);
  const PauliSum h = build_thirring(p);
  dump_if_requested(options, out, h);
  const SectorState state = state_from(c, h);

  const auto op_name = c.get_string("correlator", "operator");
  const int cell = c.get_int("correlator", "cell");
  CorrelatorRequest req{default_pdf_bilinear(p.n_sites, cell), default_pdf_bilinear(p.n_sites, cell), {}, {}};
  if (op_name == "number") {
    req.op_a = jw_number(cell, p.n_sites);
    req.op_b = req.op_a;
  } else if (op_name != "pdf_bilinear") {
    throw ConfigError("[correlator] operator: expected pdf_bilinear or number, got '" + op_name + "'");
  }
  const int y_step = c.get_int("correlator", "y_step");
  const int y_max = c.get_int("correlator", "y_max");
  if (y_step < 1 || y_max < 0) throw ConfigError("[correlator] y_step must be >= 1 and y_max >= 0");
  for (int y = 0; y <= y_max; y += y_step) req.positions.push_back(y);
  req.times = uniform_grid(0.0, c.get_double("correlator", "t_max"), c.get_int("correlator", "t_points"),
                           "[correlator] t_points");
  const auto table = two_point(h, state.state, req, propagation_from(c));
  out.add_csv("correlator.csv", {"C(y,t) = <psi| e^{iHt} A_y e^{-iHt} B |psi>"}, correlator_csv(table));

  const auto time_index = static_cast<std::size_t>(c.get_int("correlator", "pdf_time_index"));
  const auto pdf = pdf_transform(table, time_index, c.get_double("correlator", "p_plus"));
  std::vector<std::string> meta;
  const auto body = spectral_csv(pdf, meta);
  out.add_csv("pdf.csv", meta, body);
  summary["state_energy"] = state.energy;
  summary["momentum_resolved"] = state.momentum_resolved;
}

void run_hadronic_tensor(const RunOptions& options, const Config& c, OutputSet& out, json& summary) {
  const ThirringParams p = thirring_from(c);
  const PauliSum h = build_thirring(p);
  dump_if_requested(options, out, h);
  const SectorState state = state_from(c, h);

  HadronicRequest req;
  req.current_a = thirring_current(p, c.get_int("current", "component_a"));
  req.current_b = thirring_current(p, c.get_int("current", "component_b"));
  req.origin = c.get_int("current", "origin");
  const int y_min = c.get_int("grid", "y_min");
  const int y_max = c.get_int("grid", "y_max");
  if (y_max < y_min) throw ConfigError("[grid] y_max must be >= y_min");
  for (int y = y_min; y <= y_max; ++y) req.positions.push_back(y);
  const double t_max = c.get_double("grid", "t_max");
  const int t_points = c.get_int("grid", "t_points");
  req.times = uniform_grid(-t_max, t_max, 2 * t_points + 1, "[grid] t_points");
  req.omega = c.get_double("grid", "omega");
  req.momenta = uniform_grid(c.get_double("grid", "k_min"), c.get_double("grid", "k_max"),
                             c.get_int("grid", "k_points"), "[grid] k_points");

  const auto ordered = time_ordered_correlator(h, state.state, req, propagation_from(c));
  out.add_csv("correlator.csv", {"time-ordered <psi| T{J_a(origin+y, t) J_b(origin, 0)} |psi>"},
              correlator_csv(ordered));
  const auto w = hadronic_transform(ordered, req.omega, req.momenta);
  std::vector<std::string> meta{"re = W(omega, k)"};
  const auto body = spectral_csv(w, meta);
  out.add_csv("hadronic_tensor.csv", meta, body);
  summary["state_energy"] = state.energy;
}

PauliSum observable_from(const std::string& name, const PauliSum& h1, int n_sites) {
  if (name == "staggered_order") return staggered_order_operator(n_sites);
  if (name == "particle_density") {
    PauliSum d = 0.5 * staggered_order_operator(n_sites);
    d.add_constant(0.5);
    return d;
  }
  if (name == "energy") return h1;
  throw ConfigError("[thermal] observable: expected staggered_order, particle_density or energy, got '" +
                    name + "'");
}

void run_thermal(const RunOptions& options, const Config& c, OutputSet& out, json& summary) {
  const SchwingerParams p0 = schwinger_from(c, true);
  SchwingerParams p1 = p0;
  const auto quench = c.get_string("thermal", "quench_mass");
  if (quench != "none") p1.mass = c.get_double("thermal", "quench_mass");
  const PauliSum h0 = build_schwinger(p0);
  const PauliSum h1 = build_schwinger(p1);
  dump_if_requested(options, out, h0);

  const double threshold = c.get_double("thermal", "threshold");
  const ThermalState ts = bloch_propagate(h0, c.get_double("thermal", "beta"), c.get_int("thermal", "bloch_steps"));
  const PureStateEnsemble e = decompose(ts, threshold);
  const PauliSum o = observable_from(c.get_string("thermal", "observable"), h1, p0.n_sites);
  const auto times = uniform_grid(0.0, c.get_double("thermal", "t_max"), c.get_int("thermal", "t_points"),
                                  "[thermal] t_points");
  const auto values = ensemble_observable(e, h1, o, times);

  std::string body = "t,observable,n_entries,threshold\n";
  for (std::size_t i = 0; i < times.size(); ++i) {
    body += row({f(times[i]), f(values[i]), std::to_string(e.entries.size()), f(threshold)});
  }
  out.add_csv("thermal.csv", {"rho = exp(-beta H0), evolved with H1"}, body);
  if (c.get_bool("thermal", "dump_gibbs")) {
    const auto path = options.out_dir / "gibbs.bin";
    std::filesystem::create_directories(options.out_dir);
    write_gibbs(path, ts);
    std::ifstream in(path, std::ios::binary);
    std::stringstream bytes;
    bytes << in.rdbuf();
    out.add_raw("gibbs.bin", bytes.str());
  }
  summary["trace"] = ts.trace;
  summary["trace_estimate"] = e.trace_estimate;
  summary["n_entries"] = e.entries.size();
}

void run_dump_hamiltonian(const RunOptions&, const Config& c, OutputSet& out, json& summary) {
  const auto kind = c.get_string("model", "kind");
  PauliSum h(1);
  auto need = [&](const char* key) { return c.raw("model", key); };
  if (kind == "schwinger") {
    need("mass");
    h = build_schwinger(schwinger_from(c, true));
  } else if (kind == "thirring") {
    need("mass");
    h = build_thirring(thirring_from(c));
  } else if (kind == "deuteron") {
    h = build_deuteron({c.get_int("model", "levels")});
  } else if (kind == "resource") {
    ResourceParams r;
    r.n_sites = c.get_int("model", "n_sites");
    r.j0 = c.get_double("model", "j0");
    r.alpha = c.get_double("model", "alpha");
    r.b_field = c.get_double("model", "b_field");
    r.delta = c.get_double("model", "delta");
    h = build_resource_xy(r);
  } else {
    throw ConfigError("[model] kind: expected schwinger, thirring, deuteron or resource, got '" + kind + "'");
  }
  out.add_raw("hamiltonian.txt", serialize(h));
  summary["terms"] = h.size();
  summary["n_qubits"] = h.n_qubits();
}

using Handler = void (*)(const RunOptions&, const Config&, OutputSet&, json&);

Handler handler_for(const std::string& name) {
  if (name == "schwinger-quench") return run_schwinger_quench;
  if (name == "schwinger-vqe") return run_schwinger_vqe;
  if (name == "deuteron-vqe") return run_deuteron_vqe;
  if (name == "phase-scan") return run_phase_scan;
  if (name == "thirring-correlator") return run_thirring_correlator;
  if (name == "hadronic-tensor") return run_hadronic_tensor;
  if (name == "thermal") return run_thermal;
  if (name == "dump-hamiltonian") return run_dump_hamiltonian;
  throw ConfigError("unknown subcommand '" + name + "'");
}

}  // namespace

const std::vector<std::string>& subcommand_names() {
  static const std::vector<std::string> names{"schwinger-quench", "schwinger-vqe",       "deuteron-vqe",
                                              "phase-scan",       "thirring-correlator", "hadronic-tensor",
                                              "thermal",          "dump-hamiltonian"};
  return names;
}

std::vector<KeySpec> schema_for(const std::string& subcommand) {
  std::vector<KeySpec> s;
  if (subcommand == "schwinger-quench") {
    s = schwinger_keys(true);
    append(s, {{"evolution", "t_max", kRequired},
               {"evolution", "steps", kRequired},
               {"evolution", "record_every", def("1")},
               {"evolution", "exact_reference", def("false")}});
  } else if (subcommand == "schwinger-vqe") {
    s = schwinger_keys(true);
    append(s, ansatz_keys());
    append(s, optimizer_keys("2000"));
  } else if (subcommand == "deuteron-vqe") {
    s = {{"model", "levels", kRequired}};
    append(s, optimizer_keys("500"));
  } else if (subcommand == "phase-scan") {
    s = schwinger_keys(false);
    append(s, ansatz_keys());
    append(s, optimizer_keys("2000"));
    append(s, {{"scan", "mass_min", kRequired},
               {"scan", "mass_max", kRequired},
               {"scan", "points", kRequired},
               {"scan", "first_point_restarts", def("2")},
               {"scan", "dense_oracle", def("true")},
               {"scan", "vqe", def("true")}});
  } else if (subcommand == "thirring-correlator") {
    s = thirring_keys();
    append(s, state_keys());
    append(s, propagation_keys());
    append(s, {{"correlator", "operator", def("pdf_bilinear")},
               {"correlator", "cell", def("0")},
               {"correlator", "y_max", kRequired},
               {"correlator", "y_step", def("2")},
               {"correlator", "t_max", def("0")},
               {"correlator", "t_points", def("1")},
               {"correlator", "p_plus", def("1")},
               {"correlator", "pdf_time_index", def("0")}});
  } else if (subcommand == "hadronic-tensor") {
    s = thirring_keys();
    append(s, state_keys());
    append(s, propagation_keys());
    append(s, {{"current", "component_a", def("0")},
               {"current", "component_b", def("0")},
               {"current", "origin", def("0")},
               {"grid", "y_min", def("0")},
               {"grid", "y_max", kRequired},
               {"grid", "t_max", kRequired},
               {"grid", "t_points", kRequired},
               {"grid", "omega", kRequired},
               {"grid", "k_min", def("-3.141592653589793")},
               {"grid", "k_max", def("3.141592653589793")},
               {"grid", "k_points", def("33")}});
  } else if (subcommand == "thermal") {
    s = schwinger_keys(true);
    append(s, {{"thermal", "beta", kRequired},
               {"thermal", "bloch_steps", def("16")},
               {"thermal", "threshold", def("0")},
               {"thermal", "quench_mass", def("none")},
               {"thermal", "observable", def("particle_density")},
               {"thermal", "t_max", kRequired},
               {"thermal", "t_points", kRequired},
               {"thermal", "dump_gibbs", def("false")}});
  } else if (subcommand == "dump-hamiltonian") {
    s = {{"model", "kind", kRequired},
         {"model", "n_sites", def("4")},
         {"model", "mass", std::nullopt},
         {"model", "coupling", def("1")},
         {"model", "spacing", def("1")},
         {"model", "boundary_field", def("0")},
         {"model", "flux", def("gauss_law")},
         {"model", "levels", def("2")},
         {"model", "j0", def("1")},
         {"model", "alpha", def("1")},
         {"model", "b_field", def("0")},
         {"model", "delta", def("1")}};
  } else {
    throw ConfigError("unknown subcommand '" + subcommand + "'");
  }
  return s;
}

std::string fnv1a64_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 0x100000001b3ULL;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[h & 0xF];
    h >>= 4;
  }
  return out;
}

int run(const RunOptions& options, Config config, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  try {
    const Handler handler = handler_for(options.subcommand);
    auto schema = schema_for(options.subcommand);
    if (options.subcommand == "dump-hamiltonian") {
      // mass is only required for the lattice models; resolve it lazily.
      std::erase_if(schema, [](const KeySpec& k) { return k.key == "mass"; });
      if (config.has("model", "mass")) schema.push_back({"model", "mass", std::nullopt});
    }
    config.resolve(schema);
    if (options.threads < 1) throw ConfigError("--threads must be >= 1");
    set_default_thread_count(options.threads);

    OutputSet outputs(options, config);
    json summary = json::object();
    handler(options, config, outputs, summary);

    json manifest;
    manifest["tool"] = "lqs";
    manifest["version"] = LQS_VERSION;
    manifest["subcommand"] = options.subcommand;
    manifest["seed"] = options.seed;
    manifest["threads"] = options.threads;
    manifest["config"] = config.entries();
    manifest["summary"] = summary;
    outputs.write_all(manifest);
    manifest["wall_time_s"] =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ofstream out(options.out_dir / "manifest.json");
    out << manifest.dump(2) << "\n";
    if (!out) throw ResourceError("cannot write manifest.json");
    return kExitOk;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const ResourceError& e) {
    err << "resource error: " << e.what() << "\n";
    return kExitResource;
  } catch (const InvariantError& e) {
    err << "invariant violation: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const Error& e) {
    // Parameter values the model or algorithm rejects are configuration errors.
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "resource error: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInvariant;
  }
}

int run_file(const RunOptions& options, const std::string& config_path, std::ostream& err) {
  Config config;
  try {
    config = Config::load(config_path);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  }
  return run(options, std::move(config), err);
}

}  // namespace lqs::tools
