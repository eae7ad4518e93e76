#include "scenarios.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "csv.hpp"
#include "uncsmear/error.hpp"
#include "uncsmear/excited.hpp"
#include "uncsmear/kernels.hpp"
#include "uncsmear/metrics.hpp"
#include "uncsmear/models.hpp"
#include "uncsmear/oscillator2d.hpp"
#include "uncsmear/smearing.hpp"

#ifndef UNCSMEAR_VERSION
#define UNCSMEAR_VERSION "unknown"
#endif

namespace uncsmear::cli {
namespace {

using json = nlohmann::ordered_json;

constexpr FigureInfo kFigures[] = {
    {"osc1", "harmonic ground state, box kernel, kappa 1.7"},
    {"osc2", "harmonic ground state, triangle kernel, kappa 1.7"},
    {"osc3", "harmonic ground state, gaussian kernel, kappa 1.7"},
    {"grav1", "bouncer ground state, box kernel, kappa 1.7"},
    {"grav2", "bouncer ground state, triangle kernel, kappa 1.7"},
    {"grav3", "bouncer ground state, gaussian kernel, kappa 1.7"},
    {"morse1", "Morse beta 1/2, box kernel, kappa 1.7"},
    {"morse2", "Morse beta 1/2, triangle kernel, kappa 1.7"},
    {"morse3", "Morse beta 1/2, gaussian kernel, kappa 1.7"},
    {"bmw1", "special radial beta 2, box kernel, kappa 1.7"},
    {"bmw2", "special radial beta 2, triangle kernel, kappa 1.7"},
    {"bmw3", "special radial beta 2, gaussian kernel, kappa 1.7"},
    {"hydrogen1", "hydrogen s state, box kernel, kappa 1.7"},
    {"hydrogen2", "hydrogen s state, triangle kernel, kappa 1.7"},
    {"hydrogen3", "hydrogen s state, gaussian kernel, kappa 1.7"},
    {"heisen", "the three kernel shapes for a unit cell"},
    {"osc3r", "harmonic, gaussian kernel, kappa 1.7, 6, 10, 20"},
    {"oschigh3", "harmonic n = 20 against the window-averaged quantum density"},
    {"oscWKB", "harmonic ground state, WKB against quantum"},
    {"oscold", "harmonic n = 0, 3, 6, 10, classical against quantum"},
    {"osc2D", "2D oscillator, w_y/w_x = 2, kappa 1.8: classical, quantum, smeared"},
    {"tr2D", "50 random 2D trajectories, w_y/w_x = 2"},
};

std::string lower(std::string_view s) {
  std::string out;
  for (char c : s) out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  return out;
}

json to_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

json grid_json(const Grid& g) { return json{{"lo", g.lo()}, {"hi", g.hi()}, {"n", g.size()}}; }

json base_meta(std::string_view command) {
  json meta;
  meta["tool"] = "uncsmear";
  meta["version"] = UNCSMEAR_VERSION;
  meta["command"] = command;
  return meta;
}

void finish_meta(json meta, const std::string& stem, Output& out) {
  json files = json::array();
  for (const auto& f : out.files()) files.push_back(f.filename().string());
  meta["files"] = files;
  out.write_text(stem + ".meta.json", meta.dump(2) + "\n");
}

void write_table(const std::string& name, const Table& table, Output& out) {
  const auto path = out.dir() / name;
  write_csv(path, table);
  out.record(path);
}

void write_scorecard(const std::string& name, const Scorecard& card, Output& out) {
  out.write_text(name, uncsmear::to_json(card) + "\n");
}

struct ResolvedModel {
  ModelId id;
  ModelParams params;
};

ResolvedModel resolve_model(const ModelRequest& req) {
  if (req.model.empty()) throw ParameterError("--model is required");
  ResolvedModel m{parse_model_id(req.model), {}};
  m.params = default_params(m.id);
  if (req.beta) m.params.beta = req.beta;
  if (req.energy) m.params.energy_override = req.energy;
  validate(m.id, m.params);
  return m;
}

json model_meta(const ResolvedModel& m, double energy) {
  return json{{"model", to_string(m.id)},
              {"params", {{"beta", to_json(m.params.beta)},
                          {"energy_override", to_json(m.params.energy_override)}}},
              {"energy", energy}};
}

KernelSpec resolve_kernel(const std::string& name, double kappa) {
  KernelSpec spec{parse_kernel_shape(name), kappa, std::nullopt};
  spec.validate();
  return spec;
}

Grid resolve_grid(const GridRequest& req, const ClassicalOrbit& orbit, KernelShape shape) {
  if (req.lo.has_value() != req.hi.has_value()) {
    throw ParameterError("--grid-lo and --grid-hi must be given together");
  }
  if (req.lo) return Grid(*req.lo, *req.hi, req.n.value_or(1001));
  if (req.n) return default_grid(orbit, *req.n);
  return default_grid(orbit, shape);
}

std::string kappa_tag(double kappa) { return "k" + format_number(kappa); }

Table density_table(const Density& classical, const Density& smeared, const Density& quantum) {
  Table t;
  t.add("xi", smeared.grid.points());
  t.add("p_classical", classical.values);
  t.add("p_smeared", smeared.values);
  t.add("p_quantum", quantum.values);
  return t;
}

// One smeared curve with its comparison scorecards.
json emit_density(const std::string& stem, const Smearer& smearer, const ResolvedModel& m,
                  const Grid& grid, Output& out) {
  const Density smeared = smear_density(smearer, grid);
  const Density classical = clipped_classical_density(smearer.orbit(), grid);
  const Density quantum = quantum_density_on_grid(m.id, m.params, grid);
  write_table(stem + ".csv", density_table(classical, smeared, quantum), out);
  const Scorecard sq = compare(smeared, quantum);
  const Scorecard cq = compare(classical, quantum);
  const Scorecard sc = compare(smeared, classical);
  write_scorecard(stem + ".smeared_vs_quantum.json", sq, out);
  write_scorecard(stem + ".classical_vs_quantum.json", cq, out);
  write_scorecard(stem + ".smeared_vs_classical.json", sc, out);
  return json{{"kappa", smearer.kernel().kappa}, {"norm_smeared", smeared.norm},
              {"l1_smeared_quantum", sq.l1}, {"l1_classical_quantum", cq.l1}};
}

Density from_column(const Table& t, const std::string& column, const std::filesystem::path& src) {
  const auto& xi = t.column("xi");
  const auto& values = t.column(column);
  if (xi.size() < 2) throw PreconditionError(src.string() + " has fewer than 2 rows");
  Grid grid(xi.front(), xi.back(), xi.size());
  for (std::size_t i = 0; i < xi.size(); ++i) {
    if (std::abs(grid.at(i) - xi[i]) > 1e-9 * std::max(1.0, std::abs(xi[i]))) {
      throw PreconditionError(src.string() + " is not on a uniform grid");
    }
  }
  return Density::from_values(grid, values);
}

void run_heisen(Output& out) {
  const Grid grid(-2.5, 2.5, 1001);
  Table t;
  t.add("xi", grid.points());
  for (KernelShape shape : {KernelShape::Box, KernelShape::Triangle, KernelShape::Gaussian}) {
    const KernelSpec spec{shape, kDefaultKappa1D, std::nullopt};
    const CellGeometry cell = make_cell(spec, 0.0, 1.0);
    std::vector<double> w(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) w[i] = kernel_weight(spec, grid.at(i), cell);
    t.add(std::string(to_string(shape)), std::move(w));
  }
  write_table("heisen.csv", t, out);
  json meta = base_meta("figure");
  meta["figure"] = "heisen";
  meta["cell"] = {{"center", 0.0}, {"width", 1.0}};
  meta["grid"] = grid_json(grid);
  finish_meta(meta, "heisen", out);
}

void run_wkb(Output& out) {
  // An even point count keeps the nodes off the turning points at +-1.
  const Grid grid(-3.0, 3.0, 1200);
  std::vector<double> wkb(grid.size());
  std::vector<double> q(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double x = grid.at(i);
    wkb[i] = std::abs(x) < 1.0 ? wkb_density_harmonic(0, x) : 0.0;
    q[i] = harmonic_quantum_density(0, x);
  }
  Table t;
  t.add("xi", grid.points());
  t.add("p_wkb", std::move(wkb));
  t.add("p_quantum", std::move(q));
  write_table("oscWKB.csv", t, out);
  json meta = base_meta("figure");
  meta["figure"] = "oscWKB";
  meta["n"] = 0;
  meta["grid"] = grid_json(grid);
  finish_meta(meta, "oscWKB", out);
}

void run_oscold(Output& out) {
  const Grid grid(-6.0, 6.0, 1201);
  json levels = json::array();
  for (unsigned n : {0U, 3U, 6U, 10U}) {
    ModelParams p;
    p.energy_override = harmonic_level(n);
    const ClassicalOrbit orbit(ModelId::Harmonic, p, harmonic_level(n));
    const Density c = clipped_classical_density(orbit, grid);
    const Density q = harmonic_quantum_density_on_grid(n, grid);
    Table t;
    t.add("xi", grid.points());
    t.add("p_classical", c.values);
    t.add("p_quantum", q.values);
    const std::string stem = "oscold_n" + std::to_string(n);
    write_table(stem + ".csv", t, out);
    write_scorecard(stem + ".classical_vs_quantum.json", compare(c, q), out);
    levels.push_back(n);
  }
  json meta = base_meta("figure");
  meta["figure"] = "oscold";
  meta["levels"] = levels;
  meta["grid"] = grid_json(grid);
  finish_meta(meta, "oscold", out);
}

}  // namespace

Output::Output(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::filesystem::create_directories(dir_);
}

void Output::write_text(const std::string& name, const std::string& text) {
  const auto path = dir_ / name;
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << text;
  if (!f) throw std::runtime_error("write failed for " + path.string());
  files_.push_back(path);
}

void run_density(const DensityRequest& req, Output& out) {
  const ResolvedModel m = resolve_model(req.model);
  const KernelSpec kernel = resolve_kernel(req.kernel, req.kappa);
  const auto orbit = ClassicalOrbit::at_resolved_energy(m.id, m.params);
  const Grid grid = resolve_grid(req.grid, orbit, kernel.shape);
  const std::string stem = req.stem.empty() ? "density_" + std::string(to_string(m.id)) + "_" +
                                                  std::string(to_string(kernel.shape)) + "_" +
                                                  kappa_tag(kernel.kappa)
                                            : req.stem;
  const json summary = emit_density(stem, Smearer(orbit, kernel), m, grid, out);

  json meta = base_meta("density");
  meta.update(model_meta(m, orbit.energy()));
  meta["kernel"] = to_string(kernel.shape);
  meta["kappa"] = kernel.kappa;
  meta["grid"] = grid_json(grid);
  meta["seed"] = nullptr;
  meta["summary"] = summary;
  finish_meta(meta, stem, out);
}

void run_sweep(const SweepRequest& req, Output& out) {
  if (req.kappas.empty()) throw ParameterError("--kappas needs at least one value");
  const ResolvedModel m = resolve_model(req.model);
  const auto orbit = ClassicalOrbit::at_resolved_energy(m.id, m.params);
  const KernelShape shape = parse_kernel_shape(req.kernel);
  const Grid grid = resolve_grid(req.grid, orbit, shape);
  const std::string stem = req.stem.empty() ? "sweep_" + std::string(to_string(m.id)) + "_" +
                                                  std::string(to_string(shape))
                                            : req.stem;
  json runs = json::array();
  for (double kappa : req.kappas) {
    const KernelSpec kernel = resolve_kernel(req.kernel, kappa);
    runs.push_back(emit_density(stem + "_" + kappa_tag(kappa), Smearer(orbit, kernel), m, grid, out));
  }
  json meta = base_meta("sweep-kappa");
  meta.update(model_meta(m, orbit.energy()));
  meta["kernel"] = to_string(shape);
  meta["kappas"] = req.kappas;
  meta["grid"] = grid_json(grid);
  meta["seed"] = nullptr;
  meta["summary"] = runs;
  finish_meta(meta, stem, out);
}

void run_compare(const CompareRequest& req, Output& out, std::ostream& log) {
  const Table ta = read_csv(req.a);
  const Table tb = read_csv(req.b);
  const Density a = from_column(ta, req.column_a, req.a);
  const Density b = from_column(tb, req.column_b, req.b);
  const Scorecard card = compare(a, b);
  write_scorecard(req.stem + ".json", card, out);
  log << uncsmear::to_json(card) << "\n";

  json meta = base_meta("compare");
  meta["a"] = {{"file", req.a.string()}, {"column", req.column_a}};
  meta["b"] = {{"file", req.b.string()}, {"column", req.column_b}};
  meta["grid"] = grid_json(a.grid);
  finish_meta(meta, req.stem, out);
}

void run_excited(const ExcitedRequest& req, Output& out) {
  const KernelSpec kernel = resolve_kernel(req.kernel, req.kappa);
  ModelParams p;
  p.energy_override = harmonic_level(req.n);
  const ClassicalOrbit orbit(ModelId::Harmonic, p, harmonic_level(req.n));
  const Grid grid = req.grid.lo || req.grid.hi || req.grid.n
                        ? resolve_grid(req.grid, orbit, kernel.shape)
                        : excited_grid(req.n);
  const std::string stem =
      req.stem.empty() ? "excited_n" + std::to_string(req.n) + "_" + kappa_tag(kernel.kappa)
                       : req.stem;

  const Density smeared = smear_density(Smearer(orbit, kernel), grid);
  const Density classical = clipped_classical_density(orbit, grid);
  const Density quantum = harmonic_quantum_density_on_grid(req.n, grid);
  const Density windowed = windowed_average(quantum, req.window);
  Table t = density_table(classical, smeared, quantum);
  t.add("p_quantum_windowed", windowed.values);
  write_table(stem + ".csv", t, out);
  const Scorecard sw = compare(smeared, windowed);
  const Scorecard cw = compare(classical, windowed);
  write_scorecard(stem + ".smeared_vs_windowed.json", sw, out);
  write_scorecard(stem + ".classical_vs_windowed.json", cw, out);

  json meta = base_meta("excited");
  meta["model"] = "harmonic";
  meta["n"] = req.n;
  meta["energy"] = orbit.energy();
  meta["kernel"] = to_string(kernel.shape);
  meta["kappa"] = kernel.kappa;
  meta["window"] = req.window;
  meta["grid"] = grid_json(grid);
  meta["seed"] = nullptr;
  meta["summary"] = {{"l1_smeared_windowed", sw.l1}, {"l1_classical_windowed", cw.l1}};
  finish_meta(meta, stem, out);
}

void run_trajectories(const TrajectoryRequest& req, Output& out) {
  if (req.count < 1) throw ParameterError("--count must be >= 1");
  const Osc2DParams params(req.omega_ratio);
  const auto paths = sample_trajectories(params, req.count, req.steps, req.seed);
  Table t;
  std::vector<double> id;
  std::vector<double> tau;
  std::vector<double> x;
  std::vector<double> y;
  for (std::size_t k = 0; k < paths.size(); ++k) {
    const Trajectory& p = paths[k];
    for (std::size_t i = 0; i < p.xi_x.size(); ++i) {
      id.push_back(static_cast<double>(k));
      tau.push_back(p.dt * static_cast<double>(i));
      x.push_back(p.xi_x[i]);
      y.push_back(p.xi_y[i]);
    }
  }
  t.add("trajectory", std::move(id));
  t.add("tau", std::move(tau));
  t.add("xi_x", std::move(x));
  t.add("xi_y", std::move(y));
  write_table(req.stem + ".csv", t, out);

  json energies = json::array();
  for (const auto& p : paths) energies.push_back(p.energy_x);
  json meta = base_meta("trajectories-2d");
  meta["omega_ratio"] = req.omega_ratio;
  meta["energy"] = params.energy();
  meta["count"] = req.count;
  meta["steps"] = req.steps;
  meta["seed"] = req.seed;
  meta["energy_x"] = energies;
  finish_meta(meta, req.stem, out);
}

void run_osc2d(const Osc2DRequest& req, Output& out) {
  const Osc2DParams params(req.omega_ratio);
  Smear2DOptions opt;
  opt.kappa = req.kappa;
  opt.shape = parse_kernel_shape(req.kernel);
  opt.n_beta = req.n_beta;
  const Smearer2D smearer(params, opt);
  const Grid grid(-req.half_width, req.half_width, req.n);
  const Density2D smeared = smearer.on_grid(grid, grid);
  const Density2D classical = binned_classical_density_2d(params, grid, grid, 2000);
  const Density2D quantum = quantum_density_2d_on_grid(grid, grid);

  Table t;
  std::vector<double> xs;
  std::vector<double> ys;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (std::size_t j = 0; j < grid.size(); ++j) {
      xs.push_back(grid.at(i));
      ys.push_back(grid.at(j));
    }
  }
  t.add("xi_x", std::move(xs));
  t.add("xi_y", std::move(ys));
  t.add("p_classical", classical.values);
  t.add("p_quantum", quantum.values);
  t.add("p_smeared", smeared.values);
  write_table(req.stem + ".csv", t, out);

  const Grid full = default_grid_2d(smearer, req.n);
  json meta = base_meta("figure");
  meta["omega_ratio"] = req.omega_ratio;
  meta["energy"] = params.energy();
  meta["kernel"] = to_string(opt.shape);
  meta["kappa"] = opt.kappa;
  meta["n_beta"] = opt.n_beta;
  meta["grid"] = grid_json(grid);
  meta["seed"] = nullptr;
  meta["mass_in_window"] = smearer.mass_inside(req.half_width, req.half_width);
  meta["full_grid"] = grid_json(full);
  meta["full_grid_mass"] = smearer.mass_inside(full.hi(), full.hi());
  finish_meta(meta, req.stem, out);
}

std::span<const FigureInfo> figures() { return kFigures; }

const FigureInfo* find_figure(std::string_view id) {
  const std::string key = lower(id);
  for (const FigureInfo& f : kFigures) {
    if (lower(f.id) == key) return &f;
  }
  return nullptr;
}

void run_figure(std::string_view id, std::uint64_t seed, Output& out) {
  const FigureInfo* fig = find_figure(id);
  if (!fig) throw std::invalid_argument("unknown figure '" + std::string(id) + "'");
  const std::string name(fig->id);

  static constexpr std::pair<std::string_view, std::string_view> kFamilies[] = {
      {"osc", "harmonic"}, {"grav", "bouncer"}, {"morse", "morse"},
      {"bmw", "specialradial"}, {"hydrogen", "hydrogens"}};
  for (const auto& [prefix, model] : kFamilies) {
    if (name.size() == prefix.size() + 1 && name.starts_with(prefix) &&
        name.back() >= '1' && name.back() <= '3') {
      static constexpr std::string_view kShapes[] = {"box", "triangle", "gaussian"};
      DensityRequest req;
      req.model.model = model;
      req.kernel = kShapes[name.back() - '1'];
      req.kappa = kDefaultKappa1D;
      req.stem = name;
      run_density(req, out);
      return;
    }
  }
  if (name == "heisen") return run_heisen(out);
  if (name == "osc3r") {
    SweepRequest req;
    req.model.model = "harmonic";
    req.stem = name;
    return run_sweep(req, out);
  }
  if (name == "oschigh3") {
    ExcitedRequest req;
    req.stem = name;
    return run_excited(req, out);
  }
  if (name == "oscWKB") return run_wkb(out);
  if (name == "oscold") return run_oscold(out);
  if (name == "osc2D") {
    Osc2DRequest req;
    req.stem = name;
    return run_osc2d(req, out);
  }
  if (name == "tr2D") {
    TrajectoryRequest req;
    req.seed = seed;
    req.stem = name;
    return run_trajectories(req, out);
  }
  throw std::logic_error("figure '" + name + "' has no runner");
}

void list_models(std::ostream& os) {
  os << "model,ground_energy,xi_min,xi_max,wall,beta\n";
  for (ModelId id : all_models()) {
    const ModelParams p = default_params(id);
    const double e = ground_energy(id, p);
    const TurningPoints tp = turning_points(id, p, e);
    const auto wall = wall_floor(id);
    os << to_string(id) << ',' << format_number(e) << ',' << format_number(tp.xi_min) << ','
       << format_number(tp.xi_max) << ',' << (wall ? format_number(*wall) : "none") << ','
       << (p.beta ? format_number(*p.beta) : "none") << '\n';
  }
}

}  // namespace uncsmear::cli
