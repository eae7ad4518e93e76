#include "app.hpp"

#include <cstdlib>
#include <exception>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "scenarios.hpp"

#ifndef UNCSMEAR_VERSION
#define UNCSMEAR_VERSION "unknown"
#endif

namespace uncsmear::cli {
namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Flat key=value lines; '#' starts a comment.
std::map<std::string, std::string> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read config file " + path);
  std::map<std::string, std::string> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected key=value");
    }
    std::string value = trim(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
      value = value.substr(1, value.size() - 2);
    }
    out[trim(line.substr(0, eq))] = value;
  }
  return out;
}

// Fills options not given on the command line from the config file. Keys
// may belong to any subcommand; keys no command knows are rejected.
void apply_config(CLI::App& app, CLI::App* active, const std::map<std::string, std::string>& cfg) {
  for (const auto& [key, value] : cfg) {
    const std::string flag = "--" + key;
    bool known = false;
    for (CLI::App* scope : {active, &app}) {
      if (!scope) continue;
      CLI::Option* opt = scope->get_option_no_throw(flag);
      if (!opt) continue;
      known = true;
      if (opt->count() == 0) {
        if (opt->get_expected_max() > 1) {
          std::stringstream ss(value);
          std::string item;
          while (std::getline(ss, item, ',')) opt->add_result(trim(item));
        } else {
          opt->add_result(value);
        }
        opt->run_callback();
      }
      break;
    }
    if (!known) {
      for (CLI::App* sub : app.get_subcommands({})) {
        if (sub->get_option_no_throw(flag)) known = true;
      }
    }
    if (!known) throw std::runtime_error("config key '" + key + "' matches no option");
  }
}

void add_model_options(CLI::App* cmd, ModelRequest& m) {
  cmd->add_option("--model", m.model, "harmonic, bouncer, morse, special-radial, hydrogen-s");
  cmd->add_option("--beta", m.beta, "shape parameter (Morse > 1/8, special-radial > 0)");
  cmd->add_option("--energy", m.energy, "classical energy instead of the ground energy");
}

void add_grid_options(CLI::App* cmd, GridRequest& g) {
  cmd->add_option("--grid-lo", g.lo, "first grid point");
  cmd->add_option("--grid-hi", g.hi, "last grid point");
  cmd->add_option("--grid-n", g.n, "number of grid points")->check(CLI::Range(2, 100000000));
}

std::string figure_list() {
  std::string s;
  for (const FigureInfo& f : figures()) {
    s += "  ";
    s += f.id;
    s += "  ";
    s += f.description;
    s += '\n';
  }
  return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Smeared classical densities of one- and two-dimensional bound systems",
               "uncsmear"};
  app.require_subcommand(1);
  app.set_version_flag("--version", UNCSMEAR_VERSION);

  std::string out_dir;
  std::string config_path;
  app.add_option("-o,--out", out_dir, "output directory (default: $UNCSMEAR_OUT_DIR or .)");
  app.add_option("--config", config_path, "flat key=value file; command-line flags win");

  DensityRequest density;
  auto* c_density = app.add_subcommand("density", "smeared, classical and quantum density of one model");
  add_model_options(c_density, density.model);
  c_density->add_option("--kernel", density.kernel, "box, triangle or gaussian");
  c_density->add_option("--kappa", density.kappa, "cell-width parameter");
  add_grid_options(c_density, density.grid);
  c_density->add_option("--name", density.stem, "output file stem");

  SweepRequest sweep;
  auto* c_sweep = app.add_subcommand("sweep-kappa", "one smeared density per kappa");
  add_model_options(c_sweep, sweep.model);
  c_sweep->add_option("--kernel", sweep.kernel, "box, triangle or gaussian");
  c_sweep->add_option("--kappas", sweep.kappas, "kappa values")->delimiter(',');
  add_grid_options(c_sweep, sweep.grid);
  c_sweep->add_option("--name", sweep.stem, "output file stem");

  CompareRequest cmp;
  std::string cmp_a;
  std::string cmp_b;
  auto* c_compare = app.add_subcommand("compare", "scorecard of two CSV columns on the same grid");
  c_compare->add_option("a", cmp_a, "first CSV");
  c_compare->add_option("b", cmp_b, "second CSV");
  c_compare->add_option("--column-a", cmp.column_a, "column of the first CSV");
  c_compare->add_option("--column-b", cmp.column_b, "column of the second CSV");
  c_compare->add_option("--name", cmp.stem, "output file stem");

  std::string figure_id;
  std::uint64_t figure_seed = 1;
  auto* c_figure = app.add_subcommand("figure", "data for one figure id (see --help)");
  c_figure->footer("Figure ids:\n" + figure_list());
  c_figure->add_option("id", figure_id, "figure id");
  c_figure->add_option("--seed", figure_seed, "seed of the trajectory figure");

  TrajectoryRequest traj;
  auto* c_traj = app.add_subcommand("trajectories-2d", "random classical trajectories of the 2D oscillator");
  c_traj->add_option("--ratio", traj.omega_ratio, "w_y / w_x")->check(CLI::PositiveNumber);
  c_traj->add_option("--count", traj.count, "number of trajectories")->check(CLI::PositiveNumber);
  c_traj->add_option("--steps", traj.steps, "samples per trajectory")->check(CLI::Range(2, 10000000));
  c_traj->add_option("--seed", traj.seed, "random seed");
  c_traj->add_option("--name", traj.stem, "output file stem");

  ExcitedRequest excited;
  auto* c_excited = app.add_subcommand("excited", "harmonic level n against its window average");
  c_excited->add_option("-n,--level", excited.n, "quantum number");
  c_excited->add_option("--kernel", excited.kernel, "box, triangle or gaussian");
  c_excited->add_option("--kappa", excited.kappa, "cell-width parameter");
  c_excited->add_option("--window", excited.window, "averaging length d");
  add_grid_options(c_excited, excited.grid);
  c_excited->add_option("--name", excited.stem, "output file stem");

  auto* c_list = app.add_subcommand("list-models", "ground energies and turning points");

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    CLI::App* active = app.get_subcommands().front();
    if (!config_path.empty()) apply_config(app, active, read_config(config_path));
    if (out_dir.empty()) {
      const char* env = std::getenv("UNCSMEAR_OUT_DIR");
      out_dir = env && *env ? env : ".";
    }

    if (active == c_list) {
      list_models(out);
      return 0;
    }
    if (active == c_figure && !find_figure(figure_id)) {
      err << "error: unknown figure '" << figure_id << "'. Valid ids:\n" << figure_list();
      return kUsageError;
    }

    Output output(out_dir);
    if (active == c_density) {
      run_density(density, output);
    } else if (active == c_sweep) {
      run_sweep(sweep, output);
    } else if (active == c_compare) {
      if (cmp_a.empty() || cmp_b.empty()) throw std::runtime_error("compare needs two CSV files");
      cmp.a = cmp_a;
      cmp.b = cmp_b;
      run_compare(cmp, output, out);
    } else if (active == c_figure) {
      run_figure(figure_id, figure_seed, output);
    } else if (active == c_traj) {
      run_trajectories(traj, output);
    } else if (active == c_excited) {
      run_excited(excited, output);
    }
    for (const auto& f : output.files()) out << f.string() << '\n';
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace uncsmear::cli
