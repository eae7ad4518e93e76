#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace uncsmear::cli {

/// Explicit grid bounds; anything left unset falls back to the model default.
struct GridRequest {
  std::optional<double> lo;
  std::optional<double> hi;
  std::optional<std::size_t> n;
};

struct ModelRequest {
  std::string model;
  std::optional<double> beta;
  std::optional<double> energy;
};

struct DensityRequest {
  ModelRequest model;
  std::string kernel = "gaussian";
  double kappa = 1.7;
  GridRequest grid;
  /// File name stem; derived from the other fields when empty.
  std::string stem;
};

struct SweepRequest {
  ModelRequest model;
  std::string kernel = "gaussian";
  std::vector<double> kappas{1.7, 6.0, 10.0, 20.0};
  GridRequest grid;
  std::string stem;
};

struct CompareRequest {
  std::filesystem::path a;
  std::filesystem::path b;
  std::string column_a = "p_smeared";
  std::string column_b = "p_quantum";
  std::string stem = "compare";
};

struct ExcitedRequest {
  unsigned n = 20;
  std::string kernel = "gaussian";
  double kappa = 1.7;
  double window = 1.0;
  GridRequest grid;
  std::string stem;
};

struct TrajectoryRequest {
  double omega_ratio = 2.0;
  std::size_t count = 50;
  std::size_t steps = 400;
  std::uint64_t seed = 1;
  std::string stem = "trajectories_2d";
};

struct Osc2DRequest {
  double omega_ratio = 2.0;
  std::string kernel = "gaussian";
  double kappa = 1.8;
  int n_beta = 32;
  /// Display window [-half_width, half_width]^2.
  double half_width = 3.0;
  std::size_t n = 201;
  std::string stem = "osc2d";
};

/// Where a run writes and what it has written so far.
class Output {
 public:
  /// Creates dir when missing.
  explicit Output(std::filesystem::path dir);

  const std::filesystem::path& dir() const { return dir_; }
  const std::vector<std::filesystem::path>& files() const { return files_; }

  /// Writes dir/name and records it.
  void write_text(const std::string& name, const std::string& text);
  void record(const std::filesystem::path& path) { files_.push_back(path); }

 private:
  std::filesystem::path dir_;
  std::vector<std::filesystem::path> files_;
};

void run_density(const DensityRequest& req, Output& out);
void run_sweep(const SweepRequest& req, Output& out);
/// Also prints the scorecard JSON to `log`.
void run_compare(const CompareRequest& req, Output& out, std::ostream& log);
void run_excited(const ExcitedRequest& req, Output& out);
void run_trajectories(const TrajectoryRequest& req, Output& out);
void run_osc2d(const Osc2DRequest& req, Output& out);

struct FigureInfo {
  std::string_view id;
  std::string_view description;
};

std::span<const FigureInfo> figures();

/// Case-insensitive lookup; nullptr when unknown.
const FigureInfo* find_figure(std::string_view id);

/// Runs one figure scenario; `seed` only matters for the trajectory figure.
/// Throws std::invalid_argument for an unknown id.
void run_figure(std::string_view id, std::uint64_t seed, Output& out);

/// One line per model: name, ground energy, turning points, wall, beta.
void list_models(std::ostream& os);

}  // namespace uncsmear::cli
