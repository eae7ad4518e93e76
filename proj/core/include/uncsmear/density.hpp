#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace uncsmear {

/// Uniform grid of n points from lo to hi inclusive.
class Grid {
 public:
  /// Throws ParameterError unless lo < hi (both finite) and n >= 2.
  Grid(double lo, double hi, std::size_t n);

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  std::size_t size() const { return n_; }
  double step() const { return (hi_ - lo_) / static_cast<double>(n_ - 1); }

  /// Point i; the last point is exactly hi.
  double at(std::size_t i) const;
  std::vector<double> points() const;

  bool operator==(const Grid& other) const = default;

 private:
  double lo_;
  double hi_;
  std::size_t n_;
};

/// Where a sampled density came from.
struct DensityMeta {
  std::string kind;  // "smeared", "classical", "quantum", "histogram", ...
  std::string model;
  std::string kernel;
  std::optional<double> energy;
  std::optional<double> kappa;
};

struct Density {
  Grid grid;
  std::vector<double> values;
  /// Trapezoid integral of values, recorded as computed.
  double norm = 0.0;
  DensityMeta meta;

  /// Checks the sample count against the grid and computes norm.
  static Density from_values(Grid grid, std::vector<double> values, DensityMeta meta = {});
};

/// Samples on grid_x x grid_y, stored row-major with x as the slow index:
/// values[ix * grid_y.size() + iy].
struct Density2D {
  Grid grid_x;
  Grid grid_y;
  std::vector<double> values;
  double norm = 0.0;

  double at(std::size_t ix, std::size_t iy) const { return values[ix * grid_y.size() + iy]; }

  static Density2D from_values(Grid gx, Grid gy, std::vector<double> values);
};

/// 2D composite trapezoid over the product grid.
double integrate_2d(const Grid& gx, const Grid& gy, const std::vector<double>& values);

}  // namespace uncsmear
