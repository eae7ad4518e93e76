#include "uncsmear/density.hpp"

#include <cmath>
#include <utility>

#include "uncsmear/error.hpp"
#include "uncsmear/quadrature.hpp"

namespace uncsmear {

Grid::Grid(double lo, double hi, std::size_t n) : lo_(lo), hi_(hi), n_(n) {
  if (!(std::isfinite(lo) && std::isfinite(hi) && lo < hi)) {
    throw ParameterError("grid needs finite lo < hi");
  }
  if (n < 2) throw ParameterError("grid needs at least 2 points");
}

double Grid::at(std::size_t i) const {
  if (i + 1 == n_) return hi_;
  return lo_ + static_cast<double>(i) * step();
}

std::vector<double> Grid::points() const {
  std::vector<double> out(n_);
  for (std::size_t i = 0; i < n_; ++i) out[i] = at(i);
  return out;
}

Density Density::from_values(Grid grid, std::vector<double> values, DensityMeta meta) {
  if (values.size() != grid.size()) {
    throw GridMismatchError("density has " + std::to_string(values.size()) +
                            " samples for a grid of " + std::to_string(grid.size()));
  }
  const double norm = quad::trapezoid(values, grid.step());
  return Density{std::move(grid), std::move(values), norm, std::move(meta)};
}

double integrate_2d(const Grid& gx, const Grid& gy, const std::vector<double>& values) {
  const std::size_t nx = gx.size();
  const std::size_t ny = gy.size();
  if (values.size() != nx * ny) throw GridMismatchError("2D sample count does not match grid");
  std::vector<double> rows(nx);
  for (std::size_t ix = 0; ix < nx; ++ix) {
    rows[ix] = quad::trapezoid(std::span<const double>(values.data() + ix * ny, ny), gy.step());
  }
  return quad::trapezoid(rows, gx.step());
}

Density2D Density2D::from_values(Grid gx, Grid gy, std::vector<double> values) {
  const double norm = integrate_2d(gx, gy, values);
  return Density2D{std::move(gx), std::move(gy), std::move(values), norm};
}

}  // namespace uncsmear
