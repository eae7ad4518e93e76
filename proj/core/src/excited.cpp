#include "uncsmear/excited.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "uncsmear/error.hpp"
#include "uncsmear/special_functions.hpp"

namespace uncsmear {

double harmonic_quantum_density(unsigned n, double xi) {
  const double psi = special::hermite_function(n, xi);
  return psi * psi;
}

Density harmonic_quantum_density_on_grid(unsigned n, const Grid& grid) {
  std::vector<double> values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) values[i] = harmonic_quantum_density(n, grid.at(i));
  DensityMeta meta;
  meta.kind = "quantum";
  meta.model = "harmonic";
  meta.energy = harmonic_level(n);
  return Density::from_values(grid, std::move(values), std::move(meta));
}

Grid excited_grid(unsigned n) {
  const double reach = std::sqrt(2.0 * harmonic_level(n)) + 6.0;
  const auto intervals = static_cast<std::size_t>(std::ceil(2.0 * reach / 0.004));
  return Grid(-reach, reach, intervals + 1);
}

double wkb_density_harmonic(unsigned n, double xi) {
  const double gap = 2.0 * harmonic_level(n) - xi * xi;
  if (!(gap > 0.0)) {
    throw DomainError("WKB density is defined only for |xi| < sqrt(2 E_n) (xi = " +
                      std::to_string(xi) + ", n = " + std::to_string(n) + ")");
  }
  return 1.0 / (std::numbers::pi * std::sqrt(gap));
}

Density windowed_average(const Density& dens, double d) {
  const Grid& grid = dens.grid;
  const double span = grid.hi() - grid.lo();
  if (!(d > 0.0) || d > span) {
    throw PreconditionError("window length must satisfy 0 < d <= grid span (" + std::to_string(span) +
                            ")");
  }
  const double h = grid.step();
  const auto n = static_cast<std::ptrdiff_t>(grid.size());
  // Nodes within d/2, with slack so that d = 2 m h picks exactly m per side.
  const auto m = static_cast<std::ptrdiff_t>(std::floor(0.5 * d / h + 1e-9));

  // Prefix sums of trapezoid panels: area[j] = integral from node 0 to node j.
  std::vector<double> area(grid.size(), 0.0);
  for (std::ptrdiff_t j = 1; j < n; ++j) {
    area[j] = area[j - 1] + 0.5 * h * (dens.values[j - 1] + dens.values[j]);
  }
  std::vector<double> out(grid.size());
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const std::ptrdiff_t a = std::max<std::ptrdiff_t>(0, i - m);
    const std::ptrdiff_t b = std::min<std::ptrdiff_t>(n - 1, i + m);
    out[i] = b > a ? (area[b] - area[a]) / (static_cast<double>(b - a) * h) : dens.values[i];
  }
  DensityMeta meta = dens.meta;
  meta.kind = dens.meta.kind + "-windowed";
  return Density::from_values(grid, std::move(out), std::move(meta));
}

}  // namespace uncsmear
