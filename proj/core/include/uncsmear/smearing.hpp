#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "uncsmear/density.hpp"
#include "uncsmear/kernels.hpp"
#include "uncsmear/models.hpp"

namespace uncsmear {

struct SmearOptions {
  /// Panels on each half-orbit are sized so that xi' moves by at most this
  /// fraction of the local cell width across one panel.
  double panel_fraction = 0.2;
  double rel_tol = 1e-8;
  double abs_tol = 1e-13;
  int max_depth = 30;
};

/// P(xi) = integral over the classical region of phi(xi; cell(xi')) P_Cl(xi') dxi'.
///
/// The xi' integral runs over the two half-orbits in the parameter v of
/// ClassicalOrbit, where the integrand N_c * dwell * phi is bounded. Each half
/// is cut into panels fixed at construction; for a given xi the panels are
/// further split where xi crosses a cell edge, so adaptive Simpson only ever
/// sees the smooth part of the kernel.
class Smearer {
 public:
  /// The model's wall, when it has one, replaces kernel.wall.
  Smearer(ClassicalOrbit orbit, KernelSpec kernel, SmearOptions options = {});

  const ClassicalOrbit& orbit() const { return orbit_; }
  const KernelSpec& kernel() const { return kernel_; }

  /// Cell of a classical position; DomainError outside [xi_min, xi_max].
  CellGeometry cell_at(double xi_prime) const;

  /// Phi(xi, xi') = phi(xi; cell(xi')) * P_Cl(xi') for xi' strictly inside.
  double joint(double xi, double xi_prime) const;

  double operator()(double xi) const;

  std::size_t panel_count() const { return nodes_[0].size() + nodes_[1].size() - 2; }

 private:
  struct Node {
    double v;
    double lo;
    double hi;
  };

  CellGeometry cell_on(Side side, double v, double* mass_rate) const;
  std::vector<Node> build_nodes(Side side) const;
  void insert_edge_extrema(Side side, std::vector<Node>& nodes) const;
  double integrate_half(Side side, double xi) const;

  ClassicalOrbit orbit_;
  KernelSpec kernel_;
  SmearOptions options_;
  double span_;
  std::array<std::vector<Node>, 2> nodes_;
};

/// Default spacing of 1D evaluation grids. The box kernel turns the sharp
/// edges of its cells into near-jumps of P, so it gets a finer grid to keep
/// the trapezoid mass error below 1e-5.
double default_grid_step(KernelShape shape);

/// [xi_min - 3 W, xi_max + 3 W] with W = 4 * span the largest cell width,
/// clipped to the wall, spaced by default_grid_step(shape).
Grid default_grid(const ClassicalOrbit& orbit, KernelShape shape);

/// The same range with exactly n points.
Grid default_grid(const ClassicalOrbit& orbit, std::size_t n);

/// Throws PreconditionError unless the grid covers [xi_min - 3, xi_max + 3]
/// intersected with the physical domain.
void check_grid_covers(const ClassicalOrbit& orbit, const Grid& grid);

Density smear_density(ModelId model, const ModelParams& params, const KernelSpec& kernel,
                      double energy, const Grid& grid, const SmearOptions& options = {});

Density smear_density(const Smearer& smearer, const Grid& grid);

/// One smeared density per kappa, all on the same grid.
std::vector<Density> kappa_sweep(ModelId model, const ModelParams& params, KernelShape shape,
                                 std::span<const double> kappas, double energy, const Grid& grid);

/// The classical density averaged over each grid cell [xi_i - h/2, xi_i + h/2].
/// Finite everywhere, and its trapezoid mass is 1 up to the end cells.
Density clipped_classical_density(const ClassicalOrbit& orbit, const Grid& grid);

/// Ground-state quantum density sampled on the grid.
Density quantum_density_on_grid(ModelId model, const ModelParams& params, const Grid& grid);

}  // namespace uncsmear
