#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "uncsmear/density.hpp"
#include "uncsmear/kernels.hpp"

namespace uncsmear {

/// Asymmetric 2D oscillator in the dimensionless variables xi_x, xi_y.
///
/// sin(alpha) = w_x / |w|, cos(alpha) = w_y / |w|; the ground-state energy
/// is E = (sin + cos) / 2 and the classical region is the ellipse
/// xi_x^2 sin + xi_y^2 cos < 2 E.
class Osc2DParams {
 public:
  /// omega_ratio = w_y / w_x; ParameterError unless finite and > 0.
  explicit Osc2DParams(double omega_ratio = 2.0);

  double omega_ratio() const { return ratio_; }
  double sin_alpha() const { return sin_; }
  double cos_alpha() const { return cos_; }
  double energy() const { return 0.5 * (sin_ + cos_); }
  /// E / sqrt(sin cos) = (sqrt(tan) + sqrt(cot)) / 2, the energy in the
  /// rescaled plane where the motion is isotropic.
  double energy_tilde() const;
  /// sqrt(sin cos) / pi^2.
  double classical_constant() const;
  double semi_axis_x() const;
  double semi_axis_y() const;

 private:
  double ratio_;
  double sin_;
  double cos_;
};

/// C / sqrt((2E - q) q), q = xi_x^2 sin + xi_y^2 cos. Zero outside the
/// ellipse; SingularityError on the rim and at the origin.
double classical_density_2d(const Osc2DParams& params, double xi_x, double xi_y);

/// exp(-xi_x^2 - xi_y^2) / pi.
double quantum_density_2d(double xi_x, double xi_y);

struct DirectionalMomenta {
  double eta_x = 0.0;
  double eta_y = 0.0;
};

/// Momentum components for motion in direction beta in [0, pi/2].
///
/// |eta_x| = u cot^{1/4}(alpha) cos(beta), |eta_y| = u tan^{1/4}(alpha) sin(beta)
/// with u^2 = (2E - q) / sqrt(sin cos), so that
/// sin eta_x^2 + cos eta_y^2 + q = 2E for every beta. DomainError outside
/// the closed ellipse or for beta outside [0, pi/2].
DirectionalMomenta directional_momenta(const Osc2DParams& params, double beta, double xi_x,
                                       double xi_y);

struct Smear2DOptions {
  double kappa = kDefaultKappa2D;
  KernelShape shape = KernelShape::Gaussian;
  int n_beta = 32;
  /// Midpoint nodes of the classical measure, which is uniform in (t, theta)
  /// for rho = sqrt(2E) sin t in the plane (sqrt(sin) xi_x, sqrt(cos) xi_y).
  int n_radial = 32;
  /// Kept a multiple of 4 so the node set maps onto itself under 90 degree turns.
  int n_angular = 128;
};

/// P(xi) averaged over n_beta midpoint directions, each a sum of product
/// kernels carrying the classical mass of one node.
class Smearer2D {
 public:
  Smearer2D(const Osc2DParams& params, const Smear2DOptions& options = {});

  const Osc2DParams& params() const { return params_; }
  const Smear2DOptions& options() const { return options_; }

  double operator()(double xi_x, double xi_y) const;
  Density2D on_grid(const Grid& gx, const Grid& gy) const;

  /// Exact smeared mass inside [-lx, lx] x [-ly, ly].
  double mass_inside(double lx, double ly) const;

  std::size_t cell_count() const { return cells_.size(); }

 private:
  struct Cell {
    CellGeometry x;
    CellGeometry y;
    double mass;
  };

  Osc2DParams params_;
  Smear2DOptions options_;
  KernelSpec spec_;
  std::vector<Cell> cells_;
};

Density2D smear_density_2d(const Osc2DParams& params, const Smear2DOptions& options,
                           const Grid& gx, const Grid& gy);

/// Square grid [-L, L]^2 with L the smallest half-width (in steps of 1/2)
/// that holds all but `leak` of the smeared mass.
Grid default_grid_2d(const Smearer2D& smearer, std::size_t n = 201, double leak = 1e-4);

/// Classical probability of each grid cell (h_x by h_y around each node)
/// divided by its area; finite on the singular rim and origin.
Density2D binned_classical_density_2d(const Osc2DParams& params, const Grid& gx, const Grid& gy,
                                      int nodes_per_axis = 1000);

Density2D quantum_density_2d_on_grid(const Grid& gx, const Grid& gy);

struct Trajectory {
  double energy_x = 0.0;
  /// Time between consecutive samples.
  double dt = 0.0;
  std::vector<double> xi_x;
  std::vector<double> xi_y;
};

/// Random classical trajectories at the ground-state energy: E_x uniform on
/// (0, E), phases uniform, xi_x = A_x sin(sin(alpha) tau + phi_x) and likewise
/// for y, sampled at `steps` equal times over one period of the slower axis.
std::vector<Trajectory> sample_trajectories(const Osc2DParams& params, std::size_t count,
                                            std::size_t steps, std::uint64_t seed);

/// One trajectory with a chosen energy split, for the degenerate draws.
Trajectory make_trajectory(const Osc2DParams& params, double energy_x, double phase_x,
                           double phase_y, std::size_t steps);

}  // namespace uncsmear
