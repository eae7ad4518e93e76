#pragma once

#include <optional>
#include <string_view>

namespace uncsmear {

enum class KernelShape { Box, Triangle, Gaussian };

std::string_view to_string(KernelShape shape);

/// Case-insensitive: "box" (alias "step"), "triangle", "gaussian" (alias "gauss").
KernelShape parse_kernel_shape(std::string_view name);

inline constexpr double kDefaultKappa1D = 1.7;
inline constexpr double kDefaultKappa2D = 1.8;

struct KernelSpec {
  KernelShape shape = KernelShape::Gaussian;
  double kappa = kDefaultKappa1D;
  /// Floor below which every weight is zero.
  std::optional<double> wall;

  /// Throws ParameterError unless kappa is finite and positive.
  void validate() const;
};

/// One uncertainty cell: center xi', width dxi and the support [lo, hi]
/// actually carrying weight. `scale` is the normalizing prefactor
/// (1/L for box and triangle, C for the Gaussian), so weights are cheap.
struct CellGeometry {
  double center = 0.0;
  double width = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  double scale = 0.0;
};

/// Gaussian cells are cut at this many widths from the center.
inline constexpr double kGaussianCutoff = 6.0;

/// min(1 / (kappa * eta), 4 * domain_span); eta = 0 and eta = inf are fine.
double cell_width(double kappa, double eta, double domain_span);

/// Builds the cell around `center`, truncated at spec.wall and renormalized
/// to unit mass. A cell with no mass above the wall gets scale 0.
CellGeometry make_cell(const KernelSpec& spec, double center, double width);

/// phi(xi; cell): zero outside [lo, hi].
double kernel_weight(const KernelSpec& spec, double xi, const CellGeometry& cell);

}  // namespace uncsmear
