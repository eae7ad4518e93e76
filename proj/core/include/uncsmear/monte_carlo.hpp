#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <utility>

#include "uncsmear/density.hpp"
#include "uncsmear/kernels.hpp"
#include "uncsmear/models.hpp"
#include "uncsmear/smearing.hpp"

namespace uncsmear {

/// Seedable 64-bit generator with conversions defined here rather than by
/// the standard library, so streams are identical across toolchains.
class Rng {
 public:
  static constexpr std::string_view kAlgorithm = "mt19937_64/u53/polar";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  /// Standard normal, Marsaglia polar method.
  double normal();

 private:
  std::mt19937_64 engine_;
  std::optional<double> spare_;
};

struct McOptions {
  std::size_t samples = 1'000'000;
  std::uint64_t seed = 1;
  std::size_t bins = 200;
  /// Histogram range; defaults to [xi_min - 3, xi_max + 3] clipped to the wall.
  std::optional<std::pair<double, double>> range;
};

/// Histogram of xi drawn as xi' ~ P_Cl, then xi ~ phi(.; cell(xi')).
///
/// The returned grid holds bin centers and values are counts / (N * width),
/// so the histogram carries the fraction of samples that fell in range.
/// PreconditionError when samples < 10^4.
Density mc_oracle(ModelId model, const ModelParams& params, const KernelSpec& kernel,
                  double energy, const McOptions& options);

/// Draws xi' from the classical density of one orbit.
class ClassicalSampler {
 public:
  explicit ClassicalSampler(const ClassicalOrbit& orbit);
  double operator()(Rng& rng) const;

 private:
  ClassicalOrbit orbit_;
  double lower_mass_ = 0.5;
  double envelope_[2] = {0.0, 0.0};
};

/// Draws xi from phi(.; cell); cells are already wall-truncated.
double sample_kernel(const KernelSpec& spec, const CellGeometry& cell, Rng& rng);

/// The bins of an mc_oracle histogram as a grid of centers.
Grid histogram_grid(double lo, double hi, std::size_t bins);

/// Average of P over every bin of `centers` (bins of width centers.step()),
/// the quantity a histogram estimates.
Density bin_averaged(const Smearer& smearer, const Grid& centers, int points_per_bin = 16);

}  // namespace uncsmear
