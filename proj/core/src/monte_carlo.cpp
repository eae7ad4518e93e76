#include "uncsmear/monte_carlo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "uncsmear/error.hpp"

namespace uncsmear {

double Rng::normal() {
  if (spare_) {
    const double z = *spare_;
    spare_.reset();
    return z;
  }
  double u;
  double v;
  double s;
  do {
    u = 2.0 * uniform() - 1.0;
    v = 2.0 * uniform() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double f = std::sqrt(-2.0 * std::log(s) / s);
  spare_ = v * f;
  return u * f;
}

ClassicalSampler::ClassicalSampler(const ClassicalOrbit& orbit) : orbit_(orbit) {
  const ModelId model = orbit_.model();
  if (model == ModelId::Harmonic || model == ModelId::Bouncer) return;
  lower_mass_ = orbit_.mass_between(orbit_.turning_points().xi_min, orbit_.turning_points().midpoint());
  // Envelope for rejection in v: the dwell is bounded on each half, so a
  // dense scan with 10% headroom covers it.
  for (Side side : {Side::Lower, Side::Upper}) {
    const double extent = orbit_.half_extent(side);
    double peak = 0.0;
    constexpr int kScan = 4096;
    for (int i = 0; i <= kScan; ++i) {
      peak = std::max(peak, orbit_.at(side, extent * i / kScan).dwell);
    }
    envelope_[side == Side::Lower ? 0 : 1] = 1.1 * peak;
  }
}

double ClassicalSampler::operator()(Rng& rng) const {
  const TurningPoints& tp = orbit_.turning_points();
  switch (orbit_.model()) {
    case ModelId::Harmonic:
      // Uniform time along xi = A sin(t).
      return tp.xi_max * std::sin(std::numbers::pi * (rng.uniform() - 0.5));
    case ModelId::Bouncer: {
      // Uniform time of the fall from rest at xi_max: xi = E - t^2 / 2.
      const double u = rng.uniform();
      return tp.xi_max * (1.0 - u * u);
    }
    default:
      break;
  }
  const Side side = rng.uniform() < lower_mass_ ? Side::Lower : Side::Upper;
  const double extent = orbit_.half_extent(side);
  const double envelope = envelope_[side == Side::Lower ? 0 : 1];
  while (true) {
    const OrbitPoint p = orbit_.at(side, extent * rng.uniform());
    if (rng.uniform() * envelope < p.dwell) return p.xi;
  }
}

double sample_kernel(const KernelSpec& spec, const CellGeometry& cell, Rng& rng) {
  if (!(cell.width > 0.0) || cell.scale == 0.0) return cell.center;
  switch (spec.shape) {
    case KernelShape::Box:
      return cell.lo + (cell.hi - cell.lo) * rng.uniform();
    case KernelShape::Triangle:
      while (true) {
        const double xi = cell.center + cell.width * (rng.uniform() + rng.uniform() - 1.0);
        if (xi >= cell.lo) return xi;
      }
    case KernelShape::Gaussian:
      while (true) {
        const double xi = cell.center + 0.5 * cell.width * rng.normal();
        if (xi >= cell.lo && xi <= cell.hi) return xi;
      }
  }
  return cell.center;
}

Grid histogram_grid(double lo, double hi, std::size_t bins) {
  if (bins < 2) throw ParameterError("histogram needs at least 2 bins");
  const double w = (hi - lo) / static_cast<double>(bins);
  return Grid(lo + 0.5 * w, hi - 0.5 * w, bins);
}

Density mc_oracle(ModelId model, const ModelParams& params, const KernelSpec& kernel,
                  double energy, const McOptions& options) {
  if (options.samples < 10'000) {
    throw PreconditionError("Monte Carlo oracle needs at least 10^4 samples (got " +
                            std::to_string(options.samples) + ")");
  }
  const ClassicalOrbit orbit(model, params, energy);
  const Smearer smearer(orbit, kernel);
  const KernelSpec& spec = smearer.kernel();
  const TurningPoints& tp = orbit.turning_points();

  double lo = tp.xi_min - 3.0;
  double hi = tp.xi_max + 3.0;
  if (auto wall = wall_floor(model)) lo = std::max(lo, *wall);
  if (options.range) std::tie(lo, hi) = *options.range;
  const Grid grid = histogram_grid(lo, hi, options.bins);
  const double width = (hi - lo) / static_cast<double>(options.bins);

  Rng rng(options.seed);
  const ClassicalSampler draw_classical(orbit);
  std::vector<double> counts(options.bins, 0.0);
  for (std::size_t i = 0; i < options.samples; ++i) {
    const double xi_prime = draw_classical(rng);
    const CellGeometry cell = smearer.cell_at(xi_prime);
    const double xi = sample_kernel(spec, cell, rng);
    if (xi < lo || xi >= hi) continue;
    const auto b = std::min(options.bins - 1, static_cast<std::size_t>((xi - lo) / width));
    counts[b] += 1.0;
  }
  const double scale = 1.0 / (static_cast<double>(options.samples) * width);
  for (double& c : counts) c *= scale;

  DensityMeta meta;
  meta.kind = "histogram";
  meta.model = std::string(to_string(model));
  meta.kernel = std::string(to_string(kernel.shape));
  meta.energy = energy;
  meta.kappa = kernel.kappa;
  return Density::from_values(grid, std::move(counts), std::move(meta));
}

Density bin_averaged(const Smearer& smearer, const Grid& centers, int points_per_bin) {
  const int m = std::max(2, points_per_bin + (points_per_bin % 2));  // even panel count
  const double w = centers.step();
  std::vector<double> values(centers.size());
  for (std::size_t i = 0; i < centers.size(); ++i) {
    const double a = centers.at(i) - 0.5 * w;
    const double h = w / m;
    double s = 0.0;
    for (int j = 0; j <= m; ++j) {
      const double c = (j == 0 || j == m) ? 1.0 : (j % 2 ? 4.0 : 2.0);
      s += c * smearer(a + j * h);
    }
    values[i] = s * h / 3.0 / w;
  }
  DensityMeta meta;
  meta.kind = "smeared-bin-average";
  meta.model = std::string(to_string(smearer.orbit().model()));
  meta.kernel = std::string(to_string(smearer.kernel().shape));
  meta.energy = smearer.orbit().energy();
  meta.kappa = smearer.kernel().kappa;
  return Density::from_values(centers, std::move(values), std::move(meta));
}

}  // namespace uncsmear
