#include "uncsmear/oscillator2d.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "uncsmear/error.hpp"
#include "uncsmear/monte_carlo.hpp"

namespace uncsmear {
namespace {

constexpr double kPi = std::numbers::pi;

// Gaussian cells are cut at 3 widths (6 sigma) in 2D; the dropped tail is
// erfc(3 sqrt 2) ~ 2e-9 per axis and keeps grid sums affordable.
constexpr double kGaussianCutoff2D = 3.0;

CellGeometry make_cell_2d(const KernelSpec& spec, double center, double width) {
  CellGeometry cell = make_cell(spec, center, width);
  if (spec.shape == KernelShape::Gaussian) {
    cell.lo = center - kGaussianCutoff2D * width;
    cell.hi = center + kGaussianCutoff2D * width;
  }
  return cell;
}

// Fraction of the (untruncated) kernel mass inside [a, b].
double mass_fraction(KernelShape shape, const CellGeometry& cell, double a, double b) {
  const double c = cell.center;
  const double w = cell.width;
  switch (shape) {
    case KernelShape::Box: {
      const double lo = std::max(a, c - 0.5 * w);
      const double hi = std::min(b, c + 0.5 * w);
      return hi > lo ? (hi - lo) / w : 0.0;
    }
    case KernelShape::Triangle: {
      auto cdf = [&](double x) {
        const double u = std::clamp((x - c) / w, -1.0, 1.0);
        return u <= 0.0 ? 0.5 * (1.0 + u) * (1.0 + u) : 1.0 - 0.5 * (1.0 - u) * (1.0 - u);
      };
      return cdf(b) - cdf(a);
    }
    case KernelShape::Gaussian: {
      const double k = std::numbers::sqrt2 / w;
      return 0.5 * (std::erf(k * (b - c)) - std::erf(k * (a - c)));
    }
  }
  return 0.0;
}

// Kernel weights of one cell on the grid points it covers.
struct Footprint {
  std::size_t first = 0;
  std::size_t count = 0;
};

Footprint footprint(const Grid& g, const CellGeometry& cell) {
  const double h = g.step();
  const double a = std::ceil((cell.lo - g.lo()) / h);
  const double b = std::floor((cell.hi - g.lo()) / h);
  const double last = static_cast<double>(g.size() - 1);
  const double first = std::max(a, 0.0);
  const double end = std::min(b, last);
  if (end < first) return {};
  return {static_cast<std::size_t>(first), static_cast<std::size_t>(end - first) + 1};
}

}  // namespace

Osc2DParams::Osc2DParams(double omega_ratio) : ratio_(omega_ratio) {
  if (!(std::isfinite(omega_ratio) && omega_ratio > 0.0)) {
    throw ParameterError("omega ratio must be finite and > 0");
  }
  const double norm = std::hypot(1.0, omega_ratio);
  sin_ = 1.0 / norm;
  cos_ = omega_ratio / norm;
}

double Osc2DParams::classical_constant() const { return std::sqrt(sin_ * cos_) / (kPi * kPi); }

double Osc2DParams::energy_tilde() const { return energy() / std::sqrt(sin_ * cos_); }

double Osc2DParams::semi_axis_x() const { return std::sqrt(2.0 * energy() / sin_); }

double Osc2DParams::semi_axis_y() const { return std::sqrt(2.0 * energy() / cos_); }

double classical_density_2d(const Osc2DParams& params, double xi_x, double xi_y) {
  const double q = xi_x * xi_x * params.sin_alpha() + xi_y * xi_y * params.cos_alpha();
  const double room = 2.0 * params.energy() - q;
  // Within rounding of the rim counts as on it.
  const double rim_tol = 1e-14 * params.energy();
  if (room < -rim_tol) return 0.0;
  if (std::abs(room) <= rim_tol || q == 0.0) {
    throw SingularityError("classical 2D density diverges at (" + std::to_string(xi_x) + ", " +
                           std::to_string(xi_y) + ")");
  }
  return params.classical_constant() / std::sqrt(room * q);
}

double quantum_density_2d(double xi_x, double xi_y) {
  return std::exp(-xi_x * xi_x - xi_y * xi_y) / kPi;
}

DirectionalMomenta directional_momenta(const Osc2DParams& params, double beta, double xi_x,
                                       double xi_y) {
  if (!(beta >= 0.0 && beta <= 0.5 * kPi)) throw DomainError("beta must lie in [0, pi/2]");
  const double s = params.sin_alpha();
  const double c = params.cos_alpha();
  const double room = 2.0 * params.energy() - (xi_x * xi_x * s + xi_y * xi_y * c);
  if (room < 0.0) throw DomainError("point lies outside the classical ellipse");
  const double u = std::sqrt(room / std::sqrt(s * c));
  const double quarter = std::pow(c / s, 0.25);
  return {u * quarter * std::cos(beta), u / quarter * std::sin(beta)};
}

Smearer2D::Smearer2D(const Osc2DParams& params, const Smear2DOptions& options)
    : params_(params), options_(options) {
  spec_.shape = options.shape;
  spec_.kappa = options.kappa;
  spec_.validate();
  if (options.n_beta < 4) throw ParameterError("n_beta must be >= 4");
  if (options.n_radial < 1 || options.n_angular < 4 || options.n_angular % 4 != 0) {
    throw ParameterError("n_radial must be >= 1 and n_angular a positive multiple of 4");
  }

  const double s = params.sin_alpha();
  const double c = params.cos_alpha();
  const double root_e = std::sqrt(2.0 * params.energy());
  const double span_x = 2.0 * params.semi_axis_x();
  const double span_y = 2.0 * params.semi_axis_y();
  const double quarter = std::pow(c / s, 0.25);
  const double speed_scale = root_e / std::pow(s * c, 0.25);
  const double mass = 1.0 / (static_cast<double>(options.n_beta) * options.n_radial *
                             options.n_angular);

  cells_.reserve(static_cast<std::size_t>(options.n_beta) * options.n_radial * options.n_angular);
  for (int ib = 0; ib < options.n_beta; ++ib) {
    const double beta = (ib + 0.5) * 0.5 * kPi / options.n_beta;
    for (int it = 0; it < options.n_radial; ++it) {
      const double t = (it + 0.5) * 0.5 * kPi / options.n_radial;
      const double speed = speed_scale * std::cos(t);
      const double wx = cell_width(spec_.kappa, speed * quarter * std::cos(beta), span_x);
      const double wy = cell_width(spec_.kappa, speed / quarter * std::sin(beta), span_y);
      const double rho = root_e * std::sin(t);
      for (int ia = 0; ia < options.n_angular; ++ia) {
        const double theta = (ia + 0.5) * 2.0 * kPi / options.n_angular;
        const double x = rho * std::cos(theta) / std::sqrt(s);
        const double y = rho * std::sin(theta) / std::sqrt(c);
        cells_.push_back({make_cell_2d(spec_, x, wx), make_cell_2d(spec_, y, wy), mass});
      }
    }
  }
}

double Smearer2D::operator()(double xi_x, double xi_y) const {
  double sum = 0.0;
  for (const Cell& cell : cells_) {
    const double gx = kernel_weight(spec_, xi_x, cell.x);
    if (gx == 0.0) continue;
    sum += cell.mass * gx * kernel_weight(spec_, xi_y, cell.y);
  }
  return sum;
}

Density2D Smearer2D::on_grid(const Grid& gx, const Grid& gy) const {
  const std::size_t ny = gy.size();
  std::vector<double> values(gx.size() * ny, 0.0);
  std::vector<double> wx;
  std::vector<double> wy;
  for (const Cell& cell : cells_) {
    const Footprint fx = footprint(gx, cell.x);
    if (fx.count == 0) continue;
    const Footprint fy = footprint(gy, cell.y);
    if (fy.count == 0) continue;
    wx.resize(fx.count);
    wy.resize(fy.count);
    for (std::size_t i = 0; i < fx.count; ++i) {
      wx[i] = cell.mass * kernel_weight(spec_, gx.at(fx.first + i), cell.x);
    }
    for (std::size_t j = 0; j < fy.count; ++j) {
      wy[j] = kernel_weight(spec_, gy.at(fy.first + j), cell.y);
    }
    for (std::size_t i = 0; i < fx.count; ++i) {
      if (wx[i] == 0.0) continue;
      double* row = values.data() + (fx.first + i) * ny + fy.first;
      const double a = wx[i];
      for (std::size_t j = 0; j < fy.count; ++j) row[j] += a * wy[j];
    }
  }
  return Density2D::from_values(gx, gy, std::move(values));
}

double Smearer2D::mass_inside(double lx, double ly) const {
  double sum = 0.0;
  for (const Cell& cell : cells_) {
    sum += cell.mass * mass_fraction(spec_.shape, cell.x, -lx, lx) *
           mass_fraction(spec_.shape, cell.y, -ly, ly);
  }
  return sum;
}

Density2D smear_density_2d(const Osc2DParams& params, const Smear2DOptions& options,
                           const Grid& gx, const Grid& gy) {
  return Smearer2D(params, options).on_grid(gx, gy);
}

Grid default_grid_2d(const Smearer2D& smearer, std::size_t n, double leak) {
  if (!(leak > 0.0 && leak < 1.0)) throw ParameterError("leak must lie in (0, 1)");
  const auto& p = smearer.params();
  double half = std::ceil(2.0 * std::max(p.semi_axis_x(), p.semi_axis_y())) / 2.0;
  while (1.0 - smearer.mass_inside(half, half) > leak) half += 0.5;
  return Grid(-half, half, n);
}

Density2D binned_classical_density_2d(const Osc2DParams& params, const Grid& gx, const Grid& gy,
                                      int nodes_per_axis) {
  if (nodes_per_axis < 4) throw ParameterError("nodes_per_axis must be >= 4");
  const std::size_t ny = gy.size();
  std::vector<double> values(gx.size() * ny, 0.0);
  const double hx = gx.step();
  const double hy = gy.step();
  const double root_e = std::sqrt(2.0 * params.energy());
  const double sx = std::sqrt(params.sin_alpha());
  const double sy = std::sqrt(params.cos_alpha());
  const double n = nodes_per_axis;
  const double deposit = 1.0 / (n * n * hx * hy);
  for (int it = 0; it < nodes_per_axis; ++it) {
    const double rho = root_e * std::sin((it + 0.5) * 0.5 * kPi / n);
    for (int ia = 0; ia < nodes_per_axis; ++ia) {
      const double theta = (ia + 0.5) * 2.0 * kPi / n;
      const double ix = std::round((rho * std::cos(theta) / sx - gx.lo()) / hx);
      const double iy = std::round((rho * std::sin(theta) / sy - gy.lo()) / hy);
      if (ix < 0.0 || iy < 0.0 || ix >= static_cast<double>(gx.size()) ||
          iy >= static_cast<double>(ny)) {
        continue;
      }
      values[static_cast<std::size_t>(ix) * ny + static_cast<std::size_t>(iy)] += deposit;
    }
  }
  return Density2D::from_values(gx, gy, std::move(values));
}

Density2D quantum_density_2d_on_grid(const Grid& gx, const Grid& gy) {
  std::vector<double> values;
  values.reserve(gx.size() * gy.size());
  for (std::size_t i = 0; i < gx.size(); ++i) {
    for (std::size_t j = 0; j < gy.size(); ++j) {
      values.push_back(quantum_density_2d(gx.at(i), gy.at(j)));
    }
  }
  return Density2D::from_values(gx, gy, std::move(values));
}

Trajectory make_trajectory(const Osc2DParams& params, double energy_x, double phase_x,
                           double phase_y, std::size_t steps) {
  const double e = params.energy();
  if (!(energy_x >= 0.0 && energy_x <= e)) throw ParameterError("energy_x must lie in [0, E]");
  if (steps < 2) throw ParameterError("a trajectory needs at least 2 steps");
  const double s = params.sin_alpha();
  const double c = params.cos_alpha();
  const double ax = std::sqrt(2.0 * energy_x / s);
  const double ay = std::sqrt(2.0 * (e - energy_x) / c);
  const double dt = 2.0 * kPi / std::min(s, c) / static_cast<double>(steps);

  Trajectory path;
  path.energy_x = energy_x;
  path.dt = dt;
  path.xi_x.reserve(steps);
  path.xi_y.reserve(steps);
  for (std::size_t k = 0; k < steps; ++k) {
    const double tau = dt * static_cast<double>(k);
    path.xi_x.push_back(ax * std::sin(s * tau + phase_x));
    path.xi_y.push_back(ay * std::sin(c * tau + phase_y));
  }
  return path;
}

std::vector<Trajectory> sample_trajectories(const Osc2DParams& params, std::size_t count,
                                            std::size_t steps, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Trajectory> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double ex = params.energy() * rng.uniform();
    const double px = 2.0 * kPi * rng.uniform();
    const double py = 2.0 * kPi * rng.uniform();
    out.push_back(make_trajectory(params, ex, px, py, steps));
  }
  return out;
}

}  // namespace uncsmear
