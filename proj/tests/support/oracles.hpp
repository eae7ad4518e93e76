#pragma once

// Reference computations kept apart from the library: they share the model
// definitions (momentum, densities) but none of the integration machinery.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <vector>

#include "uncsmear/kernels.hpp"
#include "uncsmear/models.hpp"

namespace oracle {

inline constexpr double kPi = std::numbers::pi;

/// Composite Simpson with n (even) intervals.
template <class F>
double simpson(F&& f, double a, double b, int n) {
  if (n % 2) ++n;
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return s * h / 3.0;
}

/// Integral of g(xi) over [lo, hi] with xi = mid - half cos(theta): the
/// midpoint rule in theta absorbs 1/sqrt endpoint singularities.
template <class G>
double arcsine_midpoint(G&& g, double lo, double hi, int n) {
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  double s = 0.0;
  for (int i = 0; i < n; ++i) {
    const double th = (i + 0.5) * kPi / n;
    s += g(mid - half * std::cos(th)) * half * std::sin(th);
  }
  return s * kPi / n;
}

/// Unnormalized kernel profile around `center` with width w.
inline double raw_kernel(uncsmear::KernelShape shape, double u, double w) {
  switch (shape) {
    case uncsmear::KernelShape::Box:
      return std::abs(u) <= 0.5 * w ? 1.0 : 0.0;
    case uncsmear::KernelShape::Triangle:
      return std::max(0.0, w - std::abs(u));
    case uncsmear::KernelShape::Gaussian:
      return std::abs(u) <= 6.0 * w ? std::exp(-2.0 * u * u / (w * w)) : 0.0;
  }
  return 0.0;
}

/// Mass of raw_kernel above `wall` from the antiderivative of each profile.
inline double raw_mass(uncsmear::KernelShape shape, double center, double w,
                       std::optional<double> wall) {
  using uncsmear::KernelShape;
  const double a = wall ? *wall - center : -1e300;  // wall offset from the center
  switch (shape) {
    case KernelShape::Box:
      return std::max(0.0, 0.5 * w - std::max(a, -0.5 * w));
    case KernelShape::Triangle: {
      // Antiderivative of max(0, w - |u|) from -inf, evaluated at the clamp of u.
      auto cdf = [w](double u) {
        u = std::clamp(u, -w, w);
        return u < 0.0 ? 0.5 * (w + u) * (w + u) : w * w - 0.5 * (w - u) * (w - u);
      };
      return w * w - cdf(a);
    }
    case KernelShape::Gaussian: {
      const double s = w / 2.0;  // exp(-2 u^2 / w^2) = exp(-u^2 / (2 s^2))
      const double lo = std::max(a, -6.0 * w);
      return s * std::sqrt(kPi / 2.0) *
             (std::erf(6.0 * w / (s * std::numbers::sqrt2)) - std::erf(lo / (s * std::numbers::sqrt2)));
    }
  }
  return 0.0;
}

/// P(xi) by brute force: midpoint in theta over the classical region, each
/// cell rebuilt from |eta| with its own normalization.
inline double smear_brute(uncsmear::ModelId model, const uncsmear::ModelParams& params,
                          double energy, uncsmear::KernelShape shape, double kappa, double xi,
                          int n = 200000) {
  const auto tp = uncsmear::turning_points(model, params, energy);
  const auto wall = uncsmear::wall_floor(model);
  const double nc = uncsmear::classical_norm_constant(model, params, energy);
  const double cap = 4.0 * tp.span();
  auto g = [&](double xp) {
    const double eta = uncsmear::momentum_abs(model, params, energy, xp);
    if (!(eta > 0.0)) return 0.0;
    const double w = std::min(1.0 / (kappa * eta), cap);
    if (wall && xi < *wall) return 0.0;
    const double k = raw_kernel(shape, xi - xp, w);
    if (k == 0.0) return 0.0;
    return k / raw_mass(shape, xp, w, wall) * nc / eta;
  };
  return arcsine_midpoint(g, tp.xi_min, tp.xi_max, n);
}

/// L1 distance of two equally sized sample vectors with spacing h (trapezoid).
inline double l1(const std::vector<double>& a, const std::vector<double>& b, double h) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double w = (i == 0 || i + 1 == a.size()) ? 0.5 : 1.0;
    s += w * std::abs(a[i] - b[i]);
  }
  return s * h;
}

}  // namespace oracle
