#pragma once

#include "uncsmear/density.hpp"

namespace uncsmear {

/// E_n = n + 1/2.
inline double harmonic_level(unsigned n) { return n + 0.5; }

/// |psi_n(xi)|^2 of the normalized oscillator eigenstate.
double harmonic_quantum_density(unsigned n, double xi);

Density harmonic_quantum_density_on_grid(unsigned n, const Grid& grid);

/// [-(a + 6), a + 6] with a = sqrt(2 E_n), spaced by 0.004: wide enough for
/// the Gaussian tail of psi_n and fine enough to resolve its n nodes for n <~ 200.
Grid excited_grid(unsigned n);

/// Leading-order WKB density 1 / (pi sqrt(2 E_n - xi^2)).
/// DomainError for |xi| >= sqrt(2 E_n).
double wkb_density_harmonic(unsigned n, double xi);

/// Boxcar average over windows of length d centred on each grid point.
///
/// The window takes the grid nodes within d/2 of the center and integrates
/// them by the trapezoid rule, dividing by the length actually covered, so
/// windows cut by the grid ends are renormalized and a window holding a
/// single node returns that node's value. PreconditionError unless
/// 0 < d <= grid span.
Density windowed_average(const Density& dens, double d);

}  // namespace uncsmear
