#pragma once

#include <string>

#include "uncsmear/density.hpp"

namespace uncsmear {

struct Scorecard {
  double l1 = 0.0;
  double linf = 0.0;
  /// Moments of the first density, normalized by its own mass.
  double mean = 0.0;
  double variance = 0.0;
  double norm_a = 0.0;
  double norm_b = 0.0;
};

/// Composite trapezoid mass.
double integrate(const Density& dens);

/// <xi> and <(xi - <xi>)^2> of dens / integrate(dens). ParameterError for zero mass.
double mean(const Density& dens);
double variance(const Density& dens);

/// Trapezoid integral of |a - b|; GridMismatchError unless the grids match.
double l1_distance(const Density& a, const Density& b);
double linf_distance(const Density& a, const Density& b);

/// Distances on the shared grid plus the moments of `a`.
Scorecard compare(const Density& a, const Density& b);

/// {"l1":...,"linf":...,"mean":...,"variance":...,"norm_a":...,"norm_b":...}
/// with every number printed as %.9g.
std::string to_json(const Scorecard& card);

}  // namespace uncsmear
