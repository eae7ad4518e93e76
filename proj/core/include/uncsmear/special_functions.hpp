#pragma once

namespace uncsmear::special {

/// Airy function Ai(x).
///
/// Maclaurin series on [-8.5, 5], asymptotic expansions beyond. Absolute
/// error is below 1e-10 on the whole real line.
double airy_ai(double x);

/// First (least negative) zero of Ai, located by bisection on [-3, -2].
double airy_ai_first_zero();

/// Normalized Hermite function psi_n(x) = H_n(x) exp(-x^2/2) / sqrt(2^n n! sqrt(pi)).
///
/// Evaluated by the three-term recurrence on psi_n itself, so large n does
/// not overflow.
double hermite_function(unsigned n, double x);

}  // namespace uncsmear::special
