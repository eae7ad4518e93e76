#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>

namespace uncsmear::quad {

struct SimpsonOptions {
  double rel_tol = 1e-9;
  double abs_tol = 1e-14;
  int max_depth = 40;
};

namespace detail {

template <class F>
double simpson_refine(F& f, double a, double fa, double m, double fm, double b,
                      double fb, double whole, double eps, int depth,
                      int max_depth) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth >= max_depth || std::abs(delta) <= 15.0 * eps) {
    return left + right + delta / 15.0;
  }
  return simpson_refine(f, a, fa, lm, flm, m, fm, left, 0.5 * eps, depth + 1,
                        max_depth) +
         simpson_refine(f, m, fm, rm, frm, b, fb, right, 0.5 * eps, depth + 1,
                        max_depth);
}

}  // namespace detail

/// Adaptive Simpson quadrature of f over [a, b].
///
/// The tolerance is max(abs_tol, rel_tol * |coarse estimate|). Integrands
/// with jumps terminate at max_depth with error ~ jump * (b - a) / 2^max_depth.
template <class F>
double adaptive_simpson(F&& f, double a, double b, const SimpsonOptions& opt = {}) {
  if (!(b > a)) return 0.0;
  const double m = 0.5 * (a + b);
  const double fa = f(a);
  const double fm = f(m);
  const double fb = f(b);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  const double eps = std::max(opt.abs_tol, opt.rel_tol * std::abs(whole));
  return detail::simpson_refine(f, a, fa, m, fm, b, fb, whole, eps, 0, opt.max_depth);
}

/// Composite trapezoid rule on uniformly spaced samples.
inline double trapezoid(std::span<const double> y, double h) {
  if (y.size() < 2) return 0.0;
  double s = 0.5 * (y.front() + y.back());
  for (std::size_t i = 1; i + 1 < y.size(); ++i) s += y[i];
  return s * h;
}

}  // namespace uncsmear::quad
