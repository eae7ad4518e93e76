#include "uncsmear/special_functions.hpp"

#include <cmath>
#include <numbers>

namespace uncsmear::special {
namespace {

constexpr double kAi0 = 0.355028053887817239260;   // Ai(0)
constexpr double kDAi0 = 0.258819403792806798405;  // -Ai'(0)
// The asymptotic series for x < 0 is only good to ~e^{-2 zeta}, so the
// Maclaurin series runs further out on that side.
constexpr double kSeriesLimitPositive = 5.0;
constexpr double kSeriesLimitNegative = 8.5;

double airy_maclaurin(double x) {
  const double x3 = x * x * x;
  double f = 1.0;
  double g = x;
  double tf = 1.0;
  double tg = x;
  for (int k = 0; k < 200; ++k) {
    const double k3 = 3.0 * k;
    tf *= x3 / ((k3 + 2.0) * (k3 + 3.0));
    tg *= x3 / ((k3 + 3.0) * (k3 + 4.0));
    f += tf;
    g += tg;
    if (std::abs(tf) < 1e-18 * std::abs(f) && std::abs(tg) < 1e-18 * (std::abs(g) + 1e-300)) {
      break;
    }
  }
  return kAi0 * f - kDAi0 * g;
}

// u_k = Gamma(3k + 1/2) / (54^k k! Gamma(k + 1/2)).
double next_u(double u_prev, int k) {
  return u_prev * (6.0 * k - 5.0) * (6.0 * k - 3.0) * (6.0 * k - 1.0) /
         ((2.0 * k - 1.0) * 216.0 * k);
}

double airy_asymptotic_positive(double x) {
  const double zeta = 2.0 / 3.0 * x * std::sqrt(x);
  double sum = 1.0;
  double u = 1.0;
  double term = 1.0;
  for (int k = 1; k < 60; ++k) {
    u = next_u(u, k);
    const double t = u / std::pow(zeta, k) * ((k % 2) ? -1.0 : 1.0);
    if (std::abs(t) >= std::abs(term)) break;  // asymptotic series: stop at the smallest term
    sum += t;
    term = t;
    if (std::abs(t) < 1e-17) break;
  }
  return std::exp(-zeta) / (2.0 * std::sqrt(std::numbers::pi) * std::pow(x, 0.25)) * sum;
}

double airy_asymptotic_negative(double x) {
  const double z = -x;
  const double zeta = 2.0 / 3.0 * z * std::sqrt(z);
  double p = 1.0;  // sum (-1)^k u_{2k} zeta^{-2k}
  double q = 0.0;  // sum (-1)^k u_{2k+1} zeta^{-2k-1}
  double u = 1.0;
  double last = 1.0;
  for (int k = 1; k < 60; ++k) {
    u = next_u(u, k);
    const double mag = u / std::pow(zeta, k);
    if (mag >= last) break;
    last = mag;
    if (k % 2 == 1) {
      const int j = (k - 1) / 2;
      q += (j % 2 ? -mag : mag);
    } else {
      const int j = k / 2;
      p += (j % 2 ? -mag : mag);
    }
    if (mag < 1e-17) break;
  }
  const double phase = zeta + 0.25 * std::numbers::pi;
  return (std::sin(phase) * p - std::cos(phase) * q) /
         (std::sqrt(std::numbers::pi) * std::pow(z, 0.25));
}

}  // namespace

double airy_ai(double x) {
  if (x <= kSeriesLimitPositive && x >= -kSeriesLimitNegative) return airy_maclaurin(x);
  if (x > 0.0) return airy_asymptotic_positive(x);
  return airy_asymptotic_negative(x);
}

double airy_ai_first_zero() {
  static const double zero = [] {
    double lo = -3.0;  // Ai(-3) < 0
    double hi = -2.0;  // Ai(-2) > 0
    while (hi - lo > 1e-13) {
      const double mid = 0.5 * (lo + hi);
      if (airy_ai(mid) > 0.0) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    return 0.5 * (lo + hi);
  }();
  return zero;
}

double hermite_function(unsigned n, double x) {
  double prev = 0.0;
  double cur = std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * x * x);
  for (unsigned k = 0; k < n; ++k) {
    const double next = std::sqrt(2.0 / (k + 1.0)) * x * cur - std::sqrt(k / (k + 1.0)) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace uncsmear::special
