#include "uncsmear/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

#include "uncsmear/error.hpp"
#include "uncsmear/quadrature.hpp"

namespace uncsmear {
namespace {

void require_same_grid(const Density& a, const Density& b) {
  if (!(a.grid == b.grid) || a.values.size() != b.values.size()) {
    throw GridMismatchError("densities are sampled on different grids");
  }
}

double weighted(const Density& dens, auto&& f) {
  std::vector<double> g(dens.values.size());
  for (std::size_t i = 0; i < g.size(); ++i) g[i] = f(dens.grid.at(i)) * dens.values[i];
  return quad::trapezoid(g, dens.grid.step());
}

void append_number(std::string& out, const char* key, double v, bool last = false) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "\"%s\":%.9g", key, v);
  out += buf;
  if (!last) out += ',';
}

}  // namespace

double integrate(const Density& dens) { return quad::trapezoid(dens.values, dens.grid.step()); }

double mean(const Density& dens) {
  const double m = integrate(dens);
  if (m == 0.0) throw ParameterError("moments of a density with zero mass");
  return weighted(dens, [](double x) { return x; }) / m;
}

double variance(const Density& dens) {
  const double mu = mean(dens);
  return weighted(dens, [mu](double x) { return (x - mu) * (x - mu); }) / integrate(dens);
}

double l1_distance(const Density& a, const Density& b) {
  require_same_grid(a, b);
  std::vector<double> d(a.values.size());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = std::abs(a.values[i] - b.values[i]);
  return quad::trapezoid(d, a.grid.step());
}

double linf_distance(const Density& a, const Density& b) {
  require_same_grid(a, b);
  double m = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    m = std::max(m, std::abs(a.values[i] - b.values[i]));
  }
  return m;
}

Scorecard compare(const Density& a, const Density& b) {
  Scorecard card;
  card.l1 = l1_distance(a, b);
  card.linf = linf_distance(a, b);
  card.norm_a = integrate(a);
  card.norm_b = integrate(b);
  if (card.norm_a != 0.0) {
    card.mean = mean(a);
    card.variance = variance(a);
  }
  return card;
}

std::string to_json(const Scorecard& card) {
  std::string out = "{";
  append_number(out, "l1", card.l1);
  append_number(out, "linf", card.linf);
  append_number(out, "mean", card.mean);
  append_number(out, "variance", card.variance);
  append_number(out, "norm_a", card.norm_a);
  append_number(out, "norm_b", card.norm_b, true);
  out += '}';
  return out;
}

}  // namespace uncsmear
