#include "uncsmear/smearing.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <utility>

#include "uncsmear/error.hpp"
#include "uncsmear/quadrature.hpp"

namespace uncsmear {
namespace {

int index(Side side) { return side == Side::Lower ? 0 : 1; }

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// Root of f on [a, b] given a sign change; plain bisection is enough since
// only a handful of panels per evaluation point have one.
template <class F>
double bisect(F&& f, double a, double fa, double b) {
  for (int i = 0; i < 60 && b - a > 1e-15 * std::max(1.0, std::abs(b)); ++i) {
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    if ((fm > 0.0) == (fa > 0.0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

template <class F>
double golden_min(F&& f, double a, double b) {
  constexpr double r = 0.6180339887498949;
  double c = b - r * (b - a);
  double d = a + r * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int i = 0; i < 80 && b - a > 1e-14 * std::max(1.0, std::abs(b)); ++i) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - r * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + r * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

DensityMeta smeared_meta(const ClassicalOrbit& orbit, const KernelSpec& kernel) {
  DensityMeta meta;
  meta.kind = "smeared";
  meta.model = std::string(to_string(orbit.model()));
  meta.kernel = std::string(to_string(kernel.shape));
  meta.energy = orbit.energy();
  meta.kappa = kernel.kappa;
  return meta;
}

}  // namespace

Smearer::Smearer(ClassicalOrbit orbit, KernelSpec kernel, SmearOptions options)
    : orbit_(std::move(orbit)), kernel_(kernel), options_(options) {
  kernel_.validate();
  if (auto wall = wall_floor(orbit_.model())) kernel_.wall = *wall;
  span_ = orbit_.turning_points().span();
  nodes_[0] = build_nodes(Side::Lower);
  nodes_[1] = build_nodes(Side::Upper);
}

CellGeometry Smearer::cell_on(Side side, double v, double* mass_rate) const {
  const OrbitPoint p = orbit_.at(side, v);
  if (mass_rate) *mass_rate = p.dwell > 0.0 ? orbit_.norm_constant() * p.dwell : 0.0;
  return make_cell(kernel_, p.xi, cell_width(kernel_.kappa, p.eta, span_));
}

CellGeometry Smearer::cell_at(double xi_prime) const {
  const double eta = orbit_.momentum_abs(xi_prime);
  return make_cell(kernel_, xi_prime, cell_width(kernel_.kappa, eta, span_));
}

double Smearer::joint(double xi, double xi_prime) const {
  return kernel_weight(kernel_, xi, cell_at(xi_prime)) * orbit_.density(xi_prime);
}

std::vector<Smearer::Node> Smearer::build_nodes(Side side) const {
  const double extent = orbit_.half_extent(side);
  const bool turning = orbit_.is_turning(side);
  const double min_step = extent * 1e-6;
  const double max_step = extent / 8.0;
  const double f = options_.panel_fraction;
  std::vector<Node> nodes;
  double v = 0.0;
  CellGeometry cell = cell_on(side, v, nullptr);
  while (true) {
    nodes.push_back({v, cell.lo, cell.hi});
    if (v >= extent) break;
    const double jacobian = turning ? 2.0 * v : 1.0;
    double step = jacobian > 0.0 ? f * cell.width / jacobian : max_step;
    step = std::clamp(step, min_step, max_step);
    // Near turning points the width itself changes fast; shrink until no
    // cell edge moves by more than the allowed fraction of a width.
    CellGeometry next;
    double v_next;
    while (true) {
      v_next = std::min(extent, v + step);
      next = cell_on(side, v_next, nullptr);
      const double allowed = f * std::max(std::min(cell.width, next.width), 0.0);
      const double moved = std::max({std::abs(next.lo - cell.lo), std::abs(next.hi - cell.hi),
                                     std::abs(next.center - cell.center)});
      if (moved <= allowed || step <= min_step) break;
      step = std::max(min_step, 0.5 * step);
    }
    v = v_next;
    cell = next;
  }
  insert_edge_extrema(side, nodes);
  return nodes;
}

// The edge search in integrate_half relies on lo(v) and hi(v) being monotone
// on every panel. Edges have kinks where the width clamp engages, and smooth
// extrema elsewhere; both become nodes.
void Smearer::insert_edge_extrema(Side side, std::vector<Node>& nodes) const {
  auto cell_at_v = [&](double v) { return cell_on(side, v, nullptr); };
  std::vector<double> extra;

  const double clamp_eta = 1.0 / (kernel_.kappa * 4.0 * span_);
  auto eta_gap = [&](double v) { return orbit_.at(side, v).eta - clamp_eta; };
  for (std::size_t k = 0; k + 1 < nodes.size(); ++k) {
    const double ga = eta_gap(nodes[k].v);
    const double gb = eta_gap(nodes[k + 1].v);
    if ((ga > 0.0) != (gb > 0.0)) extra.push_back(bisect(eta_gap, nodes[k].v, ga, nodes[k + 1].v));
  }
  auto add_nodes = [&] {
    for (double v : extra) {
      const CellGeometry cell = cell_at_v(v);
      nodes.push_back({v, cell.lo, cell.hi});
    }
    extra.clear();
    std::sort(nodes.begin(), nodes.end(), [](const Node& a, const Node& b) { return a.v < b.v; });
    nodes.erase(std::unique(nodes.begin(), nodes.end(),
                            [](const Node& a, const Node& b) { return a.v == b.v; }),
                nodes.end());
  };
  add_nodes();

  auto refine = [&](double lo_v, double hi_v, bool is_max, bool use_hi) {
    const double sign = is_max ? -1.0 : 1.0;
    extra.push_back(golden_min(
        [&](double v) {
          const CellGeometry c = cell_at_v(v);
          return sign * (use_hi ? c.hi : c.lo);
        },
        lo_v, hi_v));
  };
  for (bool use_hi : {false, true}) {
    auto edge = [use_hi](const Node& n) { return use_hi ? n.hi : n.lo; };
    for (std::size_t k = 0; k + 1 < nodes.size(); ++k) {
      // Extremum strictly inside one panel.
      const double vm = 0.5 * (nodes[k].v + nodes[k + 1].v);
      const CellGeometry mid = cell_at_v(vm);
      const double em = use_hi ? mid.hi : mid.lo;
      const double ea = edge(nodes[k]);
      const double eb = edge(nodes[k + 1]);
      if (em > ea && em > eb) refine(nodes[k].v, nodes[k + 1].v, true, use_hi);
      if (em < ea && em < eb) refine(nodes[k].v, nodes[k + 1].v, false, use_hi);
      // Extremum near a node, seen as a slope sign change across it.
      if (k == 0) continue;
      const double d0 = ea - edge(nodes[k - 1]);
      const double d1 = eb - ea;
      if (d0 == 0.0 || d1 == 0.0 || (d0 > 0.0) == (d1 > 0.0)) continue;
      refine(nodes[k - 1].v, nodes[k + 1].v, d0 > 0.0, use_hi);
    }
  }
  add_nodes();
}

double Smearer::integrate_half(Side side, double xi) const {
  const std::vector<Node>& nodes = nodes_[index(side)];
  auto integrand = [&](double v) {
    double rate = 0.0;
    const CellGeometry cell = cell_on(side, v, &rate);
    return rate > 0.0 ? rate * kernel_weight(kernel_, xi, cell) : 0.0;
  };
  auto lo_minus = [&](double v) { return cell_on(side, v, nullptr).lo - xi; };
  auto hi_minus = [&](double v) { return cell_on(side, v, nullptr).hi - xi; };

  quad::SimpsonOptions opt;
  opt.rel_tol = options_.rel_tol;
  opt.abs_tol = options_.abs_tol;
  opt.max_depth = options_.max_depth;

  double total = 0.0;
  for (std::size_t k = 0; k + 1 < nodes.size(); ++k) {
    const Node& a = nodes[k];
    const Node& b = nodes[k + 1];
    const double fl_a = a.lo - xi;
    const double fl_b = b.lo - xi;
    const double fh_a = a.hi - xi;
    const double fh_b = b.hi - xi;
    if ((fl_a > 0.0 && fl_b > 0.0) || (fh_a < 0.0 && fh_b < 0.0)) continue;

    std::array<double, 4> cuts{a.v, b.v, a.v, a.v};
    std::size_t n_cuts = 2;
    if ((fl_a > 0.0) != (fl_b > 0.0)) cuts[n_cuts++] = bisect(lo_minus, a.v, fl_a, b.v);
    if ((fh_a > 0.0) != (fh_b > 0.0)) cuts[n_cuts++] = bisect(hi_minus, a.v, fh_a, b.v);
    std::sort(cuts.begin(), cuts.begin() + static_cast<std::ptrdiff_t>(n_cuts));

    for (std::size_t i = 0; i + 1 < n_cuts; ++i) {
      const double v0 = cuts[i];
      const double v1 = cuts[i + 1];
      if (!(v1 > v0)) continue;
      const CellGeometry mid = cell_on(side, 0.5 * (v0 + v1), nullptr);
      if (xi < mid.lo || xi > mid.hi) continue;
      total += quad::adaptive_simpson(integrand, v0, v1, opt);
    }
  }
  return total;
}

double Smearer::operator()(double xi) const {
  return integrate_half(Side::Lower, xi) + integrate_half(Side::Upper, xi);
}

double default_grid_step(KernelShape shape) {
  switch (shape) {
    case KernelShape::Box:
      return 5e-4;
    case KernelShape::Triangle:
      return 2.5e-3;
    case KernelShape::Gaussian:
      return 4e-3;
  }
  return 1e-3;
}

namespace {

std::pair<double, double> default_range(const ClassicalOrbit& orbit) {
  const TurningPoints& tp = orbit.turning_points();
  const double margin = 3.0 * 4.0 * tp.span();
  double lo = tp.xi_min - margin;
  if (auto wall = wall_floor(orbit.model())) lo = std::max(lo, *wall);
  return {lo, tp.xi_max + margin};
}

}  // namespace

Grid default_grid(const ClassicalOrbit& orbit, KernelShape shape) {
  const auto [lo, hi] = default_range(orbit);
  const auto n = static_cast<std::size_t>(std::ceil((hi - lo) / default_grid_step(shape))) + 1;
  return Grid(lo, hi, n);
}

Grid default_grid(const ClassicalOrbit& orbit, std::size_t n) {
  const auto [lo, hi] = default_range(orbit);
  return Grid(lo, hi, n);
}

void check_grid_covers(const ClassicalOrbit& orbit, const Grid& grid) {
  const TurningPoints& tp = orbit.turning_points();
  double need_lo = tp.xi_min - 3.0;
  const double need_hi = tp.xi_max + 3.0;
  auto wall = wall_floor(orbit.model());
  if (wall) need_lo = std::max(need_lo, *wall);
  constexpr double slack = 1e-12;
  if (grid.lo() > need_lo + slack || grid.hi() < need_hi - slack || (wall && grid.lo() < *wall)) {
    throw PreconditionError("grid [" + fmt(grid.lo()) + ", " + fmt(grid.hi()) +
                            "] must cover [" + fmt(need_lo) + ", " + fmt(need_hi) +
                            "] and stay inside the physical domain");
  }
}

Density smear_density(const Smearer& smearer, const Grid& grid) {
  check_grid_covers(smearer.orbit(), grid);
  std::vector<double> values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) values[i] = smearer(grid.at(i));
  return Density::from_values(grid, std::move(values), smeared_meta(smearer.orbit(), smearer.kernel()));
}

Density smear_density(ModelId model, const ModelParams& params, const KernelSpec& kernel,
                      double energy, const Grid& grid, const SmearOptions& options) {
  return smear_density(Smearer(ClassicalOrbit(model, params, energy), kernel, options), grid);
}

std::vector<Density> kappa_sweep(ModelId model, const ModelParams& params, KernelShape shape,
                                 std::span<const double> kappas, double energy, const Grid& grid) {
  if (kappas.empty()) throw ParameterError("kappa sweep needs at least one kappa");
  const ClassicalOrbit orbit(model, params, energy);
  std::vector<Density> out;
  out.reserve(kappas.size());
  for (double kappa : kappas) {
    KernelSpec spec{shape, kappa, std::nullopt};
    out.push_back(smear_density(Smearer(orbit, spec), grid));
  }
  return out;
}

Density clipped_classical_density(const ClassicalOrbit& orbit, const Grid& grid) {
  const double h = grid.step();
  std::vector<double> values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double x = grid.at(i);
    values[i] = orbit.mass_between(x - 0.5 * h, x + 0.5 * h) / h;
  }
  DensityMeta meta;
  meta.kind = "classical";
  meta.model = std::string(to_string(orbit.model()));
  meta.energy = orbit.energy();
  return Density::from_values(grid, std::move(values), std::move(meta));
}

Density quantum_density_on_grid(ModelId model, const ModelParams& params, const Grid& grid) {
  std::vector<double> values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) values[i] = quantum_density(model, params, grid.at(i));
  DensityMeta meta;
  meta.kind = "quantum";
  meta.model = std::string(to_string(model));
  return Density::from_values(grid, std::move(values), std::move(meta));
}

}  // namespace uncsmear
