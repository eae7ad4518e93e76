#include "uncsmear/models.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>
#include <utility>

#include "uncsmear/error.hpp"
#include "uncsmear/quadrature.hpp"
#include "uncsmear/special_functions.hpp"

namespace uncsmear {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::array kModels{ModelId::Harmonic, ModelId::Bouncer, ModelId::Morse,
                             ModelId::SpecialRadial, ModelId::HydrogenS};

std::string describe(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

bool needs_beta(ModelId model) {
  return model == ModelId::Morse || model == ModelId::SpecialRadial;
}

double beta_of(const ModelParams& params) { return params.beta.value(); }

// Immutable-after-insert memo for normalization constants. Entries are only
// ever added, never changed, so readers see stable values.
class ConstantCache {
 public:
  template <class Compute>
  double get(int tag, double a, double b, Compute&& compute) {
    const Key key{tag, a, b};
    {
      std::lock_guard lock(mutex_);
      if (auto it = values_.find(key); it != values_.end()) return it->second;
    }
    const double value = compute();
    std::lock_guard lock(mutex_);
    return values_.emplace(key, value).first->second;
  }

 private:
  using Key = std::tuple<int, double, double>;
  std::mutex mutex_;
  std::map<Key, double> values_;
};

ConstantCache& cache() {
  static ConstantCache instance;
  return instance;
}

// Integral of a smooth unimodal nonnegative integrand over [lo, hi], split
// into panels so the coarse Simpson estimate never skips the peak.
template <class F>
double integrate_panels(F&& f, double lo, double hi, double panel_width) {
  const int panels = std::max(1, static_cast<int>(std::ceil((hi - lo) / panel_width)));
  const double w = (hi - lo) / panels;
  quad::SimpsonOptions opt;
  opt.rel_tol = 1e-12;
  opt.abs_tol = 1e-16;
  opt.max_depth = 30;
  double total = 0.0;
  for (int i = 0; i < panels; ++i) {
    total += quad::adaptive_simpson(f, lo + i * w, lo + (i + 1) * w, opt);
  }
  return total;
}

double bouncer_level() { return -special::airy_ai_first_zero(); }

double bouncer_quantum_unnormalized(double xi) {
  const double ai = special::airy_ai(std::cbrt(2.0) * xi - bouncer_level());
  return ai * ai;
}

double morse_lambda(double beta) { return std::sqrt(2.0 * beta); }

double morse_ground(double beta) { return 0.5 * (0.5 - std::sqrt(2.0 * beta)); }

double morse_quantum_log(double beta, double xi) {
  const double c = std::sqrt(-2.0 * morse_ground(beta));
  return -2.0 * morse_lambda(beta) * std::exp(-xi) - 2.0 * c * xi;
}

double radial_power(double beta) { return 1.0 + std::sqrt(1.0 + 8.0 * beta); }

double radial_quantum_log(double beta, double xi) {
  return radial_power(beta) * std::log(xi) - beta * xi * xi;
}

double compute_quantum_norm(ModelId model, const ModelParams& params) {
  switch (model) {
    case ModelId::Harmonic:
      return 1.0 / std::sqrt(kPi);
    case ModelId::HydrogenS:
      return 4.0;
    case ModelId::Bouncer: {
      const double hi = (16.0 + bouncer_level()) / std::cbrt(2.0);
      return 1.0 / integrate_panels(bouncer_quantum_unnormalized, 0.0, hi, 0.25);
    }
    case ModelId::Morse: {
      const double beta = beta_of(params);
      const double c = std::sqrt(-2.0 * morse_ground(beta));
      const double peak = std::log(morse_lambda(beta) / c);
      const double lo = peak - (std::log(40.0 / c) + 3.0);
      const double hi = peak + 25.0 / c;
      auto f = [beta](double xi) { return std::exp(morse_quantum_log(beta, xi)); };
      return 1.0 / integrate_panels(f, lo, hi, std::max(0.1, (hi - lo) / 2000.0));
    }
    case ModelId::SpecialRadial: {
      const double beta = beta_of(params);
      const double p = radial_power(beta);
      const double peak = std::sqrt(p / (2.0 * beta));
      const double hi = peak + std::sqrt(60.0 / beta);
      auto f = [beta](double xi) {
        return xi > 0.0 ? std::exp(radial_quantum_log(beta, xi)) : 0.0;
      };
      return 1.0 / integrate_panels(f, 0.0, hi, std::max(0.02, hi / 2000.0));
    }
  }
  return 1.0;
}

}  // namespace

std::span<const ModelId> all_models() { return kModels; }

std::string_view to_string(ModelId model) {
  switch (model) {
    case ModelId::Harmonic:
      return "harmonic";
    case ModelId::Bouncer:
      return "bouncer";
    case ModelId::Morse:
      return "morse";
    case ModelId::SpecialRadial:
      return "special-radial";
    case ModelId::HydrogenS:
      return "hydrogen-s";
  }
  return "unknown";
}

ModelId parse_model_id(std::string_view name) {
  std::string key;
  for (char c : name) {
    if (c == '-' || c == '_' || c == ' ') continue;
    key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  static const std::array<std::pair<std::string_view, ModelId>, 12> names{{
      {"harmonic", ModelId::Harmonic},
      {"oscillator", ModelId::Harmonic},
      {"bouncer", ModelId::Bouncer},
      {"gravity", ModelId::Bouncer},
      {"grav", ModelId::Bouncer},
      {"morse", ModelId::Morse},
      {"specialradial", ModelId::SpecialRadial},
      {"radial", ModelId::SpecialRadial},
      {"bmw", ModelId::SpecialRadial},
      {"hydrogens", ModelId::HydrogenS},
      {"hydrogen", ModelId::HydrogenS},
      {"h1s", ModelId::HydrogenS},
  }};
  for (const auto& [n, id] : names) {
    if (key == n) return id;
  }
  throw ParameterError("unknown model '" + std::string(name) +
                       "'; expected one of harmonic, bouncer, morse, special-radial, hydrogen-s");
}

ModelParams default_params(ModelId model) {
  ModelParams p;
  if (model == ModelId::Morse) p.beta = 0.5;
  if (model == ModelId::SpecialRadial) p.beta = 2.0;
  return p;
}

void validate(ModelId model, const ModelParams& params) {
  const std::string name(to_string(model));
  if (needs_beta(model)) {
    if (!params.beta) throw ParameterError(name + " requires beta");
    const double beta = *params.beta;
    if (!std::isfinite(beta)) throw ParameterError(name + ": beta must be finite");
    if (model == ModelId::Morse && !(beta > 0.125)) {
      throw ParameterError("morse: beta must be greater than 1/8 (got " + describe(beta) + ")");
    }
    if (model == ModelId::SpecialRadial && !(beta > 0.0)) {
      throw ParameterError("special-radial: beta must be positive (got " + describe(beta) + ")");
    }
  } else if (params.beta) {
    throw ParameterError(name + " takes no beta parameter");
  }
  if (params.energy_override) check_energy(model, params, *params.energy_override);
}

void check_energy(ModelId model, const ModelParams& params, double energy) {
  const std::string name(to_string(model));
  if (!std::isfinite(energy)) throw EnergyDomainError(name + ": energy must be finite");
  switch (model) {
    case ModelId::Harmonic:
    case ModelId::Bouncer:
    case ModelId::SpecialRadial:
      if (!(energy > 0.0)) {
        throw EnergyDomainError(name + ": energy must be > 0 (got " + describe(energy) + ")");
      }
      break;
    case ModelId::Morse: {
      const double beta = beta_of(params);
      if (!(energy > -beta && energy < 0.0)) {
        throw EnergyDomainError("morse: energy must satisfy -beta < E < 0 (got " +
                                describe(energy) + ")");
      }
      break;
    }
    case ModelId::HydrogenS:
      if (!(energy < 0.0)) {
        throw EnergyDomainError("hydrogen-s: energy must be < 0 (got " + describe(energy) + ")");
      }
      break;
  }
}

double ground_energy(ModelId model, const ModelParams& params) {
  ModelParams shape = params;
  shape.energy_override.reset();
  validate(model, shape);
  switch (model) {
    case ModelId::Harmonic:
      return 0.5;
    case ModelId::Bouncer:
      return bouncer_level();
    case ModelId::Morse:
      return morse_ground(beta_of(params));
    case ModelId::SpecialRadial: {
      const double beta = beta_of(params);
      const double r = std::sqrt(2.0 * beta);
      return r * (1.0 + std::sqrt(0.25 + 2.0 * beta) - r);
    }
    case ModelId::HydrogenS:
      return -0.5;
  }
  return 0.0;
}

double resolved_energy(ModelId model, const ModelParams& params) {
  validate(model, params);
  return params.energy_override ? *params.energy_override : ground_energy(model, params);
}

TurningPoints turning_points(ModelId model, const ModelParams& params, double energy) {
  validate(model, params);
  check_energy(model, params, energy);
  switch (model) {
    case ModelId::Harmonic: {
      const double a = std::sqrt(2.0 * energy);
      return {-a, a};
    }
    case ModelId::Bouncer:
      return {0.0, energy};
    case ModelId::Morse: {
      const double s = std::sqrt(1.0 + energy / beta_of(params));
      return {-std::log1p(s), -std::log1p(-s)};
    }
    case ModelId::SpecialRadial: {
      const double q = energy / (4.0 * beta_of(params));
      return {std::sqrt(1.0 + q) - std::sqrt(q), std::sqrt(1.0 + q) + std::sqrt(q)};
    }
    case ModelId::HydrogenS:
      return {0.0, -1.0 / energy};
  }
  return {};
}

std::optional<double> wall_floor(ModelId model) {
  switch (model) {
    case ModelId::Bouncer:
    case ModelId::SpecialRadial:
    case ModelId::HydrogenS:
      return 0.0;
    case ModelId::Harmonic:
    case ModelId::Morse:
      return std::nullopt;
  }
  return std::nullopt;
}

double quantum_norm_constant(ModelId model, const ModelParams& params) {
  ModelParams shape = params;
  shape.energy_override.reset();
  validate(model, shape);
  const double beta = shape.beta.value_or(0.0);
  return cache().get(100 + static_cast<int>(model), beta, 0.0,
                     [&] { return compute_quantum_norm(model, shape); });
}

double quantum_density(ModelId model, const ModelParams& params, double xi) {
  if (auto wall = wall_floor(model); wall && xi < *wall) {
    throw DomainError(std::string(to_string(model)) + ": quantum density undefined below the wall (xi = " +
                      describe(xi) + ")");
  }
  if (!std::isfinite(xi)) throw DomainError("quantum density: xi must be finite");
  const double nq = quantum_norm_constant(model, params);
  switch (model) {
    case ModelId::Harmonic:
      return nq * std::exp(-xi * xi);
    case ModelId::Bouncer:
      return nq * bouncer_quantum_unnormalized(xi);
    case ModelId::Morse:
      return nq * std::exp(morse_quantum_log(beta_of(params), xi));
    case ModelId::SpecialRadial:
      return xi > 0.0 ? nq * std::exp(radial_quantum_log(beta_of(params), xi)) : 0.0;
    case ModelId::HydrogenS:
      return nq * xi * xi * std::exp(-2.0 * xi);
  }
  return 0.0;
}

double momentum_abs(ModelId model, const ModelParams& params, double energy, double xi) {
  return ClassicalOrbit(model, params, energy).momentum_abs(xi);
}

double classical_density(ModelId model, const ModelParams& params, double energy, double xi) {
  return ClassicalOrbit(model, params, energy).density(xi);
}

double classical_norm_constant(ModelId model, const ModelParams& params, double energy) {
  return ClassicalOrbit(model, params, energy).norm_constant();
}

// ---------------------------------------------------------------------------
// ClassicalOrbit

ClassicalOrbit::ClassicalOrbit(ModelId model, ModelParams params, double energy)
    : model_(model), params_(std::move(params)), energy_(energy) {
  tp_ = uncsmear::turning_points(model_, params_, energy_);
  lower_turning_ = !(model_ == ModelId::Bouncer || model_ == ModelId::HydrogenS);
  upper_turning_ = true;
  if (model_ == ModelId::Morse) morse_s_ = std::sqrt(1.0 + energy_ / beta_of(params_));

  switch (model_) {
    case ModelId::Harmonic:
      norm_c_ = 1.0 / kPi;
      break;
    case ModelId::Bouncer:
      norm_c_ = 1.0 / std::sqrt(2.0 * tp_.xi_max);
      break;
    case ModelId::Morse:
      norm_c_ = std::sqrt(-2.0 * energy_) / kPi;
      break;
    case ModelId::HydrogenS:
      norm_c_ = std::pow(-2.0 * energy_, 1.5) / kPi;
      break;
    case ModelId::SpecialRadial: {
      // No closed form is used: N_c comes from normalizing 1/|eta| numerically.
      norm_c_ = cache().get(200, beta_of(params_), energy_, [this] {
        quad::SimpsonOptions opt;
        opt.rel_tol = 1e-12;
        opt.abs_tol = 1e-16;
        opt.max_depth = 30;
        double total = 0.0;
        for (Side side : {Side::Lower, Side::Upper}) {
          const double ext = half_extent(side);
          constexpr int kPanels = 16;
          for (int i = 0; i < kPanels; ++i) {
            total += quad::adaptive_simpson(
                [&](double v) { return at(side, v).dwell; }, ext * i / kPanels,
                ext * (i + 1) / kPanels, opt);
          }
        }
        return 1.0 / total;
      });
      break;
    }
  }
}

ClassicalOrbit ClassicalOrbit::at_resolved_energy(ModelId model, const ModelParams& params) {
  return ClassicalOrbit(model, params, resolved_energy(model, params));
}

bool ClassicalOrbit::is_turning(Side side) const {
  return side == Side::Lower ? lower_turning_ : upper_turning_;
}

// |eta|^2 divided by the turning-point factors (xi - xi_min), (xi_max - xi).
double ClassicalOrbit::reduced_momentum_sq(double xi, double d_lo, double d_hi) const {
  switch (model_) {
    case ModelId::Harmonic:
      return 1.0;
    case ModelId::Bouncer:
      return 2.0;
    case ModelId::Morse: {
      // 2 beta (1 + s - y)(y - 1 + s), y = exp(-xi), written via the offsets.
      const double lo = d_lo > 0.0 ? -std::expm1(-d_lo) / d_lo : 1.0;
      const double hi = d_hi > 0.0 ? std::expm1(d_hi) / d_hi : 1.0;
      return -2.0 * energy_ * lo * hi;
    }
    case ModelId::SpecialRadial: {
      const double beta = beta_of(params_);
      return 2.0 * beta * (xi + tp_.xi_max) * (xi + tp_.xi_min) / (xi * xi);
    }
    case ModelId::HydrogenS:
      return d_lo > 0.0 ? -2.0 * energy_ / d_lo : kInf;
  }
  return 0.0;
}

double ClassicalOrbit::momentum_abs(double xi) const {
  if (!(xi >= tp_.xi_min && xi <= tp_.xi_max)) {
    throw DomainError(std::string(to_string(model_)) + ": xi = " + describe(xi) +
                      " outside the classical region [" + describe(tp_.xi_min) + ", " +
                      describe(tp_.xi_max) + "]");
  }
  const double d_lo = xi - tp_.xi_min;
  const double d_hi = tp_.xi_max - xi;
  double sq = reduced_momentum_sq(xi, d_lo, d_hi);
  if (std::isinf(sq)) return kInf;
  if (lower_turning_) sq *= d_lo;
  if (upper_turning_) sq *= d_hi;
  return std::sqrt(std::max(sq, 0.0));
}

double ClassicalOrbit::density(double xi) const {
  const double eta = momentum_abs(xi);
  if (eta == 0.0) {
    throw SingularityError(std::string(to_string(model_)) +
                           ": classical density diverges at the turning point xi = " + describe(xi));
  }
  return norm_c_ / eta;
}

double ClassicalOrbit::half_extent(Side side) const {
  const double half = 0.5 * tp_.span();
  return is_turning(side) ? std::sqrt(half) : half;
}

OrbitPoint ClassicalOrbit::at(Side side, double v) const {
  const bool subst = is_turning(side);
  const double span = tp_.span();
  const double d = subst ? v * v : v;
  OrbitPoint p;
  double d_lo;
  double d_hi;
  if (side == Side::Lower) {
    d_lo = d;
    d_hi = span - d;
    p.xi = tp_.xi_min + d;
  } else {
    d_hi = d;
    d_lo = span - d;
    p.xi = tp_.xi_max - d;
  }
  const double reduced = reduced_momentum_sq(p.xi, d_lo, d_hi);
  if (std::isinf(reduced)) {
    p.eta = kInf;
    p.dwell = 0.0;
    return p;
  }
  // Factor belonging to the opposite endpoint.
  double other = reduced;
  if (side == Side::Lower && upper_turning_) other *= d_hi;
  if (side == Side::Upper && lower_turning_) other *= d_lo;
  if (subst) {
    const double root = std::sqrt(other);
    p.eta = v * root;
    p.dwell = 2.0 / root;
  } else {
    p.eta = std::sqrt(other);
    p.dwell = p.eta > 0.0 ? 1.0 / p.eta : kInf;
  }
  return p;
}

double ClassicalOrbit::parameter_of(Side side, double xi) const {
  const double half = 0.5 * tp_.span();
  double d = side == Side::Lower ? xi - tp_.xi_min : tp_.xi_max - xi;
  d = std::clamp(d, 0.0, half);
  return is_turning(side) ? std::sqrt(d) : d;
}

double ClassicalOrbit::mass_between(double a, double b) const {
  if (!(b > a)) return 0.0;
  const double mid = tp_.midpoint();
  quad::SimpsonOptions opt;
  opt.rel_tol = 1e-10;
  opt.abs_tol = 1e-15;
  opt.max_depth = 30;
  double total = 0.0;
  // Lower half covers [xi_min, mid], upper half [mid, xi_max].
  if (a < mid && b > tp_.xi_min) {
    const double v0 = parameter_of(Side::Lower, a);
    const double v1 = parameter_of(Side::Lower, std::min(b, mid));
    total += quad::adaptive_simpson([&](double v) { return at(Side::Lower, v).dwell; }, v0, v1, opt);
  }
  if (b > mid && a < tp_.xi_max) {
    const double v0 = parameter_of(Side::Upper, b);
    const double v1 = parameter_of(Side::Upper, std::max(a, mid));
    total += quad::adaptive_simpson([&](double v) { return at(Side::Upper, v).dwell; }, v0, v1, opt);
  }
  return norm_c_ * total;
}

}  // namespace uncsmear
