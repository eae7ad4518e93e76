#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace uncsmear {

/// The five one-dimensional bound systems, all in dimensionless variables.
enum class ModelId { Harmonic, Bouncer, Morse, SpecialRadial, HydrogenS };

std::span<const ModelId> all_models();
std::string_view to_string(ModelId model);

/// Case-insensitive; accepts the canonical names plus a few aliases
/// ("oscillator", "gravity", "radial", "hydrogen"). Throws ParameterError.
ModelId parse_model_id(std::string_view name);

/// Shape parameter and optional energy for a model.
///
/// `beta` is required for Morse (beta > 1/8) and SpecialRadial (beta > 0)
/// and must be absent otherwise. `energy_override` replaces the quantum
/// ground energy for the classical motion; it has to lie strictly inside the
/// model's bound-state range.
struct ModelParams {
  std::optional<double> beta;
  std::optional<double> energy_override;
};

/// Parameters used throughout the figures: Morse beta = 1/2, SpecialRadial beta = 2.
ModelParams default_params(ModelId model);

/// Throws ParameterError or EnergyDomainError naming the violated bound.
void validate(ModelId model, const ModelParams& params);

struct TurningPoints {
  double xi_min = 0.0;
  double xi_max = 0.0;

  double span() const { return xi_max - xi_min; }
  double midpoint() const { return 0.5 * (xi_min + xi_max); }
};

double ground_energy(ModelId model, const ModelParams& params);

/// energy_override when present, ground energy otherwise.
double resolved_energy(ModelId model, const ModelParams& params);

/// Throws EnergyDomainError when E is not a bound-state energy of the model.
void check_energy(ModelId model, const ModelParams& params, double energy);

TurningPoints turning_points(ModelId model, const ModelParams& params, double energy);

/// |eta(xi)| for xi in [xi_min, xi_max]; DomainError outside. HydrogenS
/// returns +inf at xi = 0.
double momentum_abs(ModelId model, const ModelParams& params, double energy, double xi);

/// P_Cl(xi) = N_c / |eta(xi)|. SingularityError at zero-momentum turning
/// points, DomainError outside the classical region.
double classical_density(ModelId model, const ModelParams& params, double energy, double xi);

/// N_c of P_Cl = N_c / |eta|.
double classical_norm_constant(ModelId model, const ModelParams& params, double energy);

/// Ground-state quantum density. DomainError for xi below a wall.
double quantum_density(ModelId model, const ModelParams& params, double xi);

/// N_q multiplying the unnormalized ground-state density.
double quantum_norm_constant(ModelId model, const ModelParams& params);

/// Hard floor of the physical domain (0 for Bouncer, SpecialRadial,
/// HydrogenS), absent for Harmonic and Morse.
std::optional<double> wall_floor(ModelId model);

enum class Side { Lower, Upper };

/// A point of the half-orbit parameterization.
///
/// `dwell` is |d xi / d v| / |eta|, so that N_c * dwell dv is the classical
/// probability of the parameter interval dv. It stays bounded at turning
/// points.
struct OrbitPoint {
  double xi = 0.0;
  double eta = 0.0;
  double dwell = 0.0;
};

/// Classical motion of one model at a fixed energy.
///
/// Each half of the classical region (endpoint to midpoint) is
/// parameterized by v in [0, half_extent(side)]: xi = endpoint +- v^2 when
/// the endpoint is a zero-momentum turning point, xi = endpoint +- v at a
/// wall. The square-root substitution removes the 1/sqrt divergence of P_Cl.
///
/// |eta|^2 is kept in factored form, reduced(xi) * (xi - xi_min) * (xi_max -
/// xi) with the factor dropped at walls, so momenta near turning points are
/// computed without cancellation.
class ClassicalOrbit {
 public:
  ClassicalOrbit(ModelId model, ModelParams params, double energy);

  /// The orbit at resolved_energy(model, params).
  static ClassicalOrbit at_resolved_energy(ModelId model, const ModelParams& params);

  ModelId model() const { return model_; }
  const ModelParams& params() const { return params_; }
  double energy() const { return energy_; }
  const TurningPoints& turning_points() const { return tp_; }
  double norm_constant() const { return norm_c_; }

  /// True when the momentum vanishes at that endpoint (no wall).
  bool is_turning(Side side) const;

  double momentum_abs(double xi) const;
  double density(double xi) const;

  double half_extent(Side side) const;
  OrbitPoint at(Side side, double v) const;

  /// Parameter v of position xi on the given half (xi clamped into the half).
  double parameter_of(Side side, double xi) const;

  /// Classical probability of [a, b] (clipped to the classical region).
  double mass_between(double a, double b) const;

 private:
  double reduced_momentum_sq(double xi, double d_lo, double d_hi) const;

  ModelId model_;
  ModelParams params_;
  double energy_;
  TurningPoints tp_;
  bool lower_turning_ = true;
  bool upper_turning_ = true;
  double norm_c_ = 1.0;
  // Morse: s = sqrt(1 + E / beta). SpecialRadial: nothing extra.
  double morse_s_ = 0.0;
};

}  // namespace uncsmear
