#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "uncsmear/error.hpp"
#include "uncsmear/models.hpp"
#include "uncsmear/special_functions.hpp"

using namespace uncsmear;

namespace {

constexpr double kPi = std::numbers::pi;

struct Case {
  ModelId model;
  ModelParams params;
};

std::vector<Case> all_cases() {
  std::vector<Case> out;
  for (ModelId m : all_models()) out.push_back({m, default_params(m)});
  ModelParams p;
  p.beta = 0.2;
  out.push_back({ModelId::Morse, p});
  p.beta = 5.0;
  out.push_back({ModelId::Morse, p});
  p.beta = 0.5;
  out.push_back({ModelId::SpecialRadial, p});
  return out;
}

}  // namespace

TEST(ModelId, ParsesCaseInsensitivelyWithAliases) {
  EXPECT_EQ(parse_model_id("Harmonic"), ModelId::Harmonic);
  EXPECT_EQ(parse_model_id("OSCILLATOR"), ModelId::Harmonic);
  EXPECT_EQ(parse_model_id("gravity"), ModelId::Bouncer);
  EXPECT_EQ(parse_model_id("Special_Radial"), ModelId::SpecialRadial);
  EXPECT_EQ(parse_model_id("radial"), ModelId::SpecialRadial);
  EXPECT_EQ(parse_model_id("hydrogen"), ModelId::HydrogenS);
  EXPECT_EQ(parse_model_id("HydrogenS"), ModelId::HydrogenS);
  EXPECT_THROW(parse_model_id("pendulum"), ParameterError);
}

TEST(ModelId, RoundTripsThroughItsName) {
  for (ModelId m : all_models()) EXPECT_EQ(parse_model_id(to_string(m)), m);
}

TEST(ModelParams, EnforcesBetaBounds) {
  ModelParams p;
  EXPECT_THROW(validate(ModelId::Morse, p), ParameterError);
  p.beta = 0.125;
  EXPECT_THROW(validate(ModelId::Morse, p), ParameterError);
  p.beta = 0.13;
  EXPECT_NO_THROW(validate(ModelId::Morse, p));
  p.beta = 0.0;
  EXPECT_THROW(validate(ModelId::SpecialRadial, p), ParameterError);
  p.beta = 1.0;
  EXPECT_THROW(validate(ModelId::Harmonic, p), ParameterError);
}

TEST(ModelParams, EnforcesEnergyRange) {
  ModelParams p;
  p.energy_override = 0.0;
  EXPECT_THROW(validate(ModelId::Harmonic, p), EnergyDomainError);
  p.energy_override = 0.1;
  EXPECT_THROW(validate(ModelId::HydrogenS, p), EnergyDomainError);
  ModelParams m = default_params(ModelId::Morse);
  m.energy_override = -0.5;
  EXPECT_THROW(validate(ModelId::Morse, m), EnergyDomainError);
  m.energy_override = -0.1;
  EXPECT_NO_THROW(validate(ModelId::Morse, m));
  EXPECT_THROW(turning_points(ModelId::Morse, default_params(ModelId::Morse), 0.0),
               EnergyDomainError);
}

TEST(GroundEnergy, Values) {
  EXPECT_DOUBLE_EQ(ground_energy(ModelId::Harmonic, {}), 0.5);
  EXPECT_NEAR(ground_energy(ModelId::Bouncer, {}), 2.33810741045976703848919725245, 1e-10);
  EXPECT_EQ(ground_energy(ModelId::Morse, default_params(ModelId::Morse)), -0.25);
  EXPECT_NEAR(ground_energy(ModelId::SpecialRadial, default_params(ModelId::SpecialRadial)),
              2.12310562561766054982140985597, 1e-12);
  EXPECT_DOUBLE_EQ(ground_energy(ModelId::HydrogenS, {}), -0.5);
}

TEST(GroundEnergy, BouncerIsAiryZero) {
  EXPECT_NEAR(special::airy_ai(-ground_energy(ModelId::Bouncer, {})), 0.0, 1e-8);
}

TEST(GroundEnergy, OverrideDoesNotChangeIt) {
  ModelParams p;
  p.energy_override = 3.0;
  EXPECT_DOUBLE_EQ(ground_energy(ModelId::Harmonic, p), 0.5);
  EXPECT_DOUBLE_EQ(resolved_energy(ModelId::Harmonic, p), 3.0);
}

TEST(TurningPoints, Values) {
  auto tp = turning_points(ModelId::Harmonic, {}, 0.5);
  EXPECT_DOUBLE_EQ(tp.xi_min, -1.0);
  EXPECT_DOUBLE_EQ(tp.xi_max, 1.0);
  tp = turning_points(ModelId::Morse, default_params(ModelId::Morse), -0.25);
  EXPECT_NEAR(tp.xi_min, -0.534799996739570370523993264251, 1e-13);
  EXPECT_NEAR(tp.xi_max, 1.22794717729951567994122538571, 1e-13);
  tp = turning_points(ModelId::HydrogenS, {}, -0.5);
  EXPECT_DOUBLE_EQ(tp.xi_min, 0.0);
  EXPECT_DOUBLE_EQ(tp.xi_max, 2.0);
  const auto sr = default_params(ModelId::SpecialRadial);
  tp = turning_points(ModelId::SpecialRadial, sr, ground_energy(ModelId::SpecialRadial, sr));
  EXPECT_NEAR(tp.xi_min, 0.609736326712271513359950808372, 1e-13);
  EXPECT_NEAR(tp.xi_max, 1.64005317739890872328194435334, 1e-13);
  const double eb = ground_energy(ModelId::Bouncer, {});
  tp = turning_points(ModelId::Bouncer, {}, eb);
  EXPECT_EQ(tp.xi_min, 0.0);
  EXPECT_EQ(tp.xi_max, eb);
}

TEST(TurningPoints, MomentumVanishesExceptAtWalls) {
  for (const auto& c : all_cases()) {
    const double e = ground_energy(c.model, c.params);
    const auto tp = turning_points(c.model, c.params, e);
    ASSERT_LT(tp.xi_min, tp.xi_max);
    EXPECT_NEAR(momentum_abs(c.model, c.params, e, tp.xi_max), 0.0, 1e-10) << to_string(c.model);
    const double lo = momentum_abs(c.model, c.params, e, tp.xi_min);
    if (c.model == ModelId::Bouncer || c.model == ModelId::HydrogenS) {
      EXPECT_GT(lo, 0.0);
    } else {
      EXPECT_NEAR(lo, 0.0, 1e-10) << to_string(c.model);
    }
  }
}

TEST(Momentum, Values) {
  EXPECT_DOUBLE_EQ(momentum_abs(ModelId::Harmonic, {}, 0.5, 0.0), 1.0);
  const double eb = ground_energy(ModelId::Bouncer, {});
  EXPECT_NEAR(momentum_abs(ModelId::Bouncer, {}, eb, 0.0), std::sqrt(2.0 * eb), 1e-14);
  EXPECT_NEAR(momentum_abs(ModelId::HydrogenS, {}, -0.5, 1.0), 1.0, 1e-14);
  EXPECT_THROW(momentum_abs(ModelId::Harmonic, {}, 0.5, 1.5), DomainError);
}

TEST(Momentum, MatchesEnergyEquation) {
  // 2(E - V) written out per model, independent of the factored form.
  const double b = 0.5;
  auto morse_v = [b](double x) { return b * (std::exp(-2 * x) - 2 * std::exp(-x)); };
  const ModelParams mp = default_params(ModelId::Morse);
  for (double x : {-0.4, 0.0, 0.6, 1.1}) {
    EXPECT_NEAR(momentum_abs(ModelId::Morse, mp, -0.25, x), std::sqrt(2 * (-0.25 - morse_v(x))), 1e-13);
  }
  const ModelParams sp = default_params(ModelId::SpecialRadial);
  const double es = ground_energy(ModelId::SpecialRadial, sp);
  const auto tp = turning_points(ModelId::SpecialRadial, sp, es);
  for (double x : {0.7, 1.0, 1.5}) {
    const double eta2 = 4.0 * (x * x - tp.xi_min * tp.xi_min) * (tp.xi_max * tp.xi_max - x * x) / (x * x);
    EXPECT_NEAR(momentum_abs(ModelId::SpecialRadial, sp, es, x), std::sqrt(eta2), 1e-12);
  }
}

TEST(ClassicalDensity, Values) {
  EXPECT_NEAR(classical_density(ModelId::Harmonic, {}, 0.5, 0.0), 1.0 / kPi, 1e-15);
  EXPECT_NEAR(classical_norm_constant(ModelId::SpecialRadial, default_params(ModelId::SpecialRadial),
                                      ground_energy(ModelId::SpecialRadial,
                                                    default_params(ModelId::SpecialRadial))),
              1.27323954473516269418973548746, 1e-9);
  EXPECT_NEAR(classical_norm_constant(ModelId::Morse, default_params(ModelId::Morse), -0.25),
              std::sqrt(0.5) / kPi, 1e-14);
  const double eb = ground_energy(ModelId::Bouncer, {});
  EXPECT_NEAR(classical_norm_constant(ModelId::Bouncer, {}, eb), 0.462437210714528116445651524228, 1e-13);
  EXPECT_NEAR(classical_norm_constant(ModelId::HydrogenS, {}, -0.5), 1.0 / kPi, 1e-15);
}

TEST(ClassicalDensity, SingularAtTurningPointsAndUndefinedOutside) {
  EXPECT_THROW(classical_density(ModelId::Harmonic, {}, 0.5, 1.0), SingularityError);
  EXPECT_THROW(classical_density(ModelId::Harmonic, {}, 0.5, -1.0), SingularityError);
  EXPECT_THROW(classical_density(ModelId::Harmonic, {}, 0.5, 1.2), DomainError);
  EXPECT_NO_THROW(classical_density(ModelId::Bouncer, {}, ground_energy(ModelId::Bouncer, {}), 0.0));
}

TEST(ClassicalDensity, MorseNormMatchesClosedFormForSeveralBeta) {
  for (double beta : {0.2, 0.5, 2.0, 5.0}) {
    ModelParams p;
    p.beta = beta;
    const double e = ground_energy(ModelId::Morse, p);
    const auto tp = turning_points(ModelId::Morse, p, e);
    const double inv = oracle::arcsine_midpoint(
        [&](double x) {
          const double eta = momentum_abs(ModelId::Morse, p, e, x);
          return eta > 0.0 ? 1.0 / eta : 0.0;
        },
        tp.xi_min, tp.xi_max, 400000);
    EXPECT_NEAR(1.0 / inv, std::sqrt(-2.0 * e) / kPi, 1e-8) << "beta " << beta;
    EXPECT_NEAR(classical_norm_constant(ModelId::Morse, p, e), std::sqrt(-2.0 * e) / kPi, 1e-12);
  }
}

TEST(ClassicalDensity, NormalizedForEveryModel) {
  for (const auto& c : all_cases()) {
    const double e = ground_energy(c.model, c.params);
    const auto tp = turning_points(c.model, c.params, e);
    const double mass = oracle::arcsine_midpoint(
        [&](double x) {
          if (x <= tp.xi_min || x >= tp.xi_max) return 0.0;
          return classical_density(c.model, c.params, e, x);
        },
        tp.xi_min, tp.xi_max, 400000);
    EXPECT_NEAR(mass, 1.0, 1e-6) << to_string(c.model);
  }
}

TEST(QuantumDensity, Values) {
  EXPECT_NEAR(quantum_density(ModelId::Harmonic, {}, 0.0), 1.0 / std::sqrt(kPi), 1e-15);
  EXPECT_NEAR(quantum_density(ModelId::HydrogenS, {}, 1.0), 4.0 * std::exp(-2.0), 1e-15);
  EXPECT_NEAR(quantum_norm_constant(ModelId::Bouncer, {}), 2.56239519253618564040744128884, 1e-9);
  EXPECT_NEAR(quantum_norm_constant(ModelId::Morse, default_params(ModelId::Morse)),
              std::pow(2.0, std::sqrt(2.0)) / std::tgamma(std::sqrt(2.0)), 1e-9);
  EXPECT_NEAR(quantum_norm_constant(ModelId::SpecialRadial, default_params(ModelId::SpecialRadial)),
              7.88186456546068164874960865394, 1e-8);
  EXPECT_THROW(quantum_density(ModelId::Bouncer, {}, -0.1), DomainError);
  EXPECT_NEAR(quantum_density(ModelId::Bouncer, {}, 0.0), 0.0, 1e-9);
}

TEST(QuantumDensity, NormalizedForEveryModel) {
  for (const auto& c : all_cases()) {
    const auto wall = wall_floor(c.model);
    const double lo = wall ? *wall : -40.0;
    const double mass = oracle::simpson(
        [&](double x) { return quantum_density(c.model, c.params, x); }, lo, 60.0, 400000);
    EXPECT_NEAR(mass, 1.0, 1e-6) << to_string(c.model) << " beta " << c.params.beta.value_or(0);
  }
}

TEST(WallFloor, Values) {
  EXPECT_FALSE(wall_floor(ModelId::Harmonic));
  EXPECT_FALSE(wall_floor(ModelId::Morse));
  EXPECT_EQ(wall_floor(ModelId::Bouncer), 0.0);
  EXPECT_EQ(wall_floor(ModelId::SpecialRadial), 0.0);
  EXPECT_EQ(wall_floor(ModelId::HydrogenS), 0.0);
}

TEST(ClassicalOrbit, HalfParameterizationCarriesTheMass) {
  for (const auto& c : all_cases()) {
    const auto orbit = ClassicalOrbit::at_resolved_energy(c.model, c.params);
    double total = 0.0;
    for (Side side : {Side::Lower, Side::Upper}) {
      const double ext = orbit.half_extent(side);
      total += orbit.norm_constant() *
               oracle::simpson([&](double v) { return orbit.at(side, v).dwell; }, 0.0, ext, 20000);
    }
    EXPECT_NEAR(total, 1.0, 1e-7) << to_string(c.model);
  }
}

TEST(ClassicalOrbit, MassBetweenMatchesQuadrature) {
  const auto orbit = ClassicalOrbit::at_resolved_energy(ModelId::Morse, default_params(ModelId::Morse));
  const double a = -0.2;
  const double b = 0.9;
  const double ref = oracle::simpson([&](double x) { return orbit.density(x); }, a, b, 20000);
  EXPECT_NEAR(orbit.mass_between(a, b), ref, 1e-10);
  EXPECT_NEAR(orbit.mass_between(-10.0, 10.0), 1.0, 1e-12);
  EXPECT_EQ(orbit.mass_between(2.0, 3.0), 0.0);
}

TEST(ClassicalOrbit, ParameterRoundTrip) {
  const auto orbit = ClassicalOrbit::at_resolved_energy(ModelId::HydrogenS, {});
  for (Side side : {Side::Lower, Side::Upper}) {
    for (double f : {0.1, 0.5, 0.9}) {
      const double v = f * orbit.half_extent(side);
      EXPECT_NEAR(orbit.parameter_of(side, orbit.at(side, v).xi), v, 1e-10);
    }
  }
}
