#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "uncsmear/error.hpp"
#include "uncsmear/kernels.hpp"

using namespace uncsmear;

namespace {

KernelSpec spec_of(KernelShape shape, std::optional<double> wall = std::nullopt) {
  KernelSpec s;
  s.shape = shape;
  s.wall = wall;
  return s;
}

double cell_mass(const KernelSpec& spec, const CellGeometry& cell) {
  return oracle::simpson([&](double x) { return kernel_weight(spec, x, cell); }, cell.lo, cell.hi,
                         20000);
}

}  // namespace

TEST(KernelShape, Parse) {
  EXPECT_EQ(parse_kernel_shape("BOX"), KernelShape::Box);
  EXPECT_EQ(parse_kernel_shape("step"), KernelShape::Box);
  EXPECT_EQ(parse_kernel_shape("Triangle"), KernelShape::Triangle);
  EXPECT_EQ(parse_kernel_shape("gauss"), KernelShape::Gaussian);
  EXPECT_THROW(parse_kernel_shape("lorentz"), ParameterError);
  for (auto s : {KernelShape::Box, KernelShape::Triangle, KernelShape::Gaussian}) {
    EXPECT_EQ(parse_kernel_shape(to_string(s)), s);
  }
}

TEST(KernelSpec, Validate) {
  KernelSpec s;
  EXPECT_EQ(s.kappa, 1.7);
  EXPECT_NO_THROW(s.validate());
  s.kappa = 0.0;
  EXPECT_THROW(s.validate(), ParameterError);
  s.kappa = std::nan("");
  EXPECT_THROW(s.validate(), ParameterError);
  EXPECT_EQ(kDefaultKappa2D, 1.8);
}

TEST(CellWidth, Examples) {
  EXPECT_NEAR(cell_width(1.7, 1.0, 2.0), 0.588235294117647, 1e-12);
  EXPECT_EQ(cell_width(1.7, 0.0, 2.0), 8.0);
  EXPECT_EQ(cell_width(2.0, 0.5, 10.0), 1.0);
  EXPECT_EQ(cell_width(1.0, std::numeric_limits<double>::infinity(), 1.0), 0.0);
}

TEST(KernelWeight, BoxFreeSpace) {
  const auto spec = spec_of(KernelShape::Box);
  const auto cell = make_cell(spec, 0.3, 0.5);
  EXPECT_EQ(kernel_weight(spec, 0.3, cell), 2.0);
  EXPECT_EQ(kernel_weight(spec, 0.5, cell), 2.0);
  EXPECT_EQ(kernel_weight(spec, 0.6, cell), 0.0);
  EXPECT_EQ(kernel_weight(spec, 0.0, cell), 0.0);
}

TEST(KernelWeight, TriangleApexAndSupport) {
  const auto spec = spec_of(KernelShape::Triangle);
  const auto cell = make_cell(spec, 0.0, 1.0);
  EXPECT_DOUBLE_EQ(kernel_weight(spec, 0.0, cell), 1.0);
  EXPECT_DOUBLE_EQ(kernel_weight(spec, 0.5, cell), 0.5);
  EXPECT_EQ(cell.lo, -1.0);
  EXPECT_EQ(cell.hi, 1.0);
  EXPECT_EQ(kernel_weight(spec, 1.01, cell), 0.0);
}

TEST(KernelWeight, GaussianPrefactorDoublesAtWall) {
  const double w = 0.7;
  const auto free_cell = make_cell(spec_of(KernelShape::Gaussian), 0.0, w);
  const auto wall_cell = make_cell(spec_of(KernelShape::Gaussian, 0.0), 0.0, w);
  const double free_peak = std::sqrt(2.0 / std::numbers::pi) / w;
  EXPECT_NEAR(kernel_weight(spec_of(KernelShape::Gaussian), 0.0, free_cell), free_peak, 1e-14);
  EXPECT_NEAR(kernel_weight(spec_of(KernelShape::Gaussian, 0.0), 0.0, wall_cell),
              2.0 * std::sqrt(2.0) / (std::sqrt(std::numbers::pi) * w), 1e-13);
  EXPECT_EQ(kernel_weight(spec_of(KernelShape::Gaussian, 0.0), -0.01, wall_cell), 0.0);
}

TEST(KernelWeight, BoxTruncatedByWall) {
  const auto spec = spec_of(KernelShape::Box, 0.0);
  const auto cell = make_cell(spec, 0.1, 0.5);
  EXPECT_EQ(cell.lo, 0.0);
  EXPECT_DOUBLE_EQ(cell.hi, 0.35);
  EXPECT_NEAR(kernel_weight(spec, 0.2, cell), 1.0 / 0.35, 1e-12);
  EXPECT_EQ(kernel_weight(spec, -0.05, cell), 0.0);
}

TEST(KernelWeight, TriangleWallMatchesClosedFormMass) {
  for (double center : {0.0, 0.2, 0.7, 1.5}) {
    for (double w : {0.3, 1.0, 2.5}) {
      const auto spec = spec_of(KernelShape::Triangle, 0.0);
      const auto cell = make_cell(spec, center, w);
      const double raw = oracle::raw_mass(KernelShape::Triangle, center, w, 0.0);
      EXPECT_NEAR(kernel_weight(spec, center, cell), w / raw, 1e-12) << center << " " << w;
    }
  }
}

TEST(KernelWeight, WallsFarBelowChangeNothing) {
  for (auto shape : {KernelShape::Box, KernelShape::Triangle, KernelShape::Gaussian}) {
    const auto free_spec = spec_of(shape);
    const auto wall_spec = spec_of(shape, -100.0);
    const auto a = make_cell(free_spec, 1.0, 0.8);
    const auto b = make_cell(wall_spec, 1.0, 0.8);
    for (double x = -4.0; x <= 6.0; x += 0.013) {
      EXPECT_NEAR(kernel_weight(free_spec, x, a), kernel_weight(wall_spec, x, b), 1e-12);
    }
  }
}

TEST(KernelWeight, GaussianTailAtOneWidth) {
  const auto spec = spec_of(KernelShape::Gaussian);
  const auto cell = make_cell(spec, 2.0, 0.4);
  const double peak = kernel_weight(spec, 2.0, cell);
  EXPECT_NEAR(kernel_weight(spec, 2.4, cell) / peak, std::exp(-2.0), 1e-14);
  EXPECT_NEAR(kernel_weight(spec, 1.6, cell) / peak, std::exp(-2.0), 1e-14);
}

TEST(KernelWeight, GaussianCutAtSixWidths) {
  const auto spec = spec_of(KernelShape::Gaussian);
  const auto cell = make_cell(spec, 0.0, 1.0);
  EXPECT_EQ(cell.lo, -6.0);
  EXPECT_EQ(cell.hi, 6.0);
  EXPECT_EQ(kernel_weight(spec, 6.01, cell), 0.0);
}

TEST(KernelWeight, UnitMassAgainstOracle) {
  for (auto shape : {KernelShape::Box, KernelShape::Triangle, KernelShape::Gaussian}) {
    for (std::optional<double> wall : {std::optional<double>{}, std::optional<double>{0.0}}) {
      for (double center : {0.05, 0.4, 2.0}) {
        const auto spec = spec_of(shape, wall);
        const auto cell = make_cell(spec, center, 0.9);
        EXPECT_NEAR(cell_mass(spec, cell), 1.0, 1e-9) << to_string(shape) << " " << center;
        // Pointwise against the independent normalization.
        const double x = center + 0.1;
        EXPECT_NEAR(kernel_weight(spec, x, cell),
                    oracle::raw_kernel(shape, x - center, 0.9) /
                        oracle::raw_mass(shape, center, 0.9, wall),
                    1e-12);
      }
    }
  }
}

TEST(KernelWeight, CellEntirelyBelowWallHasNoWeight) {
  for (auto shape : {KernelShape::Box, KernelShape::Triangle, KernelShape::Gaussian}) {
    const auto spec = spec_of(shape, 10.0);
    const auto cell = make_cell(spec, 0.0, 0.5);
    EXPECT_EQ(cell.scale, 0.0);
    EXPECT_EQ(kernel_weight(spec, 10.0, cell), 0.0);
  }
}
