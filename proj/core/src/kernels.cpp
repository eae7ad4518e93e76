#include "uncsmear/kernels.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "uncsmear/error.hpp"

namespace uncsmear {
namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

// Mass of the unit Gaussian with sigma = width / 2 over [center + a, center + b].
double gaussian_mass(double a, double b, double width) {
  const double za = kSqrt2 * a / width;
  const double zb = kSqrt2 * b / width;
  // erfc keeps precision when both limits sit in the same tail.
  if (za >= 0.0) return 0.5 * (std::erfc(za) - std::erfc(zb));
  if (zb <= 0.0) return 0.5 * (std::erfc(-zb) - std::erfc(-za));
  return 0.5 * (std::erf(zb) - std::erf(za));
}

}  // namespace

std::string_view to_string(KernelShape shape) {
  switch (shape) {
    case KernelShape::Box:
      return "box";
    case KernelShape::Triangle:
      return "triangle";
    case KernelShape::Gaussian:
      return "gaussian";
  }
  return "unknown";
}

KernelShape parse_kernel_shape(std::string_view name) {
  std::string key;
  for (char c : name) key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (key == "box" || key == "step") return KernelShape::Box;
  if (key == "triangle") return KernelShape::Triangle;
  if (key == "gaussian" || key == "gauss") return KernelShape::Gaussian;
  throw ParameterError("unknown kernel '" + std::string(name) +
                       "'; expected one of box, triangle, gaussian");
}

void KernelSpec::validate() const {
  if (!(std::isfinite(kappa) && kappa > 0.0)) {
    throw ParameterError("kappa must be finite and > 0");
  }
  if (wall && !std::isfinite(*wall)) throw ParameterError("kernel wall must be finite");
}

double cell_width(double kappa, double eta, double domain_span) {
  const double cap = 4.0 * domain_span;
  const double w = 1.0 / (kappa * eta);
  return w < cap ? w : cap;
}

CellGeometry make_cell(const KernelSpec& spec, double center, double width) {
  CellGeometry cell;
  cell.center = center;
  cell.width = width;
  if (!(width > 0.0)) return cell;

  switch (spec.shape) {
    case KernelShape::Box: {
      cell.lo = center - 0.5 * width;
      cell.hi = center + 0.5 * width;
      if (spec.wall) cell.lo = std::max(cell.lo, *spec.wall);
      const double len = cell.hi - cell.lo;
      cell.scale = len > 0.0 ? 1.0 / len : 0.0;
      break;
    }
    case KernelShape::Triangle: {
      cell.lo = center - width;
      cell.hi = center + width;
      double mass = width * width;
      if (spec.wall && *spec.wall > cell.lo) {
        const double a = *spec.wall - center;
        cell.lo = *spec.wall;
        if (a <= 0.0) {
          mass = width * width - 0.5 * (width + a) * (width + a);
        } else {
          mass = a < width ? 0.5 * (width - a) * (width - a) : 0.0;
        }
      }
      cell.scale = mass > 0.0 ? 1.0 / mass : 0.0;
      break;
    }
    case KernelShape::Gaussian: {
      const double reach = kGaussianCutoff * width;
      cell.lo = center - reach;
      cell.hi = center + reach;
      // Untruncated cells lose erfc(6 sqrt 2) ~ 1e-33 of their mass: none in double.
      double mass = 1.0;
      if (spec.wall && *spec.wall > cell.lo) {
        cell.lo = *spec.wall;
        mass = cell.lo < cell.hi ? gaussian_mass(cell.lo - center, cell.hi - center, width) : 0.0;
      }
      cell.scale = mass > 0.0 ? std::sqrt(2.0 / std::numbers::pi) / (width * mass) : 0.0;
      break;
    }
  }
  if (cell.scale == 0.0) cell.hi = cell.lo;
  return cell;
}

double kernel_weight(const KernelSpec& spec, double xi, const CellGeometry& cell) {
  if (xi < cell.lo || xi > cell.hi || cell.scale == 0.0) return 0.0;
  const double u = xi - cell.center;
  switch (spec.shape) {
    case KernelShape::Box:
      return cell.scale;
    case KernelShape::Triangle:
      return cell.scale * std::max(0.0, cell.width - std::abs(u));
    case KernelShape::Gaussian: {
      const double z = u / cell.width;
      return cell.scale * std::exp(-2.0 * z * z);
    }
  }
  return 0.0;
}

}  // namespace uncsmear
