#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hga/means.hpp"

namespace hga {

/// Ratios within this distance of 1 are treated as the all-equal case.
inline constexpr double kDegenerateTolerance = 1e-12;
/// Ratios in (1, 1 + kClampTolerance] are clamped to 1 with a warning.
inline constexpr double kClampTolerance = 1e-9;

/// The two solutions of a kernel equation on the unit-mean two-point problem.
///
/// xi0 lies in [0, 1] and xi1 in [1, 1/alpha]. Each root comes with its
/// companion value (1 - alpha xi)/(1 - alpha), the common value of the other
/// coordinates, computed without the cancellation of the direct formula.
struct RootPair {
  double xi0 = 1.0;
  double xi1 = 1.0;
  double companion0 = 1.0;
  double companion1 = 1.0;
  /// Input ratio was slightly above 1 and was clamped.
  bool clamped = false;
};

/// Sharp interval on one mean plus the samples attaining each endpoint.
///
/// A witness is absent only when the extremal coordinate underflows the
/// double range, in which case the matching endpoint is its limit value.
struct BoundInterval {
  double lower = 0.0;
  double upper = 0.0;
  std::optional<WeightedSample> lower_witness;
  std::optional<WeightedSample> upper_witness;
  double alpha = 0.0;
  std::size_t witness_index = 0;
  RootPair roots;
  std::vector<std::string> warnings;
};

/// Roots of f(xi) = g_ratio, found by bisection on [0, 1] and [1, 1/alpha].
RootPair solve_f_equation(double g_ratio, double alpha);

/// Roots of phi^2(xi) = h_ratio from the stable quadratic formula.
RootPair solve_phi_equation(double h_ratio, double alpha);

/// Sharp bounds on the harmonic mean given the arithmetic and geometric means.
BoundInterval harmonic_bounds(double a, double g, std::span<const double> weights);

/// Sharp bounds on the geometric mean given the arithmetic and harmonic means.
BoundInterval geometric_bounds(double a, double h, std::span<const double> weights);

/// Sharp bounds on the arithmetic mean given the harmonic and geometric means,
/// obtained from harmonic_bounds on the reciprocal sample.
BoundInterval arithmetic_bounds(double h, double g, std::span<const double> weights);

/// Unit-mean sample with x_j = xi and every other coordinate (1 - alpha xi)/(1 - alpha).
/// j must attain the minimum weight and 0 < xi < 1/alpha.
WeightedSample extremal_configuration(double xi, std::span<const double> weights, std::size_t j);

}  // namespace hga
