#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace hga {

/// Weight of the isolated coordinate in the two-point problem, 0 < alpha <= 1/2.
class KernelParam {
public:
  explicit KernelParam(double alpha);
  double alpha() const noexcept { return alpha_; }
  /// Right end 1/alpha of the kernel domain.
  double upper() const noexcept { return 1.0 / alpha_; }

private:
  double alpha_;
};

/// Geometric mean of the unit-mean two-point sample (x with weight alpha,
/// (1 - alpha x)/(1 - alpha) with weight 1 - alpha).
double f_kernel(double x, KernelParam alpha);

/// Harmonic mean of the same two-point sample, x(1 - ax)/((1 - 2a)x + a).
double phi_squared(double x, KernelParam alpha);

/// 2t/(2 - t) + ln(1 - t), defined for t < 1.
double s_function(double t);

/// Sign expression governing the alpha-monotonicity of the bound endpoints.
/// Non-positive on [0, 1], non-negative on [1, 1/alpha]; +inf at x = 1/alpha.
/// alpha may range over (0, 1) here.
double gamma_sign(double x, double alpha);

enum class Direction { increasing, decreasing };

struct MonotonicityProbe {
  bool monotone;
  /// First grid index i where values[i+1] breaks the direction, if any.
  std::optional<std::size_t> violation;
};

/// Checks that consecutive values move in `dir`, allowing ties up to `tie_tol`
/// (relative to the larger magnitude).
MonotonicityProbe probe_monotone(const std::vector<double>& values, Direction dir, double tie_tol = 1e-12);

/// Evaluates fn on `points` uniformly spaced nodes of [lo, hi] (endpoints included).
template <class Fn>
std::vector<double> sample_grid(Fn&& fn, double lo, double hi, std::size_t points) {
  std::vector<double> out;
  out.reserve(points);
  for (std::size_t i = 0; i < points; ++i) {
    const double t = points == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(points - 1);
    out.push_back(fn(lo + t * (hi - lo)));
  }
  return out;
}

}  // namespace hga
