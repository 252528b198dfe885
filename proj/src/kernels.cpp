#include "hga/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hga/errors.hpp"

namespace hga {

KernelParam::KernelParam(double alpha) : alpha_(alpha) {
  if (!(alpha > 0.0 && alpha <= 0.5)) throw DomainError("kernel parameter alpha must lie in (0, 1/2]");
}

namespace {

void check_domain(double x, KernelParam p) {
  if (!(x >= 0.0 && x <= p.upper())) throw DomainError("kernel argument outside [0, 1/alpha]");
}

}  // namespace

double f_kernel(double x, KernelParam p) {
  check_domain(x, p);
  const double a = p.alpha();
  if (x == 0.0 || x == p.upper()) return 0.0;
  // (1 - a x)/(1 - a) = 1 + a (1 - x)/(1 - a)
  const double log_other = std::log1p(a * (1.0 - x) / (1.0 - a));
  return std::exp(a * std::log(x) + (1.0 - a) * log_other);
}

double phi_squared(double x, KernelParam p) {
  check_domain(x, p);
  const double a = p.alpha();
  if (x == 0.0 || x == p.upper()) return 0.0;
  return x * (1.0 - a * x) / ((1.0 - 2.0 * a) * x + a);
}

double s_function(double t) {
  if (!(t < 1.0)) throw DomainError("s(t) requires t < 1");
  return 2.0 * t / (2.0 - t) + std::log1p(-t);
}

double gamma_sign(double x, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("gamma_sign requires alpha in (0, 1)");
  if (!(x >= 0.0 && x <= 1.0 / alpha)) throw DomainError("gamma_sign argument outside [0, 1/alpha]");
  if (x == 1.0 / alpha) return std::numeric_limits<double>::infinity();
  const double denom = 1.0 - alpha * x;
  const double t = (1.0 - x) / denom;
  return t + std::log1p(-t) + (1.0 - x) * (1.0 - x) / (denom * (1.0 - (2.0 * alpha - 1.0) * x));
}

MonotonicityProbe probe_monotone(const std::vector<double>& values, Direction dir, double tie_tol) {
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    const double step = values[i + 1] - values[i];
    const double slack = tie_tol * std::max({1.0, std::abs(values[i]), std::abs(values[i + 1])});
    const bool ok = dir == Direction::increasing ? step >= -slack : step <= slack;
    if (!ok) return {false, i};
  }
  return {true, std::nullopt};
}

}  // namespace hga
