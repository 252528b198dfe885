#include "hga/simple_bounds.hpp"

#include <cmath>
#include <string>

#include "hga/errors.hpp"
#include "hga/root_finding.hpp"

namespace hga {
namespace {

void check_positive(double v, const char* name) {
  if (!std::isfinite(v) || v <= 0.0) throw DomainError(std::string(name) + " must be positive and finite");
}

void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha <= 0.5)) throw DomainError("alpha must lie in (0, 1/2]");
}

// ln(alpha e exp(log_power) + 1), stable when the power term overflows.
double log_alpha_e_plus_one(double alpha, double log_power) {
  const double log_term = std::log(alpha) + 1.0 + log_power;
  if (log_term > 0.0) return log_term + std::log1p(std::exp(-log_term));
  return std::log1p(std::exp(log_term));
}

// ln of (h/a) exp(h/a + n/(n-1)).
double log_q(double ratio, int n) {
  const double nn = static_cast<double>(n);
  return std::log(ratio) + ratio + nn / (nn - 1.0);
}

}  // namespace

std::string_view to_string(SimpleBoundKind kind) {
  switch (kind) {
    case SimpleBoundKind::harmonic_lower:
      return "harmonic-lower";
    case SimpleBoundKind::arithmetic_upper:
      return "arithmetic-upper";
    case SimpleBoundKind::geometric_lower:
      return "geometric-lower";
    case SimpleBoundKind::geometric_upper:
      return "geometric-upper";
  }
  return "unknown";
}

SimpleBoundReport simple_harmonic_lower(double a, double g, double alpha) {
  check_positive(a, "a");
  check_positive(g, "g");
  check_alpha(alpha);
  if (g >= a) throw DegenerateInputError("simple harmonic bound requires g < a");
  const double log_power = std::log(a / g) / alpha;
  return {std::exp(std::log(a) - log_alpha_e_plus_one(alpha, log_power)), true, SimpleBoundKind::harmonic_lower};
}

SimpleBoundReport simple_arithmetic_upper(double h, double g, double alpha) {
  check_positive(h, "h");
  check_positive(g, "g");
  check_alpha(alpha);
  if (h >= g) throw DegenerateInputError("simple arithmetic bound requires h < g");
  const double log_power = std::log(g / h) / alpha;
  return {std::exp(std::log(h) + log_alpha_e_plus_one(alpha, log_power)), true, SimpleBoundKind::arithmetic_upper};
}

SimpleGeometricInterval simple_geometric_interval(double a, double h, double alpha, int n) {
  check_positive(a, "a");
  check_positive(h, "h");
  if (n < 2) throw DomainError("simple geometric bounds require n >= 2");
  if (!(alpha > 0.0 && alpha <= 1.0 / n * (1.0 + 1e-12))) throw DomainError("alpha must lie in (0, 1/n]");
  if (h >= a) throw DegenerateInputError("simple geometric bounds require h < a");
  const double lq = log_q(h / a, n);
  return {{std::exp(std::log(h) - alpha * lq), true, SimpleBoundKind::geometric_lower},
          {std::exp(std::log(a) + alpha * lq), true, SimpleBoundKind::geometric_upper}};
}

double improvement_threshold() {
  // t e^(t+1) - 1 changes sign on [0.1, 0.5]; compare logarithms for a smooth residual.
  return bisect([](double t) { return std::log(t) + t + 1.0; }, 0.1, 0.5).root;
}

bool improves_over_trivial(double a, double h, double alpha, int n) {
  check_positive(a, "a");
  check_positive(h, "h");
  check_alpha(alpha);
  if (n < 2) throw DomainError("n must be at least 2");
  if (h >= a) return false;
  return log_q(h / a, n) < 0.0;
}

}  // namespace hga
