#pragma once

#include <string_view>

namespace hga {

enum class SimpleBoundKind { harmonic_lower, arithmetic_upper, geometric_lower, geometric_upper };

std::string_view to_string(SimpleBoundKind kind);

/// A closed-form, non-sharp bound on one mean.
struct SimpleBoundReport {
  double bound;
  bool is_strict;
  SimpleBoundKind kind;
};

struct SimpleGeometricInterval {
  SimpleBoundReport lower;
  SimpleBoundReport upper;
};

/// h > a / (alpha e (a/g)^(1/alpha) + 1). Requires 0 < g < a.
SimpleBoundReport simple_harmonic_lower(double a, double g, double alpha);

/// a < h (alpha e (g/h)^(1/alpha) + 1). Requires 0 < h < g.
SimpleBoundReport simple_arithmetic_upper(double h, double g, double alpha);

/// With q = (h/a) exp(h/a + n/(n-1)): h q^(-alpha) < g < a q^alpha.
/// Requires 0 < h < a, n >= 2 and 0 < alpha <= 1/n.
SimpleGeometricInterval simple_geometric_interval(double a, double h, double alpha, int n);

/// Root of t e^(t+1) = 1 (about 0.278464).
double improvement_threshold();

/// True when the simple upper bound on g is below a at this finite n.
bool improves_over_trivial(double a, double h, double alpha, int n);

}  // namespace hga
