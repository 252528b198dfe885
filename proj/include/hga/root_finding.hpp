#pragma once

#include <cmath>
#include <cstddef>

#include "hga/errors.hpp"

namespace hga {

struct BisectionOptions {
  /// Stop once hi - lo <= rel_tol * (1 + |midpoint|).
  double rel_tol = 1e-14;
  std::size_t max_iterations = 200;
};

struct BisectionResult {
  double root;
  std::size_t iterations;
  bool converged;
};

/// Bisection on a bracket [lo, hi] where fn changes sign.
///
/// The bracket also stops shrinking when the midpoint coincides with an
/// endpoint, i.e. the interval has collapsed to adjacent doubles.
template <class Fn>
BisectionResult bisect(Fn&& fn, double lo, double hi, BisectionOptions opts = {}) {
  double flo = fn(lo);
  const double fhi = fn(hi);
  if (flo == 0.0) return {lo, 0, true};
  if (fhi == 0.0) return {hi, 0, true};
  if (std::signbit(flo) == std::signbit(fhi)) {
    throw DomainError("bisection bracket does not enclose a sign change");
  }
  std::size_t it = 0;
  while (it < opts.max_iterations) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    const double fmid = fn(mid);
    ++it;
    if (fmid == 0.0) return {mid, it, true};
    if (std::signbit(fmid) == std::signbit(flo)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  const double mid = lo + 0.5 * (hi - lo);
  const bool converged = (hi - lo) <= opts.rel_tol * (1.0 + std::abs(mid)) || mid <= lo || mid >= hi;
  return {mid, it, converged};
}

}  // namespace hga
