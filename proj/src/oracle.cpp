#include "hga/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <utility>

#include "hga/errors.hpp"

// The solves here deliberately avoid the sharp-bounds code path: they work in
// long double, bracket by expansion and evaluate the constraints directly.

namespace hga {

std::string_view to_string(MeanKind kind) {
  switch (kind) {
    case MeanKind::harmonic:
      return "harmonic";
    case MeanKind::geometric:
      return "geometric";
    case MeanKind::arithmetic:
      return "arithmetic";
  }
  return "unknown";
}

namespace {

using real = long double;

enum class Constraint { geometric, harmonic };

// Unit-mean problem equivalent to a (known pair, target) request.
struct Reduced {
  Constraint constraint = Constraint::geometric;
  real ratio = 1;
  double scale = 1;
  // Target is the arithmetic mean, recovered from the reciprocal problem.
  bool dual = false;
  bool degenerate = false;
  double degenerate_value = 0;
};

double known_value(const KnownPair& kp, MeanKind kind) {
  if (kp.first.kind == kind) return kp.first.value;
  return kp.second.value;
}

Reduced reduce(const KnownPair& kp, MeanKind target) {
  if (kp.first.kind == kp.second.kind) throw DomainError("the two known means must be of different kinds");
  if (kp.first.kind == target || kp.second.kind == target) throw DomainError("target mean is already known");
  for (const KnownMean& km : {kp.first, kp.second}) {
    if (!std::isfinite(km.value) || km.value <= 0.0) {
      throw InfeasibleError(std::string(to_string(km.kind)) + " mean must be positive and finite");
    }
  }

  Reduced r;
  double num = 0;
  double den = 0;
  switch (target) {
    case MeanKind::harmonic:
      num = known_value(kp, MeanKind::geometric);
      den = known_value(kp, MeanKind::arithmetic);
      r.constraint = Constraint::geometric;
      r.scale = den;
      break;
    case MeanKind::geometric:
      num = known_value(kp, MeanKind::harmonic);
      den = known_value(kp, MeanKind::arithmetic);
      r.constraint = Constraint::harmonic;
      r.scale = den;
      break;
    case MeanKind::arithmetic:
      num = known_value(kp, MeanKind::harmonic);
      den = known_value(kp, MeanKind::geometric);
      r.constraint = Constraint::geometric;
      r.scale = 1.0 / num;
      r.dual = true;
      break;
  }
  const double ratio = num / den;
  if (ratio > 1.0 + kClampTolerance) throw InfeasibleError("known means violate h <= g <= a");
  if (ratio >= 1.0 - kDegenerateTolerance) {
    r.degenerate = true;
    r.degenerate_value = den;
    r.ratio = 1;
    return r;
  }
  r.ratio = ratio;
  return r;
}

real constraint_value(Constraint c, real w, real x, real y) {
  if (c == Constraint::geometric) return std::exp(w * std::log(x) + (1 - w) * std::log(y));
  return 1 / (w / x + (1 - w) / y);
}

struct TwoValues {
  real x;  // value on the group of weight w, at most 1
  real y;  // value on the complement, at least 1
};

// Two-value configuration with w x + (1 - w) y = 1, x <= 1 and constraint
// value `ratio`, solved for ln x by bisection.
TwoValues solve_two_values(Constraint c, real w, real ratio) {
  auto residual = [&](real t) {
    const real x = std::exp(t);
    const real y = (1 - w * x) / (1 - w);
    return std::log(constraint_value(c, w, x, y)) - std::log(ratio);
  };
  real hi = 0;
  real lo = -1;
  int expansions = 0;
  while (residual(lo) > 0) {
    lo *= 2;
    if (++expansions > 64) throw DomainError("oracle could not bracket the two-value root");
  }
  for (int it = 0; it < 200; ++it) {
    const real mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;
    if (residual(mid) > 0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  const real x = std::exp(lo + (hi - lo) / 2);
  return {x, (1 - w * x) / (1 - w)};
}

real harmonic_of(std::span<const real> z, std::span<const double> w) {
  real s = 0;
  for (std::size_t i = 0; i < z.size(); ++i) s += static_cast<real>(w[i]) / z[i];
  return 1 / s;
}

real geometric_of(std::span<const real> z, std::span<const double> w) {
  real s = 0;
  for (std::size_t i = 0; i < z.size(); ++i) s += static_cast<real>(w[i]) * std::log(z[i]);
  return std::exp(s);
}

// Target mean of the original-scale sample whose normalized values are z.
double target_value(const Reduced& r, std::span<const real> z, std::span<const double> w) {
  if (r.dual) return static_cast<double>(1 / (static_cast<real>(r.scale) * harmonic_of(z, w)));
  const real v = r.constraint == Constraint::geometric ? harmonic_of(z, w) : geometric_of(z, w);
  return static_cast<double>(static_cast<real>(r.scale) * v);
}

std::optional<WeightedSample> original_sample(const Reduced& r, std::span<const real> z,
                                              std::span<const double> w) {
  std::vector<double> values(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    const real v = static_cast<real>(r.scale) * z[i];
    values[i] = static_cast<double>(r.dual ? 1 / v : v);
    if (!(values[i] > 0.0) || !std::isfinite(values[i])) return std::nullopt;
  }
  return WeightedSample(std::move(values), {w.begin(), w.end()});
}

OracleReport degenerate_report(const Reduced& r, std::span<const double> w, std::size_t evaluations) {
  OracleReport out;
  out.observed_min = r.degenerate_value;
  out.observed_max = r.degenerate_value;
  out.argmin_sample = WeightedSample(std::vector<double>(w.size(), r.degenerate_value), {w.begin(), w.end()});
  out.argmax_sample = out.argmin_sample;
  out.evaluations = evaluations;
  return out;
}

// The lighter side of a split; ties go to the side with fewer indices, then to `in`.
std::vector<std::size_t> isolated_side(std::uint32_t mask, std::size_t n, real w_in) {
  std::vector<std::size_t> in;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i) ((mask >> i) & 1u ? in : out).push_back(i);
  const real w_out = 1 - w_in;
  if (w_in < w_out) return in;
  if (w_out < w_in) return out;
  return out.size() < in.size() ? out : in;
}

}  // namespace

OracleReport two_value_search(std::span<const double> weights, KnownPair known, MeanKind target) {
  const std::vector<double> w = validate_weights(weights);
  const std::size_t n = w.size();
  if (n > kMaxOracleSize) {
    throw SizeError("exhaustive two-value search supports at most " + std::to_string(kMaxOracleSize) +
                    " coordinates");
  }
  const Reduced r = reduce(known, target);
  const std::uint32_t full = (1u << n) - 1u;
  if (r.degenerate) return degenerate_report(r, w, full - 1u);

  OracleReport out;
  out.observed_min = std::numeric_limits<double>::infinity();
  out.observed_max = -std::numeric_limits<double>::infinity();
  std::vector<real> z(n);
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    real w_in = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if ((mask >> i) & 1u) w_in += w[i];
    }
    const TwoValues tv = solve_two_values(r.constraint, w_in, r.ratio);
    for (std::size_t i = 0; i < n; ++i) z[i] = (mask >> i) & 1u ? tv.x : tv.y;
    const double value = target_value(r, z, w);
    ++out.evaluations;
    if (tv.x < static_cast<real>(kBoundaryThreshold)) ++out.boundary_hits;

    if (value < out.observed_min) {
      out.observed_min = value;
      out.argmin_sample = original_sample(r, z, w);
      out.argmin_isolated = isolated_side(mask, n, w_in);
    }
    if (value > out.observed_max) {
      out.observed_max = value;
      out.argmax_sample = original_sample(r, z, w);
      out.argmax_isolated = isolated_side(mask, n, w_in);
    }
  }
  return out;
}

OracleReport random_feasible_search(std::span<const double> weights, KnownPair known, MeanKind target,
                                    std::size_t samples, std::uint64_t seed) {
  const std::vector<double> w = validate_weights(weights);
  const std::size_t n = w.size();
  const Reduced r = reduce(known, target);
  if (r.degenerate) return degenerate_report(r, w, samples);

  auto constraint_of = [&](std::span<const real> z) {
    return r.constraint == Constraint::geometric ? geometric_of(z, w) : harmonic_of(z, w);
  };

  OracleReport out;
  out.observed_min = std::numeric_limits<double>::infinity();
  out.observed_max = -std::numeric_limits<double>::infinity();

  std::vector<real> dir(n);
  std::vector<real> z(n);
  std::uint64_t attempt = 0;
  std::size_t successes = 0;
  while (successes < samples) {
    if (out.failures > samples) {
      throw GenerationError("random feasible search: more than half of the correction steps failed");
    }
    // One independent stream per attempt keeps every draw a function of (seed, attempt).
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(attempt), static_cast<std::uint32_t>(attempt >> 32)};
    std::mt19937_64 rng(seq);
    ++attempt;
    std::normal_distribution<double> normal;
    std::uniform_real_distribution<double> unit;

    // Random log-normal direction rescaled to unit arithmetic mean.
    const double sigma = 0.1 + 2.9 * unit(rng);
    real mean = 0;
    for (std::size_t i = 0; i < n; ++i) {
      dir[i] = std::exp(static_cast<real>(sigma * normal(rng)));
      mean += w[i] * dir[i];
    }
    for (real& d : dir) d /= mean;

    // Along 1 + tau (d - 1) the constraint mean decreases from 1; stay above the target.
    auto mix = [&](real tau) {
      for (std::size_t i = 0; i < n; ++i) z[i] = 1 + tau * (dir[i] - 1);
      return constraint_of(z);
    };
    real tau_max = 1;
    if (mix(1) <= r.ratio) {
      real lo = 0;
      real hi = 1;
      for (int it = 0; it < 200 && hi - lo > 1e-18L; ++it) {
        const real mid = (lo + hi) / 2;
        (mix(mid) > r.ratio ? lo : hi) = mid;
      }
      tau_max = lo;
    }
    mix(tau_max * static_cast<real>(unit(rng)));

    // Move one pair so the sample meets the constraint exactly.
    const std::size_t i = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
    std::size_t k = std::uniform_int_distribution<std::size_t>(0, n - 2)(rng);
    if (k >= i) ++k;
    const real wi = w[i];
    const real wk = w[k];
    const real pair_w = wi + wk;
    const real pair_mean = (wi * z[i] + wk * z[k]) / pair_w;
    real rho = 0;
    if (r.constraint == Constraint::geometric) {
      real log_rest = 0;
      for (std::size_t m = 0; m < n; ++m) {
        if (m != i && m != k) log_rest += w[m] * std::log(z[m]);
      }
      rho = std::exp((std::log(r.ratio) - log_rest) / pair_w - std::log(pair_mean));
    } else {
      real inv_rest = 0;
      for (std::size_t m = 0; m < n; ++m) {
        if (m != i && m != k) inv_rest += w[m] / z[m];
      }
      rho = pair_w / ((1 / r.ratio - inv_rest) * pair_mean);
    }
    if (!(rho > 0 && rho < 1) || !std::isfinite(static_cast<double>(rho))) {
      ++out.failures;
      continue;
    }
    const bool low_on_i = unit(rng) < 0.5;
    const real w_low = low_on_i ? wi / pair_w : wk / pair_w;
    const TwoValues tv = solve_two_values(r.constraint, w_low, rho);
    z[low_on_i ? i : k] = pair_mean * tv.x;
    z[low_on_i ? k : i] = pair_mean * tv.y;

    real arith = 0;
    for (std::size_t m = 0; m < n; ++m) arith += w[m] * z[m];
    const real achieved = constraint_of(z);
    const bool positive = std::all_of(z.begin(), z.end(), [](real v) { return v > 0; });
    if (!positive || std::abs(arith - 1) > 1e-9L || std::abs(achieved - r.ratio) > 1e-9L * r.ratio) {
      ++out.failures;
      continue;
    }

    const double value = target_value(r, z, w);
    ++successes;
    ++out.evaluations;
    if (*std::min_element(z.begin(), z.end()) < static_cast<real>(kBoundaryThreshold)) ++out.boundary_hits;
    if (value < out.observed_min) {
      out.observed_min = value;
      out.argmin_sample = original_sample(r, z, w);
    }
    if (value > out.observed_max) {
      out.observed_max = value;
      out.argmax_sample = original_sample(r, z, w);
    }
  }
  return out;
}

SharpnessVerdict verify_sharpness(const BoundInterval& interval, const OracleReport& report, double tol) {
  auto close = [tol](double x, double y) {
    return std::abs(x - y) <= tol * std::max({std::abs(x), std::abs(y), std::numeric_limits<double>::min()});
  };
  auto fmt = [](double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
  };

  SharpnessVerdict v;
  const bool lower_ok = interval.lower <= report.observed_min + tol * std::abs(report.observed_min);
  const bool upper_ok = report.observed_max <= interval.upper + tol * std::abs(interval.upper);
  v.contained = lower_ok && upper_ok;
  if (!lower_ok) {
    v.details.push_back("observed minimum " + fmt(report.observed_min) + " below interval lower " +
                        fmt(interval.lower));
  }
  if (!upper_ok) {
    v.details.push_back("observed maximum " + fmt(report.observed_max) + " above interval upper " +
                        fmt(interval.upper));
  }
  const bool min_match = close(interval.lower, report.observed_min);
  const bool max_match = close(interval.upper, report.observed_max);
  v.endpoints_match = min_match && max_match;
  if (!min_match) {
    v.details.push_back("lower endpoint " + fmt(interval.lower) + " differs from observed minimum " +
                        fmt(report.observed_min));
  }
  if (!max_match) {
    v.details.push_back("upper endpoint " + fmt(interval.upper) + " differs from observed maximum " +
                        fmt(report.observed_max));
  }
  v.passed = v.contained && v.endpoints_match;
  return v;
}

}  // namespace hga
