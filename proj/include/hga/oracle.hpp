#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hga/means.hpp"
#include "hga/sharp_bounds.hpp"

namespace hga {

enum class MeanKind { harmonic, geometric, arithmetic };

std::string_view to_string(MeanKind kind);

struct KnownMean {
  MeanKind kind;
  double value;
};

struct KnownPair {
  KnownMean first;
  KnownMean second;
};

/// Default relative tolerance of the oracle comparisons.
inline constexpr double kOracleTolerance = 1e-6;
/// Exhaustive two-value search is limited to this many coordinates.
inline constexpr std::size_t kMaxOracleSize = 12;
/// Normalized coordinates below this are counted as boundary hits.
inline constexpr double kBoundaryThreshold = 1e-12;

/// Extremes of the target mean observed over a set of feasible samples.
struct OracleReport {
  double observed_min = 0.0;
  double observed_max = 0.0;
  std::optional<WeightedSample> argmin_sample;
  std::optional<WeightedSample> argmax_sample;
  /// Indices on the lighter side of the two-value split attaining each extreme
  /// (empty for random search and for degenerate problems).
  std::vector<std::size_t> argmin_isolated;
  std::vector<std::size_t> argmax_isolated;
  std::size_t evaluations = 0;
  /// Evaluated configurations with a normalized coordinate below kBoundaryThreshold.
  std::size_t boundary_hits = 0;
  /// Random search only: attempts whose correction step failed.
  std::size_t failures = 0;
};

/// Exhaustive search over every split of the indices into two groups taking
/// one value each, matching the two known means; n <= kMaxOracleSize.
OracleReport two_value_search(std::span<const double> weights, KnownPair known, MeanKind target);

/// Random samples on the two-constraint set, deterministic given `seed`.
OracleReport random_feasible_search(std::span<const double> weights, KnownPair known, MeanKind target,
                                    std::size_t samples, std::uint64_t seed);

struct SharpnessVerdict {
  bool passed = false;
  /// Every observed value lies inside the interval.
  bool contained = false;
  /// The observed extremes coincide with the interval endpoints.
  bool endpoints_match = false;
  std::vector<std::string> details;
};

SharpnessVerdict verify_sharpness(const BoundInterval& interval, const OracleReport& report,
                                  double tol = kOracleTolerance);

}  // namespace hga
