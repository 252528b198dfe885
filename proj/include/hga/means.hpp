#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace hga {

/// Tolerance on |sum(weights) - 1| accepted at construction.
inline constexpr double kWeightSumTolerance = 1e-12;

/// Positive values x_i with positive weights summing to one.
///
/// Construction validates every invariant and renormalizes the weights so
/// that their sum is one to rounding. Instances are immutable.
class WeightedSample {
public:
  WeightedSample(std::vector<double> values, std::vector<double> weights);

  /// Sample with equal weights 1/n.
  static WeightedSample equal_weights(std::vector<double> values);

  std::size_t size() const noexcept { return values_.size(); }
  std::span<const double> values() const noexcept { return values_; }
  std::span<const double> weights() const noexcept { return weights_; }
  double value(std::size_t i) const { return values_.at(i); }
  double weight(std::size_t i) const { return weights_.at(i); }

  friend bool operator==(const WeightedSample&, const WeightedSample&) = default;

private:
  std::vector<double> values_;
  std::vector<double> weights_;
};

/// Harmonic, geometric and arithmetic means of one sample.
struct MeanTriple {
  double h;
  double g;
  double a;
};

/// Problem rescaled to unit arithmetic mean: the minimum weight and the
/// ratio of the second known mean to the arithmetic mean.
struct NormalizedProblem {
  double alpha;
  double ratio;
};

/// Validates 0 < alpha <= 1/2 and 0 < ratio <= 1.
NormalizedProblem make_normalized_problem(double alpha, double ratio);

struct MinWeight {
  double alpha;
  std::size_t index;
};

/// Validates a weight vector (n >= 2, positive, sum one within tolerance) and
/// returns it renormalized.
std::vector<double> validate_weights(std::span<const double> weights);

MeanTriple compute_means(const WeightedSample& sample);

struct Normalized {
  WeightedSample sample;
  double scale;
};

/// Divides every value by the arithmetic mean.
Normalized normalize(const WeightedSample& sample);

/// Replaces every value by its reciprocal; weights are kept.
WeightedSample reciprocal_dual(const WeightedSample& sample);

/// Smallest weight; ties go to the smallest index.
MinWeight min_weight(std::span<const double> weights);
MinWeight min_weight(const WeightedSample& sample);

}  // namespace hga
