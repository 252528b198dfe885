#include "hga/means.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "hga/errors.hpp"

namespace hga {

std::vector<double> validate_weights(std::span<const double> weights) {
  if (weights.size() < 2) {
    throw ValidationError("a sample needs at least two entries, got " + std::to_string(weights.size()));
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (!std::isfinite(weights[i]) || weights[i] <= 0.0) {
      throw ValidationError("weight " + std::to_string(i) + " must be positive and finite");
    }
    sum += weights[i];
  }
  if (std::abs(sum - 1.0) > kWeightSumTolerance) {
    throw ValidationError("weights must sum to 1 (sum = " + std::to_string(sum) + ")");
  }
  std::vector<double> out(weights.begin(), weights.end());
  for (double& w : out) w /= sum;
  return out;
}

WeightedSample::WeightedSample(std::vector<double> values, std::vector<double> weights) {
  if (values.size() != weights.size()) {
    throw ValidationError("values and weights differ in length (" + std::to_string(values.size()) + " vs " +
                          std::to_string(weights.size()) + ")");
  }
  weights_ = validate_weights(weights);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i]) || values[i] <= 0.0) {
      throw ValidationError("value " + std::to_string(i) + " must be positive and finite");
    }
  }
  values_ = std::move(values);
}

WeightedSample WeightedSample::equal_weights(std::vector<double> values) {
  const std::size_t n = values.size();
  if (n < 2) throw ValidationError("a sample needs at least two entries");
  std::vector<double> weights(n, 1.0 / static_cast<double>(n));
  return WeightedSample(std::move(values), std::move(weights));
}

NormalizedProblem make_normalized_problem(double alpha, double ratio) {
  if (!(alpha > 0.0 && alpha <= 0.5)) throw DomainError("alpha must lie in (0, 1/2]");
  if (!(ratio > 0.0 && ratio <= 1.0)) throw InfeasibleError("normalized ratio must lie in (0, 1]");
  return {alpha, ratio};
}

MeanTriple compute_means(const WeightedSample& sample) {
  const auto x = sample.values();
  const auto w = sample.weights();

  const bool constant = std::all_of(x.begin(), x.end(), [&](double v) { return v == x.front(); });
  if (constant) return {x.front(), x.front(), x.front()};

  double inv_sum = 0.0;
  double log_sum = 0.0;
  double arith = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    inv_sum += w[i] / x[i];
    log_sum += w[i] * std::log(x[i]);
    arith += w[i] * x[i];
  }
  const double h = 1.0 / inv_sum;
  // Rounding can push g a few ulps outside [h, a] for nearly constant samples.
  const double g = std::clamp(std::exp(log_sum), std::min(h, arith), std::max(h, arith));
  return {h, g, arith};
}

Normalized normalize(const WeightedSample& sample) {
  const double a = compute_means(sample).a;
  std::vector<double> scaled(sample.values().begin(), sample.values().end());
  for (double& v : scaled) v /= a;
  return {WeightedSample(std::move(scaled), {sample.weights().begin(), sample.weights().end()}), a};
}

WeightedSample reciprocal_dual(const WeightedSample& sample) {
  std::vector<double> inv(sample.values().begin(), sample.values().end());
  for (double& v : inv) v = 1.0 / v;
  return WeightedSample(std::move(inv), {sample.weights().begin(), sample.weights().end()});
}

MinWeight min_weight(std::span<const double> weights) {
  if (weights.empty()) throw ValidationError("empty weight vector");
  const auto it = std::min_element(weights.begin(), weights.end());
  return {*it, static_cast<std::size_t>(std::distance(weights.begin(), it))};
}

MinWeight min_weight(const WeightedSample& sample) { return min_weight(sample.weights()); }

}  // namespace hga
