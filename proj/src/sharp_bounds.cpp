#include "hga/sharp_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hga/errors.hpp"
#include "hga/root_finding.hpp"

namespace hga {
namespace {

struct AdmittedRatio {
  double value;
  bool degenerate;
  bool clamped;
};

AdmittedRatio admit_ratio(double ratio, const char* what) {
  if (!std::isfinite(ratio) || ratio <= 0.0) {
    throw InfeasibleError(std::string(what) + " must be positive and finite");
  }
  if (ratio > 1.0 + kClampTolerance) {
    std::ostringstream os;
    os.precision(17);
    os << what << " = " << ratio << " exceeds 1: the given means violate h <= g <= a";
    throw InfeasibleError(os.str());
  }
  if (ratio >= 1.0 - kDegenerateTolerance) {
    return {1.0, true, ratio > 1.0 + kDegenerateTolerance};
  }
  return {ratio, false, false};
}

void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha <= 0.5)) throw DomainError("alpha must lie in (0, 1/2]");
}

void check_mean(double v, const char* name) {
  if (!std::isfinite(v) || v <= 0.0) throw InfeasibleError(std::string(name) + " must be positive and finite");
}

// Means of the unit-mean two-point sample (x with weight alpha, y with 1 - alpha).
double two_point_harmonic(double x, double y, double alpha) {
  if (x == 0.0 || y == 0.0) return 0.0;
  return 1.0 / (alpha / x + (1.0 - alpha) / y);
}

double two_point_geometric(double x, double y, double alpha) {
  if (x == 0.0 || y == 0.0) return 0.0;
  return std::exp(alpha * std::log(x) + (1.0 - alpha) * std::log(y));
}

// Scaled extremal sample; empty if a coordinate is not a positive double.
std::optional<WeightedSample> make_witness(double xi, double companion, std::span<const double> weights,
                                           std::size_t j, double scale) {
  const double xj = scale * xi;
  const double xk = scale * companion;
  if (!(xj > 0.0 && xk > 0.0 && std::isfinite(xj) && std::isfinite(xk))) return std::nullopt;
  std::vector<double> values(weights.size(), xk);
  values[j] = xj;
  return WeightedSample(std::move(values), {weights.begin(), weights.end()});
}

std::optional<WeightedSample> reciprocal(const std::optional<WeightedSample>& s) {
  if (!s) return std::nullopt;
  return reciprocal_dual(*s);
}

BoundInterval degenerate_interval(double value, std::span<const double> weights, MinWeight mw, bool clamped) {
  BoundInterval out;
  out.lower = value;
  out.upper = value;
  out.alpha = mw.alpha;
  out.witness_index = mw.index;
  out.lower_witness = WeightedSample(std::vector<double>(weights.size(), value), {weights.begin(), weights.end()});
  out.upper_witness = out.lower_witness;
  out.roots.clamped = clamped;
  if (clamped) out.warnings.emplace_back("mean ratio slightly above 1 was clamped to 1");
  return out;
}

}  // namespace

RootPair solve_f_equation(double g_ratio, double alpha) {
  check_alpha(alpha);
  const AdmittedRatio r = admit_ratio(g_ratio, "g/a");
  RootPair out;
  out.clamped = r.clamped;
  if (r.degenerate) return out;

  const double log_r = std::log(r.value);
  const double beta = 1.0 - alpha;

  // Lower root, in u = ln(xi0); companion y = 1 + alpha (1 - x)/(1 - alpha) >= 1.
  auto lower_eq = [&](double u) {
    return alpha * u + beta * std::log1p(-alpha * std::expm1(u) / beta) - log_r;
  };
  // The analytic lower end is widened by 1 so rounding cannot flip its sign.
  const double u_lo = (log_r + beta * std::log(beta)) / alpha - 1.0;
  const double u = bisect(lower_eq, u_lo, 0.0).root;
  out.xi0 = std::exp(u);
  out.companion0 = 1.0 - alpha * std::expm1(u) / beta;

  // Upper root, in v = ln(companion1); xi1 = 1 + (1 - alpha)(1 - y)/alpha >= 1.
  auto upper_eq = [&](double v) {
    return alpha * std::log1p(-beta * std::expm1(v) / alpha) + beta * v - log_r;
  };
  const double v_lo = (log_r + alpha * std::log(alpha)) / beta - 1.0;
  const double v = bisect(upper_eq, v_lo, 0.0).root;
  out.companion1 = std::exp(v);
  out.xi1 = std::min(1.0 - beta * std::expm1(v) / alpha, 1.0 / alpha);
  return out;
}

RootPair solve_phi_equation(double h_ratio, double alpha) {
  check_alpha(alpha);
  const AdmittedRatio r = admit_ratio(h_ratio, "h/a");
  RootPair out;
  out.clamped = r.clamped;
  if (r.degenerate) return out;

  const double h = r.value;
  const double beta = 1.0 - alpha;
  // alpha xi^2 - (1 - h(1 - 2 alpha)) xi + h alpha = 0; the companions solve the
  // same quadratic with alpha and 1 - alpha exchanged. Both share the discriminant
  // (1 - h)(1 - h(1 - 2 alpha)^2), written here without cancellation.
  const double disc = (1.0 - h) * ((1.0 - h) + 4.0 * h * alpha * beta);
  const double root = std::sqrt(disc);
  const double b_xi = (1.0 - h) + 2.0 * h * alpha;
  const double b_comp = (1.0 - h) + 2.0 * h * beta;

  out.xi1 = std::clamp((b_xi + root) / (2.0 * alpha), 1.0, 1.0 / alpha);
  out.companion0 = std::clamp((b_comp + root) / (2.0 * beta), 1.0, 1.0 / beta);
  out.xi0 = h / out.xi1;
  out.companion1 = h / out.companion0;
  return out;
}

BoundInterval harmonic_bounds(double a, double g, std::span<const double> weights) {
  const std::vector<double> w = validate_weights(weights);
  check_mean(a, "a");
  check_mean(g, "g");
  const MinWeight mw = min_weight(w);
  const AdmittedRatio r = admit_ratio(g / a, "g/a");
  if (r.degenerate) return degenerate_interval(a, w, mw, r.clamped);

  BoundInterval out;
  out.alpha = mw.alpha;
  out.witness_index = mw.index;
  out.roots = solve_f_equation(r.value, mw.alpha);
  const RootPair& rp = out.roots;
  out.lower = a * two_point_harmonic(rp.xi0, rp.companion0, mw.alpha);
  out.upper = a * two_point_harmonic(rp.xi1, rp.companion1, mw.alpha);
  out.lower_witness = make_witness(rp.xi0, rp.companion0, w, mw.index, a);
  out.upper_witness = make_witness(rp.xi1, rp.companion1, w, mw.index, a);
  if (!out.lower_witness || !out.upper_witness) {
    out.warnings.emplace_back("extremal coordinate underflows; endpoint reported as its limit");
  }
  return out;
}

BoundInterval geometric_bounds(double a, double h, std::span<const double> weights) {
  const std::vector<double> w = validate_weights(weights);
  check_mean(a, "a");
  check_mean(h, "h");
  const MinWeight mw = min_weight(w);
  const AdmittedRatio r = admit_ratio(h / a, "h/a");
  if (r.degenerate) return degenerate_interval(a, w, mw, r.clamped);

  BoundInterval out;
  out.alpha = mw.alpha;
  out.witness_index = mw.index;
  out.roots = solve_phi_equation(r.value, mw.alpha);
  const RootPair& rp = out.roots;
  out.lower = a * two_point_geometric(rp.xi1, rp.companion1, mw.alpha);
  out.upper = a * two_point_geometric(rp.xi0, rp.companion0, mw.alpha);
  out.lower_witness = make_witness(rp.xi1, rp.companion1, w, mw.index, a);
  out.upper_witness = make_witness(rp.xi0, rp.companion0, w, mw.index, a);
  if (!out.lower_witness || !out.upper_witness) {
    out.warnings.emplace_back("extremal coordinate underflows; endpoint reported as its limit");
  }
  return out;
}

BoundInterval arithmetic_bounds(double h, double g, std::span<const double> weights) {
  check_mean(h, "h");
  check_mean(g, "g");
  if (h / g > 1.0 + kClampTolerance) throw InfeasibleError("h exceeds g: the given means violate h <= g");
  // Reciprocal values have arithmetic mean 1/h, geometric 1/g, harmonic 1/a.
  const BoundInterval dual = harmonic_bounds(1.0 / h, 1.0 / g, weights);
  BoundInterval out;
  out.lower = 1.0 / dual.upper;
  out.upper = dual.lower > 0.0 ? 1.0 / dual.lower : HUGE_VAL;
  out.lower_witness = reciprocal(dual.upper_witness);
  out.upper_witness = reciprocal(dual.lower_witness);
  out.alpha = dual.alpha;
  out.witness_index = dual.witness_index;
  out.roots = dual.roots;
  out.warnings = dual.warnings;
  return out;
}

WeightedSample extremal_configuration(double xi, std::span<const double> weights, std::size_t j) {
  const std::vector<double> w = validate_weights(weights);
  const MinWeight mw = min_weight(w);
  if (j >= w.size()) throw DomainError("witness index out of range");
  if (w[j] != mw.alpha) throw DomainError("witness index must attain the minimum weight");
  const double alpha = mw.alpha;
  if (!(xi > 0.0 && xi < 1.0 / alpha)) {
    throw DomainError("extremal value must lie strictly inside (0, 1/alpha) to give a positive sample");
  }
  const double companion = 1.0 + alpha * (1.0 - xi) / (1.0 - alpha);
  return *make_witness(xi, companion, w, j, 1.0);
}

}  // namespace hga
