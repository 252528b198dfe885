// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "hga/applications.hpp"
#include "hga/kernels.hpp"
#include "hga/means.hpp"
#include "hga/oracle.hpp"
#include "hga/sharp_bounds.hpp"
#include "hga/simple_bounds.hpp"
#include "closed_form.hpp"
#include "spd.hpp"
#include "test_support.hpp"

using namespace hga;
using hga_test::rel_err;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool passed;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double d(long double v) { return static_cast<double>(v); }

std::vector<double> witness_values(const std::optional<WeightedSample>& w) {
  return {w->values().begin(), w->values().end()};
}

// 1. threshold constant
Outcome threshold_constant() {
  const auto t0 = Clock::now();
  const double t = improvement_threshold();
  const double elapsed = seconds_since(t0);
  const double residual = std::abs(t * std::exp(t + 1) - 1);
  // The constant is quoted truncated, 0.278464...
  const bool six_digits = std::floor(t * 1e6) == 278464.0;
  return {six_digits && residual <= 1e-12 && elapsed < 1e-3,
          fmt("t0=%.16g residual=%.2e time=%.3g ms", t, residual, elapsed * 1e3)};
}

// 2. extremal witnesses attain the endpoints
Outcome sharpness_witnesses() {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::size_t> nd(2, 8);
  std::uniform_real_distribution<double> ratio(0.05, 0.999);
  const auto t0 = Clock::now();
  double worst = 0;
  int missing = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = nd(rng);
    const auto w = hga_test::random_weights(rng, n);
    const double a = hga_test::log_uniform(rng, 1e-2, 1e2);
    const double known = a * ratio(rng);
    const bool harmonic_target = trial % 2 == 0;
    const BoundInterval b = harmonic_target ? harmonic_bounds(a, known, w) : geometric_bounds(a, known, w);
    for (int side = 0; side < 2; ++side) {
      const auto& wit = side == 0 ? b.lower_witness : b.upper_witness;
      if (!wit) {
        ++missing;
        continue;
      }
      const auto m = hga_test::ref_means(witness_values(wit), w);
      const double endpoint = side == 0 ? b.lower : b.upper;
      const double got_known = d(harmonic_target ? m.g : m.h);
      const double got_target = d(harmonic_target ? m.h : m.g);
      worst = std::max({worst, rel_err(d(m.a), a), rel_err(got_known, known), rel_err(got_target, endpoint)});
    }
  }
  const double elapsed = seconds_since(t0);
  return {missing == 0 && worst <= 1e-10 && elapsed < 5.0,
          fmt("problems=1000 max_rel_err=%.2e missing_witnesses=%d time=%.3g s", worst, missing, elapsed)};
}

// 3. exhaustive two-value search agrees with the sharp endpoints
Outcome oracle_equivalence() {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<std::size_t> nd(3, 8);
  std::uniform_real_distribution<double> sd(0.1, 1.5);
  const auto t0 = Clock::now();
  double worst = 0;
  int bad_subsets = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = nd(rng);
    const auto w = hga_test::random_weights(rng, n);
    const auto x = hga_test::random_values(rng, n, sd(rng));
    const auto m = hga_test::ref_means(x, w);
    const MinWeight mw = min_weight(w);
    const std::vector<std::size_t> singleton{mw.index};

    const BoundInterval hb = harmonic_bounds(d(m.a), d(m.g), w);
    const OracleReport rh =
        two_value_search(w, {{MeanKind::arithmetic, d(m.a)}, {MeanKind::geometric, d(m.g)}}, MeanKind::harmonic);
    const BoundInterval gb = geometric_bounds(d(m.a), d(m.h), w);
    const OracleReport rg =
        two_value_search(w, {{MeanKind::arithmetic, d(m.a)}, {MeanKind::harmonic, d(m.h)}}, MeanKind::geometric);

    for (const auto& [b, r] : {std::pair{&hb, &rh}, std::pair{&gb, &rg}}) {
      worst = std::max({worst, rel_err(r->observed_min, b->lower), rel_err(r->observed_max, b->upper)});
      if (r->argmin_isolated != singleton || r->argmax_isolated != singleton) ++bad_subsets;
    }
  }
  const double elapsed = seconds_since(t0);
  return {worst <= 1e-6 && bad_subsets == 0 && elapsed < 60.0,
          fmt("problems=200 max_rel_err=%.2e non_minimal_subsets=%d time=%.3g s", worst, bad_subsets, elapsed)};
}

// 4. stable quadratic against the literal radical expressions
Outcome closed_form_consistency() {
  std::mt19937_64 rng(4);
  const auto t0 = Clock::now();
  double worst = 0;
  double smallest_alpha = 1;
  for (int trial = 0; trial < 10000; ++trial) {
    const double a = hga_test::log_uniform(rng, 1e-3, 1e3);
    const double h = a * hga_test::log_uniform(rng, 1e-4, 0.999999);
    const double alpha = trial < 100 ? 1e-6 : hga_test::log_uniform(rng, 1e-6, 0.5);
    smallest_alpha = std::min(smallest_alpha, alpha);
    const std::vector<double> w{alpha, 1 - alpha};
    const BoundInterval b = geometric_bounds(a, h, w);
    const auto ref = hga_test::ref_closed_form_geometric(a, h, alpha);
    worst = std::max({worst, rel_err(b.lower, ref.first), rel_err(b.upper, ref.second)});
  }
  const double elapsed = seconds_since(t0);
  return {worst <= 1e-12 && elapsed < 5.0,
          fmt("problems=10000 min_alpha=%.1e max_rel_err=%.2e time=%.3g s", smallest_alpha, worst, elapsed)};
}

// 5. closed-form simple bounds strictly contain the sharp ones
Outcome simple_dominance() {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::size_t> nd(2, 8);
  std::uniform_real_distribution<double> sd(0.05, 1.5);
  int violations = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const std::size_t n = nd(rng);
    const auto w = hga_test::random_weights(rng, n);
    const auto x = hga_test::random_values(rng, n, sd(rng));
    const auto m = hga_test::ref_means(x, w);
    const double h = d(m.h), g = d(m.g), a = d(m.a);
    const double alpha = min_weight(w).alpha;
    const double slack = 1e-12;

    const BoundInterval hb = harmonic_bounds(a, g, w);
    const double hl = simple_harmonic_lower(a, g, alpha).bound;
    const BoundInterval ab = arithmetic_bounds(h, g, w);
    const double au = simple_arithmetic_upper(h, g, alpha).bound;
    const BoundInterval gb = geometric_bounds(a, h, w);
    const auto gi = simple_geometric_interval(a, h, alpha, static_cast<int>(n));

    const bool ok = hl < hb.lower && hb.lower <= h * (1 + slack) && hl < h &&
                    au > ab.upper && ab.upper >= a * (1 - slack) && au > a &&
                    gi.lower.bound < gb.lower && gb.lower <= g * (1 + slack) &&
                    gi.upper.bound > gb.upper && gb.upper >= g * (1 - slack) &&
                    gi.lower.bound < g && g < gi.upper.bound;
    if (!ok) ++violations;
  }
  return {violations == 0, fmt("problems=10000 violations=%d", violations)};
}

// 6. half weights collapse both intervals
Outcome half_weight_identities() {
  std::mt19937_64 rng(6);
  const std::vector<double> w{0.5, 0.5};
  double worst = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto x = hga_test::random_values(rng, 2, 1.0);
    const auto m = hga_test::ref_means(x, w);
    const double h = d(m.h), g = d(m.g), a = d(m.a);
    const BoundInterval hb = harmonic_bounds(a, g, w);
    const BoundInterval gb = geometric_bounds(a, h, w);
    const double want_h = g * g / a;
    const double want_g = std::sqrt(h * a);
    worst = std::max({worst, rel_err(hb.lower, want_h), rel_err(hb.upper, want_h), rel_err(gb.lower, want_g),
                      rel_err(gb.upper, want_g)});
  }
  return {worst <= 1e-13, fmt("problems=100 max_rel_err=%.2e", worst)};
}

// 7. kernel shape grid checks
Outcome kernel_shape_suite() {
  const auto t0 = Clock::now();
  constexpr std::size_t kPoints = 1000;
  int failures = 0;
  auto expect = [&](bool ok) { failures += ok ? 0 : 1; };
  const auto id = [](double t) { return t; };
  for (int k = 1; k <= 20; ++k) {
    const double alpha = 0.025 * k;
    const KernelParam p(alpha);
    const double top = 1.0 / alpha;
    auto f = [&](double x) { return f_kernel(x, p); };
    auto m = [&](double x) { return phi_squared(x, p); };
    expect(probe_monotone(sample_grid(f, 0.0, 1.0, kPoints), Direction::increasing).monotone);
    expect(probe_monotone(sample_grid(f, 1.0, top, kPoints), Direction::decreasing).monotone);
    expect(probe_monotone(sample_grid(m, 0.0, 1.0, kPoints), Direction::increasing).monotone);
    expect(probe_monotone(sample_grid(m, 1.0, top, kPoints), Direction::decreasing).monotone);

    for (double x : sample_grid(id, 0.0, top, kPoints)) {
      if (x <= 0.0 || x >= top || std::abs(x - 1.0) < 1e-9) continue;
      const double f2 = f(x) * f(x);
      expect(x < 1.0 ? f2 >= m(x) * (1 - 1e-12) : f2 <= m(x) * (1 + 1e-12));
    }
    const double eps = top * 1e-6;
    auto ratio = [&](double x) { return f(x) / std::sqrt(m(x)); };
    expect(probe_monotone(sample_grid(ratio, eps, top - eps, kPoints), Direction::decreasing).monotone);

    for (double x : sample_grid(id, 0.0, top, kPoints)) {
      const double v = gamma_sign(x, alpha);
      if (x <= 1.0) expect(v <= 1e-15);
      if (x >= 1.0) expect(v >= -1e-15);
    }
  }
  expect(probe_monotone(sample_grid([](double t) { return s_function(t); }, -50.0, 0.999, kPoints),
                        Direction::decreasing).monotone);

  // Endpoints as functions of the minimum weight: lower ends rise, upper ends fall.
  for (double r : {0.99, 0.9, 0.7, 0.5, 0.3, 0.1}) {
    std::vector<double> hl, hu, gl, gu;
    for (int k = 1; k <= 10; ++k) {
      const double alpha = 0.05 * k;
      const std::vector<double> w{alpha, 1 - alpha};
      const BoundInterval hb = harmonic_bounds(1.0, r, w);
      const BoundInterval gb = geometric_bounds(1.0, r, w);
      hl.push_back(hb.lower);
      hu.push_back(hb.upper);
      gl.push_back(gb.lower);
      gu.push_back(gb.upper);
    }
    expect(probe_monotone(hl, Direction::increasing).monotone);
    expect(probe_monotone(hu, Direction::decreasing).monotone);
    expect(probe_monotone(gl, Direction::increasing).monotone);
    expect(probe_monotone(gu, Direction::decreasing).monotone);
  }
  const double elapsed = seconds_since(t0);
  return {failures == 0 && elapsed < 2.0,
          fmt("alphas=20 points=%zu failed_checks=%d time=%.3g s", kPoints, failures, elapsed)};
}

// 8. trace of the inverse of SPD matrices
Outcome matrix_application() {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> od(2, 8);
  int violations = 0;
  int printed_form_violations = 0;
  double worst = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = od(rng);
    std::vector<double> spec(static_cast<std::size_t>(n));
    double inv_sum = 0;
    for (auto& l : spec) {
      l = hga_test::log_uniform(rng, 1e-3, 1e3);
      inv_sum += 1 / l;
    }
    const SymmetricMatrix m(static_cast<std::size_t>(n), hga_test::spd_with_spectrum(rng, spec));
    const TraceVerdict v = verify_trace_bound(m);
    if (!v.passed) ++violations;
    worst = std::max(worst, rel_err(v.trace_inverse, inv_sum));

    const TraceDet td = factor_trace_det(m);
    const double nn = n;
    const double printed = std::exp(1 + nn * std::log(td.trace / nn) - td.log_det) + nn * nn / td.trace;
    if (!(v.trace_inverse < printed)) ++printed_form_violations;
  }
  std::printf("  note: exponent-n variant of the trace bound fails on %d of 100 matrices\n", printed_form_violations);
  return {violations == 0 && worst <= 1e-9,
          fmt("matrices=100 violations=%d max_rel_err_vs_spectrum=%.2e", violations, worst)};
}

// 9. coefficient bounds for positive-root polynomials
Outcome polynomial_application() {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<std::size_t> nd(2, 10);
  int violations = 0;
  int printed_form_violations = 0;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> roots(nd(rng));
    for (auto& r : roots) r = hga_test::log_uniform(rng, 1e-2, 1e2);
    const PolynomialVerdict v = verify_polynomial_bounds(roots);
    if (!v.passed) ++violations;

    const PolynomialCoeffs p = expand_from_roots(roots);
    const double n = static_cast<double>(p.degree());
    const double printed = v.lower + std::numbers::e * std::abs(p[0]) * std::pow(std::abs(p[1] / (n * p[0])), n);
    if (!(v.value <= printed)) ++printed_form_violations;
  }
  double worst_equal = 0;
  for (std::size_t n = 2; n <= 10; ++n) {
    for (double r : {0.05, 1.0, 7.5}) {
      const PolynomialVerdict v = verify_polynomial_bounds(std::vector<double>(n, r));
      if (!v.passed) ++violations;
      worst_equal = std::max(worst_equal, rel_err(v.lower, v.value));
    }
  }
  std::printf("  note: exponent-n variant of the upper bound fails on %d of 100 polynomials\n",
              printed_form_violations);
  return {violations == 0 && worst_equal <= 1e-12,
          fmt("polynomials=100 violations=%d equal_root_rel_err=%.2e", violations, worst_equal)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"threshold constant", threshold_constant},
      {"sharpness witnesses", sharpness_witnesses},
      {"oracle equivalence", oracle_equivalence},
      {"closed-form consistency", closed_form_consistency},
      {"dominance of simple bounds", simple_dominance},
      {"half-weight identities", half_weight_identities},
      {"kernel shape suite", kernel_shape_suite},
      {"matrix application", matrix_application},
      {"polynomial application", polynomial_application},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.passed) ++failed;
    std::printf("%s criterion %d (%s): %s\n", o.passed ? "PASS" : "FAIL", index, name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %d criteria passed\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}
