#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cmath>
#include <random>

#include "hga/errors.hpp"
#include "hga/sharp_bounds.hpp"
#include "hga/simple_bounds.hpp"
#include "test_support.hpp"

using namespace hga;
using hga_test::rel_err;

TEST_CASE("reference values") {
  const double g = std::cbrt(6.0);
  const double h = 18.0 / 11.0;
  const auto hl = simple_harmonic_lower(2.0, g, 1.0 / 3.0);
  CHECK(rel_err(hl.bound, 0.90574571962148797) <= 1e-13);
  CHECK(hl.is_strict);
  CHECK(hl.kind == SimpleBoundKind::harmonic_lower);
  CHECK(rel_err(simple_harmonic_lower(1.0, 0.6, 0.5).bound, 0.20940691773445651) <= 1e-13);

  CHECK(rel_err(simple_arithmetic_upper(h, g, 1.0 / 3.0).bound, 3.6666852489781084) <= 1e-13);
  CHECK(rel_err(simple_arithmetic_upper(0.36, 0.6, 0.5).bound, 1.7191409142295226) <= 1e-13);

  const auto gi = simple_geometric_interval(2.0, h, 1.0 / 3.0, 3);
  CHECK(rel_err(gi.lower.bound, 0.80786480435086331) <= 1e-13);
  CHECK(rel_err(gi.upper.bound, 4.0510828731510086) <= 1e-13);
  CHECK(gi.lower.kind == SimpleBoundKind::geometric_lower);
  CHECK(gi.upper.kind == SimpleBoundKind::geometric_upper);
  const auto gi2 = simple_geometric_interval(1.0, 0.64, 0.5, 2);
  CHECK(rel_err(gi2.lower.bound, 0.21370824157268030) <= 1e-13);
  CHECK(rel_err(gi2.upper.bound, 2.9947371018086901) <= 1e-13);
}

TEST_CASE("input checks") {
  CHECK_THROWS_AS(simple_harmonic_lower(1.0, 1.0, 0.3), DegenerateInputError);
  CHECK_THROWS_AS(simple_arithmetic_upper(1.0, 1.0, 0.3), DegenerateInputError);
  CHECK_THROWS_AS(simple_geometric_interval(1.0, 1.0, 0.3, 3), DegenerateInputError);
  CHECK_THROWS_AS(simple_geometric_interval(1.0, 0.5, 0.4, 3), DomainError);
  CHECK_THROWS_AS(simple_geometric_interval(1.0, 0.5, 0.4, 1), DomainError);
  CHECK_THROWS_AS(simple_harmonic_lower(1.0, 0.5, 0.7), DomainError);
  CHECK_THROWS_AS(simple_harmonic_lower(-1.0, 0.5, 0.3), DomainError);
}

TEST_CASE("no overflow for tiny alpha") {
  const auto hl = simple_harmonic_lower(1.0, 0.5, 1e-4);
  CHECK(hl.bound >= 0.0);
  CHECK(std::isfinite(hl.bound));
  const auto au = simple_arithmetic_upper(0.5, 1.0, 1e-4);
  CHECK(au.bound > 1.0);
}

TEST_CASE("threshold constant") {
  const auto t0 = improvement_threshold();
  CHECK(std::abs(t0 - 0.27846454276107380) <= 1e-15);
  CHECK(std::abs(t0 * std::exp(t0 + 1) - 1) <= 1e-12);
}

TEST_CASE("improvement over the trivial bound") {
  CHECK(improves_over_trivial(1.0, 0.05, 0.01, 100));
  CHECK_FALSE(improves_over_trivial(1.0, 0.5, 0.01, 100));
  CHECK_FALSE(improves_over_trivial(1.0, 1.0, 0.01, 100));
  // Just below t0 the finite-n factor n/(n-1) still spoils it for small n.
  CHECK_FALSE(improves_over_trivial(1.0, 0.27, 0.5, 2));
  CHECK(improves_over_trivial(1.0, 0.27, 1e-6, 1000000));
}

TEST_CASE("property: simple bounds contain the sharp ones") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::size_t> nd(2, 8);
  std::uniform_real_distribution<double> sd(0.05, 1.5);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = nd(rng);
    const auto w = hga_test::random_weights(rng, n);
    const auto x = hga_test::random_values(rng, n, sd(rng));
    const auto m = hga_test::ref_means(x, w);
    const double h = static_cast<double>(m.h), g = static_cast<double>(m.g), a = static_cast<double>(m.a);
    const double alpha = min_weight(w).alpha;

    const BoundInterval hb = harmonic_bounds(a, g, w);
    REQUIRE(simple_harmonic_lower(a, g, alpha).bound < hb.lower);
    const BoundInterval ab = arithmetic_bounds(h, g, w);
    REQUIRE(simple_arithmetic_upper(h, g, alpha).bound > ab.upper);
    const BoundInterval gb = geometric_bounds(a, h, w);
    const auto gi = simple_geometric_interval(a, h, alpha, static_cast<int>(n));
    REQUIRE(gi.lower.bound < gb.lower);
    REQUIRE(gi.upper.bound > gb.upper);
  }
}
