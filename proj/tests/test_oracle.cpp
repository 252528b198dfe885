#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "hga/errors.hpp"
#include "hga/oracle.hpp"
#include "hga/sharp_bounds.hpp"
#include "test_support.hpp"

using namespace hga;
using hga_test::rel_err;

namespace {

const std::vector<double> kThirds{1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};

KnownPair ag(double a, double g) { return {{MeanKind::arithmetic, a}, {MeanKind::geometric, g}}; }
KnownPair ah(double a, double h) { return {{MeanKind::arithmetic, a}, {MeanKind::harmonic, h}}; }
KnownPair hg(double h, double g) { return {{MeanKind::harmonic, h}, {MeanKind::geometric, g}}; }

}  // namespace

TEST_CASE("mean kind names") {
  CHECK(to_string(MeanKind::harmonic) == "harmonic");
  CHECK(to_string(MeanKind::geometric) == "geometric");
  CHECK(to_string(MeanKind::arithmetic) == "arithmetic");
}

TEST_CASE("two value search on the sample 1, 2, 3") {
  const double g = std::cbrt(6.0);
  const double h = 18.0 / 11.0;

  const OracleReport rh = two_value_search(kThirds, ag(2.0, g), MeanKind::harmonic);
  const BoundInterval bh = harmonic_bounds(2.0, g, kThirds);
  CHECK(rel_err(rh.observed_min, bh.lower) <= 1e-9);
  CHECK(rel_err(rh.observed_max, bh.upper) <= 1e-9);
  CHECK(rh.argmin_isolated.size() == 1);
  CHECK(rh.argmax_isolated.size() == 1);
  CHECK(verify_sharpness(bh, rh).passed);

  const OracleReport rg = two_value_search(kThirds, ah(2.0, h), MeanKind::geometric);
  CHECK(verify_sharpness(geometric_bounds(2.0, h, kThirds), rg).passed);

  const OracleReport ra = two_value_search(kThirds, hg(h, g), MeanKind::arithmetic);
  CHECK(verify_sharpness(arithmetic_bounds(h, g, kThirds), ra).passed);
}

TEST_CASE("argument samples reproduce the constraints") {
  const std::vector<double> w{0.1, 0.2, 0.3, 0.4};
  const OracleReport r = two_value_search(w, ag(1.5, 1.2), MeanKind::harmonic);
  REQUIRE(r.argmin_sample.has_value());
  REQUIRE(r.argmax_sample.has_value());
  for (const auto* s : {&*r.argmin_sample, &*r.argmax_sample}) {
    const auto m = hga_test::ref_means({s->values().begin(), s->values().end()}, {s->weights().begin(), s->weights().end()});
    CHECK(rel_err(static_cast<double>(m.a), 1.5) <= 1e-9);
    CHECK(rel_err(static_cast<double>(m.g), 1.2) <= 1e-9);
  }
  CHECK(r.observed_min <= r.observed_max);
  CHECK(r.argmin_isolated == std::vector<std::size_t>{0});
  CHECK(r.argmax_isolated == std::vector<std::size_t>{0});
}

TEST_CASE("size limit and degenerate input") {
  const std::vector<double> w13(13, 1.0 / 13.0);
  CHECK_THROWS_AS(two_value_search(w13, ag(1.0, 0.9), MeanKind::harmonic), SizeError);
  const OracleReport r = two_value_search(kThirds, ag(1.0, 1.0), MeanKind::harmonic);
  CHECK(r.observed_min == doctest::Approx(1.0));
  CHECK(r.observed_max == doctest::Approx(1.0));
}

TEST_CASE("random search stays inside the sharp interval and is reproducible") {
  const std::vector<double> w{0.15, 0.25, 0.6};
  const BoundInterval b = harmonic_bounds(1.0, 0.8, w);
  const OracleReport r1 = random_feasible_search(w, ag(1.0, 0.8), MeanKind::harmonic, 500, 42);
  const OracleReport r2 = random_feasible_search(w, ag(1.0, 0.8), MeanKind::harmonic, 500, 42);
  CHECK(r1.observed_min == r2.observed_min);
  CHECK(r1.observed_max == r2.observed_max);
  CHECK(r1.evaluations > 0);
  CHECK(r1.observed_min >= b.lower * (1 - 1e-9));
  CHECK(r1.observed_max <= b.upper * (1 + 1e-9));
  REQUIRE(r1.argmin_sample.has_value());
  const auto& s = *r1.argmin_sample;
  const auto m = hga_test::ref_means({s.values().begin(), s.values().end()}, {s.weights().begin(), s.weights().end()});
  CHECK(rel_err(static_cast<double>(m.a), 1.0) <= 1e-6);
  CHECK(rel_err(static_cast<double>(m.g), 0.8) <= 1e-6);
}

TEST_CASE("sharpness verdict flags a wrong interval") {
  const OracleReport r = two_value_search(kThirds, ag(2.0, std::cbrt(6.0)), MeanKind::harmonic);
  BoundInterval fake = harmonic_bounds(2.0, std::cbrt(6.0), kThirds);
  fake.upper *= 1.01;
  const SharpnessVerdict v = verify_sharpness(fake, r);
  CHECK_FALSE(v.passed);
  CHECK(v.contained);
  CHECK_FALSE(v.endpoints_match);
  CHECK_FALSE(v.details.empty());
  fake.upper /= 1.02;
  CHECK_FALSE(verify_sharpness(fake, r).contained);
}

TEST_CASE("property: exhaustive search matches the sharp endpoints") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::size_t> nd(2, 7);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = nd(rng);
    const auto w = hga_test::random_weights(rng, n);
    const auto x = hga_test::random_values(rng, n, 0.8);
    const auto m = hga_test::ref_means(x, w);
    const double h = static_cast<double>(m.h), g = static_cast<double>(m.g), a = static_cast<double>(m.a);
    const std::size_t j = min_weight(w).index;

    const OracleReport rh = two_value_search(w, ag(a, g), MeanKind::harmonic);
    REQUIRE(verify_sharpness(harmonic_bounds(a, g, w), rh).passed);
    REQUIRE(rh.argmin_isolated == std::vector<std::size_t>{j});
    REQUIRE(rh.argmax_isolated == std::vector<std::size_t>{j});

    const OracleReport rg = two_value_search(w, ah(a, h), MeanKind::geometric);
    REQUIRE(verify_sharpness(geometric_bounds(a, h, w), rg).passed);
    REQUIRE(rg.argmin_isolated == std::vector<std::size_t>{j});

    const OracleReport ra = two_value_search(w, hg(h, g), MeanKind::arithmetic);
    REQUIRE(verify_sharpness(arithmetic_bounds(h, g, w), ra).passed);
  }
}
