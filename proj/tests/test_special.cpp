#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "trigsum/special.hpp"

using namespace trigsum;

namespace {
constexpr double kEulerGamma = 0.57721566490153286060651209008240;
}

TEST_CASE("digamma reproduces the closed-form special values", "[special]") {
  // psi(1) = -gamma, psi(1/2) = -gamma - 2 log 2,
  // psi(1/4) = -pi/2 - 3 log 2 - gamma, psi(2) = 1 - gamma.
  CHECK(std::fabs(digamma(1.0) + kEulerGamma) < 1e-12);
  CHECK(std::fabs(digamma(0.5) + kEulerGamma + 2.0 * constants::log2) < 1e-12);
  CHECK(std::fabs(digamma(0.25) -
                  (-constants::pi / 2 - 3.0 * constants::log2 - kEulerGamma)) <
        1e-12);
  CHECK(std::fabs(digamma(2.0) - (1.0 - kEulerGamma)) < 1e-12);
}

TEST_CASE("digamma matches independently computed reference values",
          "[special]") {
  // 30-digit reference values computed with mpmath.
  CHECK(std::fabs(digamma(0.3) - (-3.50252422220013298896449450737)) < 1e-13);
  CHECK(std::fabs(digamma(7.7) - 1.97488209491310181904742294405) < 1e-13);
  CHECK(std::fabs(digamma(0.625) - (-1.45270876457656656721078161202)) <
        1e-13);
  CHECK(std::fabs(digamma(0.125) - (-8.38849266329585486780274292309)) <
        1e-13);
}

TEST_CASE("digamma recurrence psi(z+1) = psi(z) + 1/z", "[special]") {
  for (double z = 0.1; z <= 50.0; z += 0.0703) {
    CAPTURE(z);
    REQUIRE(std::fabs(digamma(z + 1.0) - digamma(z) - 1.0 / z) < 1e-12);
  }
}

TEST_CASE("digamma rejects out-of-domain arguments", "[special]") {
  CHECK_THROWS_AS(digamma(0.0), DomainError);
  CHECK_THROWS_AS(digamma(-1.5), DomainError);
  CHECK_THROWS_AS(digamma(std::nan("")), DomainError);
  CHECK_THROWS_AS(digamma(std::numeric_limits<double>::infinity()),
                  DomainError);
}

TEST_CASE("log_gamma hits the elementary values", "[special]") {
  CHECK(std::fabs(log_gamma(1.0)) < 1e-13);
  CHECK(std::fabs(log_gamma(2.0)) < 1e-13);
  // Gamma(1/2) = sqrt(pi)
  CHECK(std::fabs(log_gamma(0.5) - 0.5 * std::log(constants::pi)) < 1e-13);
  CHECK_THROWS_AS(log_gamma(0.0), DomainError);
  CHECK_THROWS_AS(log_gamma(-3.0), DomainError);
}

TEST_CASE("log_gamma functional equation and system cross-check",
          "[special]") {
  for (double z = 0.5; z <= 10.0; z += 0.21) {
    CAPTURE(z);
    const double ratio = std::exp(log_gamma(z + 1.0) - log_gamma(z));
    REQUIRE(std::fabs(ratio - z) < 1e-10 * z);
    REQUIRE(std::fabs(log_gamma(z) - std::lgamma(z)) < 1e-12);
  }
}

TEST_CASE("digamma integral representation cross-oracle", "[special][quad]") {
  QuadratureConfig cfg;
  cfg.tol = 1e-10;
  for (double z : {0.1, 0.25, 0.5, 1.0, 1.5, 2.0}) {
    CAPTURE(z);
    const auto got = digamma_integral_check(z, cfg);
    REQUIRE(std::fabs(got.real() - digamma(z)) < 1e-8);
    REQUIRE(got.method == Method::quad);
    REQUIRE(got.work > 0);
  }
  // z = 3 against the digamma oracle as well.
  CHECK(std::fabs(digamma_integral_check(3.0, cfg).real() - digamma(3.0)) <
        1e-8);
}

TEST_CASE("quadrature config validation", "[special][quad]") {
  QuadratureConfig cfg;
  cfg.tol = 1e-14;  // below the supported floor
  CHECK_THROWS_AS(cfg.validate(), DomainError);
  cfg.tol = 1e-10;
  cfg.max_subdivisions = 0;
  CHECK_THROWS_AS(cfg.validate(), DomainError);
}

TEST_CASE("digamma integral check reports quadrature failure", "[special]") {
  QuadratureConfig cfg;
  cfg.tol = 1e-10;
  cfg.max_subdivisions = 2;  // cannot resolve the substituted tails
  CHECK_THROWS_AS(digamma_integral_check(0.5, cfg), QuadratureError);
}

TEST_CASE("constants agree with the digamma anchor", "[special]") {
  CHECK(std::fabs(constants::euler_gamma + digamma(1.0)) < 1e-13);
  CHECK(std::fabs(constants::log2 - std::log(2.0)) == 0.0);
}
