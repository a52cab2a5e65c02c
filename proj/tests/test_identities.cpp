#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <set>

#include "trigsum/identities.hpp"

using namespace trigsum;

namespace {

const std::array<IdentityId, 7> kSeriesIds{
    IdentityId::lerch1, IdentityId::series2,  IdentityId::series3,
    IdentityId::series4, IdentityId::imag1,   IdentityId::real1,
    IdentityId::series4a};

// The series3 right side rebuilt from the real-part identity combined
// with the series2 right side, following the derivation chain.
double series3_rhs_from_chain(double v) {
  const double pi = constants::pi;
  const double s2 = rhs_closed(IdentityId::series2, NuValue(v)).real();
  const double dpsi = digamma(0.5 * (v + 1.0)) - digamma(0.5 * v);
  const double numerator =
      s2 + std::log(9.0 / 8.0) * std::sin(2.0 * v * pi) -
      std::sin(2.0 * v * pi) * (std::log(0.5 * pi) - digamma(1.0) + digamma(v)) +
      pi * std::sin(v * pi) * std::sin(v * pi) - std::sin(v * pi) * dpsi;
  return 0.5 * numerator;
}

}  // namespace

TEST_CASE("identity table is total and ids round-trip", "[identities]") {
  CHECK(kIdentityTable.size() == 17);
  std::set<std::string> names;
  for (const auto& info : kIdentityTable) {
    names.insert(std::string(info.name));
    const auto back = identity_from_string(info.name);
    REQUIRE(back.has_value());
    CHECK(*back == info.id);
    CHECK(to_string(info.id) == info.name);
  }
  CHECK(names.size() == 17);
  CHECK(!identity_from_string("nonsense").has_value());
}

TEST_CASE("rhs_closed anchored values", "[identities]") {
  // series2 at 1/4 -> log(pi/2)
  CHECK(std::fabs(rhs_closed(IdentityId::series2, NuValue(0.25)).real() -
                  0.451582705289454864726195229895) < 1e-13);
  // lerch1 at 1/2 -> log(8/pi^2) = 3 log 2 - 2 log pi
  const double expect_l1 = 3.0 * constants::log2 - 2.0 * std::log(constants::pi);
  CHECK(std::fabs(rhs_closed(IdentityId::lerch1, NuValue(0.5)).real() -
                  expect_l1) < 1e-13);
  CHECK(std::fabs(expect_l1 - (-0.210018230018964420035158338331)) < 1e-15);
  // int-thm1 at 1/2 -> log pi (cot term vanishes, psi(1/2)-psi(1) = -2log2)
  CHECK(std::fabs(rhs_closed(IdentityId::int_thm1, NuValue(0.5)).real() -
                  std::log(constants::pi)) < 1e-13);
  // closed forms carry rounding-level error estimates
  CHECK(rhs_closed(IdentityId::series3, NuValue(0.3)).error_estimate < 1e-13);
  CHECK_THROWS_AS(rhs_closed(IdentityId::inf_prod, NuValue(0.3)), DomainError);
}

TEST_CASE("every series identity holds across the nu sweep",
          "[identities][property]") {
  for (IdentityId id : kSeriesIds) {
    for (int i = 1; i <= 19; ++i) {
      const double v = 0.05 * i;
      const NuValue nu(v);
      const auto lhs = lhs_series(id, nu, 1e-9);
      const auto rhs = rhs_closed(id, nu);
      CAPTURE(to_string(id), v);
      REQUIRE(std::fabs(lhs.real() - rhs.real()) < 1e-8);
    }
  }
}

TEST_CASE("series4a left side assembles from the real-part components",
          "[identities]") {
  const NuValue nu(0.3);
  const auto lhs = lhs_series(IdentityId::series4a, nu, 1e-8);
  const auto rhs = rhs_closed(IdentityId::series4a, nu);
  CHECK(std::fabs(lhs.real() - rhs.real()) < 2e-8);
}

TEST_CASE("series3 right side equals its derivation chain identically",
          "[identities][property]") {
  for (int i = 1; i <= 20; ++i) {
    const double v = i / 21.0;
    CAPTURE(v);
    REQUIRE(std::fabs(series3_rhs_from_chain(v) -
                      rhs_closed(IdentityId::series3, NuValue(v)).real()) <
            1e-12);
  }
}

TEST_CASE("alternating digamma series", "[identities]") {
  // nu = 1/2 is the Leibniz series: pi/2.
  CHECK(std::fabs(alt_digamma_sum(NuValue(0.5), 1e-10) - constants::pi / 2.0) <
        1e-12);
  // Generic and near-endpoint points against the digamma closed form.
  for (double v : {0.25, 0.999}) {
    const double closed =
        0.5 * (digamma(0.5 * (v + 1.0)) - digamma(0.5 * v));
    CAPTURE(v);
    CHECK(std::fabs(alt_digamma_sum(NuValue(v), 1e-8) - closed) < 1e-8);
  }
  // Frozen reference for nu = 1/4: (psi(0.625) - psi(0.125))/2.
  CHECK(std::fabs(alt_digamma_sum(NuValue(0.25), 1e-10) -
                  3.46789194935964415029598065553) < 1e-11);
  // Brute-force pairing oracle.
  double brute = 0.0;
  for (std::int64_t n = 999999; n >= 0; --n) {
    brute += (n % 2 == 0 ? 1.0 : -1.0) / (0.25 + n);
  }
  CHECK(std::fabs(alt_digamma_sum(NuValue(0.25), 1e-10) - brute) < 1e-6);
}

TEST_CASE("endpoint constants", "[identities]") {
  CHECK(endpoint_value(IdentityId::inf_series0) == -constants::log2);
  CHECK(std::fabs(endpoint_value(IdentityId::inf_series1) -
                  (-0.529246547722271372130255897557)) < 1e-14);
  CHECK(std::fabs(endpoint_value(IdentityId::inf_series2) -
                  0.365345914884597434843279673656) < 1e-14);
  CHECK_THROWS_AS(endpoint_value(IdentityId::series2), DomainError);
}

TEST_CASE("endpoint continuity of the absolutely convergent identities",
          "[identities]") {
  // rhs(lerch1, nu) -> -log 2 and rhs(series4, nu) -> log(3 pi/16) as
  // nu -> 0+; the gap shrinks along 1e-2, 1e-3, 1e-4.
  double prev0 = 1e100, prev4 = 1e100;
  for (double v : {1e-2, 1e-3, 1e-4}) {
    const double g0 = std::fabs(rhs_closed(IdentityId::lerch1, NuValue(v)).real() -
                                endpoint_value(IdentityId::inf_series0));
    const double g4 = std::fabs(rhs_closed(IdentityId::series4, NuValue(v)).real() -
                                endpoint_value(IdentityId::inf_series1));
    CAPTURE(v);
    CHECK(g0 < prev0);
    CHECK(g4 < prev4);
    prev0 = g0;
    prev4 = g4;
  }
  CHECK(prev0 < 1e-3);
  CHECK(prev4 < 1e-3);
}

TEST_CASE("series2 does not extend to the closed interval",
          "[identities][negative-control]") {
  // At nu = 0 every sine factor vanishes, so the series value is 0 there;
  // the two-sided structure approaches -pi instead. The gap between the
  // nu = 0 series value and the near-endpoint closed form stays ~pi.
  const double rhs = rhs_closed(IdentityId::series2, NuValue(1e-3)).real();
  CHECK(std::fabs(0.0 - rhs) > 3.0);
  // Inside the open interval the identity itself still holds: the
  // breakdown is confined to the endpoint.
  const auto lhs = lhs_series(IdentityId::series2, NuValue(1e-3), 1e-6);
  CHECK(std::fabs(lhs.real() - rhs) < 1e-5);
}

TEST_CASE("lemma comparison at moderate truncation", "[identities]") {
  // Residuals below 1e-4 at averaged truncation N = 1e5.
  CHECK(lemma_residual(0.5, NuValue(0.3), 100000, 1e-8) < 1e-4);
  CHECK(lemma_residual(0.5, NuValue(0.5), 100000, 1e-8) < 1e-4);
  CHECK(lemma_residual(0.25, NuValue(0.6), 100000, 1e-8) < 1e-4);

  // At x = 1/2, nu = 1/2 the left side is -i pi/2 exactly.
  const auto sides = lemma_sides(0.5, NuValue(0.5), 1000, 1e-8);
  CHECK(std::fabs(sides.lhs.imag() + constants::pi / 2.0) < 1e-10);
  CHECK(std::fabs(sides.lhs.real()) < 1e-10);

  CHECK_THROWS_AS(lemma_residual(0.0, NuValue(0.3), 1000, 1e-8), DomainError);
}

TEST_CASE("lemma bilateral sum links to the series catalog",
          "[identities]") {
  // At x = 1/2 the +/-k pairs combine into sin(2k nu pi) log((2k+1)/(2k-1)),
  // so Im(bilateral) = log(3) sin(2 nu pi) - rhs(series3).
  const double v = 0.3;
  const auto bilateral = bilateral_symmetric_sum_averaged(
      [v](std::int64_t k) {
        const double kk = static_cast<double>(k);
        return detail::unit_phase(v * kk) * std::log((0.5 + kk) / kk);
      },
      100000);
  const double expect = std::log(3.0) * std::sin(2.0 * v * constants::pi) -
                        rhs_closed(IdentityId::series3, NuValue(v)).real();
  CHECK(std::fabs(bilateral.imag() - expect) < 1e-4);
}

TEST_CASE("kronecker comparison", "[identities]") {
  CHECK(kronecker_residual(0.4, NuValue(0.3), 100000) < 1e-3);
  CHECK(kronecker_residual(0.25, NuValue(0.5), 100000) < 1e-3);

  // y = 1/2, nu = 1/2: the closed form collapses to pi - 2.
  const auto sides = kronecker_sides(0.5, NuValue(0.5), 100000);
  CHECK(std::abs(sides.rhs - std::complex<double>(constants::pi - 2.0, 0.0)) <
        1e-12);
  CHECK(sides.residual() < 1e-3);

  CHECK_THROWS_AS(kronecker_residual(1e-4, NuValue(0.3), 1000), DomainError);
  CHECK_THROWS_AS(kronecker_residual(0.9999, NuValue(0.3), 1000), DomainError);
}

TEST_CASE("int-thm2 excludes its singular point", "[identities]") {
  CHECK_THROWS_AS(rhs_closed(IdentityId::int_thm2, NuValue(0.5)), DomainError);
  CHECK_NOTHROW(rhs_closed(IdentityId::int_thm2, NuValue(0.45)));
}

TEST_CASE("catalog series specs exist exactly for the series identities",
          "[identities]") {
  for (IdentityId id : kSeriesIds) CHECK_NOTHROW(catalog_series_spec(id));
  CHECK_THROWS_AS(catalog_series_spec(IdentityId::kronecker), DomainError);
  CHECK_THROWS_AS(lhs_series(IdentityId::inf_prod, NuValue(0.3), 1e-8),
                  DomainError);
}
