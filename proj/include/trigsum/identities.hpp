#ifndef TRIGSUM_IDENTITIES_HPP
#define TRIGSUM_IDENTITIES_HPP

// The identity catalog. Every entry binds a left side (series, bilateral
// sum, integral, or infinite product) to a closed-form right side built
// from digamma, logs and trigonometry, together with its parameter domain.

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>

#include "trigsum/constants.hpp"
#include "trigsum/errors.hpp"
#include "trigsum/eval_result.hpp"
#include "trigsum/nu_value.hpp"
#include "trigsum/products.hpp"
#include "trigsum/quadrature.hpp"
#include "trigsum/series.hpp"
#include "trigsum/special.hpp"

namespace trigsum {

enum class IdentityId {
  lerch1,
  series2,
  series3,
  series4,
  imag1,
  real1,
  series4a,
  lemma_lerch2,
  kronecker,
  alt_digamma,
  int_thm1,
  int_thm2,
  inf_series0,
  inf_series1,
  inf_series2,
  inf_prod,
  wallis,
};

/// How an identity's left side is evaluated; drives dispatch in the
/// harness and the CLI.
enum class IdentityKind {
  trig_series,      // accelerated oscillatory series vs closed form
  bilateral,        // averaged bilateral sum vs closed/assembled side
  alternating,      // paired alternating series vs digamma form
  integral,         // adaptive quadrature vs closed form
  endpoint_series,  // parameter-free series limit vs exact constant
  product,          // infinite product vs Gamma-ratio closed form
};

struct IdentityInfo {
  IdentityId id;
  std::string_view name;      // stable string used by CLI and reports
  IdentityKind kind;
  bool needs_nu;
  bool needs_aux;             // x for the lemma, y for the Kronecker sum
  double floor_tolerance;     // method-limited; sweeps never go below this
  std::string_view summand;   // human-readable left side
  std::string_view domain;    // human-readable parameter domain
};

inline constexpr std::array<IdentityInfo, 17> kIdentityTable{{
    {IdentityId::lerch1, "lerch1", IdentityKind::trig_series, true, false, 0.0,
     "sum_{k>=2} log(1-1/k^2) cos(2k nu pi)", "0 < nu < 1"},
    {IdentityId::series2, "series2", IdentityKind::trig_series, true, false,
     0.0, "sum_{k>=2} log((k-1)/(k+1)) sin(2k nu pi)", "0 < nu < 1"},
    {IdentityId::series3, "series3", IdentityKind::trig_series, true, false,
     0.0, "sum_{k>=2} log((2k-1)/(2k+1)) sin(2k nu pi)", "0 < nu < 1"},
    {IdentityId::series4, "series4", IdentityKind::trig_series, true, false,
     0.0, "sum_{k>=2} log(4(k^2-1)/(4k^2-1)) cos(2k nu pi)", "0 < nu < 1"},
    {IdentityId::imag1, "imag1", IdentityKind::trig_series, true, false, 0.0,
     "sum_{k>=1} log(k/(k+1)) sin((2k+1) nu pi)", "0 < nu < 1"},
    {IdentityId::real1, "real1", IdentityKind::trig_series, true, false, 0.0,
     "sum_{k>=1} log((2k+1)^2/(4k(k+1))) cos((2k+1) nu pi)", "0 < nu < 1"},
    {IdentityId::series4a, "series4a", IdentityKind::trig_series, true, false,
     0.0, "sum_{k>=2} log((4k^2-1)^2/(16k^2(k^2-1))) cos(2k nu pi)",
     "0 < nu < 1"},
    {IdentityId::lemma_lerch2, "lemma-lerch2", IdentityKind::bilateral, true,
     true, 1e-4, "sum_{n>=0} e^{-2x pi i(nu+n)}/(nu+n) vs bilateral log sum",
     "0 < nu < 1, 0 < x < 1"},
    {IdentityId::kronecker, "kronecker", IdentityKind::bilateral, true, true,
     1e-3, "sum'_{k} e^{2k nu pi i}/(k+y)",
     "0 < nu < 1, 1e-3 < y < 1-1e-3"},
    {IdentityId::alt_digamma, "alt-digamma", IdentityKind::alternating, true,
     false, 0.0, "sum_{n>=0} (-1)^n/(nu+n)", "0 < nu < 1"},
    {IdentityId::int_thm1, "int-thm1", IdentityKind::integral, true, false,
     0.0,
     "int_0^inf sinh(x) e^{-x} (e^{-x}-2cos(2nu pi))/"
     "(cosh(x)-cos(2nu pi)) dx/x",
     "1e-3 < nu < 1-1e-3"},
    {IdentityId::int_thm2, "int-thm2", IdentityKind::integral, true, false,
     0.0,
     "int_0^inf sinh(x) e^{-2x} (e^{-2x}-2cos(2nu pi))/"
     "(cosh(2x)-cos(2nu pi)) dx/x",
     "1e-3 < nu < 1-1e-3, nu != 1/2"},
    {IdentityId::inf_series0, "infseries0", IdentityKind::endpoint_series,
     false, false, 1e-9, "sum_{k>=2} log(1-1/k^2)", "parameter-free"},
    {IdentityId::inf_series1, "infseries1", IdentityKind::endpoint_series,
     false, false, 1e-9, "sum_{k>=2} log(4(k^2-1)/(4k^2-1))",
     "parameter-free"},
    {IdentityId::inf_series2, "infseries2", IdentityKind::endpoint_series,
     false, false, 1e-9, "sum_{k>=2} log((4k^2-1)^2/(16k^2(k^2-1)))",
     "parameter-free"},
    {IdentityId::inf_prod, "infprod", IdentityKind::product, false, false,
     1e-9, "prod_{m>=0} [(m+5/2)(m+3/2)]^2/((m+3)(m+2)^2(m+1))",
     "parameter-free"},
    {IdentityId::wallis, "wallis", IdentityKind::product, false, false, 1e-9,
     "prod_{k>=1} (2k)^2/((2k-1)(2k+1))", "parameter-free"},
}};

inline const IdentityInfo& identity_info(IdentityId id) {
  for (const auto& e : kIdentityTable) {
    if (e.id == id) return e;
  }
  throw DomainError("unknown identity id");
}

inline std::string_view to_string(IdentityId id) {
  return identity_info(id).name;
}

inline std::optional<IdentityId> identity_from_string(std::string_view s) {
  for (const auto& e : kIdentityTable) {
    if (e.name == s) return e.id;
  }
  return std::nullopt;
}

/// The catalog SeriesSpec of a trigonometric-series identity.
inline SeriesSpec catalog_series_spec(IdentityId id) {
  auto k2 = [](std::int64_t k) { return static_cast<double>(k); };
  switch (id) {
    case IdentityId::lerch1:
      return {[k2](std::int64_t k) {
                const double kk = k2(k);
                return std::log(1.0 - 1.0 / (kk * kk));
              },
              Oscillation::cos_2k, 2};
    case IdentityId::series2:
      return {[k2](std::int64_t k) {
                const double kk = k2(k);
                return std::log((kk - 1.0) / (kk + 1.0));
              },
              Oscillation::sin_2k, 2};
    case IdentityId::series3:
      return {[k2](std::int64_t k) {
                const double kk = k2(k);
                return std::log((2.0 * kk - 1.0) / (2.0 * kk + 1.0));
              },
              Oscillation::sin_2k, 2};
    case IdentityId::series4:
      return {[k2](std::int64_t k) {
                const double kk = k2(k);
                return std::log(4.0 * (kk * kk - 1.0) / (4.0 * kk * kk - 1.0));
              },
              Oscillation::cos_2k, 2};
    case IdentityId::imag1:
      return {[k2](std::int64_t k) {
                const double kk = k2(k);
                return std::log(kk / (kk + 1.0));
              },
              Oscillation::sin_2k1, 1};
    case IdentityId::real1:
      return {[k2](std::int64_t k) {
                const double kk = k2(k);
                const double n = 2.0 * kk + 1.0;
                return std::log(n * n / (4.0 * kk * (kk + 1.0)));
              },
              Oscillation::cos_2k1, 1};
    case IdentityId::series4a:
      // The summand carries the logarithm; the log-free variant diverges.
      return {[k2](std::int64_t k) {
                const double kk = k2(k);
                const double n = 4.0 * kk * kk - 1.0;
                return std::log(n * n / (16.0 * kk * kk * (kk * kk - 1.0)));
              },
              Oscillation::cos_2k, 2};
    default:
      throw DomainError("identity '" + std::string(to_string(id)) +
                        "' has no series spec");
  }
}

namespace detail {

// Sum of absolute term magnitudes doubles as a rounding-error scale for
// the closed forms.
struct ClosedForm {
  double value = 0.0;
  double magnitude = 0.0;
  void add(double term) {
    value += term;
    magnitude += std::fabs(term);
  }
  EvalResult result(std::int64_t work) const {
    EvalResult r;
    r.value = value;
    r.error_estimate =
        16.0 * std::numeric_limits<double>::epsilon() * (1.0 + magnitude);
    r.work = work;
    r.method = Method::closed;
    return r;
  }
};

inline void require_int_thm2_domain(NuValue nu) {
  if (std::fabs(nu.value() - 0.5) < 1e-9) {
    throw DomainError(
        "int-thm2 is singular at nu = 1/2 (cosec(2 nu pi) diverges); the "
        "two-sided limit exists but is not taken");
  }
}

}  // namespace detail

/// Closed-form right side of a nu-parameterized identity. Work counts the
/// number of digamma evaluations.
inline EvalResult rhs_closed(IdentityId id, NuValue nu) {
  const double v = nu.value();
  const double pi = constants::pi;
  detail::ClosedForm cf;
  switch (id) {
    case IdentityId::lerch1: {
      const double s = std::sin(v * pi);
      cf.add(2.0 * s * s * (digamma(1.0) - digamma(v) - std::log(pi)));
      cf.add(-0.5 * pi * std::sin(2.0 * v * pi));
      cf.add(-constants::log2);
      return cf.result(2);
    }
    case IdentityId::series2: {
      cf.add(std::sin(2.0 * v * pi) *
             (std::log(4.0 * pi) - digamma(1.0) + digamma(v)));
      const double c = std::cos(v * pi);
      cf.add(pi * c * c);
      return cf.result(2);
    }
    case IdentityId::series3: {
      cf.add(0.5 * std::sin(v * pi) *
             (digamma(0.5 * v) - digamma(0.5 * (v + 1.0))));
      cf.add(0.5 * pi);
      cf.add(std::log(3.0) * std::sin(2.0 * v * pi));
      return cf.result(2);
    }
    case IdentityId::series4: {
      const double c = std::cos(v * pi);
      cf.add(0.5 * c *
             (digamma(0.5 * (v + 1.0)) - digamma(0.5 * v) -
              4.0 * constants::log2 * c));
      cf.add(-0.5 * pi * std::sin(2.0 * v * pi));
      cf.add(std::cos(2.0 * v * pi) *
             (std::log(1.5 * pi) - digamma(1.0) + digamma(v)));
      return cf.result(3);
    }
    case IdentityId::imag1: {
      cf.add(std::sin(v * pi) *
             (std::log(2.0 * pi) - digamma(1.0) + digamma(v)));
      cf.add(0.5 * pi * std::cos(v * pi));
      return cf.result(2);
    }
    case IdentityId::real1: {
      // Right side of the real-part identity, negated so that it equals
      // the catalog series sum_{k>=1} log((2k+1)^2/(4k(k+1))) cos((2k+1)nu pi).
      cf.add(-std::cos(v * pi) *
             (std::log(0.5 * pi) - digamma(1.0) + digamma(v)));
      cf.add(0.5 * pi * std::sin(v * pi));
      cf.add(-0.5 * (digamma(0.5 * (v + 1.0)) - digamma(0.5 * v)));
      return cf.result(4);
    }
    case IdentityId::series4a: {
      const double c = std::cos(v * pi);
      cf.add(-2.0 * c * c * (std::log(0.5 * pi) - digamma(1.0) + digamma(v)));
      cf.add(0.5 * pi * std::sin(2.0 * v * pi));
      cf.add(-c * (digamma(0.5 * (v + 1.0)) - digamma(0.5 * v)));
      cf.add(-std::log(9.0 / 8.0) * std::cos(2.0 * v * pi));
      return cf.result(4);
    }
    case IdentityId::alt_digamma: {
      cf.add(0.5 * (digamma(0.5 * (v + 1.0)) - digamma(0.5 * v)));
      return cf.result(2);
    }
    case IdentityId::int_thm1: {
      cf.add(std::log(4.0 * pi) - digamma(1.0) + digamma(v));
      cf.add(0.5 * pi / std::tan(v * pi));
      return cf.result(2);
    }
    case IdentityId::int_thm2: {
      detail::require_int_thm2_domain(nu);
      cf.add(0.5 * pi / std::sin(2.0 * v * pi));
      cf.add(std::log(3.0));
      cf.add(0.25 / std::cos(v * pi) *
             (digamma(0.5 * v) - digamma(0.5 * (v + 1.0))));
      return cf.result(2);
    }
    default:
      throw DomainError("identity '" + std::string(to_string(id)) +
                        "' has no nu-parameterized closed form");
  }
}

/// Accelerated left side of a trigonometric-series identity.
inline EvalResult lhs_series(IdentityId id, NuValue nu, double tol) {
  return sum_by_parts(catalog_series_spec(id), nu, tol);
}

/// sum_{n>=0} (-1)^n/(nu+n), evaluated by pairing consecutive terms into
/// 1/((nu+2j)(nu+2j+1)) and closing the tail with an Euler-Maclaurin
/// correction; independent of the digamma closed form it is checked
/// against.
inline double alt_digamma_sum(NuValue nu, double tol) {
  if (!(tol > 0.0)) throw DomainError("alt_digamma_sum needs tol > 0");
  const double v = nu.value();
  constexpr std::int64_t J = 1000;
  double acc = 0.0;
  for (std::int64_t j = 0; j < J; ++j) {
    const double b = v + 2.0 * j;
    acc += 1.0 / (b * (b + 1.0));
  }
  const double b = v + 2.0 * J;
  const double f = 1.0 / (b * (b + 1.0));
  const double fp = -2.0 / (b * b) + 2.0 / ((b + 1.0) * (b + 1.0));
  acc += 0.5 * std::log1p(1.0 / b) + 0.5 * f - fp / 12.0;
  return acc;
}

/// Exact limit constants of the endpoint identities.
inline double endpoint_value(IdentityId id) {
  switch (id) {
    case IdentityId::inf_series0: return -constants::log2;
    case IdentityId::inf_series1:
      return std::log(3.0 * constants::pi / 16.0);
    case IdentityId::inf_series2:
      return std::log(128.0 / (9.0 * constants::pi * constants::pi));
    default:
      throw DomainError("identity '" + std::string(to_string(id)) +
                        "' has no endpoint constant");
  }
}

/// Balanced-product view of the parameter-free catalog entries, obtained
/// by re-indexing the summands at k = m + 2 (and k = m + 1 for the Wallis
/// form).
inline RationalProductSpec catalog_product_spec(IdentityId id) {
  switch (id) {
    case IdentityId::inf_series0:
      return {{1.0, 3.0}, {2.0, 2.0}};
    case IdentityId::inf_series1:
      return {{1.0, 3.0}, {1.5, 2.5}};
    case IdentityId::inf_series2:
      return {{1.5, 1.5, 2.5, 2.5}, {1.0, 2.0, 2.0, 3.0}};
    case IdentityId::inf_prod:
      return {{2.5, 2.5, 1.5, 1.5}, {3.0, 2.0, 2.0, 1.0}};
    case IdentityId::wallis:
      return {{1.0, 1.0}, {0.5, 1.5}};
    default:
      throw DomainError("identity '" + std::string(to_string(id)) +
                        "' has no product form");
  }
}

/// Kronecker's bilateral closed form 2 pi i e^{-2 pi i nu y} /
/// (1 - e^{-2 pi i y}) - 1/y.
inline std::complex<double> kronecker_closed_form(double y, NuValue nu) {
  const std::complex<double> i{0.0, 1.0};
  const auto num = detail::unit_phase(-nu.value() * y);
  const auto den = 1.0 - detail::unit_phase(-y);
  return constants::two_pi * i * num / den - 1.0 / y;
}

struct BilateralComparison {
  std::complex<double> lhs;
  std::complex<double> rhs;
  std::int64_t work = 0;
  double residual() const { return std::abs(lhs - rhs); }
};

/// Both sides of the lemma at (x, nu): the unilateral complex series on
/// the left, and -log(2 pi x) + psi(1) - psi(nu) - i pi/2 minus the
/// Cesaro-averaged bilateral log sum (truncated at N) on the right.
inline BilateralComparison lemma_sides(double x, NuValue nu, std::int64_t N,
                                       double tol) {
  if (!std::isfinite(x) || x <= 0.0 || x >= 1.0) {
    throw DomainError("lemma requires 0 < x < 1");
  }
  BilateralComparison out;
  const auto lhs = lerch_tail_sum(x, nu, tol);
  const double v = nu.value();
  const auto bilateral = bilateral_symmetric_sum_averaged(
      [x, v](std::int64_t k) {
        const double kk = static_cast<double>(k);
        return detail::unit_phase(v * kk) * std::log((x + kk) / kk);
      },
      N);
  out.lhs = lhs.value;
  out.rhs = std::complex<double>(-std::log(constants::two_pi * x) +
                                     digamma(1.0) - digamma(v),
                                 -0.5 * constants::pi) -
            bilateral;
  out.work = lhs.work + 2 * N;
  return out;
}

inline double lemma_residual(double x, NuValue nu, std::int64_t N,
                             double tol) {
  return lemma_sides(x, nu, N, tol).residual();
}

/// Averaged symmetric partial sum of e^{2 k nu pi i}/(k+y) against
/// Kronecker's closed form. y within 1e-3 of 0 or 1 leaves
/// 1 - e^{-2 pi i y} too close to zero and is rejected.
inline BilateralComparison kronecker_sides(double y, NuValue nu,
                                           std::int64_t N) {
  if (!std::isfinite(y) || y <= 1e-3 || y >= 1.0 - 1e-3) {
    throw DomainError("kronecker comparison requires 1e-3 < y < 1-1e-3");
  }
  const double v = nu.value();
  BilateralComparison out;
  out.lhs = bilateral_symmetric_sum_averaged(
      [y, v](std::int64_t k) {
        return detail::unit_phase(v * static_cast<double>(k)) /
               (static_cast<double>(k) + y);
      },
      N);
  out.rhs = kronecker_closed_form(y, nu);
  out.work = 2 * N;
  return out;
}

inline double kronecker_residual(double y, NuValue nu, std::int64_t N) {
  return kronecker_sides(y, nu, N).residual();
}

/// Exponential map of a series identity: exp of both sides turns the sum
/// into an infinite product.
struct ProductSides {
  double from_series;
  double from_closed_form;
};

inline ProductSides series_product_sides(IdentityId id, NuValue nu,
                                         double tol = 1e-10) {
  return {std::exp(lhs_series(id, nu, tol).real()),
          std::exp(rhs_closed(id, nu).real())};
}

/// Evaluates both product sides and returns the exponentiated closed form.
inline double series_to_product(IdentityId id, NuValue nu,
                                double tol = 1e-10) {
  return series_product_sides(id, nu, tol).from_closed_form;
}

}  // namespace trigsum

#endif  // TRIGSUM_IDENTITIES_HPP
