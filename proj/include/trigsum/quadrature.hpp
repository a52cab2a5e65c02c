#ifndef TRIGSUM_QUADRATURE_HPP
#define TRIGSUM_QUADRATURE_HPP

// Semi-infinite integration for the two hyperbolic-kernel integral
// theorems and the elementary log(b/a) integral, plus the closed-form
// geometric kernel sums used to cross-check the derivation.

#include <algorithm>
#include <cmath>
#include <string>

#include "trigsum/constants.hpp"
#include "trigsum/errors.hpp"
#include "trigsum/eval_result.hpp"
#include "trigsum/integrate.hpp"
#include "trigsum/nu_value.hpp"

namespace trigsum {

/// Integrand family (1/x) sinh(x) e^{-s x} (e^{-s x} - 2 cos(2 nu pi)) /
/// (cosh(s x) - cos(2 nu pi)) with s = scale in {1, 2}.
struct FrullaniIntegrand {
  int scale = 1;
  NuValue nu;

  FrullaniIntegrand(int scale_, NuValue nu_) : scale(scale_), nu(nu_) {
    if (scale != 1 && scale != 2) {
      throw DomainError("frullani scale must be 1 or 2");
    }
  }

  /// Value at x > 0; the x -> 0 limit (1-2c)/(1-c) is substituted below a
  /// tiny threshold to avoid 0/0.
  double operator()(double x) const {
    const double c = std::cos(2.0 * nu.value() * constants::pi);
    if (x < 1e-12) return limit_at_zero();
    const double u = scale * x;
    const double eu = std::exp(-u);
    return std::sinh(x) / x * eu * (eu - 2.0 * c) / (std::cosh(u) - c);
  }

  /// Analytic x -> 0 limit of the integrand. sinh(x)/x -> 1 while every
  /// other factor is continuous at 0, so the limit is (1-2c)/(1-c) for
  /// both scales.
  double limit_at_zero() const {
    const double c = std::cos(2.0 * nu.value() * constants::pi);
    return (1.0 - 2.0 * c) / (1.0 - c);
  }
};

/// Numerical check of log(b/a) = int_0^inf (e^{-ax} - e^{-bx}) dx / x.
inline double frullani_log_check(double a, double b,
                                 const QuadratureConfig& cfg) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw DomainError("frullani_log_check requires a, b > 0");
  }
  cfg.validate();
  if (a == b) return 0.0;
  const double m = std::min(a, b);
  // e^{-mX}/(mX) <= tol/2 with a little slack.
  const double x_tail = std::log(4.0 / (m * cfg.tol)) / m;
  const double X = std::max(cfg.truncation, x_tail);
  const auto q = integrate_adaptive(
      [a, b](double x) {
        if (x < 1e-300) return b - a;
        // e^{-ax} - e^{-bx} = -e^{-ax} expm1(-(b-a)x), cancellation-free.
        return -std::exp(-a * x) * std::expm1(-(b - a) * x) / x;
      },
      0.0, X, cfg);
  return q.value;
}

/// Adaptive evaluation of the hyperbolic-kernel integral over (0, inf).
/// The truncation point comes from the tail bound C e^{-X} <= tol/2 with
/// C = 4/(1 - cos(2 nu pi)). Within 1e-3 of the nu endpoints the closed
/// forms blow up and the integrand develops a near-singularity, so that
/// zone is rejected rather than evaluated.
inline EvalResult integrate_frullani(const FrullaniIntegrand& f,
                                     const QuadratureConfig& cfg) {
  cfg.validate();
  if (f.nu.endpoint_distance() < 1e-3) {
    throw DomainError(
        "integrate_frullani: nu within 1e-3 of an endpoint is unsupported");
  }
  const double c = std::cos(2.0 * f.nu.value() * constants::pi);
  const double C = 4.0 / (1.0 - c);
  const double X = std::max({cfg.truncation, 20.0, std::log(2.0 * C / cfg.tol)});
  const auto q = integrate_adaptive(f, 0.0, X, cfg);
  EvalResult r;
  r.value = q.value;
  r.error_estimate = q.error + 0.5 * cfg.tol;  // quadrature + tail allowance
  r.work = q.evaluations;
  r.method = Method::quad;
  return r;
}

/// Closed form of sum_{k>=2} e^{-k(scale x)} sin(2 k nu pi):
/// (1/2) e^{-u} sin(2 nu pi) (2 cos(2 nu pi) - e^{-u}) /
/// (cosh(u) - cos(2 nu pi)) with u = scale x.
inline double kernel_geom_sum(double x, NuValue nu, int scale) {
  if (!(x > 0.0)) throw DomainError("kernel_geom_sum requires x > 0");
  if (scale != 1 && scale != 2) {
    throw DomainError("kernel_geom_sum scale must be 1 or 2");
  }
  const double u = scale * x;
  const double c = std::cos(2.0 * nu.value() * constants::pi);
  const double s = std::sin(2.0 * nu.value() * constants::pi);
  const double eu = std::exp(-u);
  return 0.5 * eu * s * (2.0 * c - eu) / (std::cosh(u) - c);
}

}  // namespace trigsum

#endif  // TRIGSUM_QUADRATURE_HPP
