#ifndef TRIGSUM_PRODUCTS_HPP
#define TRIGSUM_PRODUCTS_HPP

// Infinite products prod_{m>=0} prod_i (m + a_i) / prod_j (m + b_j) for
// balanced positive shifts, evaluated directly in log space and in closed
// form through Gamma-function ratios.

#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "trigsum/errors.hpp"
#include "trigsum/eval_result.hpp"
#include "trigsum/special.hpp"

namespace trigsum {

/// Shifts of a balanced rational infinite product. Convergence requires
/// matching counts and equal shift sums; construction rejects anything
/// else.
class RationalProductSpec {
 public:
  RationalProductSpec(std::vector<double> numerator_shifts,
                      std::vector<double> denominator_shifts)
      : num_(std::move(numerator_shifts)), den_(std::move(denominator_shifts)) {
    if (num_.empty() || num_.size() != den_.size()) {
      throw DomainError(
          "product spec needs equally many numerator and denominator shifts");
    }
    for (double a : num_) {
      if (!(a > 0.0)) throw DomainError("product shifts must be positive");
    }
    for (double b : den_) {
      if (!(b > 0.0)) throw DomainError("product shifts must be positive");
    }
    const double sn = std::accumulate(num_.begin(), num_.end(), 0.0);
    const double sd = std::accumulate(den_.begin(), den_.end(), 0.0);
    if (std::fabs(sn - sd) > 1e-12 * (1.0 + std::fabs(sn))) {
      throw DomainError("product shift sums must balance for convergence");
    }
  }

  const std::vector<double>& numerator_shifts() const { return num_; }
  const std::vector<double>& denominator_shifts() const { return den_; }

  /// log of the partial product over m = 0..M-1. Each factor ratio is
  /// formed in linear space (it tends to 1, so its log stays O(1/m^2))
  /// and the logs are accumulated with Neumaier compensation; summing
  /// log(m+a) terms individually would leave an O(sqrt(M) log M * eps)
  /// rounding walk that Richardson extrapolation cannot remove.
  double log_partial(std::int64_t M) const {
    double acc = 0.0;
    double comp = 0.0;
    for (std::int64_t m = 0; m < M; ++m) {
      const double dm = static_cast<double>(m);
      double ratio = 1.0;
      for (double a : num_) ratio *= dm + a;
      for (double b : den_) ratio /= dm + b;
      const double term = std::log(ratio);
      const double sum = acc + term;
      comp += std::fabs(acc) >= std::fabs(term) ? (acc - sum) + term
                                                : (term - sum) + acc;
      acc = sum;
    }
    return acc + comp;
  }

 private:
  std::vector<double> num_;
  std::vector<double> den_;
};

/// Partial product to m = M-1, accumulated in log space. The error
/// estimate |L_M - L_{M/2}| tracks the O(1/M) truncation error.
inline EvalResult product_direct(const RationalProductSpec& spec,
                                 std::int64_t M) {
  if (M < 10) throw DomainError("product_direct requires M >= 10");
  const double half = spec.log_partial(M / 2);
  const double log_value = spec.log_partial(M);
  EvalResult r;
  r.value = std::exp(log_value);
  r.error_estimate =
      std::fabs(log_value - half) * std::max(1.0, std::fabs(r.real()));
  r.work = M + M / 2;
  r.method = Method::naive;
  return r;
}

/// Single-step Richardson extrapolation of the log partial products in
/// 1/M, applied at truncations (M, 2M) and (2M, 4M); the difference of the
/// two extrapolants is the error estimate. The partial-product error has a
/// clean 1/M leading term for balanced specs, so this sharpens the direct
/// product from O(1/M) to O(1/M^2).
inline EvalResult product_richardson(const RationalProductSpec& spec,
                                     std::int64_t M) {
  if (M < 10) throw DomainError("product_richardson requires M >= 10");
  const double l1 = spec.log_partial(M);
  const double l2 = spec.log_partial(2 * M);
  const double l4 = spec.log_partial(4 * M);
  const double e1 = 2.0 * l2 - l1;
  const double e2 = 2.0 * l4 - l2;
  EvalResult r;
  r.value = std::exp(e2);
  r.error_estimate =
      (std::fabs(e2 - e1) + 1e-14) * std::max(1.0, std::fabs(r.real()));
  r.work = 7 * M;
  r.method = Method::naive;
  return r;
}

/// Closed form exp(sum_j log Gamma(b_j) - sum_i log Gamma(a_i)).
inline EvalResult product_gamma_closed(const RationalProductSpec& spec) {
  double acc = 0.0;
  for (double b : spec.denominator_shifts()) acc += log_gamma(b);
  for (double a : spec.numerator_shifts()) acc -= log_gamma(a);
  EvalResult r;
  r.value = std::exp(acc);
  r.error_estimate = 1e-12 * std::max(1.0, std::fabs(r.real()));
  r.work = static_cast<std::int64_t>(2 * spec.numerator_shifts().size());
  r.method = Method::closed;
  return r;
}

}  // namespace trigsum

#endif  // TRIGSUM_PRODUCTS_HPP
