#ifndef TRIGSUM_NU_VALUE_HPP
#define TRIGSUM_NU_VALUE_HPP

#include <cmath>
#include <string>

#include "trigsum/errors.hpp"

namespace trigsum {

/// The series parameter, confined to the open interval (0, 1).
///
/// Construction rejects the endpoints; the endpoint limits of the
/// absolutely convergent identities are handled by dedicated
/// endpoint-value evaluators instead.
class NuValue {
 public:
  explicit NuValue(double v) : value_(v) {
    if (!std::isfinite(v) || v <= 0.0 || v >= 1.0) {
      throw DomainError("nu must lie strictly inside (0, 1), got " +
                        std::to_string(v));
    }
  }

  double value() const noexcept { return value_; }

  /// Distance to the nearest excluded endpoint.
  double endpoint_distance() const noexcept {
    return value_ < 0.5 ? value_ : 1.0 - value_;
  }

 private:
  double value_;
};

}  // namespace trigsum

#endif  // TRIGSUM_NU_VALUE_HPP
