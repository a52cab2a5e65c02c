#ifndef TRIGSUM_EVAL_RESULT_HPP
#define TRIGSUM_EVAL_RESULT_HPP

#include <complex>
#include <cstdint>
#include <string_view>

namespace trigsum {

/// How a value was obtained.
enum class Method {
  naive,   // direct partial summation / partial products
  cesaro,  // Cesaro-averaged partial sums
  parts,   // summation by parts against exact oscillatory partial sums
  kernel,  // closed-form geometric/Dirichlet kernel
  quad,    // adaptive quadrature
  closed,  // closed form assembled from digamma, logs and trigonometry
};

constexpr std::string_view to_string(Method m) {
  switch (m) {
    case Method::naive: return "naive";
    case Method::cesaro: return "cesaro";
    case Method::parts: return "parts";
    case Method::kernel: return "kernel";
    case Method::quad: return "quad";
    case Method::closed: return "closed";
  }
  return "unknown";
}

/// A computed value together with an error estimate and the work spent.
/// Real-valued results are stored with a zero imaginary part.
struct EvalResult {
  std::complex<double> value{0.0, 0.0};
  double error_estimate = 0.0;  // absolute, >= 0
  std::int64_t work = 0;        // coefficient/integrand evaluations or terms
  Method method = Method::closed;

  double real() const { return value.real(); }
  double imag() const { return value.imag(); }
};

}  // namespace trigsum

#endif  // TRIGSUM_EVAL_RESULT_HPP
