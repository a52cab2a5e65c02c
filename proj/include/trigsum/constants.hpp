#ifndef TRIGSUM_CONSTANTS_HPP
#define TRIGSUM_CONSTANTS_HPP

#include <numbers>

namespace trigsum::constants {

inline constexpr double pi = std::numbers::pi;
inline constexpr double euler_gamma = std::numbers::egamma;
inline constexpr double log2 = std::numbers::ln2;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

}  // namespace trigsum::constants

#endif  // TRIGSUM_CONSTANTS_HPP
