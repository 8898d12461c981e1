#ifndef INFOTHERM_COMMON_HPP
#define INFOTHERM_COMMON_HPP

// Conventions used throughout the library: natural units hbar = k_B = 1,
// entropies in nats unless a function name says bits.

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace infotherm {

inline constexpr double kLn2 = 0.69314718055994530942;

inline double nats_to_bits(double nats) { return nats / kLn2; }
inline double bits_to_nats(double bits) { return bits * kLn2; }

// Inverse temperature (1/energy in natural units).  beta = +inf is the
// ground-state limit and is accepted only by operations that define one.
struct Beta {
  double value;

  explicit Beta(double b) : value(b) {
    if (std::isnan(b) || b <= 0.0)
      throw std::domain_error("Beta: inverse temperature must be > 0 (or +inf)");
  }
  bool zero_temperature() const { return std::isinf(value); }
  double temperature() const { return 1.0 / value; }
};

// x*ln(x) with the 0*ln(0) = 0 convention.  Inputs below the clamp are
// treated as exact zeros; Hermitian eigensolvers produce tiny negatives.
inline double xlnx(double x) {
  if (x < 1e-14) return 0.0;
  return x * std::log(x);
}

struct cutoff_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct unreachable_entropy_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct divergence_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace infotherm

#endif
