#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <string>

#include "afmm/matrix.hpp"

namespace afmm {

/// Seed for reproducible generation: same seed + same spec gives a
/// bit-identical matrix, on any platform (the generator is std::mt19937_64
/// with the fixed bit mappings below, never library distributions).
struct Seed {
  std::uint64_t value = 0;
};

enum class ValueRole { RealValued, IntegerValued };

/// Parameters for random matrix generation. Each entry is independently
/// nonzero with probability `density`; nonzero values are drawn from the
/// role's distribution:
///   IntegerValued: uniform over {1, ..., 2*mu_prime - 1}; exact mean
///                  mu_prime, which must be an integer >= 1. mu_prime = 1
///                  degenerates to the constant 1.
///   RealValued:    uniform over [value_low, value_high]; mu_prime is the
///                  midpoint (low + high) / 2.
struct GeneratorSpec {
  std::size_t n = 0;
  double density = 0.0;     // d1 or d2: probability an entry is nonzero
  double mu_prime = 0.0;    // mean of the nonzero-value distribution
  ValueRole role = ValueRole::RealValued;
  double value_low = 0.5;   // RealValued bounds
  double value_high = 1.5;

  static GeneratorSpec integer_valued(std::size_t n, double density, double mu_prime) {
    GeneratorSpec spec;
    spec.n = n;
    spec.density = density;
    spec.mu_prime = mu_prime;
    spec.role = ValueRole::IntegerValued;
    return spec;
  }

  static GeneratorSpec real_valued(std::size_t n, double density,
                                   double low = 0.5, double high = 1.5) {
    GeneratorSpec spec;
    spec.n = n;
    spec.density = density;
    spec.mu_prime = (low + high) / 2.0;
    spec.role = ValueRole::RealValued;
    spec.value_low = low;
    spec.value_high = high;
    return spec;
  }
};

inline void validate(const GeneratorSpec& spec) {
  if (spec.n == 0) throw std::invalid_argument("GeneratorSpec: n must be >= 1");
  if (!(spec.density >= 0.0 && spec.density <= 1.0)) {
    throw std::invalid_argument("GeneratorSpec: density must be in [0, 1]");
  }
  if (!(spec.mu_prime > 0.0)) {
    throw std::invalid_argument("GeneratorSpec: mu_prime must be positive");
  }
  if (spec.role == ValueRole::IntegerValued) {
    if (std::abs(spec.mu_prime - std::round(spec.mu_prime)) > 1e-9 || spec.mu_prime < 1.0) {
      throw std::invalid_argument(
          "GeneratorSpec: IntegerValued role requires integer mu_prime >= 1");
    }
  } else {
    if (!(std::isfinite(spec.value_low) && std::isfinite(spec.value_high)) ||
        spec.value_low > spec.value_high) {
      throw std::invalid_argument("GeneratorSpec: invalid value bounds");
    }
  }
}

namespace detail {

// SplitMix64 step, used to derive independent sub-seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Uniform in [0, 1) from the top 53 bits.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Exactly uniform in {0, ..., range - 1} by rejection.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t range) {
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % range;
}

}  // namespace detail

/// Seeded random matrix per `spec`. Entries are visited in row-major order;
/// each draws one Bernoulli variate, and nonzero entries draw one value
/// variate from the same stream. Pure function of (spec, seed).
inline DenseMatrix generate(const GeneratorSpec& spec, Seed seed) {
  validate(spec);
  std::mt19937_64 rng(seed.value);
  DenseMatrix m(spec.n);
  const auto out = m.data();
  const bool integer_role = spec.role == ValueRole::IntegerValued;
  const auto value_range =
      integer_role ? 2 * static_cast<std::uint64_t>(std::llround(spec.mu_prime)) - 1 : 0;
  for (std::size_t idx = 0; idx < out.size(); ++idx) {
    if (detail::uniform01(rng) >= spec.density) continue;
    if (integer_role) {
      out[idx] = static_cast<double>(1 + detail::uniform_below(rng, value_range));
    } else {
      out[idx] = spec.value_low +
                 (spec.value_high - spec.value_low) * detail::uniform01(rng);
    }
  }
  return m;
}

}  // namespace afmm
