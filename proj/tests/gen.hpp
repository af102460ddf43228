#pragma once

// Seeded generators for property tests. Every draw goes through one
// std::mt19937_64 so failures reproduce from the printed seed.

#include "nclandau/poly.hpp"

#include <cstdint>
#include <random>

namespace nclandau::testgen {

class Gen {
public:
  explicit Gen(std::uint64_t seed) : rng_(seed), seed_(seed) {}

  std::uint64_t seed() const { return seed_; }

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  bool coin() { return integer(0, 1) == 1; }

  Rational rational(long num_bound = 12, long den_bound = 9) {
    return Rational(integer(-num_bound, num_bound), integer(1, den_bound));
  }

  Rational nonzero_rational(long num_bound = 12, long den_bound = 9) {
    Rational q;
    do q = rational(num_bound, den_bound);
    while (q == 0);
    return q;
  }

  Rational positive_rational(long num_bound = 12, long den_bound = 9) {
    return Rational(integer(1, num_bound), integer(1, den_bound));
  }

  GaussianRational gaussian(long num_bound = 6, long den_bound = 5) {
    return {rational(num_bound, den_bound), coin() ? rational(num_bound, den_bound) : Rational(0)};
  }

  /// Sparse polynomial in (x, y) of total degree <= max_degree.
  ConfigPoly config_poly(unsigned max_degree, int max_terms = 5) {
    ConfigPoly p;
    const int terms = static_cast<int>(integer(1, max_terms));
    for (int t = 0; t < terms; ++t) {
      const unsigned d = static_cast<unsigned>(integer(0, max_degree));
      const unsigned a = static_cast<unsigned>(integer(0, d));
      p.add_term(ConfigPoly::Key{a, d - a}, gaussian());
    }
    return p;
  }

  PhasePoly phase_poly(unsigned max_degree, int max_terms = 4) {
    PhasePoly p;
    const int terms = static_cast<int>(integer(1, max_terms));
    for (int t = 0; t < terms; ++t) {
      PhasePoly::Key k{};
      unsigned left = static_cast<unsigned>(integer(0, max_degree));
      for (std::size_t v = 0; v < 4 && left > 0; ++v) {
        const unsigned take = static_cast<unsigned>(integer(0, left));
        k[v] = take;
        left -= take;
      }
      p.add_term(k, gaussian());
    }
    return p;
  }

  std::mt19937_64& engine() { return rng_; }

private:
  std::mt19937_64 rng_;
  std::uint64_t seed_;
};

}  // namespace nclandau::testgen
