#pragma once

#include <random>
#include <vector>

#include "feuerbach/centers.hpp"
#include "feuerbach/fuzz.hpp"

namespace testing_support {

// Rational with numerator in [-num_max, num_max] and denominator in [1, den_max].
inline feuerbach::Rational random_rational(std::mt19937_64& rng, long num_max = 60,
                                           long den_max = 40) {
  std::uniform_int_distribution<long> num(-num_max, num_max);
  std::uniform_int_distribution<long> den(1, den_max);
  return feuerbach::Rational(num(rng), den(rng));
}

inline feuerbach::CoeffTriple random_coeffs(std::mt19937_64& rng) {
  return {random_rational(rng), random_rational(rng), random_rational(rng)};
}

inline std::vector<feuerbach::Triangle> corpus(std::size_t n, std::uint64_t seed = 7,
                                               std::uint32_t max_den = 50) {
  return feuerbach::fuzz_corpus(seed, n, max_den);
}

}  // namespace testing_support
