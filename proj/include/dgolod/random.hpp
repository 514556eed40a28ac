#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "dgolod/polynomial.hpp"

namespace dgolod {

class MonomialIdeal;
class Permutation;

/// Seeded generators for randomized property suites. Same seed, same stream.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi);
  bool coin(double p = 0.5);

  Monomial monomial(std::size_t n, int min_deg, int max_deg);
  /// A polynomial with zero constant term, up to `max_terms` terms, small coefficients.
  Polynomial element_of_max_ideal(const PolyRing& ring, int max_terms, int max_deg);
  Scalar scalar(const Field& field);
  /// Minimal monomial ideal with 1..max_gens generators of degree 1..max_deg.
  MonomialIdeal monomial_ideal(const PolyRing& ring, int max_gens, int max_deg);
  Permutation permutation(std::size_t n);

  std::mt19937_64& engine() noexcept { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace dgolod
