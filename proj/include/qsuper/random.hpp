#pragma once

// Seeded generators for property checks.

#include <cstdint>
#include <random>
#include <vector>

#include "qsuper/algebra.hpp"

namespace qsuper {

class Sampler {
 public:
  Sampler(AlgebraPtr alg, uint64_t seed) : alg_(std::move(alg)), rng_(seed) {}

  std::mt19937_64& rng() { return rng_; }
  int uniform(int lo, int hi);
  bool coin() { return uniform(0, 1) == 1; }

  /// Small integer times a Laurent monomial in the p's; in M sometimes plus an h term.
  Coeff coeff();
  /// Degree-zero letter with power 1 (or -1 on the invertible generator).
  Letter unit_letter();
  /// Canonical monomial with at most `degree` generator factors and at most
  /// `form_degree` differentials. Respects nilpotency.
  Monomial monomial(int degree, int form_degree = 0);
  Element element(int degree, int max_terms, int form_degree = 0);
  /// Element whose terms share the given parity and form degree.
  Element homogeneous(int degree, int max_terms, int form_degree, int parity);
  /// Unnormalized word of unit letters (degree zero) or with differentials.
  Word word(int length, bool with_differentials = false);

 private:
  AlgebraPtr alg_;
  std::mt19937_64 rng_;
};

/// m + n <= max_size, z_i in [-zmax, zmax], z_1 = 1.
ParamConfig random_config(std::mt19937_64& rng, int max_size = 5, int zmax = 3);

/// The two reference shapes followed by `random_count` seeded random ones.
std::vector<ParamConfig> standard_configs(int random_count = 20, uint64_t seed = 20240611);

}  // namespace qsuper
