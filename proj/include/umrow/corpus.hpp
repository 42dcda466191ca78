#pragma once

// Seeded inputs for experiments: monoids, rows and group matrices. Sampling
// uses only raw mt19937_64 output so a seed gives the same corpus on every
// platform.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "umrow/monoid_geometry.hpp"

namespace umrow {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  // Uniform in [lo, hi] (modulo bias accepted; bounds are tiny).
  long long range(long long lo, long long hi) {
    return lo + static_cast<long long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  Integer below(const Integer& n);
  bool coin() { return rng_() & 1; }
  std::uint64_t next() { return rng_(); }

 private:
  std::mt19937_64 rng_;
};

struct NamedMonoid {
  std::string name;
  AffineMonoid monoid;
};

// Fixed reference monoids followed by seeded random positive monoids of
// rank 2 and 3; 30 in total.
std::vector<NamedMonoid> monoid_corpus(std::uint64_t seed);

AffineMonoid square_cone_monoid();

}  // namespace umrow
