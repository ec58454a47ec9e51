#pragma once

#include <cstdint>

#include "bael/normal.hpp"

namespace bael {

// SplitMix64 finalizer: bijective avalanche mix on 64 bits.
inline std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ull;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBull;
  z ^= z >> 31;
  return z;
}

// Counter-based random stream. Draw i of replication r under master seed s
// is a pure function of (s, r, i): the replication index sits in the high
// 32 bits of the counter word and the draw index in the low 32, so distinct
// (r, i) pairs can never collide and any thread schedule reproduces the
// same values. Limits: r < 2^32 replications, i < 2^32 draws per replication.
class RandomStream {
 public:
  RandomStream(std::uint64_t master_seed, std::uint64_t replication)
      : base_(mix64(master_seed) ^ (replication << 32)) {}

  std::uint64_t next_u64() {
    return mix64(mix64(base_ ^ counter_++) + 0x9E3779B97F4A7C15ull);
  }

  // Uniform on the open interval (0,1); never returns an endpoint.
  double uniform() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Standard normal via the inverse CDF; one uniform per draw.
  double normal() { return normal_quantile(uniform()); }

 private:
  std::uint64_t base_;
  std::uint64_t counter_ = 0;
};

}  // namespace bael
