#pragma once

#include <cstdint>

#include "dmnls/field.hpp"

namespace dmnls {

// Deterministic, platform-independent generator: splitmix64 streams with
// Box-Muller normals. Every randomized scenario derives its streams from
// (base seed, task coordinates), so results are independent of thread count.
struct Rng {
  std::uint64_t state;

  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  // uniform in [0,1)
  double uniform() { return (next_u64() >> 11) * 0x1.0p-53; }
  double normal();  // Box-Muller, one value per call (no cached spare)
  cplx complex_normal() { return cplx(normal(), normal()); }
};

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0,
                          std::uint64_t c = 0);

// Random field with iid complex-normal mode coefficients weighted by
// exp(-|xi|^2 / (2 band^2)) and truncated at |xi| > cut (cut <= 0 keeps the
// full resolved band). Physical-space result, unit L2 norm unless the draw
// is identically zero.
Field random_band_limited_field(const Grid& g, std::uint64_t seed, double band,
                                double cut = 0.0);

}  // namespace dmnls
