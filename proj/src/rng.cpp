#include "dmnls/rng.hpp"

#include <cmath>

#include "dmnls/spectral.hpp"

namespace dmnls {

double Rng::normal() {
  // Box-Muller; consumes two uniforms per value for a platform-independent
  // sequence (libstdc++ distributions are not portable across builds).
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * 3.141592653589793238462643 * u2);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b,
                          std::uint64_t c) {
  Rng r(base);
  std::uint64_t h = r.next_u64();
  for (std::uint64_t x : {a + 1, b + 2, c + 3}) {
    h ^= x * 0x9e3779b97f4a7c15ull;
    Rng m(h);
    h = m.next_u64();
  }
  return h;
}

Field random_band_limited_field(const Grid& g, std::uint64_t seed, double band,
                                double cut) {
  Rng rng(seed);
  Field fh(g, Space::Frequency);
  for (std::size_t i = 0; i < fh.values.size(); ++i) {
    const cplx z = rng.complex_normal();  // draw unconditionally: layout-stable
    const double xi = g.freq_abs(i);
    if (cut > 0 && xi > cut) continue;
    fh.values[i] = z * std::exp(-xi * xi / (2.0 * band * band));
  }
  const double norm = l2_norm(fh);
  if (norm > 0)
    for (cplx& v : fh.values) v /= norm;
  return to_physical(fh);
}

}  // namespace dmnls
