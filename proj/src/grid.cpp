#include "dmnls/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace dmnls {

namespace {
constexpr double kPi = 3.141592653589793238462643;

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }
}  // namespace

double Grid::freq_abs(std::size_t idx) const { return std::sqrt(freq_sq(idx)); }

Grid make_grid(int dim, int n, double box_length) {
  if (dim != 1 && dim != 2)
    throw std::invalid_argument("make_grid: dim must be 1 or 2, got " + std::to_string(dim));
  if (!is_power_of_two(n) || n < 16)
    throw std::invalid_argument("make_grid: n must be a power of two >= 16, got " +
                                std::to_string(n));
  if (!(box_length > 0.0) || !std::isfinite(box_length))
    throw std::invalid_argument("make_grid: box_length must be positive");

  Grid g;
  g.dim = dim;
  g.n = n;
  g.box_length = box_length;
  g.freq.resize(n);
  const double dxi = 2.0 * kPi / box_length;
  for (int j = 0; j < n; ++j) {
    int k = (j < n / 2) ? j : j - n;  // FFT order, single Nyquist at -n/2
    g.freq[j] = dxi * k;
  }
  return g;
}

}  // namespace dmnls
