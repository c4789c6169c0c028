#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace dmnls {

using cplx = std::complex<double>;

// Periodic grid standing in for R^d: `n` points per axis on a box of side
// `box_length`, frequencies xi_j = 2*pi*j/L for j in [-n/2, n/2), stored in
// FFT order (0, 1, ..., n/2-1, -n/2, ..., -1).
struct Grid {
  int dim = 1;            // 1 or 2
  int n = 0;              // points per axis, power of two, >= 16
  double box_length = 0;  // physical period L per axis
  std::vector<double> freq;  // per-axis multipliers, FFT order, size n

  std::size_t total_points() const {
    std::size_t p = static_cast<std::size_t>(n);
    return dim == 1 ? p : p * p;
  }
  double cell_volume() const {
    double h = box_length / n;
    return dim == 1 ? h : h * h;
  }
  double nyquist() const { return (2.0 * 3.141592653589793238462643 / box_length) * (n / 2); }

  // |xi|^2 of the mode with flat index `idx` (row-major for dim==2).
  double freq_sq(std::size_t idx) const {
    if (dim == 1) {
      double f = freq[idx];
      return f * f;
    }
    double fx = freq[idx / n];
    double fy = freq[idx % n];
    return fx * fx + fy * fy;
  }
  double freq_abs(std::size_t idx) const;

  bool operator==(const Grid& o) const {
    return dim == o.dim && n == o.n && box_length == o.box_length;
  }
};

// Builds a Grid; rejects non-power-of-two n, n < 16, dim outside {1,2},
// and nonpositive box_length.
Grid make_grid(int dim, int n, double box_length);

}  // namespace dmnls
