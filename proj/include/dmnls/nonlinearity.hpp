#pragma once

#include <vector>

#include "dmnls/field.hpp"

namespace dmnls {

enum class Dealias {
  Padded,  // zero-padded product grid, oversampled by sigma+1 (exact for integer sigma)
  Strict,  // padded, and signal if the true product bandwidth exceeds the grid
  Off      // raw on-grid pointwise products
};

struct NonlinearityParams {
  double sigma = 1.0;  // power; 2/d for the mass-critical cases
  int quad_nodes = 32; // Gauss-Legendre nodes on r in [0,1]
  Dealias dealias = Dealias::Padded;
  int threads = 1;     // workers for the per-node propagations
};

// Gauss-Legendre nodes/weights on [0,1]; weights sum to 1.
struct Quadrature {
  std::vector<double> nodes;
  std::vector<double> weights;
};
Quadrature gauss_legendre_unit(int q);

// Averaged nonlocal nonlinearity
//   F(u) = integral_0^1 e^{-ir Lap}( |e^{ir Lap} u|^{2 sigma} e^{ir Lap} u ) dr
// approximated with the configured Gauss-Legendre rule. The per-node
// propagations are summed in fixed node order. Physical-space result.
Field averaged_nonlinearity(const Field& u, const NonlinearityParams& p);

// Trilinear polarization: quadrature of
//   integral_0^1 e^{-ir Lap}( e^{ir Lap}u1 * conj(e^{ir Lap}u2) * e^{ir Lap}u3 ) dr.
// trilinear_averaged(u,u,u) equals averaged_nonlinearity(u) at sigma = 1.
Field trilinear_averaged(const Field& u1, const Field& u2, const Field& u3,
                         const NonlinearityParams& p);

// Pointwise |u|^{2 sigma} u, de-aliased per policy.
Field local_nonlinearity(const Field& u, double sigma, Dealias dealias = Dealias::Padded);

// Raised by Dealias::Strict when the occupied product bandwidth cannot be
// represented on the grid.
struct AliasError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace dmnls
