#pragma once

#include <optional>
#include <vector>

#include "dmnls/field.hpp"

namespace dmnls {

// Fourier convention (used everywhere, documented once):
//   fhat(xi)  = integral e^{-i x.xi} f(x) dx          (analyst, non-unitary)
//   f(x)      = (2 pi)^{-dim} integral e^{+i x.xi} fhat(xi) dxi
// Discretely: fhat(xi_j) = (L/n)^dim * DFT_forward(f)[j] and
// f(x_m) = (1/L)^dim * DFT_backward(fhat)[m], which makes the pair an exact
// inverse and gives Parseval ||f||_2^2 = (2 pi)^{-dim} * sum |fhat|^2 * dxi^dim.

Field to_frequency(const Field& f);
Field to_physical(const Field& f);

// e^{i coeff tau Laplacian} f, i.e. frequency-side multiplication by
// e^{-i coeff tau |xi|^2}. Unitary in L2; representation of the result
// matches the input's.
Field free_propagate(const Field& f, double tau, double coeff);

// --- norms (spatial integrals use the grid quadrature weight (L/n)^dim) ---
double l2_norm(const Field& f);
double mass(const Field& f);  // ||f||_2^2
double h_s_norm(const Field& f, double s);
double lebesgue_norm(const Field& f, double r);  // r in [1, inf]; inf -> max
double linf_norm(const Field& f);
cplx inner_product(const Field& a, const Field& b);  // integral a * conj(b)

// Fraction of mass in the outer 10% shell of the box (per-axis max norm);
// the boundary-leak monitor for the periodic truncation of R^d.
double edge_mass_fraction(const Field& f);

// --- Littlewood-Paley machinery ---
// rho is the smooth cutoff with rho = 1 on |xi| <= 1, rho = 0 on |xi| >= 2,
// built from h(t) = e^{-1/t} via the smoothstep s = h(t)/(h(t)+h(1-t)):
// rho(xi) = 1 - s(|xi| - 1). rho_1 = rho, rho_N(xi) = rho(xi/N) - rho(2 xi/N).
double lp_rho(double xi_abs);
double lp_rho_level(double xi_abs, int level_N);

struct DyadicLadder {
  Grid grid;
  std::vector<int> levels;  // 1, 2, 4, ..., N_max

  bool has_level(int N) const;
  // Sampled cutoff rho_N on the grid modes (computed on demand; projections
  // themselves evaluate the cutoff on the fly and keep no shared state).
  std::vector<double> cutoff_table(int N) const;
};

// N_max = n*pi/(2L) rounded down to a dyadic, leaving a guard band above the
// ladder so every cutoff tail is fully resolved.
DyadicLadder make_ladder(const Grid& g);

// P_N f: frequency-side multiplication by rho_N. N must be a ladder level.
Field dyadic_project(const Field& f, int N, const DyadicLadder& ladder);

}  // namespace dmnls
