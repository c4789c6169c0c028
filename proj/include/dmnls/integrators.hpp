#pragma once

#include <functional>

#include "dmnls/nonlinearity.hpp"
#include "dmnls/trajectory.hpp"

namespace dmnls {

struct EvolutionParams {
  double d_av = 1.0;   // averaged dispersion coefficient
  double sigma = 1.0;
  double eps = 0.0;    // 0 selects the averaged equation
  double dt = 1e-3;
  double t_final = 1.0;
  double snapshot_every = 0.0;  // time between stored snapshots; 0 = endpoint only
  int threads = 1;              // workers for the quadrature-node loop
  NonlinearityParams nl;
};

// One integrating-factor RK4 step of  i u_t + d_av Lap u + F(u) = 0  in the
// interaction picture w(t) = e^{-d_av i t Lap} u(t); classical RK4 applied to
// w' = i e^{-d_av i t Lap} F(e^{d_av i t Lap} w). Local error O(dt^5).
Field step_averaged(const Field& u, double t, const EvolutionParams& p);

Trajectory solve_averaged(const Field& u0, const EvolutionParams& p);

// Piecewise-constant dispersion map d(t) = d_av + (1/eps) d0(t/eps) with d0
// the 2-periodic mean-zero square wave (+1 on [0,1), -1 on [1,2)).
double dispersion_coefficient(double t, double d_av, double eps);

// Strang split-step for  i u_t + d(t) Lap u + |u|^{2 sigma} u = 0:
// half-step exact dispersion, exact nonlinear phase rotation, half-step
// dispersion. dt must divide eps so steps never straddle a breakpoint of d0.
Field step_original(const Field& u, double t, double dt, const EvolutionParams& p);
Trajectory solve_original(const Field& u0, const EvolutionParams& p);

struct PicardReport {
  std::vector<double> residuals;          // per sweep, sup-in-t L2 distance
  std::vector<double> contraction_ratios; // successive residual quotients
  bool converged = false;
  int iterations = 0;
};

// Picard iteration for the Duhamel fixed point on a fixed time grid:
//   u^{k+1}(t) = e^{d_av i t Lap} u0 + i int_0^t e^{d_av i (t-s) Lap} F(u^k)(s) ds
// with the composite trapezoid in s (causal cumulative sums) and the
// configured Gauss-Legendre rule in r. Non-convergence within max_iter is
// reported, not hidden. time_nodes counts intervals on [0, t_final].
std::pair<Trajectory, PicardReport> picard_solve(const Field& u0,
                                                 const EvolutionParams& p,
                                                 int time_nodes, double tol,
                                                 int max_iter);

}  // namespace dmnls
