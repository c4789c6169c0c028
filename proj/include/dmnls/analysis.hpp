#pragma once

#include <optional>
#include <vector>

#include "dmnls/spectral.hpp"
#include "dmnls/trajectory.hpp"

namespace dmnls {

// Time-ordered L2-valued sample for p-variation. With the infinity marker
// set, a terminal zero field is appended before taking the supremum (the
// "value at t = +inf is zero" convention used for scattering).
struct VariationSample {
  std::vector<double> times;
  std::vector<Field> points;
  bool infinity_marker = false;
};

VariationSample sample_from(const Trajectory& traj, bool infinity_marker = false);

// Exact supremum over subsequences of (sum_k ||v(t_k)-v(t_{k-1})||_2^p)^{1/p},
// by dynamic programming over endpoints; O(K^2) pairwise norms.
double p_variation(const VariationSample& sample, double p);

// Same, on precomputed pairwise increment norms dist[i][j] = d(i,j), i<j.
double p_variation_dp(const std::vector<std::vector<double>>& dist, double p);

// ||v||_{V^p_Delta}: pulls each snapshot back by e^{-d_av i t Lap}, then V^p.
double vp_delta_norm(const Trajectory& traj, double p, double d_av,
                     bool infinity_marker = false);

// Computable stand-in for the dyadic adapted-space norm: the block building
// ingredient is replaced by sup-in-time of the pulled-back block L2 norm,
//   ( sum_N N^{2s} sup_t ||P_N e^{-d_av i t Lap} u(t)||_2^2 )^{1/2}.
// A lower-bound-flavored surrogate; reported as "proxy" in all outputs.
double x_norm_proxy(const Trajectory& traj, double s, double d_av,
                    const DyadicLadder& ladder);

struct ScatteringProfile {
  Field phi_plus;                            // e^{-d_av i T Lap} u(T)
  std::vector<std::pair<double, double>> residuals;  // (t, ||w(t)-w(T)||_2)
};

// w(t) = e^{-d_av i t Lap} u(t); phi_plus = w(T_last); residuals measure the
// Cauchy tail ||u(t) - e^{d_av i t Lap} phi_plus||_2. Needs >= 3 snapshots.
ScatteringProfile scattering_profile(const Trajectory& traj, double d_av);

struct TimeWindow {
  double T = 1.0;  // window [-T, T]
  int n_t = 17;    // trapezoid samples (>= 16)
};

// || e^{d_av i t Lap} P_N1 f * e^{d_av i t Lap} P_N2 g ||_{L^{1+2/d}_{t,x}}
// over [-T,T] x torus, divided by ||P_N1 f||_2 ||P_N2 g||_2 (0 if a block is
// empty). Symmetric under swapping (f,N1) <-> (g,N2).
double bilinear_ratio(const Field& f, const Field& g, int N1, int N2,
                      const TimeWindow& window, double d_av,
                      const DyadicLadder& ladder);

// || e^{d_av i t Lap} f ||_{L^q_t L^r_x(window)} / ||f||_2 for admissible
// (q,r): 2/q = d(1/2 - 1/r), (d,q,r) != (2,2,inf). Rejects inadmissible
// pairs with the scaling relation in the message.
double strichartz_ratio(const Field& f, double q, double r,
                        const TimeWindow& window, double d_av);

struct ScanRow {
  int n1 = 0;
  int n2 = 0;
  std::uint64_t seed = 0;
  double ratio = 0;
  double normalized = 0;  // ratio * (Nmax/Nmin)^{beta(d)}
};

struct EstimateScanReport {
  std::vector<ScanRow> rows;
  double fitted_exponent = 0;   // LSQ slope of log(mean ratio) vs log(Nmin/Nmax)
  double bound_exponent = 0;    // beta(d) reference
  double normalized_max = 0;
  double normalized_slope = 0;  // LSQ slope of log(mean normalized) vs log separation
};

double beta_exponent(int dim);  // 1/6 in d=1, 1/2 in d=2

// Least-squares slope of y against x.
double lsq_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace dmnls
