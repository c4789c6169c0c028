#include "dmnls/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace dmnls {

VariationSample sample_from(const Trajectory& traj, bool infinity_marker) {
  VariationSample s;
  s.times = traj.times;
  s.points = traj.snapshots;
  s.infinity_marker = infinity_marker;
  return s;
}

double p_variation_dp(const std::vector<std::vector<double>>& dist, double p) {
  const std::size_t K = dist.size();
  std::vector<double> best(K, 0.0);  // best[j]: max sum of increment^p ending at j
  double top = 0.0;
  for (std::size_t j = 1; j < K; ++j) {
    for (std::size_t i = 0; i < j; ++i)
      best[j] = std::max(best[j], best[i] + std::pow(dist[i][j], p));
    top = std::max(top, best[j]);
  }
  return std::pow(top, 1.0 / p);
}

double p_variation(const VariationSample& sample, double p) {
  if (p < 1.0) throw std::invalid_argument("p_variation: p must be >= 1");
  std::vector<const Field*> pts;
  pts.reserve(sample.points.size() + 1);
  for (const Field& f : sample.points) pts.push_back(&f);
  Field terminal;  // the "value at +infinity is zero" convention
  if (sample.infinity_marker) {
    terminal = Field(sample.points.front().grid, sample.points.front().space);
    pts.push_back(&terminal);
  }
  const std::size_t K = pts.size();
  if (K < 2) throw std::invalid_argument("p_variation: need at least two points");
  std::vector<std::vector<double>> dist(K, std::vector<double>(K, 0.0));
  for (std::size_t i = 0; i < K; ++i)
    for (std::size_t j = i + 1; j < K; ++j)
      dist[i][j] = l2_norm(difference(*pts[j], *pts[i]));
  return p_variation_dp(dist, p);
}

double vp_delta_norm(const Trajectory& traj, double p, double d_av,
                     bool infinity_marker) {
  VariationSample s;
  s.times = traj.times;
  s.infinity_marker = infinity_marker;
  s.points.reserve(traj.size());
  for (std::size_t j = 0; j < traj.size(); ++j) {
    Field w = to_frequency(traj.snapshots[j]);
    s.points.push_back(free_propagate(w, traj.times[j], -d_av));
  }
  return p_variation(s, p);
}

double x_norm_proxy(const Trajectory& traj, double s, double d_av,
                    const DyadicLadder& ladder) {
  if (traj.times.empty()) return 0.0;
  const double dxi = 2.0 * 3.141592653589793238462643 / ladder.grid.box_length;
  const double parseval = std::pow(dxi / (2.0 * 3.141592653589793238462643),
                                   ladder.grid.dim);
  std::vector<double> sup_block(ladder.levels.size(), 0.0);
  for (std::size_t j = 0; j < traj.size(); ++j) {
    Field wh = free_propagate(to_frequency(traj.snapshots[j]), traj.times[j], -d_av);
    for (std::size_t li = 0; li < ladder.levels.size(); ++li) {
      double acc = 0;
      for (std::size_t i = 0; i < wh.values.size(); ++i) {
        const double c = lp_rho_level(wh.grid.freq_abs(i), ladder.levels[li]);
        acc += c * c * std::norm(wh.values[i]);
      }
      sup_block[li] = std::max(sup_block[li], acc * parseval);
    }
  }
  double total = 0;
  for (std::size_t li = 0; li < ladder.levels.size(); ++li)
    total += std::pow(static_cast<double>(ladder.levels[li]), 2.0 * s) * sup_block[li];
  return std::sqrt(total);
}

ScatteringProfile scattering_profile(const Trajectory& traj, double d_av) {
  if (traj.size() < 3)
    throw std::invalid_argument("scattering_profile: need at least 3 snapshots");
  std::vector<Field> w(traj.size());
  for (std::size_t j = 0; j < traj.size(); ++j)
    w[j] = free_propagate(to_frequency(traj.snapshots[j]), traj.times[j], -d_av);
  ScatteringProfile out;
  out.phi_plus = to_physical(w.back());
  out.phi_plus.t = traj.times.back();
  out.residuals.reserve(traj.size());
  for (std::size_t j = 0; j < traj.size(); ++j)
    out.residuals.emplace_back(traj.times[j], l2_norm(difference(w[j], w.back())));
  return out;
}

double beta_exponent(int dim) {
  if (dim == 1) return 1.0 / 6.0;
  if (dim == 2) return 0.5;
  throw std::invalid_argument("beta_exponent: dim must be 1 or 2");
}

double lsq_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("lsq_slope: need matching samples, at least 2");
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double denom = n * sxx - sx * sx;
  if (denom == 0) throw std::invalid_argument("lsq_slope: degenerate abscissae");
  return (n * sxy - sx * sy) / denom;
}

double bilinear_ratio(const Field& f, const Field& g, int N1, int N2,
                      const TimeWindow& window, double d_av,
                      const DyadicLadder& ladder) {
  if (!(window.T > 0)) throw std::invalid_argument("bilinear_ratio: window T must be > 0");
  if (window.n_t < 16) throw std::invalid_argument("bilinear_ratio: need n_t >= 16");
  require_same_grid(f, g);
  const Field pf = dyadic_project(to_frequency(f), N1, ladder);
  const Field pg = dyadic_project(to_frequency(g), N2, ladder);
  const double nf = l2_norm(pf), ng = l2_norm(pg);
  if (nf == 0.0 || ng == 0.0) return 0.0;  // denominator-zero convention

  const int d = f.grid.dim;
  const double q = 1.0 + 2.0 / d;
  const double w = f.grid.cell_volume();
  const int nt = window.n_t;
  std::vector<double> integrand(nt);
  for (int k = 0; k < nt; ++k) {
    const double t = -window.T + 2.0 * window.T * k / (nt - 1);
    const Field uf = to_physical(free_propagate(pf, t, d_av));
    const Field ug = to_physical(free_propagate(pg, t, d_av));
    double acc = 0;
    for (std::size_t i = 0; i < uf.values.size(); ++i)
      acc += std::pow(std::abs(uf.values[i] * ug.values[i]), q);
    integrand[k] = acc * w;
  }
  double I = 0;
  const double ht = 2.0 * window.T / (nt - 1);
  for (int k = 0; k + 1 < nt; ++k) I += 0.5 * ht * (integrand[k] + integrand[k + 1]);
  return std::pow(I, 1.0 / q) / (nf * ng);
}

double strichartz_ratio(const Field& f, double q, double r,
                        const TimeWindow& window, double d_av) {
  const int d = f.grid.dim;
  const double inv_q = std::isinf(q) ? 0.0 : 1.0 / q;
  const double inv_r = std::isinf(r) ? 0.0 : 1.0 / r;
  const bool admissible = q >= 2.0 && r >= 2.0 &&
                          std::abs(2.0 * inv_q - d * (0.5 - inv_r)) <= 1e-9 &&
                          !(d == 2 && q == 2.0 && std::isinf(r));
  if (!admissible)
    throw std::invalid_argument(
        "strichartz_ratio: (q,r) must satisfy 2/q = d(1/2 - 1/r), q,r >= 2, "
        "(d,q,r) != (2,2,inf)");
  const double nf = l2_norm(f);
  if (nf == 0.0) return 0.0;
  const Field fh = to_frequency(f);
  const int nt = window.n_t;
  std::vector<double> lr(nt);
  for (int k = 0; k < nt; ++k) {
    const double t = -window.T + 2.0 * window.T * k / (nt - 1);
    lr[k] = lebesgue_norm(free_propagate(fh, t, d_av), r);
  }
  if (std::isinf(q)) return *std::max_element(lr.begin(), lr.end()) / nf;
  double I = 0;
  const double ht = 2.0 * window.T / (nt - 1);
  for (int k = 0; k + 1 < nt; ++k)
    I += 0.5 * ht * (std::pow(lr[k], q) + std::pow(lr[k + 1], q));
  return std::pow(I, 1.0 / q) / nf;
}

}  // namespace dmnls
