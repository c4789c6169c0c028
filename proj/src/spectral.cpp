#include "dmnls/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "dmnls/fft.hpp"

namespace dmnls {

namespace {
constexpr double kPi = 3.141592653589793238462643;
}

Field to_frequency(const Field& f) {
  if (f.space == Space::Frequency) return f;
  Field out = f;
  out.space = Space::Frequency;
  fft::dft(f.grid.dim, f.grid.n, f.values.data(), out.values.data(), true);
  const double w = f.grid.cell_volume();  // (L/n)^dim quadrature weight
  for (cplx& v : out.values) v *= w;
  return out;
}

Field to_physical(const Field& f) {
  if (f.space == Space::Physical) return f;
  Field out = f;
  out.space = Space::Physical;
  fft::dft(f.grid.dim, f.grid.n, f.values.data(), out.values.data(), false);
  const double s = std::pow(1.0 / f.grid.box_length, f.grid.dim);
  for (cplx& v : out.values) v *= s;
  return out;
}

Field free_propagate(const Field& f, double tau, double coeff) {
  const bool was_physical = (f.space == Space::Physical);
  Field fh = was_physical ? to_frequency(f) : f;
  const double a = coeff * tau;
  for (std::size_t i = 0; i < fh.values.size(); ++i) {
    const double phase = -a * fh.grid.freq_sq(i);
    fh.values[i] *= cplx(std::cos(phase), std::sin(phase));
  }
  return was_physical ? to_physical(fh) : fh;
}

double mass(const Field& f) {
  if (f.space == Space::Physical) {
    double s = 0;
    for (const cplx& v : f.values) s += std::norm(v);
    return s * f.grid.cell_volume();
  }
  // Parseval with the analyst convention: (2 pi)^{-dim} sum |fhat|^2 dxi^dim
  double s = 0;
  for (const cplx& v : f.values) s += std::norm(v);
  const double dxi = 2.0 * kPi / f.grid.box_length;
  return s * std::pow(dxi / (2.0 * kPi), f.grid.dim);
}

double l2_norm(const Field& f) { return std::sqrt(mass(f)); }

double h_s_norm(const Field& f, double s) {
  if (s < 0) throw std::invalid_argument("h_s_norm: s must be >= 0");
  Field fh = to_frequency(f);
  double acc = 0;
  for (std::size_t i = 0; i < fh.values.size(); ++i)
    acc += std::pow(1.0 + fh.grid.freq_sq(i), s) * std::norm(fh.values[i]);
  const double dxi = 2.0 * kPi / f.grid.box_length;
  return std::sqrt(acc * std::pow(dxi / (2.0 * kPi), f.grid.dim));
}

double linf_norm(const Field& f) {
  const Field g = to_physical(f);
  double m = 0;
  for (const cplx& v : g.values) m = std::max(m, std::abs(v));
  return m;
}

double lebesgue_norm(const Field& f, double r) {
  if (r < 1.0) throw std::invalid_argument("lebesgue_norm: r must be >= 1");
  if (std::isinf(r)) return linf_norm(f);
  const Field g = to_physical(f);
  double s = 0;
  for (const cplx& v : g.values) s += std::pow(std::abs(v), r);
  return std::pow(s * g.grid.cell_volume(), 1.0 / r);
}

cplx inner_product(const Field& a, const Field& b) {
  require_same_grid(a, b);
  const Field ap = to_physical(a);
  const Field bp = to_physical(b);
  cplx s(0, 0);
  for (std::size_t i = 0; i < ap.values.size(); ++i)
    s += ap.values[i] * std::conj(bp.values[i]);
  return s * ap.grid.cell_volume();
}

double edge_mass_fraction(const Field& f) {
  const Field g = to_physical(f);
  const int n = g.grid.n;
  const int lo = n / 20;       // |x - L/2| within 10% of the period boundary;
  const int hi = n - n / 20;   // grid origin is x = 0, box center is L/2
  double edge = 0, total = 0;
  auto near_edge = [&](std::size_t axis_idx) {
    return axis_idx < static_cast<std::size_t>(lo) || axis_idx >= static_cast<std::size_t>(hi);
  };
  for (std::size_t i = 0; i < g.values.size(); ++i) {
    const double m = std::norm(g.values[i]);
    total += m;
    bool e = g.grid.dim == 1 ? near_edge(i)
                             : (near_edge(i / n) || near_edge(i % n));
    if (e) edge += m;
  }
  return total > 0 ? edge / total : 0.0;
}

// --- Littlewood-Paley cutoffs ---

namespace {
double bump_h(double t) { return t > 0 ? std::exp(-1.0 / t) : 0.0; }
double smoothstep(double t) {
  if (t <= 0) return 0.0;
  if (t >= 1) return 1.0;
  const double a = bump_h(t), b = bump_h(1.0 - t);
  return a / (a + b);
}
}  // namespace

double lp_rho(double xi_abs) { return 1.0 - smoothstep(std::abs(xi_abs) - 1.0); }

double lp_rho_level(double xi_abs, int N) {
  if (N == 1) return lp_rho(xi_abs);
  return lp_rho(xi_abs / N) - lp_rho(2.0 * xi_abs / N);
}

bool DyadicLadder::has_level(int N) const {
  return std::find(levels.begin(), levels.end(), N) != levels.end();
}

std::vector<double> DyadicLadder::cutoff_table(int N) const {
  std::vector<double> table(grid.total_points());
  for (std::size_t i = 0; i < table.size(); ++i)
    table[i] = lp_rho_level(grid.freq_abs(i), N);
  return table;
}

DyadicLadder make_ladder(const Grid& g) {
  const double half_nyquist = g.nyquist() / 2.0;
  if (half_nyquist < 1.0)
    throw std::invalid_argument("make_ladder: grid resolves no dyadic level (Nyquist < 2)");
  int nmax = 1;
  while (2 * nmax <= static_cast<int>(half_nyquist)) nmax *= 2;
  DyadicLadder ladder;
  ladder.grid = g;
  for (int N = 1; N <= nmax; N *= 2) ladder.levels.push_back(N);
  return ladder;
}

Field dyadic_project(const Field& f, int N, const DyadicLadder& ladder) {
  if (!ladder.has_level(N))
    throw std::invalid_argument("dyadic_project: N = " + std::to_string(N) +
                                " is not a ladder level");
  const bool was_physical = (f.space == Space::Physical);
  Field fh = was_physical ? to_frequency(f) : f;
  for (std::size_t i = 0; i < fh.values.size(); ++i)
    fh.values[i] *= lp_rho_level(fh.grid.freq_abs(i), N);
  return was_physical ? to_physical(fh) : fh;
}

}  // namespace dmnls
