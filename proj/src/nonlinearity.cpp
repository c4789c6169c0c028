#include "dmnls/nonlinearity.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

#include "dmnls/fft.hpp"
#include "dmnls/parallel.hpp"
#include "dmnls/spectral.hpp"

namespace dmnls {

namespace {

constexpr double kPi = 3.141592653589793238462643;

Quadrature& cached_rule(int q);

// Internal padded grids are plain mode tables; the public power-of-two
// constraint applies to user grids only.
Grid padded_grid(int dim, int np, double box_length) {
  Grid g;
  g.dim = dim;
  g.n = np;
  g.box_length = box_length;
  g.freq.resize(np);
  const double dxi = 2.0 * kPi / box_length;
  for (int j = 0; j < np; ++j) g.freq[j] = dxi * ((j < (np + 1) / 2) ? j : j - np);
  return g;
}

// frequency-side zero padding / truncation between an n-grid and a p*n-grid;
// analyst coefficients are grid-size independent, so values copy verbatim.
Field pad_frequency(const Field& fh, int factor) {
  const int n = fh.grid.n, np = factor * n, dim = fh.grid.dim;
  Field out(padded_grid(dim, np, fh.grid.box_length), Space::Frequency);
  auto src_axis = [n](int j) { return (j < n / 2) ? j : j - n; };
  if (dim == 1) {
    for (int j = 0; j < n; ++j) out.values[(src_axis(j) + np) % np] = fh.values[j];
  } else {
    for (int jx = 0; jx < n; ++jx)
      for (int jy = 0; jy < n; ++jy)
        out.values[static_cast<std::size_t>((src_axis(jx) + np) % np) * np +
                   (src_axis(jy) + np) % np] =
            fh.values[static_cast<std::size_t>(jx) * n + jy];
  }
  out.t = fh.t;
  return out;
}

Field truncate_frequency(const Field& fh_padded, const Grid& target) {
  const int n = target.n, np = fh_padded.grid.n, dim = target.dim;
  Field out(target, Space::Frequency);
  auto src_axis = [n](int j) { return (j < n / 2) ? j : j - n; };
  if (dim == 1) {
    for (int j = 0; j < n; ++j) out.values[j] = fh_padded.values[(src_axis(j) + np) % np];
  } else {
    for (int jx = 0; jx < n; ++jx)
      for (int jy = 0; jy < n; ++jy)
        out.values[static_cast<std::size_t>(jx) * n + jy] =
            fh_padded.values[static_cast<std::size_t>((src_axis(jx) + np) % np) * np +
                             (src_axis(jy) + np) % np];
  }
  out.t = fh_padded.t;
  return out;
}

void pointwise_power(std::vector<cplx>& v, double sigma) {
  if (sigma == 1.0) {
    for (cplx& z : v) z *= std::norm(z);
  } else if (sigma == 2.0) {
    for (cplx& z : v) {
      const double a = std::norm(z);
      z *= a * a;
    }
  } else {
    for (cplx& z : v) z *= std::pow(std::norm(z), sigma);
  }
}

double occupied_bandwidth(const Field& fh) {
  double peak = 0;
  for (const cplx& v : fh.values) peak = std::max(peak, std::abs(v));
  if (peak == 0) return 0;
  double band = 0;
  for (std::size_t i = 0; i < fh.values.size(); ++i)
    if (std::abs(fh.values[i]) > 1e-13 * peak) band = std::max(band, fh.grid.freq_abs(i));
  return band;
}

bool integer_sigma(double sigma) { return sigma == std::floor(sigma) && sigma >= 1.0; }

void strict_alias_check(const Field& fh, double sigma) {
  const double band = occupied_bandwidth(fh);
  if ((2.0 * sigma + 1.0) * band > fh.grid.nyquist() * (1.0 + 1e-12))
    throw AliasError("product bandwidth " + std::to_string((2 * sigma + 1) * band) +
                     " exceeds the grid Nyquist " + std::to_string(fh.grid.nyquist()));
}

void exponential_filter(Field& fh) {
  const double cut = fh.grid.nyquist();
  for (std::size_t i = 0; i < fh.values.size(); ++i) {
    const double x = fh.grid.freq_abs(i) / cut;
    fh.values[i] *= std::exp(-36.0 * std::pow(x, 36));
  }
}

// |v|^{2 sigma} v on the frequency side, de-aliased per policy.
Field power_nonlinearity_freq(const Field& vh, double sigma, Dealias policy) {
  if (policy == Dealias::Strict) strict_alias_check(vh, sigma);
  if (policy == Dealias::Off) {
    Field v = to_physical(vh);
    pointwise_power(v.values, sigma);
    return to_frequency(v);
  }
  const bool exact = integer_sigma(sigma);
  const int factor = exact ? static_cast<int>(sigma) + 1
                           : static_cast<int>(std::ceil(sigma)) + 1;
  Field vp = to_physical(pad_frequency(vh, factor));
  pointwise_power(vp.values, sigma);
  Field out = truncate_frequency(to_frequency(vp), vh.grid);
  if (!exact) exponential_filter(out);  // smooth fallback for non-integer powers
  return out;
}

void mul_phase(Field& fh, double a) {  // e^{i a Lap}: multiply by e^{-i a |xi|^2}
  for (std::size_t i = 0; i < fh.values.size(); ++i) {
    const double phase = -a * fh.grid.freq_sq(i);
    fh.values[i] *= cplx(std::cos(phase), std::sin(phase));
  }
}

}  // namespace

Quadrature gauss_legendre_unit(int q) {
  if (q < 2) throw std::invalid_argument("gauss_legendre_unit: need quad_nodes >= 2");
  Quadrature rule;
  rule.nodes.resize(q);
  rule.weights.resize(q);
  for (int i = 0; i < q; ++i) {
    // Newton on the Legendre polynomial from the Chebyshev-like initial guess
    double x = std::cos(kPi * (i + 0.75) / (q + 0.5));
    double dp = 0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= q; ++k) {
        const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = q * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= q; ++k) {
        const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = q * (x * p1 - p0) / (x * x - 1.0);
    }
    rule.nodes[i] = 0.5 * (x + 1.0);               // map [-1,1] -> [0,1]
    rule.weights[i] = 1.0 / ((1.0 - x * x) * dp * dp);  // 2/((1-x^2) P'^2) halved
  }
  return rule;
}

namespace {
Quadrature& cached_rule(int q) {
  thread_local std::map<int, Quadrature> cache;
  auto it = cache.find(q);
  if (it == cache.end()) it = cache.emplace(q, gauss_legendre_unit(q)).first;
  return it->second;
}
}  // namespace

Field averaged_nonlinearity(const Field& u, const NonlinearityParams& p) {
  const bool was_physical = (u.space == Space::Physical);
  const Field uh = to_frequency(u);
  const Quadrature& rule = cached_rule(p.quad_nodes);

  std::vector<Field> node_terms(rule.nodes.size());
  parallel_for(rule.nodes.size(), p.threads, [&](std::size_t k) {
    Field vq = uh;
    mul_phase(vq, rule.nodes[k]);                                 // e^{+ir Lap}
    Field wq = power_nonlinearity_freq(vq, p.sigma, p.dealias);
    mul_phase(wq, -rule.nodes[k]);                                // e^{-ir Lap}
    node_terms[k] = std::move(wq);
  });

  Field acc(uh.grid, Space::Frequency);
  acc.t = u.t;
  for (std::size_t k = 0; k < node_terms.size(); ++k)  // fixed order: reproducible
    axpy(acc, rule.weights[k], node_terms[k]);
  return was_physical ? to_physical(acc) : acc;
}

Field trilinear_averaged(const Field& u1, const Field& u2, const Field& u3,
                         const NonlinearityParams& p) {
  require_same_grid(u1, u2);
  require_same_grid(u1, u3);
  const bool was_physical = (u1.space == Space::Physical);
  const Field h1 = to_frequency(u1), h2 = to_frequency(u2), h3 = to_frequency(u3);
  const Quadrature& rule = cached_rule(p.quad_nodes);
  if (p.dealias == Dealias::Strict)
    for (const Field* f : {&h1, &h2, &h3}) strict_alias_check(*f, 1.0);

  std::vector<Field> node_terms(rule.nodes.size());
  parallel_for(rule.nodes.size(), p.threads, [&](std::size_t k) {
    const double r = rule.nodes[k];
    auto evolve = [&](const Field& fh) {
      Field g = fh;
      mul_phase(g, r);
      return p.dealias == Dealias::Off ? to_physical(g)
                                       : to_physical(pad_frequency(g, 2));
    };
    Field v1 = evolve(h1);
    const Field v2 = evolve(h2), v3 = evolve(h3);
    for (std::size_t i = 0; i < v1.values.size(); ++i)
      v1.values[i] = v1.values[i] * std::conj(v2.values[i]) * v3.values[i];
    Field wq = to_frequency(v1);
    if (p.dealias != Dealias::Off) wq = truncate_frequency(wq, h1.grid);
    mul_phase(wq, -r);
    node_terms[k] = std::move(wq);
  });

  Field acc(h1.grid, Space::Frequency);
  acc.t = u1.t;
  for (std::size_t k = 0; k < node_terms.size(); ++k)
    axpy(acc, rule.weights[k], node_terms[k]);
  return was_physical ? to_physical(acc) : acc;
}

Field local_nonlinearity(const Field& u, double sigma, Dealias dealias) {
  const bool was_physical = (u.space == Space::Physical);
  Field out = power_nonlinearity_freq(to_frequency(u), sigma, dealias);
  out.t = u.t;
  return was_physical ? to_physical(out) : out;
}

}  // namespace dmnls
