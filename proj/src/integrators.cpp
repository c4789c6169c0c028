#include "dmnls/integrators.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "dmnls/parallel.hpp"
#include "dmnls/spectral.hpp"

namespace dmnls {

namespace {

const cplx kI(0.0, 1.0);

void mul_free_phase(Field& fh, double tau, double coeff) {  // e^{i coeff tau Lap}
  const double a = coeff * tau;
  for (std::size_t i = 0; i < fh.values.size(); ++i) {
    const double phase = -a * fh.grid.freq_sq(i);
    fh.values[i] *= cplx(std::cos(phase), std::sin(phase));
  }
}

int checked_steps(double span, double dt, const char* what) {
  const int steps = static_cast<int>(std::llround(span / dt));
  if (steps < 1 || std::abs(steps * dt - span) > 1e-9 * std::max(1.0, std::abs(span)))
    throw std::invalid_argument(std::string(what) + " must be an integer multiple of dt");
  return steps;
}

void check_finite(const Field& fh, double t) {
  const double m = mass(fh);
  if (!std::isfinite(m))
    throw std::runtime_error("integrator: non-finite state at t = " + std::to_string(t));
}

// One IF-RK4 step, frequency representation in and out.
Field ifrk4_step_freq(const Field& uh, const EvolutionParams& p) {
  NonlinearityParams nl = p.nl;
  nl.sigma = p.sigma;
  nl.threads = p.threads;
  const double h = p.dt;
  auto N = [&](const Field& w) {  // N(u) = i F(u), frequency side
    return scaled(averaged_nonlinearity(w, nl), kI);
  };
  auto half = [&](Field w) {
    mul_free_phase(w, 0.5 * h, p.d_av);
    return w;
  };

  const Field a1 = N(uh);
  const Field eu2 = half(uh);
  const Field b1 = half(a1);

  Field ua = eu2;
  axpy(ua, 0.5 * h, b1);
  const Field a2 = N(ua);

  Field ub = eu2;
  axpy(ub, 0.5 * h, a2);
  const Field a3 = N(ub);

  Field uc = half(eu2);
  axpy(uc, h, half(a3));
  const Field a4 = N(uc);

  Field out = half(eu2);                 // e^{d_av i h Lap} u
  axpy(out, h / 6.0, half(b1));          // E a1
  axpy(out, h / 3.0, half(a2));          // 2 E_half a2 (=> h/3)
  axpy(out, h / 3.0, half(a3));
  axpy(out, h / 6.0, a4);
  return out;
}

void strang_nonlinear_phase(Field& u, double sigma, double dt) {
  // exact flow of u_t = i |u|^{2 sigma} u: modulus-preserving phase rotation
  for (cplx& z : u.values) {
    const double a = std::norm(z);
    const double amp = sigma == 1.0 ? a : (sigma == 2.0 ? a * a : std::pow(a, sigma));
    z *= cplx(std::cos(amp * dt), std::sin(amp * dt));
  }
}

}  // namespace

double dispersion_coefficient(double t, double d_av, double eps) {
  if (eps == 0.0) return d_av;
  double x = t / eps;
  x -= 2.0 * std::floor(x / 2.0);  // reduce mod the 2-periodic square wave
  return d_av + (x < 1.0 ? 1.0 : -1.0) / eps;
}

Field step_averaged(const Field& u, double t, const EvolutionParams& p) {
  const bool was_physical = (u.space == Space::Physical);
  Field uh = was_physical ? to_frequency(u) : u;
  uh = ifrk4_step_freq(uh, p);
  uh.t = t + p.dt;
  check_finite(uh, uh.t);
  return was_physical ? to_physical(uh) : uh;
}

Field step_original(const Field& u, double t, double dt, const EvolutionParams& p) {
  const bool was_physical = (u.space == Space::Physical);
  const double d = dispersion_coefficient(t + 0.5 * dt, p.d_av, p.eps);
  Field uh = was_physical ? to_frequency(u) : u;
  mul_free_phase(uh, 0.5 * dt, d);
  Field v = to_physical(uh);
  strang_nonlinear_phase(v, p.sigma, dt);
  uh = to_frequency(v);
  mul_free_phase(uh, 0.5 * dt, d);
  uh.t = t + dt;
  return was_physical ? to_physical(uh) : uh;
}

namespace {

template <typename StepFn>
Trajectory run_steps(const Field& u0, const EvolutionParams& p, StepFn step) {
  const int steps = checked_steps(p.t_final, p.dt, "t_final");
  int stride = steps;  // endpoint-only by default
  if (p.snapshot_every > 0) {
    stride = static_cast<int>(std::llround(p.snapshot_every / p.dt));
    if (stride < 1 || std::abs(stride * p.dt - p.snapshot_every) > 1e-9)
      throw std::invalid_argument("snapshot_every must be an integer multiple of dt");
  }

  Trajectory traj;
  Field uh = to_frequency(u0);
  traj.append(0.0, to_physical(uh));
  const double mass0 = mass(uh);
  traj.step_mass.emplace_back(0.0, mass0);

  for (int k = 0; k < steps; ++k) {
    const double t = k * p.dt;
    uh = step(uh, t);
    check_finite(uh, t + p.dt);
    const double m = mass(uh);
    traj.step_mass.emplace_back((k + 1) * p.dt, m);
    if (mass0 > 0) {
      const double drift = std::abs(m - mass0) / mass0;
      traj.max_mass_drift = std::max(traj.max_mass_drift, drift);
    }
    if ((k + 1) % stride == 0 || k + 1 == steps) traj.append((k + 1) * p.dt, to_physical(uh));
  }
  if (traj.max_mass_drift > 1e-6) {
    traj.reliable = false;
    traj.note = "mass drift " + std::to_string(traj.max_mass_drift) + " exceeds 1e-6";
  }
  return traj;
}

}  // namespace

Trajectory solve_averaged(const Field& u0, const EvolutionParams& p) {
  if (p.eps != 0.0)
    throw std::invalid_argument("solve_averaged: eps must be 0 (averaged equation)");
  return run_steps(u0, p, [&](const Field& uh, double) { return ifrk4_step_freq(uh, p); });
}

Trajectory solve_original(const Field& u0, const EvolutionParams& p) {
  if (!(p.eps > 0)) throw std::invalid_argument("solve_original: eps must be positive");
  const int per_eps = static_cast<int>(std::llround(p.eps / p.dt));
  if (per_eps < 1 || std::abs(per_eps * p.dt - p.eps) > 1e-12 * std::max(1.0, p.eps))
    throw std::invalid_argument(
        "solve_original: dt must divide eps so steps align with the dispersion map");
  return run_steps(u0, p, [&](const Field& uh, double t) {
    Field next = uh;
    const double d = dispersion_coefficient(t + 0.5 * p.dt, p.d_av, p.eps);
    mul_free_phase(next, 0.5 * p.dt, d);
    Field v = to_physical(next);
    strang_nonlinear_phase(v, p.sigma, p.dt);
    next = to_frequency(v);
    mul_free_phase(next, 0.5 * p.dt, d);
    return next;
  });
}

std::pair<Trajectory, PicardReport> picard_solve(const Field& u0,
                                                 const EvolutionParams& p,
                                                 int time_nodes, double tol,
                                                 int max_iter) {
  if (time_nodes < 2) throw std::invalid_argument("picard_solve: need >= 2 time intervals");
  if (max_iter < 1) throw std::invalid_argument("picard_solve: max_iter must be >= 1");
  NonlinearityParams nl = p.nl;
  nl.sigma = p.sigma;
  nl.threads = 1;  // parallelism goes across time nodes here
  const int J = time_nodes;
  const double dt = p.t_final / J;

  const Field u0h = to_frequency(u0);
  std::vector<Field> cur(J + 1);
  for (int j = 0; j <= J; ++j) {
    cur[j] = u0h;
    mul_free_phase(cur[j], j * dt, p.d_av);  // first iterate: free evolution
    cur[j].t = j * dt;
  }

  PicardReport report;
  for (int sweep = 0; sweep < max_iter; ++sweep) {
    // g_j = e^{-d_av i t_j Lap} i F(u_j), each node independent
    std::vector<Field> g(J + 1);
    parallel_for(static_cast<std::size_t>(J + 1), p.threads, [&](std::size_t j) {
      Field f = scaled(averaged_nonlinearity(cur[j], nl), kI);
      mul_free_phase(f, -static_cast<double>(j) * dt, p.d_av);
      g[j] = std::move(f);
    });

    // causal cumulative trapezoid, then push forward by the free group
    std::vector<Field> next(J + 1);
    Field integral(u0h.grid, Space::Frequency);
    next[0] = u0h;
    next[0].t = 0;
    for (int j = 1; j <= J; ++j) {
      axpy(integral, 0.5 * dt, g[j - 1]);
      axpy(integral, 0.5 * dt, g[j]);
      Field uj = u0h;
      for (std::size_t i = 0; i < uj.values.size(); ++i) uj.values[i] += integral.values[i];
      mul_free_phase(uj, j * dt, p.d_av);
      uj.t = j * dt;
      next[j] = std::move(uj);
    }

    double residual = 0;
    for (int j = 0; j <= J; ++j)
      residual = std::max(residual, l2_norm(difference(next[j], cur[j])));
    if (!report.residuals.empty() && report.residuals.back() > 0)
      report.contraction_ratios.push_back(residual / report.residuals.back());
    report.residuals.push_back(residual);
    report.iterations = sweep + 1;
    cur = std::move(next);
    if (residual <= tol) {
      report.converged = true;
      break;
    }
  }

  Trajectory traj;
  for (int j = 0; j <= J; ++j) traj.append(j * dt, to_physical(cur[j]));
  return {std::move(traj), std::move(report)};
}

}  // namespace dmnls
