#include "dmnls/trajectory.hpp"

#include <cmath>
#include <stdexcept>

#include "dmnls/spectral.hpp"

namespace dmnls {

void Trajectory::append(double t, Field snapshot) {
  if (!times.empty()) {
    if (t <= times.back()) throw std::invalid_argument("Trajectory: times must increase");
    if (!(snapshot.grid == snapshots.front().grid))
      throw std::invalid_argument("Trajectory: snapshots must share one grid");
  }
  DiagRecord d;
  d.t = t;
  d.mass = mass(snapshot);
  d.h1 = h_s_norm(snapshot, 1.0);
  d.linf = linf_norm(snapshot);
  d.edge_mass = edge_mass_fraction(snapshot);
  snapshot.t = t;
  times.push_back(t);
  snapshots.push_back(std::move(snapshot));
  diagnostics.push_back(d);
}

double spacetime_norm(const Trajectory& traj, double q, double r) {
  if (traj.times.empty()) throw std::invalid_argument("spacetime_norm: empty trajectory");
  if (q < 1.0 || r < 1.0) throw std::invalid_argument("spacetime_norm: q,r must be >= 1");
  std::vector<double> lr(traj.size());
  for (std::size_t i = 0; i < traj.size(); ++i) lr[i] = lebesgue_norm(traj.snapshots[i], r);
  if (std::isinf(q)) {
    double m = 0;
    for (double v : lr) m = std::max(m, v);
    return m;
  }
  if (traj.size() == 1) return 0.0;  // degenerate window
  double acc = 0;
  for (std::size_t i = 0; i + 1 < traj.size(); ++i) {
    const double h = traj.times[i + 1] - traj.times[i];
    acc += 0.5 * h * (std::pow(lr[i], q) + std::pow(lr[i + 1], q));
  }
  return std::pow(acc, 1.0 / q);
}

}  // namespace dmnls
