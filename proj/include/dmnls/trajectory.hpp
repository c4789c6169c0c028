#pragma once

#include <string>
#include <vector>

#include "dmnls/field.hpp"

namespace dmnls {

struct DiagRecord {
  double t = 0;
  double mass = 0;
  double h1 = 0;
  double linf = 0;
  double edge_mass = 0;  // boundary-leak fraction
};

// Time-ordered snapshots of one run. All snapshots share one grid, times are
// strictly increasing, diagnostics align one-to-one with times.
struct Trajectory {
  std::vector<double> times;
  std::vector<Field> snapshots;
  std::vector<DiagRecord> diagnostics;
  std::vector<std::pair<double, double>> step_mass;  // (t, mass) per step
  double max_mass_drift = 0.0;  // max relative |mass - mass0| over all steps
  bool reliable = true;         // cleared when mass drift exceeds 1e-6
  std::string note;

  std::size_t size() const { return times.size(); }
  void append(double t, Field snapshot);
  const Field& back() const { return snapshots.back(); }
};

// L^q_t L^r_x over the stored snapshot times: composite trapezoid in t of
// ||u(t)||_r^q (max over snapshots when q = inf). Refinement in t is the
// caller's responsibility. Throws on an empty trajectory.
double spacetime_norm(const Trajectory& traj, double q, double r);

}  // namespace dmnls
