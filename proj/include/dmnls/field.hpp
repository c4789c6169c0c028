#pragma once

#include <stdexcept>
#include <vector>

#include "dmnls/grid.hpp"

namespace dmnls {

enum class Space { Physical, Frequency };

// Complex state sampled on a Grid. The canonical representation is physical
// space; frequency-side Fields hold analyst-convention coefficients
// fhat(xi) = (L/n)^dim * DFT(f), so coefficients are grid-size independent.
struct Field {
  Grid grid;
  Space space = Space::Physical;
  std::vector<cplx> values;
  double t = 0.0;  // optional simulation-time label

  Field() = default;
  Field(const Grid& g, Space s = Space::Physical)
      : grid(g), space(s), values(g.total_points(), cplx(0.0, 0.0)) {}

  std::size_t size() const { return values.size(); }
  bool is_finite() const;
};

Field zero_field(const Grid& g);

// Elementwise helpers; grids must match.
Field& axpy(Field& y, cplx a, const Field& x);  // y += a*x
Field scaled(const Field& f, cplx a);
Field difference(const Field& a, const Field& b);

void require_same_grid(const Field& a, const Field& b);

}  // namespace dmnls
