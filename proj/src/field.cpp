#include "dmnls/field.hpp"

#include <cmath>

namespace dmnls {

bool Field::is_finite() const {
  for (const cplx& v : values)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  return true;
}

Field zero_field(const Grid& g) { return Field(g); }

void require_same_grid(const Field& a, const Field& b) {
  if (!(a.grid == b.grid)) throw std::invalid_argument("fields live on different grids");
}

Field& axpy(Field& y, cplx a, const Field& x) {
  require_same_grid(y, x);
  for (std::size_t i = 0; i < y.values.size(); ++i) y.values[i] += a * x.values[i];
  return y;
}

Field scaled(const Field& f, cplx a) {
  Field out = f;
  for (cplx& v : out.values) v *= a;
  return out;
}

Field difference(const Field& a, const Field& b) {
  require_same_grid(a, b);
  Field out = a;
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] -= b.values[i];
  return out;
}

}  // namespace dmnls
