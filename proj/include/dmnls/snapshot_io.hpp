#pragma once

#include <string>

#include "dmnls/field.hpp"

namespace dmnls {

// Binary snapshot format (little-endian):
//   magic "DMNLS1\0" (7 bytes), version u8 (=1), dim u8, n u32,
//   box_length f64, t f64, then n^dim interleaved (re f64, im f64) values,
//   row-major, physical-space representation.
void write_snapshot(const std::string& path, const Field& f);
Field read_snapshot(const std::string& path);

}  // namespace dmnls
