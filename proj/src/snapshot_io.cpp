#include "dmnls/snapshot_io.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace dmnls {

namespace {

constexpr char kMagic[7] = {'D', 'M', 'N', 'L', 'S', '1', '\0'};
constexpr std::uint8_t kVersion = 1;

void put_u32(std::string& buf, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) buf.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}
void put_f64(std::string& buf, double d) {
  std::uint64_t v = std::bit_cast<std::uint64_t>(d);
  for (int i = 0; i < 8; ++i) buf.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}
std::uint32_t get_u32(const char* p) {
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(static_cast<unsigned char>(p[i])) << (8 * i);
  return v;
}
double get_f64(const char* p) {
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(static_cast<unsigned char>(p[i])) << (8 * i);
  return std::bit_cast<double>(v);
}

}  // namespace

void write_snapshot(const std::string& path, const Field& f) {
  const Field g = [&] {
    if (f.space == Space::Physical) return f;
    throw std::invalid_argument("write_snapshot: physical-space fields only");
  }();
  std::string buf;
  buf.reserve(29 + 16 * g.values.size());
  buf.append(kMagic, 7);
  buf.push_back(static_cast<char>(kVersion));
  buf.push_back(static_cast<char>(g.grid.dim));
  put_u32(buf, static_cast<std::uint32_t>(g.grid.n));
  put_f64(buf, g.grid.box_length);
  put_f64(buf, g.t);
  for (const cplx& v : g.values) {
    put_f64(buf, v.real());
    put_f64(buf, v.imag());
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("write_snapshot: cannot open " + path);
  out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
  if (!out) throw std::runtime_error("write_snapshot: write failed for " + path);
}

Field read_snapshot(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("read_snapshot: cannot open " + path);
  std::string buf((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (buf.size() < 29) throw std::runtime_error("read_snapshot: truncated header in " + path);
  if (std::memcmp(buf.data(), kMagic, 7) != 0)
    throw std::runtime_error("read_snapshot: bad magic in " + path);
  if (static_cast<std::uint8_t>(buf[7]) != kVersion)
    throw std::runtime_error("read_snapshot: unsupported version in " + path);
  const int dim = static_cast<std::uint8_t>(buf[8]);
  const int n = static_cast<int>(get_u32(buf.data() + 9));
  const double box_length = get_f64(buf.data() + 13);
  const double t = get_f64(buf.data() + 21);

  Field f(make_grid(dim, n, box_length));
  f.t = t;
  const std::size_t need = 29 + 16 * f.values.size();
  if (buf.size() != need) throw std::runtime_error("read_snapshot: size mismatch in " + path);
  const char* p = buf.data() + 29;
  for (cplx& v : f.values) {
    v = cplx(get_f64(p), get_f64(p + 8));
    p += 16;
  }
  return f;
}

}  // namespace dmnls
