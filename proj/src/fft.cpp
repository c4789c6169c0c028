#include "dmnls/fft.hpp"

#include <fftw3.h>

#include <cstring>
#include <map>
#include <mutex>
#include <stdexcept>

namespace dmnls::fft {

namespace {

// fftw planning is not thread safe; execution on distinct plans is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct PlanEntry {
  fftw_plan plan = nullptr;
  fftw_complex* in = nullptr;
  fftw_complex* out = nullptr;
  std::size_t count = 0;

  ~PlanEntry() {
    std::lock_guard<std::mutex> lock(planner_mutex());
    if (plan) fftw_destroy_plan(plan);
    if (in) fftw_free(in);
    if (out) fftw_free(out);
  }
};

using Key = std::tuple<int, int, bool>;  // dim, n, forward

PlanEntry& get_plan(int dim, int n, bool forward) {
  thread_local std::map<Key, PlanEntry> cache;
  Key key{dim, n, forward};
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  PlanEntry& e = cache[key];
  e.count = dim == 1 ? static_cast<std::size_t>(n)
                     : static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    e.in = fftw_alloc_complex(e.count);
    e.out = fftw_alloc_complex(e.count);
    if (!e.in || !e.out) throw std::bad_alloc();
    const int sign = forward ? FFTW_FORWARD : FFTW_BACKWARD;
    // FFTW_ESTIMATE keeps the plan choice deterministic across runs.
    e.plan = dim == 1 ? fftw_plan_dft_1d(n, e.in, e.out, sign, FFTW_ESTIMATE)
                      : fftw_plan_dft_2d(n, n, e.in, e.out, sign, FFTW_ESTIMATE);
    if (!e.plan) throw std::runtime_error("fftw plan creation failed");
  }
  return e;
}

}  // namespace

void dft(int dim, int n, const std::complex<double>* in, std::complex<double>* out,
         bool forward) {
  PlanEntry& e = get_plan(dim, n, forward);
  std::memcpy(e.in, in, e.count * sizeof(fftw_complex));
  fftw_execute(e.plan);
  std::memcpy(out, e.out, e.count * sizeof(fftw_complex));
}

}  // namespace dmnls::fft
