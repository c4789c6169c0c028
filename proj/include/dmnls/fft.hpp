#pragma once

#include <complex>
#include <cstddef>

namespace dmnls::fft {

// Unnormalized c2c DFT (FFTW backend, FFTW_ESTIMATE plans for run-to-run
// determinism). Plans and aligned workspaces are cached per thread; plan
// creation is serialized internally, so concurrent transforms on distinct
// data are safe. dim is 1 or 2; n is points per axis; in/out may alias.
void dft(int dim, int n, const std::complex<double>* in, std::complex<double>* out,
         bool forward);

}  // namespace dmnls::fft
