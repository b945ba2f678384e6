#ifndef SPINWIRE_FFT_HPP
#define SPINWIRE_FFT_HPP

#include <complex>

namespace spinwire::detail {

// Unitary DFT with the ring convention:
//   forward:  out_k = (1/sqrt N) sum_j e^{-2 pi i jk/N} in_j
//   backward: out_j = (1/sqrt N) sum_k e^{+2 pi i jk/N} in_k
// Mixed-radix (any N) via FFTW; in and out must not alias. Thread-safe.
void unitary_dft(const std::complex<double>* in, std::complex<double>* out,
                 int n, bool forward);

}  // namespace spinwire::detail

#endif
