#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace fede {

/// In-place radix-2 FFT; size must be a power of two.
void fft_forward(std::vector<std::complex<double>>& a);
/// Inverse transform including the 1/N normalization.
void fft_inverse(std::vector<std::complex<double>>& a);

std::size_t next_pow2(std::size_t n);

}  // namespace fede
