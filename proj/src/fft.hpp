#pragma once

#include <complex>
#include <vector>

namespace osg {

// In-place radix-2 FFT; size must be a power of two. The inverse transform
// includes the 1/n factor.
void fft_inplace(std::vector<std::complex<double>>& a, bool inverse);

bool is_power_of_two(std::size_t n);

} // namespace osg
