#ifndef ADELIC_FFT_HPP
#define ADELIC_FFT_HPP

#include <complex>
#include <vector>

namespace adelic::fft {

using cplx = std::complex<double>;

// In-place radix-2 FFT, size must be a power of two.
// forward: X_k = sum_j x_j e^{-2 pi i jk/N};  inverse includes the 1/N.
void transform(std::vector<cplx>& a, bool inverse);

bool is_pow2(std::size_t n);

} // namespace adelic::fft

#endif
