#pragma once

#include <complex>
#include <span>
#include <vector>

namespace casim {

/// In-place radix-2 FFT; size must be a power of two (ContractError
/// otherwise). The inverse transform includes the 1/N factor.
void fft_inplace(std::vector<std::complex<double>>& a, bool inverse);

/// Envelope by the analytic signal: transform, zero the negative-frequency
/// half, double the positive half (DC and Nyquist kept as-is), transform
/// back, take the magnitude. Length must be a power of two, >= 8.
std::vector<double> hilbert_envelope(std::span<const double> signal);

bool is_power_of_two(std::size_t n);

}  // namespace casim
