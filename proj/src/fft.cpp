#include "casim/fft.hpp"

#include <cmath>

#include "casim/constants.hpp"
#include "casim/errors.hpp"

namespace casim {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

void fft_inplace(std::vector<std::complex<double>>& a, bool inverse) {
    const std::size_t n = a.size();
    if (!is_power_of_two(n))
        throw ContractError("fft: length must be a power of two");
    if (n == 1) return;

    // bit-reversal permutation
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }

    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = (inverse ? 2.0 : -2.0) * constants::pi / static_cast<double>(len);
        const std::complex<double> wlen(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                const std::complex<double> u = a[i + k];
                const std::complex<double> t = a[i + k + len / 2] * w;
                a[i + k] = u + t;
                a[i + k + len / 2] = u - t;
                w *= wlen;
            }
        }
    }
    if (inverse) {
        const double inv = 1.0 / static_cast<double>(n);
        for (auto& z : a) z *= inv;
    }
}

std::vector<double> hilbert_envelope(std::span<const double> signal) {
    const std::size_t n = signal.size();
    if (!is_power_of_two(n) || n < 8)
        throw ContractError("hilbert_envelope: length must be a power of two >= 8");

    std::vector<std::complex<double>> a(n);
    for (std::size_t i = 0; i < n; ++i) a[i] = signal[i];
    fft_inplace(a, false);
    for (std::size_t k = 1; k < n / 2; ++k) a[k] *= 2.0;  // DC and Nyquist stay
    for (std::size_t k = n / 2 + 1; k < n; ++k) a[k] = 0.0;
    fft_inplace(a, true);

    std::vector<double> env(n);
    for (std::size_t i = 0; i < n; ++i) env[i] = std::abs(a[i]);
    return env;
}

}  // namespace casim
