#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "casim/constants.hpp"
#include "casim/errors.hpp"
#include "casim/fft.hpp"
#include "casim/pchip.hpp"
#include "casim/quadrature.hpp"

using namespace casim;

TEST_CASE("fft roundtrip and single-tone spectrum") {
    const std::size_t n = 256;
    std::vector<std::complex<double>> a(n), orig;
    for (std::size_t j = 0; j < n; ++j)
        a[j] = std::complex<double>(std::cos(2.0 * constants::pi * 5.0 * j / n),
                                    0.1 * std::sin(2.0 * constants::pi * 3.0 * j / n));
    orig = a;
    fft_inplace(a, false);
    // cos at bin 5: coefficients n/2 at k=5 and k=n-5
    CHECK(std::abs(a[5].real() - n / 2.0) < 1e-9);
    fft_inplace(a, true);
    for (std::size_t j = 0; j < n; ++j) CHECK(std::abs(a[j] - orig[j]) < 1e-12);

    std::vector<std::complex<double>> bad(100);
    CHECK_THROWS_AS(fft_inplace(bad, false), ContractError);
}

TEST_CASE("hilbert envelope of a pure cosine") {
    // 3 cos(5 t + 0.7) over > 20 periods; envelope must be 3 away from edges
    const std::size_t n = 4096;
    const double T = 24.0 * 2.0 * constants::pi / 5.0;
    std::vector<double> s(n);
    for (std::size_t j = 0; j < n; ++j)
        s[j] = 3.0 * std::cos(5.0 * (T * j / n) + 0.7);
    const std::vector<double> env = hilbert_envelope(s);
    const std::size_t edge = n / 50;  // 2%
    for (std::size_t j = edge; j < n - edge; ++j)
        CHECK(env[j] == doctest::Approx(3.0).epsilon(2e-3));
}

TEST_CASE("hilbert envelope, exactly periodic tone is flat to 1e-6") {
    // an integer number of cycles in the window makes the analytic signal exact
    const std::size_t n = 4096;
    std::vector<double> s(n);
    for (std::size_t j = 0; j < n; ++j)
        s[j] = 3.0 * std::cos(2.0 * constants::pi * 21.0 * j / n + 0.7);
    const std::vector<double> env = hilbert_envelope(s);
    for (std::size_t j = 0; j < n; ++j)
        CHECK(env[j] == doctest::Approx(3.0).epsilon(1e-6));
}

TEST_CASE("hilbert envelope of zeros and contract errors") {
    std::vector<double> z(64, 0.0);
    for (const double e : hilbert_envelope(z)) CHECK(e == 0.0);
    std::vector<double> bad(65, 0.0);
    CHECK_THROWS_AS(hilbert_envelope(bad), ContractError);
    std::vector<double> tiny(4, 0.0);
    CHECK_THROWS_AS(hilbert_envelope(tiny), ContractError);
}

TEST_CASE("hilbert envelope beat bound vs principal-value oracle") {
    // two well-separated tones: envelope oscillates within [|A1-A2|, A1+A2]
    const std::size_t n = 8192;
    const double A1 = 2.0, A2 = 0.7;
    const double w1 = 2.0 * constants::pi * 40.0 / n, w2 = 2.0 * constants::pi * 96.0 / n;
    std::vector<double> s(n);
    for (std::size_t j = 0; j < n; ++j)
        s[j] = A1 * std::cos(w1 * j) + A2 * std::cos(w2 * j);
    const std::vector<double> env = hilbert_envelope(s);
    const std::size_t edge = n / 50;
    for (std::size_t j = edge; j < n - edge; ++j) {
        CHECK(env[j] >= (A1 - A2) - 1e-6);
        CHECK(env[j] <= (A1 + A2) + 1e-6);
    }

    // discrete principal-value quadrature of the convolution kernel 1/(pi t)
    // as an independent check of the analytic-signal imaginary part
    auto pv_hilbert = [&](std::size_t i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            acc += s[j] / (static_cast<double>(i) - static_cast<double>(j));
        }
        return acc / constants::pi;
    };
    const std::size_t i0 = n / 2 + 7;
    const double exp1 = A1 * std::sin(w1 * i0) + A2 * std::sin(w2 * i0);
    const double got = pv_hilbert(i0);
    CHECK(got == doctest::Approx(exp1).epsilon(5e-2));
    const double env_mid = std::hypot(s[i0], got);
    CHECK(env[i0] == doctest::Approx(env_mid).epsilon(5e-2));
}

TEST_CASE("monotone cubic: knots exact, monotone, linear data exact") {
    std::vector<double> x = {0.0, 1.0, 2.5, 3.0, 4.5};
    std::vector<double> y = {10.0, 6.0, 5.5, 2.0, 1.0};
    MonotoneCubic m(x, y);
    for (std::size_t i = 0; i < x.size(); ++i) CHECK(m(x[i]) == doctest::Approx(y[i]).epsilon(1e-15));
    // monotone between knots
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        double prev = y[i];
        for (int k = 1; k <= 1000; ++k) {
            const double u = x[i] + (x[i + 1] - x[i]) * k / 1000.0;
            const double v = m(u);
            CHECK(v <= prev + 1e-12);
            CHECK(v <= y[i] + 1e-12);
            CHECK(v >= y[i + 1] - 1e-12);
            prev = v;
        }
    }
    CHECK_THROWS_AS(m(-0.1), DomainError);
    CHECK_THROWS_AS(m(4.6), DomainError);

    // exactly linear data reproduces the line (power laws in log-log)
    std::vector<double> t = {0.0, 0.5, 1.25, 2.0, 3.0};
    std::vector<double> L(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) L[i] = 2.0 - 4.0 * t[i];
    MonotoneCubic lin(t, L);
    for (double u = 0.0; u <= 3.0; u += 0.01)
        CHECK(lin(u) == doctest::Approx(2.0 - 4.0 * u).epsilon(1e-13));
}

TEST_CASE("adaptive simpson") {
    const double got = integrate_adaptive([](double x) { return std::exp(-x * x); },
                                          -8.0, 8.0, 1e-12);
    CHECK(got == doctest::Approx(std::sqrt(constants::pi)).epsilon(1e-11));
    CHECK(integrate_adaptive([](double x) { return x; }, 1.0, 1.0) == 0.0);
}
