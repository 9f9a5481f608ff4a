#include <doctest.h>

#include <cmath>
#include <complex>

#include "casim/constants.hpp"
#include "casim/duffing.hpp"
#include "casim/errors.hpp"
#include "casim/melnikov.hpp"
#include "support.hpp"

using namespace casim;

namespace {

double closed_form_amplitude(double Omega) {
    // |F[v]| for v = -sqrt(2) sech(tau) tanh(tau)
    return std::sqrt(2.0) * constants::pi * Omega /
           std::cosh(0.5 * constants::pi * Omega);
}

}  // namespace

TEST_CASE("fourier_velocity matches the closed form on the exact orbit") {
    const HomoclinicOrbit orbit = duffing_homoclinic_exact(30.0, 1e-3);
    const VelocitySpectrum spec = fourier_velocity(orbit, 4);

    CHECK(spec.omega.front() == 0.0);
    // F(0) = integral of an odd function = 0
    CHECK(std::abs(spec.F.front()) < 1e-12);

    double fmax = 0.0;
    for (const auto& F : spec.F) fmax = std::max(fmax, std::abs(F));

    int checked = 0;
    for (std::size_t k = 0; k < spec.omega.size(); ++k) {
        const double om = spec.omega[k];
        if (om < 0.2 || om > 3.0) continue;
        CHECK(std::abs(spec.F[k]) ==
              doctest::Approx(closed_form_amplitude(om)).epsilon(1e-6));
        // v is odd, so the transform is purely imaginary
        CHECK(std::abs(spec.F[k].real()) < 1e-10 * fmax);
        ++checked;
    }
    CHECK(checked > 50);
}

TEST_CASE("melnikov amplitude at Omega=1, quadrature vs envelope vs closed form") {
    const HomoclinicOrbit orbit = duffing_homoclinic_exact();
    const MelnikovAnalyzer an(orbit);
    const MelnikovAmplitude amp = an.amplitude(1.0);
    // sqrt(2) pi sech(pi/2) = 1.77065...
    CHECK(amp.A == doctest::Approx(closed_form_amplitude(1.0)).epsilon(1e-6));
    CHECK(amp.A == doctest::Approx(1.7706523).epsilon(1e-6));
    CHECK(amp.A_envelope == doctest::Approx(amp.A).epsilon(1e-5));

    // mirrored orbit: I = 0 by odd symmetry, so A = |J| and phi = +-pi/2
    CHECK(std::abs(std::abs(amp.phi) - 0.5 * constants::pi) < 1e-9);

    // A -> 0 as Omega -> 0+
    CHECK(an.amplitude(1e-4).A < 1e-3 * amp.A);
}

TEST_CASE("oracle equivalence across the band") {
    const HomoclinicOrbit orbit = duffing_homoclinic_exact();
    const MelnikovAnalyzer an(orbit);
    for (double om = 0.1; om <= 5.0; om += 0.245) {
        const MelnikovAmplitude amp = an.amplitude(om);  // throws on disagreement
        CHECK(amp.A == doctest::Approx(closed_form_amplitude(om)).epsilon(1e-5));
        CHECK(std::abs(amp.A_envelope - amp.A) <=
              1e-5 * std::max(amp.A, amp.A_envelope) + 1e-10);
    }
}

TEST_CASE("amplitude phase convention reproduces the t0 oscillation") {
    // int v cos(Omega (tau + t0)) dtau must equal A cos(Omega t0 + phi)
    const HomoclinicOrbit orbit = duffing_homoclinic_exact();
    const MelnikovAnalyzer an(orbit);
    const double Omega = 1.3;
    const MelnikovAmplitude amp = an.amplitude(Omega);
    const double dt = orbit.t[1] - orbit.t[0];
    for (const double t0 : {0.0, 0.3, 1.1, 2.9}) {
        double direct = 0.0;
        for (std::size_t j = 0; j < orbit.t.size(); ++j) {
            const double w = (j == 0 || j == orbit.t.size() - 1) ? 0.5 : 1.0;
            direct += w * orbit.v[j] * std::cos(Omega * (orbit.t[j] + t0));
        }
        direct *= dt;
        CHECK(direct ==
              doctest::Approx(amp.A * std::cos(Omega * t0 + amp.phi)).epsilon(1e-9));
    }
}

TEST_CASE("grid refinement stability of A(Omega)") {
    const HomoclinicOrbit coarse = duffing_homoclinic_exact(30.0, 1e-3);
    const HomoclinicOrbit fine = duffing_homoclinic_exact(30.0, 5e-4);
    const MelnikovAnalyzer a(coarse), b(fine);
    for (const double om : {0.3, 1.0, 2.0, 4.0})
        CHECK(a.amplitude(om).A == doctest::Approx(b.amplitude(om).A).epsilon(1e-6));
}

TEST_CASE("melnikov function and verdicts") {
    const HomoclinicOrbit orbit = duffing_homoclinic_exact();
    const MelnikovAnalyzer an(orbit);
    const double Omega = 1.0;
    const double A = an.amplitude(Omega).A;
    const double msv = an.msv();

    // alpha = 0: pure cosine, simple zeros, chaotic
    const MelnikovFunction m0 = an.melnikov_function(0.0, Omega);
    CHECK(m0.verdict == ChaosVerdict::chaotic);
    double lo = 1e300, hi = -1e300;
    for (const double M : m0.M) {
        lo = std::min(lo, M);
        hi = std::max(hi, M);
    }
    CHECK(lo == doctest::Approx(-A).epsilon(1e-3));
    CHECK(hi == doctest::Approx(A).epsilon(1e-3));

    // alpha msv > A: no zeros
    const MelnikovFunction m1 = an.melnikov_function(1.5 * A / msv, Omega);
    CHECK(m1.verdict == ChaosVerdict::not_chaotic);
    for (const double M : m1.M) CHECK(M < 0.0);

    // alpha msv = A: threshold
    const MelnikovFunction m2 = an.melnikov_function(A / msv, Omega);
    CHECK(m2.verdict == ChaosVerdict::threshold);

    CHECK_THROWS_AS(an.melnikov_function(-0.1, Omega), InvalidParameter);
}

TEST_CASE("threshold curve on the exact orbit") {
    const HomoclinicOrbit orbit = duffing_homoclinic_exact();
    std::vector<double> omegas;
    for (int i = 0; i < 40; ++i) omegas.push_back(0.2 + 2.8 * i / 39.0);
    const ThresholdCurve curve = threshold_curve(orbit, omegas);

    for (std::size_t i = 0; i < omegas.size(); ++i)
        CHECK(curve.alpha_threshold[i] ==
              doctest::Approx(duffing_threshold_exact(omegas[i])).epsilon(1e-5));

    // vanishes at both ends with a single interior maximum
    std::size_t imax = 0;
    for (std::size_t i = 0; i < omegas.size(); ++i)
        if (curve.alpha_threshold[i] > curve.alpha_threshold[imax]) imax = i;
    CHECK(imax > 0);
    CHECK(imax < omegas.size() - 1);
    for (std::size_t i = 0; i + 1 < imax; ++i)
        CHECK(curve.alpha_threshold[i] < curve.alpha_threshold[i + 1]);
    for (std::size_t i = imax; i + 1 < omegas.size(); ++i)
        CHECK(curve.alpha_threshold[i + 1] < curve.alpha_threshold[i]);

    std::vector<double> bad = {1.0, 0.5};
    CHECK_THROWS_AS(threshold_curve(orbit, bad), InvalidParameter);
}

TEST_CASE("spectrum band invariants") {
    const HomoclinicOrbit orbit = duffing_homoclinic_exact();
    const MelnikovAnalyzer an(orbit);
    const MelnikovSpectrum spec = an.spectrum_band(0.0, 8.0);
    REQUIRE(spec.omegas.size() > 100);
    CHECK(spec.msv == doctest::Approx(4.0 / 3.0).epsilon(1e-9));
    double peak = 0.0;
    for (const double a : spec.amplitude) {
        CHECK(a >= 0.0);
        peak = std::max(peak, a);
    }
    // decreasing envelope over the last decade of the band
    const std::size_t start = spec.omegas.size() * 9 / 10;
    double run_max = spec.amplitude[start];
    for (std::size_t i = start; i < spec.omegas.size(); ++i) {
        CHECK(spec.amplitude[i] <= run_max * (1.0 + 1e-12));
        run_max = std::min(run_max, spec.amplitude[i]);
    }
}

TEST_CASE("scale covariance of the chaos verdict") {
    // rescaling the time unit (tau -> s tau, v -> v/s, Omega -> Omega/s,
    // alpha -> s alpha) leaves A invariant, scales msv by 1/s, and preserves
    // the verdict sign A - alpha msv
    const double s = 2.0 * constants::pi;
    const HomoclinicOrbit base = duffing_homoclinic_exact();
    HomoclinicOrbit scaled = base;
    for (std::size_t j = 0; j < base.t.size(); ++j) {
        scaled.t[j] = base.t[j] * s;
        scaled.v[j] = base.v[j] / s;
    }
    scaled.dt_grid = base.dt_grid * s;
    scaled.msv = base.msv / s;

    const MelnikovAnalyzer a(base), b(scaled);
    const double Omega = 1.05;
    CHECK(b.amplitude(Omega / s).A == doctest::Approx(a.amplitude(Omega).A).epsilon(1e-9));
    CHECK(b.msv() == doctest::Approx(a.msv() / s).epsilon(1e-12));
    CHECK(b.threshold_alpha(Omega / s) ==
          doctest::Approx(s * a.threshold_alpha(Omega)).epsilon(1e-9));

    const double ath = a.threshold_alpha(Omega);
    for (const double frac : {0.25, 0.5, 0.9, 1.1, 2.0, 4.0}) {
        const double alpha = frac * ath;
        const ChaosVerdict va = a.melnikov_function(alpha, Omega).verdict;
        const ChaosVerdict vb = b.melnikov_function(s * alpha, Omega / s).verdict;
        CHECK(va == vb);
        CHECK(va == (frac < 1.0 ? ChaosVerdict::chaotic : ChaosVerdict::not_chaotic));
    }
}

TEST_CASE("contract errors on malformed orbits") {
    HomoclinicOrbit bad = duffing_homoclinic_exact(5.0, 1e-2);
    bad.t[3] += 1e-3;  // non-uniform grid
    CHECK_THROWS_AS(fourier_velocity(bad, 4), ContractError);

    HomoclinicOrbit short_orbit;
    short_orbit.t = {0.0, 0.1, 0.2};
    short_orbit.x = {1.0, 1.0, 1.0};
    short_orbit.v = {0.0, 0.0, 0.0};
    CHECK_THROWS_AS(fourier_velocity(short_orbit, 4), ContractError);

    const HomoclinicOrbit ok = duffing_homoclinic_exact(5.0, 1e-2);
    CHECK_THROWS_AS(fourier_velocity(ok, 3), ContractError);
}
