#include "casim/melnikov.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "casim/constants.hpp"
#include "casim/errors.hpp"
#include "casim/fft.hpp"

namespace casim {

namespace {

void validate_orbit_grid(const HomoclinicOrbit& orbit) {
    const std::size_t n = orbit.t.size();
    if (n < 8 || orbit.v.size() != n || orbit.x.size() != n)
        throw ContractError("melnikov: orbit arrays empty or mismatched");
    if (!is_power_of_two(n))
        throw ContractError("melnikov: orbit grid length must be a power of two");
    const double dt = orbit.t[1] - orbit.t[0];
    if (!(dt > 0.0)) throw ContractError("melnikov: orbit grid must be increasing");
    for (std::size_t j = 1; j < n; ++j) {
        const double step = orbit.t[j] - orbit.t[j - 1];
        if (std::abs(step - dt) > 1e-9 * dt)
            throw ContractError("melnikov: orbit grid is not uniform");
    }
}

}  // namespace

VelocitySpectrum fourier_velocity(const HomoclinicOrbit& orbit, int pad_factor) {
    validate_orbit_grid(orbit);
    if (pad_factor < 1 || !is_power_of_two(static_cast<std::size_t>(pad_factor)))
        throw ContractError("fourier_velocity: pad_factor must be a power of two");

    const std::size_t n = orbit.v.size();
    const std::size_t m = n * static_cast<std::size_t>(pad_factor);
    const double dt = orbit.t[1] - orbit.t[0];

    std::vector<std::complex<double>> a(m, 0.0);
    for (std::size_t j = 0; j < n; ++j) a[j] = orbit.v[j];
    fft_inplace(a, false);

    // The grid starts at tau = -(n/2) dt; re-anchor the phase at tau = 0.
    VelocitySpectrum out;
    out.pad_factor = pad_factor;
    out.d_omega = 2.0 * constants::pi / (static_cast<double>(m) * dt);
    const std::size_t nkeep = m / 2 + 1;
    out.omega.resize(nkeep);
    out.F.resize(nkeep);
    const double phase_per_k =
        constants::pi * static_cast<double>(n / 2) * 2.0 / static_cast<double>(m);
    for (std::size_t k = 0; k < nkeep; ++k) {
        const double ph = phase_per_k * static_cast<double>(k);
        out.omega[k] = out.d_omega * static_cast<double>(k);
        out.F[k] = dt * std::polar(1.0, ph) * a[k];
    }
    return out;
}

MelnikovAnalyzer::MelnikovAnalyzer(const HomoclinicOrbit& orbit, int pad_factor)
    : tau_(orbit.t), v_(orbit.v) {
    validate_orbit_grid(orbit);
    if (!(orbit.msv > 0.0))
        throw ContractError("MelnikovAnalyzer: orbit msv must be > 0");
    dt_ = orbit.t[1] - orbit.t[0];
    msv_ = orbit.msv;
    spec_ = fourier_velocity(orbit, pad_factor);
    peak_amp_ = 0.0;
    for (const auto& F : spec_.F) peak_amp_ = std::max(peak_amp_, std::abs(F));
}

std::complex<double> MelnikovAnalyzer::interp_spectrum(double Omega) const {
    const double q = Omega / spec_.d_omega;
    const std::size_t last = spec_.F.size() - 1;
    if (q < 0.0 || q > static_cast<double>(last))
        throw InvalidParameter("melnikov: Omega outside the spectrum range");
    const double qr = std::round(q);
    if (std::abs(q - qr) < 1e-9)
        return spec_.F[static_cast<std::size_t>(qr)];

    // degree-7 local barycentric interpolation on the uniform grid
    static constexpr double w[8] = {1, -7, 21, -35, 35, -21, 7, -1};
    std::ptrdiff_t k0 = static_cast<std::ptrdiff_t>(std::floor(q)) - 3;
    k0 = std::clamp<std::ptrdiff_t>(k0, 0, static_cast<std::ptrdiff_t>(last) - 7);
    std::complex<double> num(0.0, 0.0);
    double den = 0.0;
    for (int j = 0; j < 8; ++j) {
        const double d = w[j] / (q - static_cast<double>(k0 + j));
        num += d * spec_.F[static_cast<std::size_t>(k0 + j)];
        den += d;
    }
    return num / den;
}

MelnikovAmplitude MelnikovAnalyzer::amplitude(double Omega) const {
    if (!(Omega >= 0.0) || !std::isfinite(Omega))
        throw InvalidParameter("melnikov: Omega must be finite and >= 0");

    // (i) direct quadrature, exact for the truncated orbit
    const std::size_t n = v_.size();
    double I = 0.0, J = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double wgt = (j == 0 || j == n - 1) ? 0.5 : 1.0;
        const double c = std::cos(Omega * tau_[j]);
        const double s = std::sin(Omega * tau_[j]);
        I += wgt * v_[j] * c;
        J += wgt * v_[j] * s;
    }
    I *= dt_;
    J *= dt_;

    MelnikovAmplitude out;
    out.A = std::hypot(I, J);
    out.phi = std::atan2(J, I);

    // (ii) the Fourier + Hilbert-envelope route
    const std::complex<double> Fc = interp_spectrum(Omega);
    const double I2 = Fc.real(), J2 = -Fc.imag();
    const std::size_t nt = 4096;
    const double span =
        Omega > 0.0 ? 32.0 * 2.0 * constants::pi / Omega : 1.0;  // integer periods
    std::vector<double> sig(nt);
    for (std::size_t j = 0; j < nt; ++j) {
        const double t0 = span * static_cast<double>(j) / static_cast<double>(nt);
        sig[j] = I2 * std::cos(Omega * t0) - J2 * std::sin(Omega * t0);
    }
    std::vector<double> env = hilbert_envelope(sig);
    const std::size_t edge = nt / 50;  // 2% taper excluded on each side
    std::vector<double> interior(env.begin() + edge, env.end() - edge);
    std::nth_element(interior.begin(), interior.begin() + interior.size() / 2,
                     interior.end());
    out.A_envelope = interior[interior.size() / 2];

    const double tol = 1e-5 * std::max(out.A, out.A_envelope) + 1e-10 * peak_amp_;
    if (std::abs(out.A_envelope - out.A) > tol) {
        std::ostringstream ss;
        ss << "melnikov amplitude: quadrature (" << out.A << ") and Hilbert envelope ("
           << out.A_envelope << ") disagree beyond 1e-5 relative at Omega=" << Omega;
        throw ConsistencyError(ss.str());
    }
    return out;
}

double MelnikovAnalyzer::threshold_alpha(double Omega) const {
    return amplitude(Omega).A / msv_;
}

ThresholdCurve MelnikovAnalyzer::threshold_curve(std::span<const double> omegas) const {
    ThresholdCurve out;
    double prev = 0.0;
    for (const double om : omegas) {
        if (!(om > 0.0) || om <= prev)
            throw InvalidParameter("threshold_curve: omega grid must be positive ascending");
        prev = om;
    }
    out.omegas.assign(omegas.begin(), omegas.end());
    out.alpha_threshold.reserve(omegas.size());
    for (const double om : omegas)
        out.alpha_threshold.push_back(threshold_alpha(om));
    return out;
}

MelnikovFunction MelnikovAnalyzer::melnikov_function(double alpha, double Omega,
                                                     int n_t0, double t0_periods) const {
    if (!(alpha >= 0.0))
        throw InvalidParameter("melnikov_function: alpha must be >= 0");
    if (n_t0 < 2) throw InvalidParameter("melnikov_function: n_t0 must be >= 2");
    const MelnikovAmplitude amp = amplitude(Omega);

    MelnikovFunction out;
    out.A = amp.A;
    out.phi = amp.phi;
    out.alpha = alpha;
    out.msv = msv_;
    const double span = t0_periods * 2.0 * constants::pi / Omega;
    out.t0.resize(static_cast<std::size_t>(n_t0));
    out.M.resize(static_cast<std::size_t>(n_t0));
    for (int j = 0; j < n_t0; ++j) {
        const double t0 = span * static_cast<double>(j) / static_cast<double>(n_t0 - 1);
        out.t0[static_cast<std::size_t>(j)] = t0;
        out.M[static_cast<std::size_t>(j)] =
            -alpha * msv_ + amp.A * std::cos(Omega * t0 + amp.phi);
    }

    const double damp = alpha * msv_;
    const double scale = std::max({amp.A, damp, 1e-300});
    if (std::abs(amp.A - damp) <= 1e-12 * scale)
        out.verdict = ChaosVerdict::threshold;
    else if (damp < amp.A)
        out.verdict = ChaosVerdict::chaotic;  // simple zeros exist
    else
        out.verdict = ChaosVerdict::not_chaotic;
    return out;
}

MelnikovSpectrum MelnikovAnalyzer::spectrum_band(double omega_min,
                                                 double omega_max) const {
    if (!(omega_min >= 0.0) || !(omega_max > omega_min))
        throw InvalidParameter("spectrum_band: need 0 <= omega_min < omega_max");
    MelnikovSpectrum out;
    out.msv = msv_;
    for (std::size_t k = 0; k < spec_.omega.size(); ++k) {
        const double om = spec_.omega[k];
        if (om < omega_min || om > omega_max) continue;
        out.omegas.push_back(om);
        out.amplitude.push_back(std::abs(spec_.F[k]));
        out.phase.push_back(std::atan2(-spec_.F[k].imag(), spec_.F[k].real()));
    }
    return out;
}

MelnikovAmplitude melnikov_amplitude(const HomoclinicOrbit& orbit, double Omega) {
    return MelnikovAnalyzer(orbit).amplitude(Omega);
}

MelnikovFunction melnikov_function(const HomoclinicOrbit& orbit, double alpha,
                                   double Omega, int n_t0, double t0_periods) {
    return MelnikovAnalyzer(orbit).melnikov_function(alpha, Omega, n_t0, t0_periods);
}

ThresholdCurve threshold_curve(const HomoclinicOrbit& orbit,
                               std::span<const double> omegas) {
    return MelnikovAnalyzer(orbit).threshold_curve(omegas);
}

}  // namespace casim
