#include "casim/params.hpp"

#include <cmath>
#include <string>

#include "casim/errors.hpp"

namespace casim {

double derive_mass(double kappa, double omega0) {
    if (!(kappa > 0.0)) throw InvalidParameter("derive_mass: kappa must be > 0");
    if (!(omega0 > 0.0)) throw InvalidParameter("derive_mass: omega0 must be > 0");
    return kappa / (omega0 * omega0);
}

OscillatorParams OscillatorParams::make(double kappa, double L0, double omega0,
                                        double area, double d0, double Q,
                                        double F0, double omega, int epsilon) {
    OscillatorParams p;
    p.kappa = kappa;
    p.L0 = L0;
    p.omega0 = omega0;
    p.mass = derive_mass(kappa, omega0);
    p.area = area;
    p.d0 = d0;
    p.Q = Q;
    p.F0 = F0;
    p.omega = omega;
    p.epsilon = epsilon;
    p.validate();
    return p;
}

void OscillatorParams::validate() const {
    auto positive = [](double v, const char* name) {
        if (!(v > 0.0) || !std::isfinite(v))
            throw InvalidParameter(std::string("OscillatorParams: ") + name +
                                   " must be finite and > 0");
    };
    positive(kappa, "kappa");
    positive(L0, "L0");
    positive(omega0, "omega0");
    positive(area, "area");
    positive(Q, "Q");
    positive(omega, "omega");
    if (!(F0 >= 0.0) || !std::isfinite(F0))
        throw InvalidParameter("OscillatorParams: F0 must be finite and >= 0");
    if (!(d0 >= 0.0) || !(d0 < L0))
        throw InvalidParameter("OscillatorParams: d0 must satisfy 0 <= d0 < L0");
    if (epsilon != 0 && epsilon != 1)
        throw InvalidParameter("OscillatorParams: epsilon must be exactly 0 or 1");
    const double expect = kappa / (omega0 * omega0);
    if (!(std::abs(mass - expect) <= 1e-12 * expect))
        throw InvalidParameter("OscillatorParams: mass != kappa/omega0^2");
}

DimensionlessParams nondimensionalize(const OscillatorParams& p) {
    p.validate();
    DimensionlessParams d;
    d.f = p.F0 / (p.kappa * p.L0);
    d.Omega = p.omega / p.omega0;
    d.damping = 1.0 / p.Q;
    d.d0_hat = p.d0 / p.L0;
    // alpha = gamma omega0 L0 / F0 = kappa L0 / (Q F0); undefined at F0 = 0.
    if (p.F0 > 0.0)
        d.alpha = p.kappa * p.L0 / (p.Q * p.F0);
    return d;
}

}  // namespace casim
