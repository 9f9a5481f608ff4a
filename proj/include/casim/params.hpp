#pragma once

#include <optional>

namespace casim {

/// Physical parameters of the spring-mass-drive system.
///
/// The effective mass is never a free input: it is fixed by the spring
/// constant and the natural frequency, mass = kappa / omega0^2.
struct OscillatorParams {
    double kappa = 0.0;    ///< spring constant, N/m
    double L0 = 0.0;       ///< force-free equilibrium gap, m
    double omega0 = 0.0;   ///< natural angular frequency, rad/s
    double mass = 0.0;     ///< effective mass, kg (derived)
    double area = 0.0;     ///< plate interaction area, m^2
    double d0 = 0.0;       ///< distance upon contact, m (0 for flat surfaces)
    double Q = 0.0;        ///< quality factor
    double F0 = 0.0;       ///< driving amplitude, N
    double omega = 0.0;    ///< driving angular frequency, rad/s
    int epsilon = 1;       ///< perturbation switch, exactly 0 or 1

    /// Builds a validated parameter set; mass is derived internally.
    static OscillatorParams make(double kappa, double L0, double omega0,
                                 double area, double d0, double Q, double F0,
                                 double omega, int epsilon);

    /// Throws InvalidParameter if any invariant is violated, including
    /// |mass - kappa/omega0^2| > 1e-12 relative.
    void validate() const;
};

/// mass = kappa / omega0^2. Throws InvalidParameter on non-positive input.
double derive_mass(double kappa, double omega0);

/// Reduced parameters of the dimensionless equation of motion
///   xi'' = (1 - xi) - F(L0 xi)/(kappa L0) - eps (1/Q) xi' + eps f cos(Omega tau)
/// with tau = omega0 t and xi = x / L0.
struct DimensionlessParams {
    double f = 0.0;              ///< drive amplitude F0/(kappa L0)
    double Omega = 0.0;          ///< frequency ratio omega/omega0
    double damping = 0.0;        ///< 1/Q
    double d0_hat = 0.0;         ///< d0/L0
    std::optional<double> alpha; ///< gamma omega0 L0 / F0; absent when F0 = 0
};

DimensionlessParams nondimensionalize(const OscillatorParams& p);

}  // namespace casim
