#pragma once

#include <vector>

#include "casim/equilibria.hpp"
#include "casim/force.hpp"
#include "casim/params.hpp"
#include "casim/reduced.hpp"

namespace casim {

/// Sampled homoclinic solution of the conservative system on a uniform
/// power-of-two tau grid, t[j] = (j - N/2) * dt_grid. x is even and v is odd
/// by construction (mirror of the forward half); v[N/2] = 0 at the turning
/// point.
struct HomoclinicOrbit {
    std::vector<double> t;  ///< dimensionless time, N = 2^k samples
    std::vector<double> x;  ///< position, units of L0
    std::vector<double> v;  ///< velocity dx/dtau
    double dt_grid = 0.0;
    double saddle_xi = 0.0;
    double center_xi = 0.0;
    double turning_xi = 0.0;  ///< far turning point, U(turning) = U(saddle)
    double msv = 0.0;         ///< integral of v^2 dtau
    double tol_saddle = 0.0;
    double energy = 0.0;      ///< U(saddle), the orbit's conserved energy
};

/// Shooting construction: finds the far turning point, integrates the
/// conservative system forward until |xi - saddle| < tol_saddle, mirrors to
/// negative tau and resamples onto a uniform grid of N = 2^k points with
/// dt_grid <= dt.
HomoclinicOrbit compute_homoclinic_reduced(const ReducedSystem& sys, double saddle_xi,
                                           double center_xi, double tol_saddle = 1e-6,
                                           double dt = 1e-3);

/// Physical-system wrapper; equilibria must contain both saddle and center.
HomoclinicOrbit compute_homoclinic(const EquilibriumSet& eq,
                                   const OscillatorParams& params,
                                   std::shared_ptr<const ForceModel> force,
                                   double tol_saddle = 1e-6, double dt = 1e-3);

}  // namespace casim
