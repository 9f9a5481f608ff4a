#pragma once

#include <optional>

#include "casim/force.hpp"
#include "casim/params.hpp"
#include "casim/reduced.hpp"

namespace casim {

/// Saddle/center pair of the conservative system, dimensionless positions.
struct ReducedEquilibria {
    std::optional<double> saddle_xi;
    std::optional<double> center_xi;
};

/// Scans accel(xi) = -U'(xi) on `scan_points` points over (lo, hi], brackets
/// sign changes and refines each root by bisection to machine precision.
/// Classification: accel rising through zero = saddle (U'' < 0), falling =
/// center. More than two roots raises MultiRootError.
ReducedEquilibria find_equilibria_reduced(const ReducedSystem& sys, double lo,
                                          double hi, int scan_points = 2048);

/// Equilibria of the physical system in SI units.
struct EquilibriumSet {
    std::optional<double> saddle_x;             ///< m
    std::optional<double> center_x;             ///< m
    std::optional<double> potential_at_saddle;  ///< J
};

/// Roots of kappa (L0 - x) - F(x) on (max(d0, x_min), L0]. An empty set means
/// the pull-in regime (attractive force dominates everywhere).
EquilibriumSet find_equilibria(const OscillatorParams& params, const ForceModel& force,
                               int scan_points = 2048);

}  // namespace casim
