#include "casim/duffing.hpp"

#include <cmath>

#include <nlohmann/json.hpp>

#include "casim/constants.hpp"
#include "casim/errors.hpp"

namespace casim {

DuffingSystem::DuffingSystem(const DuffingParams& p) : p_(p) {
    if (!(p.delta >= 0.0) || !(p.F >= 0.0) || !(p.Omega > 0.0))
        throw InvalidParameter("DuffingSystem: need delta >= 0, F >= 0, Omega > 0");
    if (p.epsilon != 0 && p.epsilon != 1)
        throw InvalidParameter("DuffingSystem: epsilon must be exactly 0 or 1");
}

void DuffingSystem::describe(nlohmann::json& out) const {
    out["system"] = "duffing";
    out["delta"] = p_.delta;
    out["F"] = p_.F;
    out["Omega"] = p_.Omega;
    out["epsilon"] = p_.epsilon;
}

void duffing_rhs(double tau, double xi, double v, const DuffingParams& p, double& dxi,
                 double& dv) {
    DuffingSystem(p).rhs(tau, xi, v, dxi, dv);
}

HomoclinicOrbit duffing_homoclinic_exact(double T, double dt) {
    if (!(T > 0.0) || !(dt > 0.0))
        throw InvalidParameter("duffing_homoclinic_exact: T and dt must be > 0");
    std::size_t N = 8;
    while (static_cast<double>(N) < 2.0 * T / dt) N <<= 1;
    const double dt_grid = 2.0 * T / static_cast<double>(N);
    std::vector<double> grid(N);
    for (std::size_t j = 0; j < N; ++j)
        grid[j] = (static_cast<double>(j) - static_cast<double>(N / 2)) * dt_grid;
    return duffing_homoclinic_exact_on(grid);
}

HomoclinicOrbit duffing_homoclinic_exact_on(const std::vector<double>& tau_grid) {
    const std::size_t N = tau_grid.size();
    if (N < 8) throw ContractError("duffing_homoclinic_exact: grid too short");
    const double dt = tau_grid[1] - tau_grid[0];
    if (!(dt > 0.0))
        throw ContractError("duffing_homoclinic_exact: grid must be increasing");
    for (std::size_t j = 1; j < N; ++j)
        if (std::abs(tau_grid[j] - tau_grid[j - 1] - dt) > 1e-9 * dt)
            throw ContractError("duffing_homoclinic_exact: grid must be uniform");
    if (std::abs(tau_grid.front() + tau_grid.back() + dt) > 1e-9 * std::abs(tau_grid.back()) &&
        std::abs(tau_grid.front() + tau_grid.back()) > 1e-9 * std::abs(tau_grid.back()))
        throw ContractError("duffing_homoclinic_exact: grid must be symmetric about 0");

    const double s2 = std::sqrt(2.0);
    HomoclinicOrbit orbit;
    orbit.t = tau_grid;
    orbit.x.resize(N);
    orbit.v.resize(N);
    for (std::size_t j = 0; j < N; ++j) {
        const double sech = 1.0 / std::cosh(tau_grid[j]);
        orbit.x[j] = s2 * sech;
        orbit.v[j] = -s2 * sech * std::tanh(tau_grid[j]);
    }
    orbit.dt_grid = dt;
    orbit.saddle_xi = 0.0;
    orbit.center_xi = 1.0;
    orbit.turning_xi = s2;
    orbit.tol_saddle = s2 / std::cosh(tau_grid.back());
    orbit.energy = 0.0;  // U(saddle) for the quartic double well

    double msv = 0.0;
    for (std::size_t j = 0; j < N; ++j) {
        const double w = (j == 0 || j == N - 1) ? 0.5 : 1.0;
        msv += w * orbit.v[j] * orbit.v[j];
    }
    orbit.msv = msv * dt;
    return orbit;
}

double duffing_threshold_exact(double Omega) {
    if (!(Omega > 0.0))
        throw InvalidParameter("duffing_threshold_exact: Omega must be > 0");
    return 0.75 * std::sqrt(2.0) * constants::pi * Omega /
           std::cosh(0.5 * constants::pi * Omega);
}

}  // namespace casim
