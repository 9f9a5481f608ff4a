#pragma once

#include <vector>

#include "casim/homoclinic.hpp"
#include "casim/reduced.hpp"

namespace casim {

/// Drive/damping parameters of the reference Duffing oscillator
///   xi'' = xi - xi^3 + eps (F cos(Omega tau) - delta xi').
struct DuffingParams {
    double delta = 0.0;  ///< damping coefficient
    double F = 0.0;      ///< drive amplitude
    double Omega = 1.0;  ///< drive frequency
    int epsilon = 1;
};

/// End-to-end validation target: same interfaces as the plate-spring system,
/// with a closed-form homoclinic orbit and threshold curve. Capture events
/// use the saddle line xi = 0 as the floor.
class DuffingSystem final : public ReducedSystem {
  public:
    explicit DuffingSystem(const DuffingParams& p);

    double accel(double xi) const override { return xi - xi * xi * xi; }
    double potential(double xi) const override {
        return 0.25 * xi * xi * xi * xi - 0.5 * xi * xi;
    }
    double xi_min() const override { return -1e6; }
    double xi_max() const override { return 1e6; }
    double epsilon() const override { return static_cast<double>(p_.epsilon); }
    double damping() const override { return p_.delta; }
    double drive_amplitude() const override { return p_.F; }
    double drive_frequency() const override { return p_.Omega; }
    double stiction_floor(double) const override { return 0.0; }
    void describe(nlohmann::json& out) const override;

    const DuffingParams& params() const { return p_; }

  private:
    DuffingParams p_;
};

/// dxi = v; dv = xi - xi^3 + eps (F cos(Omega tau) - delta v)
void duffing_rhs(double tau, double xi, double v, const DuffingParams& p, double& dxi,
                 double& dv);

/// Closed-form homoclinic orbit x = sqrt(2) sech(tau), v = -sqrt(2) sech(tau)
/// tanh(tau), sampled on the standard grid with N = 2^k points, spacing <= dt,
/// spanning [-T, T). msv is evaluated from the samples (exact value 4/3).
HomoclinicOrbit duffing_homoclinic_exact(double T = 30.0, double dt = 1e-3);

/// Same, on a caller-supplied symmetric uniform grid.
HomoclinicOrbit duffing_homoclinic_exact_on(const std::vector<double>& tau_grid);

/// Critical delta/F above which the Melnikov function has no zeros:
/// (3 sqrt(2) / 4) pi Omega sech(pi Omega / 2).
double duffing_threshold_exact(double Omega);

}  // namespace casim
