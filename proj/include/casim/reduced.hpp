#pragma once

#include <cmath>
#include <memory>

#include <nlohmann/json_fwd.hpp>

#include "casim/constants.hpp"
#include "casim/force.hpp"
#include "casim/params.hpp"

namespace casim {

/// Dimensionless 1-DOF oscillator
///   xi'' = accel(xi) + eps * (drive_amplitude * cos(Omega tau) - damping * xi')
/// shared by the conservative analysis, the Melnikov machinery and the
/// dynamics engine. accel is the conservative part, accel = -U'(xi).
class ReducedSystem {
  public:
    virtual ~ReducedSystem() = default;

    virtual double accel(double xi) const = 0;
    virtual double potential(double xi) const = 0;

    /// Evaluable position range (dimensionless). accel/potential throw
    /// DomainError outside it.
    virtual double xi_min() const = 0;
    virtual double xi_max() const = 0;

    virtual double epsilon() const = 0;          ///< 0 or 1
    virtual double damping() const = 0;          ///< coefficient of xi'
    virtual double drive_amplitude() const = 0;
    virtual double drive_frequency() const = 0;  ///< Omega

    /// Position at/below which a trajectory counts as captured (stiction).
    virtual double stiction_floor(double delta) const = 0;

    /// Period used for time bookkeeping: 2 pi / Omega when driven,
    /// the natural period 2 pi when conservative.
    double period_tau() const {
        return epsilon() != 0.0 ? 2.0 * constants::pi / drive_frequency()
                                : 2.0 * constants::pi;
    }

    void rhs(double tau, double xi, double v, double& dxi, double& dv) const {
        dxi = v;
        dv = accel(xi);
        const double eps = epsilon();
        if (eps != 0.0)
            dv += eps * (drive_amplitude() * std::cos(drive_frequency() * tau) -
                         damping() * v);
    }

    virtual void describe(nlohmann::json& out) const = 0;
};

/// Reduction of the physical plate-spring system: tau = omega0 t, xi = x/L0.
class CasimirSystem final : public ReducedSystem {
  public:
    CasimirSystem(const OscillatorParams& params, std::shared_ptr<const ForceModel> force);

    double accel(double xi) const override;
    double potential(double xi) const override;
    double xi_min() const override { return force_->x_min() / p_.L0; }
    double xi_max() const override;
    double epsilon() const override { return static_cast<double>(p_.epsilon); }
    double damping() const override { return dimless_.damping; }
    double drive_amplitude() const override { return dimless_.f; }
    double drive_frequency() const override { return dimless_.Omega; }
    double stiction_floor(double delta) const override { return dimless_.d0_hat + delta; }
    void describe(nlohmann::json& out) const override;

    const OscillatorParams& params() const { return p_; }
    const DimensionlessParams& dimensionless() const { return dimless_; }
    const ForceModel& force_model() const { return *force_; }

  private:
    OscillatorParams p_;
    std::shared_ptr<const ForceModel> force_;
    DimensionlessParams dimless_;
    double kL0_, kL0sq_;
};

}  // namespace casim
