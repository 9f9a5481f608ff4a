#include "casim/reduced.hpp"

#include <limits>

#include <nlohmann/json.hpp>

#include "casim/errors.hpp"

namespace casim {

CasimirSystem::CasimirSystem(const OscillatorParams& params,
                             std::shared_ptr<const ForceModel> force)
    : p_(params), force_(std::move(force)) {
    if (!force_) throw InvalidParameter("CasimirSystem: null force model");
    p_.validate();
    dimless_ = nondimensionalize(p_);
    kL0_ = p_.kappa * p_.L0;
    kL0sq_ = p_.kappa * p_.L0 * p_.L0;
}

double CasimirSystem::xi_max() const {
    const double xm = force_->x_max();
    if (!std::isfinite(xm)) return std::numeric_limits<double>::infinity();
    return xm / p_.L0;
}

double CasimirSystem::accel(double xi) const {
    return (1.0 - xi) - force_->force(p_.L0 * xi) / kL0_;
}

double CasimirSystem::potential(double xi) const {
    const double d = xi - 1.0;
    return 0.5 * d * d + force_->potential_primitive(p_.L0 * xi) / kL0sq_;
}

void CasimirSystem::describe(nlohmann::json& out) const {
    out["system"] = "casimir";
    out["kappa_N_per_m"] = p_.kappa;
    out["L0_m"] = p_.L0;
    out["omega0_rad_per_s"] = p_.omega0;
    out["mass_kg"] = p_.mass;
    out["area_m2"] = p_.area;
    out["d0_m"] = p_.d0;
    out["Q"] = p_.Q;
    out["F0_N"] = p_.F0;
    out["omega_rad_per_s"] = p_.omega;
    out["epsilon"] = p_.epsilon;
    out["f"] = dimless_.f;
    out["Omega"] = dimless_.Omega;
    out["damping"] = dimless_.damping;
    out["d0_hat"] = dimless_.d0_hat;
    if (dimless_.alpha)
        out["alpha"] = *dimless_.alpha;
    out["force_model"] = force_->id();
}

}  // namespace casim
