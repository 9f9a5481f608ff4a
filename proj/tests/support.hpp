#pragma once

#include <cmath>
#include <limits>
#include <memory>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "casim/constants.hpp"
#include "casim/force.hpp"
#include "casim/params.hpp"
#include "casim/reduced.hpp"

namespace casim::testing {

/// Spring-only limit: F = 0 everywhere. Used to pin the bare-spring cases.
class ZeroForce final : public ForceModel {
  public:
    double force(double) const override { return 0.0; }
    double potential_primitive(double) const override { return 0.0; }
    double x_min() const override { return 0.0; }
    double x_max() const override { return std::numeric_limits<double>::infinity(); }
    double contact_distance() const override { return 0.0; }
    std::string id() const override { return "zero"; }
};

inline OscillatorParams paper_params(double F0 = 1e-9, double Q = 500.0,
                                     double Omega = 1.05, int epsilon = 1,
                                     double d0 = 0.0) {
    const double omega0 = 2.0 * constants::pi * 300e3;
    return OscillatorParams::make(0.5, 100e-9, omega0, 1e-10, d0, Q, F0,
                                  Omega * omega0, epsilon);
}

/// Ideal-law samples (optionally scaled) on a log-spaced grid, for building
/// synthetic force tables.
inline std::shared_ptr<const TabulatedForceModel> scaled_ideal_table(
    double scale, double d0, double x_lo, double x_hi, int n = 200) {
    const IdealCasimirModel ideal(1e-10);
    std::vector<double> xs(static_cast<std::size_t>(n)), Fs(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / (n - 1);
        xs[static_cast<std::size_t>(i)] = x_lo * std::pow(x_hi / x_lo, t);
        Fs[static_cast<std::size_t>(i)] = scale * ideal.force(xs[static_cast<std::size_t>(i)]);
    }
    return std::make_shared<TabulatedForceModel>(std::move(xs), std::move(Fs), d0,
                                                 "table:synthetic");
}

}  // namespace casim::testing
