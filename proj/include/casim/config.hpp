#pragma once

#include <memory>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "casim/dynamics.hpp"
#include "casim/force.hpp"
#include "casim/params.hpp"

namespace casim {

/// Fully validated run configuration. Values come from a JSON config file
/// plus CLI overrides (overrides win); every field is checked against the
/// module preconditions before any computation, and unknown keys are
/// rejected.
struct RunConfig {
    OscillatorParams physical;
    std::string force_spec = "ideal";  // "ideal" | "table:<path>"

    struct Grid {
        std::optional<double> xi_min, xi_max, v_min, v_max;  // default: orbit bbox * 1.3
        int nx = 300, nv = 300;
    } grid;

    struct Integrator {
        double rtol = 1e-8;
        double atol = 1e-12;
        double stiction_delta = 1e-4;
        double tol_saddle = 1e-6;
        double orbit_dt = 1e-3;
        int scan_points = 2048;
    } integrator;

    struct Threshold {
        double omega_min = 0.2, omega_max = 3.0;
        int n_omega = 200;
    } threshold;

    struct Melnikov {
        std::optional<double> alpha;  // default: kappa L0 / (Q F0)
        int n_t0 = 512;
        double t0_periods = 1.0;
    } melnikov;

    struct Trajectory {
        std::optional<double> xi0;
        double v0 = 0.0;
        double sample_dt = 0.01;
    } trajectory;

    double max_periods = 100.0;
    std::string out_dir = "out";
    int workers = 0;  // 0 = hardware concurrency

    std::shared_ptr<const ForceModel> make_force() const;
    IntegratorControls integrator_controls() const;

    /// Complete resolved configuration; re-parsing it reproduces this config.
    nlohmann::json effective() const;
};

/// Validates a JSON document against the schema above. Throws FormatError
/// naming the key and constraint on any violation (unknown key, unit-suffix
/// conflict, invariant violation).
RunConfig parse_config(const nlohmann::json& doc);

/// Reads `path` (when present), deep-merges `overrides` on top, validates.
RunConfig load_config(const std::optional<std::string>& path,
                      const nlohmann::json& overrides);

}  // namespace casim
