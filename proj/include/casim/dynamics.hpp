#pragma once

#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "casim/reduced.hpp"

namespace casim {

struct SimState {
    double xi = 0.0;
    double v = 0.0;
    double tau = 0.0;
};

enum class TrajectoryStatus { survived, stiction, left_domain };

struct TrajectoryOutcome {
    TrajectoryStatus status = TrajectoryStatus::survived;
    std::optional<double> stiction_tau;  ///< present iff status == stiction
    double periods_elapsed = 0.0;        ///< units of period_tau of the system
    SimState final_state;
};

struct IntegratorControls {
    double rtol = 1e-8;
    double atol = 1e-12;
    double stiction_delta = 1e-4;  ///< floor offset above contact, units of L0
    double h_min = 1e-14;
    double h_max = 1.0;
    double event_time_rel = 1e-6;  ///< event time accuracy, fraction of a period
};

struct SampledPath {
    std::vector<double> tau, xi, v;
};

/// Integrates the reduced equation of motion until the stiction floor or a
/// domain edge is crossed, or max_periods elapse. Crossings are localized by
/// bisection on the dense output of the accepted step. Throws StiffFailure
/// on step-size underflow.
TrajectoryOutcome integrate(const ReducedSystem& sys, SimState initial,
                            double max_periods, const IntegratorControls& controls = {},
                            SampledPath* path = nullptr, double sample_dt = 0.0);

struct GridSpec {
    double x_lo = 0.0, x_hi = 0.0;  ///< xi window, units of L0
    double v_lo = 0.0, v_hi = 0.0;  ///< velocity window, units of L0 omega0
    int nx = 300, nv = 300;
};

/// Periods-to-stiction over a grid of initial conditions. values is row-major
/// with row = fixed v, column = fixed x: values[iv * nx + ix]. Cells that hit
/// a stiff failure carry the sentinel -1 and are counted in warning_count.
struct SurvivalMap {
    GridSpec grid;
    double max_periods = 0.0;
    std::vector<double> values;
    int warning_count = 0;
    nlohmann::json params;

    double at(int ix, int iv) const { return values[static_cast<std::size_t>(iv) * grid.nx + ix]; }
    double x_of(int ix) const {
        return grid.x_lo + (grid.x_hi - grid.x_lo) * ix / (grid.nx - 1);
    }
    double v_of(int iv) const {
        return grid.v_lo + (grid.v_hi - grid.v_lo) * iv / (grid.nv - 1);
    }
};

/// Integrates every grid node independently; deterministic for any worker
/// count (workers = 0 picks the hardware concurrency).
SurvivalMap survival_map(const ReducedSystem& sys, const GridSpec& grid,
                         double max_periods, const IntegratorControls& controls = {},
                         int workers = 0);

enum class MapClass { sharp, blurred, not_applicable };

struct ChaosClassification {
    MapClass verdict = MapClass::not_applicable;
    double blur_fraction = 0.0;
    int shell_cells = 0;         ///< cells within 3 cells of the basin interface
    int intermediate_cells = 0;  ///< cells with 2 <= p < max_periods
};

/// Blur fraction = intermediate cells / boundary-shell cells; blurred when
/// the fraction reaches blur_threshold. Degenerate maps (all survived or all
/// stiction) classify as not_applicable.
ChaosClassification classify_chaos(const SurvivalMap& map, double blur_threshold = 0.05);

}  // namespace casim
