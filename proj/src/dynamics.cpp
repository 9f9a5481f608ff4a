#include "casim/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <thread>

#include "casim/errors.hpp"
#include "casim/integrator.hpp"

namespace casim {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Evaluation window for the conservative force term. Trial stages may probe
// slightly past an edge; queries are clamped to this window, and the
// trajectory itself is terminated at the event thresholds before the clamp
// can distort committed states.
struct EvalWindow {
    double lo, hi;
};

bool evaluable(const ReducedSystem& sys, double xi) {
    try {
        return std::isfinite(sys.accel(xi));
    } catch (const DomainError&) {
        return false;
    }
}

EvalWindow make_eval_window(const ReducedSystem& sys, double floor_xi) {
    EvalWindow w{sys.xi_min(), sys.xi_max()};
    if (!std::isfinite(w.hi)) w.hi = kInf;

    // Edges can be singular (1/x^4 at x = 0) or lost to rounding when a table
    // bound is mapped through xi = x/L0; walk inward by up to ~1e-9 relative
    // until evaluation works. Anything worse than that is a genuinely bad
    // model and is left to the step-rejection path.
    constexpr int kMaxNudges = 22;
    if (!evaluable(sys, w.lo)) {
        bool fixed = false;
        double nudge = 4.0 * std::numeric_limits<double>::epsilon() *
                       std::max(std::abs(w.lo), 1.0);
        for (int k = 0; k < kMaxNudges; ++k, nudge *= 2.0) {
            if (evaluable(sys, w.lo + nudge)) {
                w.lo += nudge;
                fixed = true;
                break;
            }
        }
        if (!fixed) w.lo = 0.25 * floor_xi + 0.75 * std::max(w.lo, 0.0);
    }
    if (std::isfinite(w.hi) && !evaluable(sys, w.hi)) {
        double nudge = 4.0 * std::numeric_limits<double>::epsilon() *
                       std::max(std::abs(w.hi), 1.0);
        for (int k = 0; k < kMaxNudges; ++k, nudge *= 2.0) {
            if (evaluable(sys, w.hi - nudge)) {
                w.hi -= nudge;
                break;
            }
        }
    }
    return w;
}

struct EventSpec {
    double lo;           // floor threshold (stiction or low domain edge)
    bool lo_is_stiction;
    double hi;           // +inf when the domain is unbounded above
};

}  // namespace

TrajectoryOutcome integrate(const ReducedSystem& sys, SimState initial,
                            double max_periods, const IntegratorControls& controls,
                            SampledPath* path, double sample_dt) {
    if (!(max_periods > 0.0))
        throw InvalidParameter("integrate: max_periods must be > 0");

    const double period = sys.period_tau();
    const double tau_end = initial.tau + max_periods * period;

    EventSpec ev;
    ev.lo = std::max(sys.stiction_floor(controls.stiction_delta), sys.xi_min());
    ev.lo_is_stiction = sys.stiction_floor(controls.stiction_delta) >= sys.xi_min();
    ev.hi = std::isfinite(sys.xi_max()) ? sys.xi_max() : kInf;

    auto finish = [&](TrajectoryStatus st, double tau, double xi, double v) {
        TrajectoryOutcome out;
        out.status = st;
        out.final_state = {xi, v, tau};
        out.periods_elapsed = (tau - initial.tau) / period;
        if (st == TrajectoryStatus::stiction) out.stiction_tau = tau;
        if (path && (path->tau.empty() || path->tau.back() < tau)) {
            path->tau.push_back(tau);
            path->xi.push_back(xi);
            path->v.push_back(v);
        }
        return out;
    };

    if (initial.xi <= ev.lo)
        return finish(ev.lo_is_stiction ? TrajectoryStatus::stiction
                                        : TrajectoryStatus::left_domain,
                      initial.tau, initial.xi, initial.v);
    if (initial.xi >= ev.hi)
        return finish(TrajectoryStatus::left_domain, initial.tau, initial.xi, initial.v);

    const EvalWindow win = make_eval_window(sys, ev.lo);
    auto rhs = [&sys, &win](double tau, double xi, double v, double& dxi, double& dv) {
        const double xc = std::clamp(xi, win.lo, win.hi);
        dxi = v;
        try {
            dv = sys.accel(xc);
        } catch (const DomainError&) {
            return false;  // rounding at a window edge: retry with a smaller step
        }
        const double eps = sys.epsilon();
        if (eps != 0.0)
            dv += eps * (sys.drive_amplitude() * std::cos(sys.drive_frequency() * tau) -
                         sys.damping() * v);
        return std::isfinite(dv);
    };

    StepperControls sc;
    sc.rtol = controls.rtol;
    sc.atol = controls.atol;
    sc.h_min = controls.h_min;
    sc.h_max = controls.h_max;
    Dopri5<decltype(rhs)> stepper(rhs, sc);
    stepper.init(initial.tau, initial.xi, initial.v);

    double next_sample = initial.tau;
    auto emit_samples_until = [&](double tau_hi) {
        if (!path || !(sample_dt > 0.0)) return;
        while (next_sample <= tau_hi) {
            double xs, vs;
            if (next_sample <= stepper.tau_prev()) {
                xs = stepper.xi_prev();
                vs = stepper.v_prev();
            } else {
                stepper.interpolate(next_sample, xs, vs);
            }
            path->tau.push_back(next_sample);
            path->xi.push_back(xs);
            path->v.push_back(vs);
            next_sample += sample_dt;
        }
    };

    // bisection of xi(tau) = threshold on the dense output of the last step
    auto localize = [&](double ta, double tb, double threshold, bool low_side) {
        for (int it = 0; it < 200; ++it) {
            const double tm = 0.5 * (ta + tb);
            if (tm == ta || tm == tb) break;
            double xm, vm;
            stepper.interpolate(tm, xm, vm);
            const bool crossed = low_side ? (xm <= threshold) : (xm >= threshold);
            if (crossed)
                tb = tm;
            else
                ta = tm;
        }
        return tb;
    };

    while (true) {
        if (!stepper.step()) {
            std::ostringstream ss;
            ss << "integrate: step size underflow (h < " << controls.h_min
               << ") at tau=" << stepper.tau_prev() << " xi=" << stepper.xi_prev()
               << " v=" << stepper.v_prev();
            throw StiffFailure(ss.str());
        }
        const double t0 = stepper.tau_prev();
        const double t1 = std::min(stepper.tau_curr(), tau_end);

        // scan the dense output for threshold crossings in [t0, t1]
        double hit_tau = kInf;
        bool hit_low = false;
        bool found = false;
        auto scan = [&](int npts) {
            double prev_ok_t = t0;
            double xmin = kInf, xmax = -kInf;
            for (int i = 1; i <= npts && !found; ++i) {
                const double tt = t0 + (t1 - t0) * i / npts;
                double xt, vt;
                if (tt >= stepper.tau_curr()) {
                    xt = stepper.xi_curr();
                    vt = stepper.v_curr();
                } else {
                    stepper.interpolate(tt, xt, vt);
                }
                xmin = std::min(xmin, xt);
                xmax = std::max(xmax, xt);
                if (xt <= ev.lo) {
                    hit_tau = localize(prev_ok_t, tt, ev.lo, true);
                    hit_low = true;
                    found = true;
                } else if (xt >= ev.hi) {
                    hit_tau = localize(prev_ok_t, tt, ev.hi, false);
                    hit_low = false;
                    found = true;
                } else {
                    prev_ok_t = tt;
                }
            }
            return std::pair{xmin, xmax};
        };
        const auto [xmin, xmax] = scan(6);
        // a grazing dip can slip between coarse samples; rescan finely when
        // the step came close to a threshold
        if (!found) {
            const double span = xmax - xmin;
            if (xmin - ev.lo < span || (std::isfinite(ev.hi) && ev.hi - xmax < span))
                scan(32);
        }

        if (found) {
            double xe, ve;
            stepper.interpolate(hit_tau, xe, ve);
            emit_samples_until(hit_tau);
            const TrajectoryStatus st = hit_low && ev.lo_is_stiction
                                            ? TrajectoryStatus::stiction
                                            : TrajectoryStatus::left_domain;
            return finish(st, hit_tau, xe, ve);
        }

        emit_samples_until(t1);

        if (stepper.tau_curr() >= tau_end) {
            double xf, vf;
            if (stepper.tau_curr() == tau_end) {
                xf = stepper.xi_curr();
                vf = stepper.v_curr();
            } else {
                stepper.interpolate(tau_end, xf, vf);
            }
            TrajectoryOutcome out;
            out.status = TrajectoryStatus::survived;
            out.final_state = {xf, vf, tau_end};
            out.periods_elapsed = max_periods;
            if (path && (path->tau.empty() || path->tau.back() < tau_end)) {
                path->tau.push_back(tau_end);
                path->xi.push_back(xf);
                path->v.push_back(vf);
            }
            return out;
        }
        stepper.limit_step(tau_end - stepper.tau_curr());
    }
}

SurvivalMap survival_map(const ReducedSystem& sys, const GridSpec& grid,
                         double max_periods, const IntegratorControls& controls,
                         int workers) {
    if (grid.nx < 2 || grid.nv < 2)
        throw InvalidParameter("survival_map: nx and nv must be >= 2");
    if (!(grid.x_hi > grid.x_lo) || !(grid.v_hi > grid.v_lo))
        throw InvalidParameter("survival_map: empty grid window");
    if (!(grid.x_lo >= sys.xi_min()) || !(grid.x_hi <= sys.xi_max()))
        throw InvalidParameter("survival_map: x window outside the force range");

    SurvivalMap map;
    map.grid = grid;
    map.max_periods = max_periods;
    map.values.assign(static_cast<std::size_t>(grid.nx) * grid.nv, 0.0);

    int nworkers = workers > 0 ? workers
                               : static_cast<int>(std::thread::hardware_concurrency());
    if (nworkers < 1) nworkers = 1;
    nworkers = std::min(nworkers, grid.nv);

    std::vector<int> warn(static_cast<std::size_t>(nworkers), 0);
    auto run_rows = [&](int w, int row0, int row1) {
        for (int iv = row0; iv < row1; ++iv) {
            const double v0 = map.v_of(iv);
            for (int ix = 0; ix < grid.nx; ++ix) {
                const double x0 = map.x_of(ix);
                double value;
                try {
                    const TrajectoryOutcome out =
                        integrate(sys, {x0, v0, 0.0}, max_periods, controls);
                    value = out.status == TrajectoryStatus::survived
                                ? max_periods
                                : out.periods_elapsed;
                } catch (const StiffFailure&) {
                    value = -1.0;
                    ++warn[static_cast<std::size_t>(w)];
                } catch (const DomainError&) {
                    // cell not integrable at all (degenerate force data)
                    value = -1.0;
                    ++warn[static_cast<std::size_t>(w)];
                }
                map.values[static_cast<std::size_t>(iv) * grid.nx + ix] = value;
            }
        }
    };

    if (nworkers == 1) {
        run_rows(0, 0, grid.nv);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(nworkers));
        const int base = grid.nv / nworkers, extra = grid.nv % nworkers;
        int row = 0;
        for (int w = 0; w < nworkers; ++w) {
            const int len = base + (w < extra ? 1 : 0);
            pool.emplace_back(run_rows, w, row, row + len);
            row += len;
        }
        for (auto& th : pool) th.join();
    }
    for (const int c : warn) map.warning_count += c;

    sys.describe(map.params);
    map.params["max_periods"] = max_periods;
    map.params["stiction_delta"] = controls.stiction_delta;
    map.params["rtol"] = controls.rtol;
    map.params["atol"] = controls.atol;
    return map;
}

ChaosClassification classify_chaos(const SurvivalMap& map, double blur_threshold) {
    if (map.max_periods < 50.0)
        throw InvalidParameter("classify_chaos: map must be computed with >= 50 periods");
    const int nx = map.grid.nx, nv = map.grid.nv;
    const auto survived = [&](int ix, int iv) {
        return map.at(ix, iv) >= map.max_periods;
    };

    int n_survived = 0, n_valid = 0;
    for (int iv = 0; iv < nv; ++iv)
        for (int ix = 0; ix < nx; ++ix) {
            if (map.at(ix, iv) < 0.0) continue;  // stiff sentinel
            ++n_valid;
            if (survived(ix, iv)) ++n_survived;
        }

    ChaosClassification out;
    if (n_valid == 0 || n_survived == 0 || n_survived == n_valid) {
        out.verdict = MapClass::not_applicable;
        return out;
    }

    // interface: cells with an 8-neighbor of the opposite class
    std::vector<char> interface_cell(static_cast<std::size_t>(nx) * nv, 0);
    for (int iv = 0; iv < nv; ++iv)
        for (int ix = 0; ix < nx; ++ix) {
            const bool s = survived(ix, iv);
            bool boundary = false;
            for (int dv = -1; dv <= 1 && !boundary; ++dv)
                for (int dx = -1; dx <= 1 && !boundary; ++dx) {
                    if (dx == 0 && dv == 0) continue;
                    const int jx = ix + dx, jv = iv + dv;
                    if (jx < 0 || jx >= nx || jv < 0 || jv >= nv) continue;
                    if (survived(jx, jv) != s) boundary = true;
                }
            if (boundary) interface_cell[static_cast<std::size_t>(iv) * nx + ix] = 1;
        }

    // shell: within Chebyshev distance 3 of the interface
    constexpr int kShellRadius = 3;
    int shell = 0, inter_shell = 0, intermediate = 0;
    for (int iv = 0; iv < nv; ++iv)
        for (int ix = 0; ix < nx; ++ix) {
            const double p = map.at(ix, iv);
            if (p >= 2.0 && p < map.max_periods) ++intermediate;
            bool in_shell = false;
            for (int dv = -kShellRadius; dv <= kShellRadius && !in_shell; ++dv)
                for (int dx = -kShellRadius; dx <= kShellRadius && !in_shell; ++dx) {
                    const int jx = ix + dx, jv = iv + dv;
                    if (jx < 0 || jx >= nx || jv < 0 || jv >= nv) continue;
                    if (interface_cell[static_cast<std::size_t>(jv) * nx + jx])
                        in_shell = true;
                }
            if (in_shell) {
                ++shell;
                if (p >= 2.0 && p < map.max_periods) ++inter_shell;
            }
        }
    (void)inter_shell;

    out.shell_cells = shell;
    out.intermediate_cells = intermediate;
    out.blur_fraction =
        shell > 0 ? static_cast<double>(intermediate) / static_cast<double>(shell) : 0.0;
    out.verdict = out.blur_fraction >= blur_threshold ? MapClass::blurred : MapClass::sharp;
    return out;
}

}  // namespace casim
