#include "casim/config.hpp"

#include <cmath>
#include <set>

#include "casim/constants.hpp"
#include "casim/errors.hpp"
#include "casim/io.hpp"

namespace casim {

namespace {

const std::set<std::string> kTopKeys = {
    "kappa", "L0", "omega0", "omega0_hz", "area", "d0", "Q", "F0",
    "omega", "omega_hz", "omega_over_omega0", "epsilon", "force",
    "max_periods", "out_dir", "workers",
    "grid", "integrator", "threshold", "melnikov", "trajectory"};
const std::set<std::string> kGridKeys = {"xi_min", "xi_max", "v_min",
                                         "v_max", "nx", "nv"};
const std::set<std::string> kIntegratorKeys = {"rtol", "atol", "stiction_delta",
                                               "tol_saddle", "orbit_dt", "scan_points"};
const std::set<std::string> kThresholdKeys = {"omega_min", "omega_max", "n_omega"};
const std::set<std::string> kMelnikovKeys = {"alpha", "n_t0", "t0_periods"};
const std::set<std::string> kTrajectoryKeys = {"xi0", "v0", "sample_dt"};

void reject_unknown(const nlohmann::json& obj, const std::set<std::string>& known,
                    const std::string& where) {
    for (const auto& [key, _] : obj.items())
        if (!known.count(key))
            throw FormatError("config: unknown key '" + where + key + "'");
}

double need_number(const nlohmann::json& v, const std::string& key) {
    if (!v.is_number())
        throw FormatError("config: key '" + key + "' must be a number");
    return v.get<double>();
}

int need_int(const nlohmann::json& v, const std::string& key) {
    if (!v.is_number_integer())
        throw FormatError("config: key '" + key + "' must be an integer");
    return v.get<int>();
}

template <class T>
void take(const nlohmann::json& obj, const std::string& key, T& dst) {
    if (!obj.contains(key)) return;
    if constexpr (std::is_same_v<T, int>)
        dst = need_int(obj.at(key), key);
    else
        dst = need_number(obj.at(key), key);
}

void take_opt(const nlohmann::json& obj, const std::string& key,
              std::optional<double>& dst) {
    if (obj.contains(key)) dst = need_number(obj.at(key), key);
}

}  // namespace

RunConfig parse_config(const nlohmann::json& doc) {
    if (!doc.is_object()) throw FormatError("config: top level must be an object");
    reject_unknown(doc, kTopKeys, "");

    RunConfig cfg;

    // --- physical block (flat keys)
    auto req = [&doc](const char* key) {
        if (!doc.contains(key))
            throw FormatError(std::string("config: required key '") + key + "' missing");
        return need_number(doc.at(key), key);
    };
    const double kappa = req("kappa");
    const double L0 = req("L0");
    const double area = req("area");

    if (doc.contains("omega0") && doc.contains("omega0_hz"))
        throw FormatError("config: provide either 'omega0' (rad/s) or 'omega0_hz' (Hz), not both");
    double omega0 = 0.0;
    if (doc.contains("omega0"))
        omega0 = need_number(doc.at("omega0"), "omega0");
    else if (doc.contains("omega0_hz"))
        omega0 = 2.0 * constants::pi * need_number(doc.at("omega0_hz"), "omega0_hz");
    else
        throw FormatError("config: required key 'omega0' (rad/s) or 'omega0_hz' (Hz) missing");

    double d0 = 0.0, Q = 500.0, F0 = 1e-9;
    take(doc, "d0", d0);
    take(doc, "Q", Q);
    take(doc, "F0", F0);

    const int n_omega_keys = doc.contains("omega") + doc.contains("omega_hz") +
                             doc.contains("omega_over_omega0");
    if (n_omega_keys > 1)
        throw FormatError("config: provide at most one of 'omega', 'omega_hz', "
                          "'omega_over_omega0'");
    double omega = 1.05 * omega0;
    if (doc.contains("omega"))
        omega = need_number(doc.at("omega"), "omega");
    else if (doc.contains("omega_hz"))
        omega = 2.0 * constants::pi * need_number(doc.at("omega_hz"), "omega_hz");
    else if (doc.contains("omega_over_omega0"))
        omega = need_number(doc.at("omega_over_omega0"), "omega_over_omega0") * omega0;

    int epsilon = 1;
    take(doc, "epsilon", epsilon);

    try {
        cfg.physical =
            OscillatorParams::make(kappa, L0, omega0, area, d0, Q, F0, omega, epsilon);
    } catch (const InvalidParameter& e) {
        throw FormatError(std::string("config: ") + e.what());
    }

    if (doc.contains("force")) {
        if (!doc.at("force").is_string())
            throw FormatError("config: key 'force' must be a string");
        cfg.force_spec = doc.at("force").get<std::string>();
    }
    if (cfg.force_spec != "ideal" &&
        !(cfg.force_spec.rfind("table:", 0) == 0 && cfg.force_spec.size() > 6))
        throw FormatError("config: key 'force' must be 'ideal' or 'table:<path>'");

    take(doc, "max_periods", cfg.max_periods);
    if (!(cfg.max_periods > 0.0))
        throw FormatError("config: key 'max_periods' must be > 0");
    if (doc.contains("out_dir")) {
        if (!doc.at("out_dir").is_string())
            throw FormatError("config: key 'out_dir' must be a string");
        cfg.out_dir = doc.at("out_dir").get<std::string>();
    }
    take(doc, "workers", cfg.workers);
    if (cfg.workers < 0) throw FormatError("config: key 'workers' must be >= 0");

    // --- sections
    if (doc.contains("grid")) {
        const auto& g = doc.at("grid");
        if (!g.is_object()) throw FormatError("config: 'grid' must be an object");
        reject_unknown(g, kGridKeys, "grid.");
        take_opt(g, "xi_min", cfg.grid.xi_min);
        take_opt(g, "xi_max", cfg.grid.xi_max);
        take_opt(g, "v_min", cfg.grid.v_min);
        take_opt(g, "v_max", cfg.grid.v_max);
        take(g, "nx", cfg.grid.nx);
        take(g, "nv", cfg.grid.nv);
        if (cfg.grid.nx < 2 || cfg.grid.nv < 2)
            throw FormatError("config: grid.nx and grid.nv must be >= 2");
        const int have = cfg.grid.xi_min.has_value() + cfg.grid.xi_max.has_value() +
                         cfg.grid.v_min.has_value() + cfg.grid.v_max.has_value();
        if (have != 0 && have != 4)
            throw FormatError("config: give all four of grid.{xi_min,xi_max,v_min,v_max} "
                              "or none");
        if (have == 4 && (!(*cfg.grid.xi_max > *cfg.grid.xi_min) ||
                          !(*cfg.grid.v_max > *cfg.grid.v_min)))
            throw FormatError("config: grid window must satisfy xi_min < xi_max and "
                              "v_min < v_max");
    }
    if (doc.contains("integrator")) {
        const auto& g = doc.at("integrator");
        if (!g.is_object()) throw FormatError("config: 'integrator' must be an object");
        reject_unknown(g, kIntegratorKeys, "integrator.");
        take(g, "rtol", cfg.integrator.rtol);
        take(g, "atol", cfg.integrator.atol);
        take(g, "stiction_delta", cfg.integrator.stiction_delta);
        take(g, "tol_saddle", cfg.integrator.tol_saddle);
        take(g, "orbit_dt", cfg.integrator.orbit_dt);
        take(g, "scan_points", cfg.integrator.scan_points);
        if (!(cfg.integrator.rtol > 0.0) || !(cfg.integrator.atol > 0.0))
            throw FormatError("config: integrator tolerances must be > 0");
        if (!(cfg.integrator.stiction_delta > 0.0))
            throw FormatError("config: integrator.stiction_delta must be > 0");
        if (!(cfg.integrator.tol_saddle > 0.0) || !(cfg.integrator.orbit_dt > 0.0))
            throw FormatError("config: integrator.tol_saddle and orbit_dt must be > 0");
        if (cfg.integrator.scan_points < 8)
            throw FormatError("config: integrator.scan_points must be >= 8");
    }
    if (doc.contains("threshold")) {
        const auto& g = doc.at("threshold");
        if (!g.is_object()) throw FormatError("config: 'threshold' must be an object");
        reject_unknown(g, kThresholdKeys, "threshold.");
        take(g, "omega_min", cfg.threshold.omega_min);
        take(g, "omega_max", cfg.threshold.omega_max);
        take(g, "n_omega", cfg.threshold.n_omega);
        if (!(cfg.threshold.omega_min > 0.0) ||
            !(cfg.threshold.omega_max > cfg.threshold.omega_min))
            throw FormatError("config: need 0 < threshold.omega_min < threshold.omega_max");
        if (cfg.threshold.n_omega < 2)
            throw FormatError("config: threshold.n_omega must be >= 2");
    }
    if (doc.contains("melnikov")) {
        const auto& g = doc.at("melnikov");
        if (!g.is_object()) throw FormatError("config: 'melnikov' must be an object");
        reject_unknown(g, kMelnikovKeys, "melnikov.");
        take_opt(g, "alpha", cfg.melnikov.alpha);
        take(g, "n_t0", cfg.melnikov.n_t0);
        take(g, "t0_periods", cfg.melnikov.t0_periods);
        if (cfg.melnikov.alpha && !(*cfg.melnikov.alpha >= 0.0))
            throw FormatError("config: melnikov.alpha must be >= 0");
        if (cfg.melnikov.n_t0 < 2)
            throw FormatError("config: melnikov.n_t0 must be >= 2");
        if (!(cfg.melnikov.t0_periods > 0.0))
            throw FormatError("config: melnikov.t0_periods must be > 0");
    }
    if (doc.contains("trajectory")) {
        const auto& g = doc.at("trajectory");
        if (!g.is_object()) throw FormatError("config: 'trajectory' must be an object");
        reject_unknown(g, kTrajectoryKeys, "trajectory.");
        take_opt(g, "xi0", cfg.trajectory.xi0);
        take(g, "v0", cfg.trajectory.v0);
        take(g, "sample_dt", cfg.trajectory.sample_dt);
        if (!(cfg.trajectory.sample_dt > 0.0))
            throw FormatError("config: trajectory.sample_dt must be > 0");
    }
    return cfg;
}

RunConfig load_config(const std::optional<std::string>& path,
                      const nlohmann::json& overrides) {
    nlohmann::json doc = nlohmann::json::object();
    if (path) {
        nlohmann::json parsed;
        try {
            parsed = nlohmann::json::parse(read_text_file(*path));
        } catch (const nlohmann::json::parse_error& e) {
            throw FormatError("config '" + *path + "': " + e.what());
        }
        if (!parsed.is_object())
            throw FormatError("config '" + *path + "': top level must be an object");
        doc = parsed;
    }
    if (!overrides.is_null()) {
        if (!overrides.is_object()) throw FormatError("config overrides must be an object");
        doc.merge_patch(overrides);
    }
    return parse_config(doc);
}

std::shared_ptr<const ForceModel> RunConfig::make_force() const {
    if (force_spec == "ideal")
        return std::make_shared<IdealCasimirModel>(physical.area);
    return load_force_table(force_spec.substr(6), physical.d0);
}

IntegratorControls RunConfig::integrator_controls() const {
    IntegratorControls c;
    c.rtol = integrator.rtol;
    c.atol = integrator.atol;
    c.stiction_delta = integrator.stiction_delta;
    return c;
}

nlohmann::json RunConfig::effective() const {
    nlohmann::json j;
    j["kappa"] = physical.kappa;
    j["L0"] = physical.L0;
    j["omega0"] = physical.omega0;
    j["area"] = physical.area;
    j["d0"] = physical.d0;
    j["Q"] = physical.Q;
    j["F0"] = physical.F0;
    j["omega"] = physical.omega;
    j["epsilon"] = physical.epsilon;
    j["force"] = force_spec;
    j["max_periods"] = max_periods;
    j["out_dir"] = out_dir;
    j["workers"] = workers;
    auto& g = j["grid"];
    if (grid.xi_min) {
        g["xi_min"] = *grid.xi_min;
        g["xi_max"] = *grid.xi_max;
        g["v_min"] = *grid.v_min;
        g["v_max"] = *grid.v_max;
    }
    g["nx"] = grid.nx;
    g["nv"] = grid.nv;
    auto& it = j["integrator"];
    it["rtol"] = integrator.rtol;
    it["atol"] = integrator.atol;
    it["stiction_delta"] = integrator.stiction_delta;
    it["tol_saddle"] = integrator.tol_saddle;
    it["orbit_dt"] = integrator.orbit_dt;
    it["scan_points"] = integrator.scan_points;
    auto& th = j["threshold"];
    th["omega_min"] = threshold.omega_min;
    th["omega_max"] = threshold.omega_max;
    th["n_omega"] = threshold.n_omega;
    auto& me = j["melnikov"];
    if (melnikov.alpha) me["alpha"] = *melnikov.alpha;
    me["n_t0"] = melnikov.n_t0;
    me["t0_periods"] = melnikov.t0_periods;
    auto& tr = j["trajectory"];
    if (trajectory.xi0) tr["xi0"] = *trajectory.xi0;
    tr["v0"] = trajectory.v0;
    tr["sample_dt"] = trajectory.sample_dt;
    return j;
}

}  // namespace casim
