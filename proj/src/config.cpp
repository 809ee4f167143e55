#include "hoi/config.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

namespace hoi {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& message) {
    throw std::invalid_argument("$." + path + ": " + message);
}

double get_number(const nlohmann::json& v, const std::string& path) {
    if (!v.is_number()) fail(path, "expected a number");
    return v.get<double>();
}

int get_int(const nlohmann::json& v, const std::string& path) {
    if (!v.is_number_integer()) fail(path, "expected an integer");
    return v.get<int>();
}

bool get_bool(const nlohmann::json& v, const std::string& path) {
    if (!v.is_boolean()) fail(path, "expected a boolean");
    return v.get<bool>();
}

std::string get_string(const nlohmann::json& v, const std::string& path) {
    if (!v.is_string()) fail(path, "expected a string");
    return v.get<std::string>();
}

std::vector<double> get_number_list(const nlohmann::json& v, const std::string& path) {
    if (!v.is_array() || v.empty()) fail(path, "expected a non-empty array of numbers");
    std::vector<double> out;
    for (const auto& e : v) {
        if (!e.is_number()) fail(path, "expected a non-empty array of numbers");
        out.push_back(e.get<double>());
    }
    return out;
}

}  // namespace

RunConfig parse_config(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
    return parse_config(doc);
}

RunConfig parse_config(const nlohmann::json& doc) {
    if (!doc.is_object()) throw std::invalid_argument("config must be a JSON object");
    RunConfig cfg;

    // "alpha" is shorthand for all three magnitudes; apply it before the
    // pair-specific keys regardless of document order.
    if (doc.contains("alpha")) {
        const double a = get_number(doc["alpha"], "alpha");
        cfg.alpha_ab = cfg.alpha_ac = cfg.alpha_bc = a;
    }

    for (const auto& [key, value] : doc.items()) {
        if (key == "command") cfg.command = get_string(value, key);
        else if (key == "topology") cfg.topology = parse_topology(get_string(value, key));
        else if (key == "hoi") cfg.hoi = parse_hoi_kind(get_string(value, key));
        else if (key == "alpha") { /* handled above */ }
        else if (key == "alpha_ab") cfg.alpha_ab = get_number(value, key);
        else if (key == "alpha_ac") cfg.alpha_ac = get_number(value, key);
        else if (key == "alpha_bc") cfg.alpha_bc = get_number(value, key);
        else if (key == "beta") cfg.beta = get_number(value, key);
        else if (key == "omega") cfg.omega = get_number(value, key);
        else if (key == "dt") cfg.dt = get_number(value, key);
        else if (key == "horizon") cfg.horizon = get_number(value, key);
        else if (key == "scale_horizon") cfg.scale_horizon = get_bool(value, key);
        else if (key == "horizon_cap") cfg.horizon_cap = get_number(value, key);
        else if (key == "extinction_threshold") cfg.extinction_threshold = get_number(value, key);
        else if (key == "convergence_tol") cfg.convergence_tol = get_number(value, key);
        else if (key == "convergence_window") cfg.convergence_window = get_int(value, key);
        else if (key == "divergence_cap") cfg.divergence_cap = get_number(value, key);
        else if (key == "sample_stride") cfg.sample_stride = get_int(value, key);
        else if (key == "max_samples") cfg.max_samples = get_int(value, key);
        else if (key == "amplitude_tol") cfg.amplitude_tol = get_number(value, key);
        else if (key == "window_fraction") cfg.window_fraction = get_number(value, key);
        else if (key == "workers") cfg.workers = get_int(value, key);
        else if (key == "out") cfg.out = get_string(value, key);
        else if (key == "beta_min") cfg.beta_min = get_number(value, key);
        else if (key == "beta_max") cfg.beta_max = get_number(value, key);
        else if (key == "beta_count") cfg.beta_count = get_int(value, key);
        else if (key == "omega_min") cfg.omega_min = get_number(value, key);
        else if (key == "omega_max") cfg.omega_max = get_number(value, key);
        else if (key == "omega_count") cfg.omega_count = get_int(value, key);
        else if (key == "omega_log") cfg.omega_log = get_bool(value, key);
        else if (key == "alpha_ab_min") cfg.alpha_ab_min = get_number(value, key);
        else if (key == "alpha_ab_max") cfg.alpha_ab_max = get_number(value, key);
        else if (key == "alpha_ab_count") cfg.alpha_ab_count = get_int(value, key);
        else if (key == "alpha_other_min") cfg.alpha_other_min = get_number(value, key);
        else if (key == "alpha_other_max") cfg.alpha_other_max = get_number(value, key);
        else if (key == "alpha_other_count") cfg.alpha_other_count = get_int(value, key);
        else if (key == "probe_alphas") cfg.probe_alphas = get_number_list(value, key);
        else if (key == "shared_alphas") cfg.shared_alphas = get_number_list(value, key);
        else if (key == "alpha_lo") cfg.alpha_lo = get_number(value, key);
        else if (key == "alpha_hi") cfg.alpha_hi = get_number(value, key);
        else if (key == "alpha_tol") cfg.alpha_tol = get_number(value, key);
        else fail(key, "unknown key");
    }

    // Range validation, path-qualified.
    if (!(cfg.dt > 0.0)) fail("dt", "must be positive");
    if (!(cfg.horizon > 0.0)) fail("horizon", "must be positive");
    if (cfg.horizon_cap < 0.0) fail("horizon_cap", "must be >= 0 (0 = uncapped)");
    if (!(cfg.extinction_threshold > 0.0)) fail("extinction_threshold", "must be positive");
    if (!(cfg.convergence_tol > 0.0)) fail("convergence_tol", "must be positive");
    if (cfg.convergence_window < 1) fail("convergence_window", "must be >= 1");
    if (!(cfg.divergence_cap > 1.0)) fail("divergence_cap", "must be > 1");
    if (cfg.sample_stride < 1) fail("sample_stride", "must be >= 1");
    if (cfg.max_samples < 2) fail("max_samples", "must be >= 2");
    if (!(cfg.amplitude_tol > 0.0)) fail("amplitude_tol", "must be positive");
    if (!(cfg.window_fraction > 0.0 && cfg.window_fraction <= 1.0))
        fail("window_fraction", "must be in (0, 1]");
    if (cfg.workers < 0) fail("workers", "must be >= 0 (0 = auto)");
    if (!(cfg.omega >= 0.0)) fail("omega", "must be nonnegative");
    if (!(cfg.beta_min < cfg.beta_max)) fail("beta_min", "must be below beta_max");
    if (cfg.beta_count < 1) fail("beta_count", "must be >= 1");
    if (!(cfg.omega_min < cfg.omega_max)) fail("omega_min", "must be below omega_max");
    if (cfg.omega_log && !(cfg.omega_min > 0.0))
        fail("omega_min", "must be positive on a logarithmic axis");
    if (cfg.omega_count < 1) fail("omega_count", "must be >= 1");
    if (!(cfg.alpha_ab_min < cfg.alpha_ab_max)) fail("alpha_ab_min", "must be below alpha_ab_max");
    if (cfg.alpha_ab_count < 1) fail("alpha_ab_count", "must be >= 1");
    if (!(cfg.alpha_other_min < cfg.alpha_other_max))
        fail("alpha_other_min", "must be below alpha_other_max");
    if (cfg.alpha_other_count < 1) fail("alpha_other_count", "must be >= 1");
    if (!(cfg.alpha_lo < cfg.alpha_hi)) fail("alpha_lo", "must be below alpha_hi");
    if (!(cfg.alpha_tol > 0.0)) fail("alpha_tol", "must be positive");
    for (double v : {cfg.alpha_ab, cfg.alpha_ac, cfg.alpha_bc, cfg.beta})
        if (!std::isfinite(v)) fail("alpha", "model parameters must be finite");

    return cfg;
}

nlohmann::json config_to_json(const RunConfig& cfg) {
    nlohmann::json j;
    if (!cfg.command.empty()) j["command"] = cfg.command;
    j["topology"] = topology_name(cfg.topology);
    j["hoi"] = hoi_kind_name(cfg.hoi);
    j["alpha_ab"] = cfg.alpha_ab;
    j["alpha_ac"] = cfg.alpha_ac;
    j["alpha_bc"] = cfg.alpha_bc;
    j["beta"] = cfg.beta;
    j["omega"] = cfg.omega;
    j["dt"] = cfg.dt;
    j["horizon"] = cfg.horizon;
    j["scale_horizon"] = cfg.scale_horizon;
    j["horizon_cap"] = cfg.horizon_cap;
    j["extinction_threshold"] = cfg.extinction_threshold;
    j["convergence_tol"] = cfg.convergence_tol;
    j["convergence_window"] = cfg.convergence_window;
    j["divergence_cap"] = cfg.divergence_cap;
    j["sample_stride"] = cfg.sample_stride;
    j["max_samples"] = cfg.max_samples;
    j["amplitude_tol"] = cfg.amplitude_tol;
    j["window_fraction"] = cfg.window_fraction;
    j["workers"] = cfg.workers;
    j["out"] = cfg.out;
    j["beta_min"] = cfg.beta_min;
    j["beta_max"] = cfg.beta_max;
    j["beta_count"] = cfg.beta_count;
    j["omega_min"] = cfg.omega_min;
    j["omega_max"] = cfg.omega_max;
    j["omega_count"] = cfg.omega_count;
    j["omega_log"] = cfg.omega_log;
    j["alpha_ab_min"] = cfg.alpha_ab_min;
    j["alpha_ab_max"] = cfg.alpha_ab_max;
    j["alpha_ab_count"] = cfg.alpha_ab_count;
    j["alpha_other_min"] = cfg.alpha_other_min;
    j["alpha_other_max"] = cfg.alpha_other_max;
    j["alpha_other_count"] = cfg.alpha_other_count;
    j["probe_alphas"] = cfg.probe_alphas;
    j["shared_alphas"] = cfg.shared_alphas;
    j["alpha_lo"] = cfg.alpha_lo;
    j["alpha_hi"] = cfg.alpha_hi;
    j["alpha_tol"] = cfg.alpha_tol;
    return j;
}

SystemSpec RunConfig::make_spec() const {
    return build_canonical(topology, hoi, alpha_ab, alpha_ac, alpha_bc, beta);
}

IntegratorConfig RunConfig::make_integrator() const {
    IntegratorConfig c;
    c.dt = dt;
    c.omega = omega;
    c.extinction_threshold = extinction_threshold;
    c.convergence_tol = convergence_tol;
    c.convergence_window = convergence_window;
    c.horizon = horizon;
    c.scale_horizon_with_omega = scale_horizon;
    c.horizon_cap = horizon_cap > 0.0 ? horizon_cap
                                      : std::numeric_limits<double>::infinity();
    c.divergence_cap = divergence_cap;
    c.sample_stride = sample_stride;
    c.max_samples = max_samples;
    return c;
}

ClassifyConfig RunConfig::make_classify() const {
    return {amplitude_tol, window_fraction};
}

GridAxis RunConfig::make_beta_axis() const {
    return {"beta", beta_min, beta_max, beta_count, false};
}

GridAxis RunConfig::make_omega_axis() const {
    return {"omega", omega_min, omega_max, omega_count, omega_log};
}

GridAxis RunConfig::make_alpha_ab_axis() const {
    return {"alpha_ab", alpha_ab_min, alpha_ab_max, alpha_ab_count, false};
}

GridAxis RunConfig::make_alpha_other_axis() const {
    return {"alpha_other", alpha_other_min, alpha_other_max, alpha_other_count, false};
}

int RunConfig::resolved_workers() const {
    if (workers > 0) return workers;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

}  // namespace hoi
