#pragma once

#include "hoi/sweep.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace hoi {

/// Fully resolved run configuration. Field defaults are the simulation
/// defaults of the reproduced study: dt = 3e-3, extinction threshold 1e-7,
/// convergence tolerance 1e-4, initial n = m = 1, beta/omega grid
/// [-80, 0) x [1e-3, 1e2) at 27 x 17. There is no randomness anywhere,
/// so a run is fully determined by this structure.
struct RunConfig {
    std::string command;  // informational; set by the CLI
    Topology topology = Topology::Intransitive;
    HOIKind hoi = HOIKind::Symmetric;
    double alpha_ab = 2.0;
    double alpha_ac = 2.0;
    double alpha_bc = 2.0;
    double beta = -3.0;
    double omega = 1.0;

    double dt = 3e-3;
    double horizon = 1e4;
    bool scale_horizon = true;
    double horizon_cap = 0.0;  // 0 = uncapped
    double extinction_threshold = 1e-7;
    double convergence_tol = 1e-4;
    int convergence_window = 100;
    double divergence_cap = 1e6;
    int sample_stride = 100;
    long max_samples = 200000;

    double amplitude_tol = 1e-3;
    double window_fraction = 0.2;

    int workers = 0;  // 0 = available parallelism
    std::string out = ".";

    double beta_min = -80.0, beta_max = 0.0;
    int beta_count = 27;
    double omega_min = 1e-3, omega_max = 1e2;
    int omega_count = 17;
    bool omega_log = true;

    double alpha_ab_min = 0.25, alpha_ab_max = 3.25;
    int alpha_ab_count = 12;
    double alpha_other_min = 0.25, alpha_other_max = 3.25;
    int alpha_other_count = 12;

    std::vector<double> probe_alphas = {0.5, 1.5, 2.0, 3.0};
    std::vector<double> shared_alphas = {0.5, 0.75, 2.0};

    double alpha_lo = 1.0, alpha_hi = 2.0, alpha_tol = 0.01;

    SystemSpec make_spec() const;
    IntegratorConfig make_integrator() const;
    ClassifyConfig make_classify() const;
    GridAxis make_beta_axis() const;
    GridAxis make_omega_axis() const;
    GridAxis make_alpha_ab_axis() const;
    GridAxis make_alpha_other_axis() const;
    int resolved_workers() const;
};

/// Parses and validates a JSON config document. Unknown keys and
/// out-of-range values are rejected with a path-qualified message.
/// Missing keys take the defaults above.
RunConfig parse_config(const std::string& text);
RunConfig parse_config(const nlohmann::json& doc);

/// Full resolved config, loadable back through parse_config; written as
/// manifest.json next to every output.
nlohmann::json config_to_json(const RunConfig& config);

}  // namespace hoi
