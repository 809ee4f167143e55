#include "hoi/config.hpp"
#include "hoi/equilibria.hpp"
#include "hoi/io.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

namespace fs = std::filesystem;

namespace {

struct CliOverrides {
    std::optional<std::string> config_path;
    std::optional<std::string> topology, hoi, out;
    std::optional<double> alpha, alpha_ab, alpha_ac, alpha_bc, beta, omega;
    std::optional<double> dt, horizon, horizon_cap, extinction_threshold;
    std::optional<double> convergence_tol, divergence_cap, amplitude_tol,
        window_fraction;
    std::optional<double> beta_min, beta_max, omega_min, omega_max;
    std::optional<double> alpha_lo, alpha_hi, alpha_tol;
    std::optional<int> convergence_window, sample_stride, workers;
    std::optional<int> beta_count, omega_count, max_samples;
    std::optional<bool> scale_horizon;
};

void add_common_flags(CLI::App* cmd, CliOverrides& o) {
    cmd->add_option("--config", o.config_path, "JSON config file; flags override it");
    cmd->add_option("--topology", o.topology,
                    "transitive-a|transitive-b|transitive-c|intransitive");
    cmd->add_option("--hoi", o.hoi, "sym|asym-ab|asym-ba");
    cmd->add_option("--alpha", o.alpha, "magnitude for all three pairs");
    cmd->add_option("--alpha-ab", o.alpha_ab);
    cmd->add_option("--alpha-ac", o.alpha_ac);
    cmd->add_option("--alpha-bc", o.alpha_bc);
    cmd->add_option("--beta", o.beta, "modification strength");
    cmd->add_option("--omega", o.omega, "modification speed");
    cmd->add_option("--dt", o.dt);
    cmd->add_option("--horizon", o.horizon, "simulated time units");
    cmd->add_option("--horizon-cap", o.horizon_cap, "0 = uncapped");
    cmd->add_option("--scale-horizon", o.scale_horizon);
    cmd->add_option("--extinction-threshold", o.extinction_threshold);
    cmd->add_option("--convergence-tol", o.convergence_tol);
    cmd->add_option("--convergence-window", o.convergence_window);
    cmd->add_option("--divergence-cap", o.divergence_cap);
    cmd->add_option("--sample-stride", o.sample_stride);
    cmd->add_option("--max-samples", o.max_samples);
    cmd->add_option("--amplitude-tol", o.amplitude_tol);
    cmd->add_option("--window-fraction", o.window_fraction);
    cmd->add_option("--beta-min", o.beta_min);
    cmd->add_option("--beta-max", o.beta_max);
    cmd->add_option("--beta-count", o.beta_count);
    cmd->add_option("--omega-min", o.omega_min);
    cmd->add_option("--omega-max", o.omega_max);
    cmd->add_option("--omega-count", o.omega_count);
    cmd->add_option("--alpha-lo", o.alpha_lo);
    cmd->add_option("--alpha-hi", o.alpha_hi);
    cmd->add_option("--alpha-tol", o.alpha_tol);
    cmd->add_option("--workers", o.workers, "0 = available parallelism");
    cmd->add_option("--out", o.out, "output directory");
}

hoi::RunConfig resolve_config(const CliOverrides& o, const std::string& command) {
    nlohmann::json doc = nlohmann::json::object();
    if (o.config_path) {
        std::ifstream in(*o.config_path);
        if (!in) throw std::invalid_argument("cannot open config file: " + *o.config_path);
        try {
            doc = nlohmann::json::parse(in);
        } catch (const nlohmann::json::parse_error& e) {
            throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
        }
        if (!doc.is_object()) throw std::invalid_argument("config must be a JSON object");
    }
    auto set = [&doc](const char* key, const auto& opt) {
        if (opt) doc[key] = *opt;
    };
    set("topology", o.topology);
    set("hoi", o.hoi);
    set("alpha", o.alpha);
    set("alpha_ab", o.alpha_ab);
    set("alpha_ac", o.alpha_ac);
    set("alpha_bc", o.alpha_bc);
    set("beta", o.beta);
    set("omega", o.omega);
    set("dt", o.dt);
    set("horizon", o.horizon);
    set("horizon_cap", o.horizon_cap);
    set("scale_horizon", o.scale_horizon);
    set("extinction_threshold", o.extinction_threshold);
    set("convergence_tol", o.convergence_tol);
    set("convergence_window", o.convergence_window);
    set("divergence_cap", o.divergence_cap);
    set("sample_stride", o.sample_stride);
    set("max_samples", o.max_samples);
    set("amplitude_tol", o.amplitude_tol);
    set("window_fraction", o.window_fraction);
    set("beta_min", o.beta_min);
    set("beta_max", o.beta_max);
    set("beta_count", o.beta_count);
    set("omega_min", o.omega_min);
    set("omega_max", o.omega_max);
    set("omega_count", o.omega_count);
    set("alpha_lo", o.alpha_lo);
    set("alpha_hi", o.alpha_hi);
    set("alpha_tol", o.alpha_tol);
    set("workers", o.workers);
    set("out", o.out);
    doc["command"] = command;

    return hoi::parse_config(doc);
}

void write_file(const fs::path& path, const std::string& payload) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << payload;
}

void write_manifest(const hoi::RunConfig& cfg) {
    write_file(fs::path(cfg.out) / "manifest.json", hoi::config_to_json(cfg).dump(2) + "\n");
}

int run_simulate(const hoi::RunConfig& cfg) {
    const auto spec = cfg.make_spec();
    const auto traj = hoi::simulate(spec, cfg.make_integrator());
    const auto outcome =
        hoi::classify_trajectory(traj, cfg.amplitude_tol, cfg.window_fraction);

    std::ostringstream csv;
    hoi::write_trajectory_csv(csv, spec, traj);
    write_file(fs::path(cfg.out) / "trajectory.csv", csv.str());
    write_file(fs::path(cfg.out) / "outcome.json",
               hoi::outcome_to_json(outcome).dump(2) + "\n");
    write_manifest(cfg);
    std::cout << "termination=" << hoi::termination_name(traj.termination)
              << " kind=" << hoi::outcome_kind_name(outcome.kind)
              << " survivors=" << outcome.survivors << "\n";
    return 0;
}

int run_sweep(const hoi::RunConfig& cfg) {
    const auto grid = hoi::sweep_beta_omega(cfg.make_spec(), cfg.make_beta_axis(),
                                            cfg.make_omega_axis(), cfg.make_integrator(),
                                            cfg.make_classify(), cfg.resolved_workers());
    std::ostringstream csv;
    hoi::write_grid_csv(csv, grid);
    write_file(fs::path(cfg.out) / "grid.csv", csv.str());
    write_manifest(cfg);
    std::cout << "xi=" << hoi::format_double(hoi::oscillation_probability(grid)) << "\n";
    return 0;
}

int run_xi_map(const hoi::RunConfig& cfg) {
    const auto map = hoi::xi_map(cfg.topology, cfg.hoi, cfg.make_alpha_ab_axis(),
                                 cfg.make_alpha_other_axis(), cfg.make_beta_axis(),
                                 cfg.make_omega_axis(), cfg.make_integrator(),
                                 cfg.make_classify(), cfg.resolved_workers());
    std::ostringstream csv;
    hoi::write_xi_csv(csv, map);
    write_file(fs::path(cfg.out) / "xi.csv", csv.str());
    write_manifest(cfg);
    return 0;
}

int run_equilibrium(const hoi::RunConfig& cfg) {
    const auto spec = cfg.make_spec();
    hoi::EquilibriumPoint guess;
    guess.n = Eigen::VectorXd::Ones(spec.n_species);
    guess.m = Eigen::VectorXd::Ones(static_cast<int>(spec.hois.size()));
    const double omega = cfg.omega > 0.0 ? cfg.omega : 1.0;
    const auto point = hoi::solve_steady_state(spec, omega, guess, 1e-10);
    if (!point.converged) {
        std::cerr << "steady-state solve did not converge (residual "
                  << point.residual_norm << ")\n";
        return 2;
    }
    const auto stability = hoi::jacobian_eigenvalues(spec, omega, point);
    write_file(fs::path(cfg.out) / "equilibrium.json",
               hoi::equilibrium_to_json(point, &stability).dump(2) + "\n");
    write_manifest(cfg);
    std::cout << "max_real_part=" << hoi::format_double(stability.max_real_part) << "\n";
    return 0;
}

int run_bifurcation(const hoi::RunConfig& cfg) {
    const auto result = hoi::nullification_bifurcation(cfg.alpha_ab);
    write_file(fs::path(cfg.out) / "bifurcation.json",
               hoi::bifurcation_to_json(result).dump(2) + "\n");
    write_manifest(cfg);
    std::cout << "beta_star=" << hoi::format_double(result.beta_star) << "\n";
    return 0;
}

int run_table_s1(const hoi::RunConfig& cfg) {
    const auto rows = hoi::existence_table(cfg.probe_alphas, cfg.shared_alphas,
                                           cfg.make_beta_axis(), cfg.make_omega_axis(),
                                           cfg.make_integrator(), cfg.make_classify(),
                                           cfg.resolved_workers());
    std::ostringstream csv;
    hoi::write_existence_csv(csv, rows);
    write_file(fs::path(cfg.out) / "table_s1.csv", csv.str());
    write_manifest(cfg);
    return 0;
}

int run_min_alpha(const hoi::RunConfig& cfg) {
    const double alpha_min = hoi::min_alpha_for_oscillation(
        cfg.topology, cfg.hoi, cfg.make_beta_axis(), cfg.make_omega_axis(),
        cfg.make_integrator(), cfg.alpha_lo, cfg.alpha_hi, cfg.alpha_tol,
        cfg.make_classify(), cfg.resolved_workers());
    nlohmann::json j;
    j["alpha_min"] = alpha_min;
    write_file(fs::path(cfg.out) / "min_alpha.json", j.dump(2) + "\n");
    write_manifest(cfg);
    std::cout << "alpha_min=" << hoi::format_double(alpha_min) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Speed-controlled interaction-modifier Lotka-Volterra toolkit"};
    app.require_subcommand(1);

    const char* commands[] = {"simulate", "sweep", "xi-map", "equilibrium",
                              "bifurcation", "table-s1", "min-alpha"};
    const char* descriptions[] = {
        "integrate one trajectory and classify it",
        "classify a (beta, omega) grid",
        "oscillation probabilities over pairwise magnitudes",
        "interior steady state and its eigenvalues",
        "modifier-nullification point of the symmetric intransitive system",
        "oscillation existence over all 36 network/modification combinations",
        "bisection for the smallest oscillating pairwise magnitude"};

    std::vector<CliOverrides> overrides(std::size(commands));
    for (std::size_t c = 0; c < std::size(commands); ++c)
        add_common_flags(app.add_subcommand(commands[c], descriptions[c]), overrides[c]);

    CLI11_PARSE(app, argc, argv);

    std::string command;
    const CliOverrides* chosen = nullptr;
    for (std::size_t c = 0; c < std::size(commands); ++c) {
        if (app.get_subcommand(commands[c])->parsed()) {
            command = commands[c];
            chosen = &overrides[c];
        }
    }

    try {
        const auto cfg = resolve_config(*chosen, command);
        fs::create_directories(cfg.out);
        if (command == "simulate") return run_simulate(cfg);
        if (command == "sweep") return run_sweep(cfg);
        if (command == "xi-map") return run_xi_map(cfg);
        if (command == "equilibrium") return run_equilibrium(cfg);
        if (command == "bifurcation") return run_bifurcation(cfg);
        if (command == "table-s1") return run_table_s1(cfg);
        if (command == "min-alpha") return run_min_alpha(cfg);
        std::cerr << "unknown command\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    }
}
