#pragma once

#include "hoi/netmodel.hpp"

#include <Eigen/Core>

#include <limits>
#include <utility>
#include <vector>

namespace hoi {

/// Integrator state: abundances n (>= 0, extinction absorbing), modifier
/// values m (one per HOISpec, sign unconstrained), elapsed time t.
struct SystemState {
    Eigen::VectorXd n;
    Eigen::VectorXd m;
    double t = 0.0;
};

/// Paper-default initial condition: n_i = 1, m = 1, t = 0.
SystemState initial_state(const SystemSpec& spec);

struct IntegratorConfig {
    double dt = 3e-3;
    double omega = 1.0;
    double extinction_threshold = 1e-7;
    double convergence_tol = 1e-4;
    int convergence_window = 100;   // consecutive passing samples
    double horizon = 1e4;           // time units; see scale_horizon_with_omega
    bool scale_horizon_with_omega = true;  // horizon/omega for omega < 1
    double horizon_cap = std::numeric_limits<double>::infinity();
    double divergence_cap = 1e6;
    int sample_stride = 100;        // steps between samples
    long max_samples = 200000;      // stride is widened to stay under this

    /// Horizon in time units after omega scaling and capping.
    double effective_horizon() const;
    void validate() const;  // throws std::invalid_argument
};

enum class Termination { Converged, HorizonReached, Diverged, AllExtinct };
std::string termination_name(Termination t);

struct Trajectory {
    struct Sample {
        double t;
        Eigen::VectorXd n;
        Eigen::VectorXd m;
    };
    std::vector<Sample> samples;
    Termination termination = Termination::HorizonReached;
    SystemState final_state;
};

/// Right-hand sides of the modifier-coupled model:
///   dn_i = n_i (1 - n_i + sum_j alpha_ij m_eff(i,j) n_j)
///   dm_h = omega (1 - m_h + beta_h n_k)
/// with m_eff the stored modifier on modified ordered pairs and 1 elsewhere.
std::pair<Eigen::VectorXd, Eigen::VectorXd> rhs(const SystemSpec& spec,
                                                const SystemState& state,
                                                double omega);

/// Abundance derivatives with the modifiers frozen at m_frozen (all-ones
/// for the plain generalized Lotka-Volterra model).
Eigen::VectorXd glvm_rhs(const SystemSpec& spec, const Eigen::VectorXd& n,
                         const Eigen::VectorXd& m_frozen);

/// Instantaneous-modification model: the modifier is substituted by its
/// equilibrium value, adding alpha_ij * beta_h * n_j * n_k to the bracket
/// of each modified ordered pair.
Eigen::VectorXd simple_hoi_rhs(const SystemSpec& spec, const Eigen::VectorXd& n);

/// Stationary modifier value, independent of omega.
inline double modifier_equilibrium(double beta, double n_k) { return 1.0 + beta * n_k; }

/// One explicit Euler step followed by extinction clamping: any abundance
/// at or below the threshold is set to exactly 0.
SystemState euler_step(const SystemSpec& spec, const SystemState& state,
                       const IntegratorConfig& config);

/// Strict convergence criterion sum_i |dn_i| < tol.
bool detect_convergence(const Eigen::VectorXd& dn, double tol);

/// Integrates from `initial` until convergence (held over a window of
/// consecutive samples), divergence, total extinction, or the horizon.
Trajectory simulate(const SystemSpec& spec, const IntegratorConfig& config,
                    const SystemState& initial);

inline Trajectory simulate(const SystemSpec& spec, const IntegratorConfig& config) {
    return simulate(spec, config, initial_state(spec));
}

/// Same stepping with modifiers frozen; the beta = 0 trajectory of
/// simulate() is bit-identical to this with m_frozen = 1.
Trajectory simulate_glvm(const SystemSpec& spec, const IntegratorConfig& config,
                         const SystemState& initial, const Eigen::VectorXd& m_frozen);

/// Half-step Richardson companion: integrates at dt/2 for validation runs.
Trajectory simulate_half_step(const SystemSpec& spec, const IntegratorConfig& config,
                              const SystemState& initial);

}  // namespace hoi
