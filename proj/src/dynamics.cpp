#include "hoi/dynamics.hpp"

#include <cmath>
#include <stdexcept>

namespace hoi {

namespace {

// Ordered alpha entries scaled by a modifier value.
struct ModEntry {
    int i, j, h;
};

std::vector<ModEntry> modified_entries(const SystemSpec& spec) {
    std::vector<ModEntry> entries;
    for (int h = 0; h < static_cast<int>(spec.hois.size()); ++h) {
        const auto& hoi = spec.hois[h];
        entries.push_back({hoi.affected, hoi.affecting, h});
        if (hoi.symmetric) entries.push_back({hoi.affecting, hoi.affected, h});
    }
    return entries;
}

// Shared arithmetic for every integration path: identical operation order
// keeps the beta = 0 and frozen-modifier trajectories bit-identical.
inline void eval_rhs(const SystemSpec& spec, const std::vector<ModEntry>& entries,
                     const double* n, const double* m, double omega,
                     double* dn, double* dm, bool frozen) {
    const int N = spec.n_species;
    const double* a = spec.alpha.data();  // column-major: a[i + N*j]
    for (int i = 0; i < N; ++i) {
        double bracket = 1.0 - n[i];
        for (int j = 0; j < N; ++j) bracket += a[i + N * j] * n[j];
        dn[i] = bracket;  // temporarily the bracket; corrected below
    }
    for (const auto& e : entries)
        dn[e.i] += a[e.i + N * e.j] * (m[e.h] - 1.0) * n[e.j];
    for (int i = 0; i < N; ++i) dn[i] *= n[i];

    const int H = static_cast<int>(spec.hois.size());
    if (frozen) {
        for (int h = 0; h < H; ++h) dm[h] = 0.0;
    } else {
        for (int h = 0; h < H; ++h)
            dm[h] = omega * (1.0 - m[h] + spec.hois[h].beta * n[spec.hois[h].modifier]);
    }
}

void check_finite(const SystemSpec& spec, const SystemState& state) {
    for (int i = 0; i < spec.n_species; ++i)
        if (!std::isfinite(state.n(i)))
            throw std::domain_error("non-finite abundance n_" + species_label(i));
    for (int h = 0; h < static_cast<int>(state.m.size()); ++h)
        if (!std::isfinite(state.m(h)))
            throw std::domain_error("non-finite modifier m[" + std::to_string(h) + "]");
}

Trajectory integrate(const SystemSpec& spec, const IntegratorConfig& config,
                     const SystemState& initial, const Eigen::VectorXd* m_frozen) {
    config.validate();
    const int N = spec.n_species;
    const int H = static_cast<int>(spec.hois.size());
    if (initial.n.size() != N)
        throw std::invalid_argument("initial abundance vector has wrong size");
    const bool frozen = m_frozen != nullptr;
    if (frozen && m_frozen->size() != H)
        throw std::invalid_argument("frozen modifier vector has wrong size");
    if (!frozen && initial.m.size() != H)
        throw std::invalid_argument("initial modifier vector has wrong size");

    const double dt = config.dt;
    const double horizon = config.effective_horizon();
    const long long total_steps =
        static_cast<long long>(std::ceil(horizon / dt - 1e-12));
    long long stride = config.sample_stride;
    if (config.max_samples > 0 && total_steps / stride + 2 > config.max_samples)
        stride = total_steps / (config.max_samples - 1) + 1;

    Eigen::VectorXd n = initial.n;
    Eigen::VectorXd m = frozen ? *m_frozen : initial.m;
    Eigen::VectorXd dn(N), dm(H);
    const auto entries = modified_entries(spec);

    Trajectory traj;
    traj.termination = Termination::HorizonReached;
    int window_count = 0;
    long long step = 0;
    double t = initial.t;
    bool stopped = false;

    auto record = [&]() { traj.samples.push_back({t, n, m}); };

    for (;; ++step) {
        t = initial.t + static_cast<double>(step) * dt;

        bool alive = false, diverged = false;
        for (int i = 0; i < N; ++i) {
            if (!std::isfinite(n(i)) || n(i) >= config.divergence_cap) diverged = true;
            if (n(i) > 0.0) alive = true;
        }
        for (int h = 0; h < H; ++h)
            if (!std::isfinite(m(h))) diverged = true;
        if (diverged) {
            traj.termination = Termination::Diverged;
            record();
            stopped = true;
            break;
        }
        if (!alive) {
            traj.termination = Termination::AllExtinct;
            record();
            stopped = true;
            break;
        }

        eval_rhs(spec, entries, n.data(), m.data(), config.omega, dn.data(), dm.data(),
                 frozen);

        if (step % stride == 0) {
            record();
            if (detect_convergence(dn, config.convergence_tol))
                ++window_count;
            else
                window_count = 0;
            if (window_count >= config.convergence_window) {
                traj.termination = Termination::Converged;
                stopped = true;
                break;
            }
        }
        if (step >= total_steps) break;

        for (int i = 0; i < N; ++i) {
            double next = n(i) + dt * dn(i);
            n(i) = (next <= config.extinction_threshold) ? 0.0 : next;
        }
        if (!frozen)
            for (int h = 0; h < H; ++h) m(h) += dt * dm(h);
    }

    if (!stopped && (traj.samples.empty() || traj.samples.back().t < t))
        record();  // horizon endpoint
    traj.final_state = {n, m, t};
    return traj;
}

}  // namespace

SystemState initial_state(const SystemSpec& spec) {
    SystemState s;
    s.n = Eigen::VectorXd::Ones(spec.n_species);
    s.m = Eigen::VectorXd::Ones(static_cast<int>(spec.hois.size()));
    s.t = 0.0;
    return s;
}

double IntegratorConfig::effective_horizon() const {
    double h = horizon;
    if (scale_horizon_with_omega && omega < 1.0 && omega > 0.0) h = horizon / omega;
    return std::min(h, horizon_cap);
}

void IntegratorConfig::validate() const {
    if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
    if (!(horizon > 0.0)) throw std::invalid_argument("horizon must be positive");
    if (!(extinction_threshold > 0.0))
        throw std::invalid_argument("extinction_threshold must be positive");
    if (!(divergence_cap > 1.0))
        throw std::invalid_argument("divergence_cap must be greater than 1");
    if (sample_stride < 1) throw std::invalid_argument("sample_stride must be >= 1");
    if (convergence_window < 1)
        throw std::invalid_argument("convergence_window must be >= 1");
    if (!(omega >= 0.0)) throw std::invalid_argument("omega must be nonnegative");
}

std::string termination_name(Termination t) {
    switch (t) {
        case Termination::Converged: return "converged";
        case Termination::HorizonReached: return "horizon";
        case Termination::Diverged: return "diverged";
        case Termination::AllExtinct: return "allextinct";
    }
    return "unknown";
}

std::pair<Eigen::VectorXd, Eigen::VectorXd> rhs(const SystemSpec& spec,
                                                const SystemState& state,
                                                double omega) {
    check_finite(spec, state);
    const int N = spec.n_species;
    const int H = static_cast<int>(spec.hois.size());
    Eigen::VectorXd dn(N), dm(H);
    eval_rhs(spec, modified_entries(spec), state.n.data(), state.m.data(), omega,
             dn.data(), dm.data(), false);
    return {dn, dm};
}

Eigen::VectorXd glvm_rhs(const SystemSpec& spec, const Eigen::VectorXd& n,
                         const Eigen::VectorXd& m_frozen) {
    SystemState state{n, m_frozen, 0.0};
    check_finite(spec, state);
    const int N = spec.n_species;
    const int H = static_cast<int>(spec.hois.size());
    Eigen::VectorXd dn(N), dm(H);
    eval_rhs(spec, modified_entries(spec), n.data(), m_frozen.data(), 0.0, dn.data(),
             dm.data(), true);
    return dn;
}

Eigen::VectorXd simple_hoi_rhs(const SystemSpec& spec, const Eigen::VectorXd& n) {
    const int H = static_cast<int>(spec.hois.size());
    Eigen::VectorXd m_eq(H);
    for (int h = 0; h < H; ++h)
        m_eq(h) = modifier_equilibrium(spec.hois[h].beta, n(spec.hois[h].modifier));
    return glvm_rhs(spec, n, m_eq);
}

bool detect_convergence(const Eigen::VectorXd& dn, double tol) {
    return dn.cwiseAbs().sum() < tol;
}

SystemState euler_step(const SystemSpec& spec, const SystemState& state,
                       const IntegratorConfig& config) {
    auto [dn, dm] = rhs(spec, state, config.omega);
    SystemState next;
    next.n = state.n + config.dt * dn;
    next.m = state.m + config.dt * dm;
    next.t = state.t + config.dt;
    for (int i = 0; i < spec.n_species; ++i)
        if (next.n(i) <= config.extinction_threshold) next.n(i) = 0.0;
    return next;
}

Trajectory simulate(const SystemSpec& spec, const IntegratorConfig& config,
                    const SystemState& initial) {
    return integrate(spec, config, initial, nullptr);
}

Trajectory simulate_glvm(const SystemSpec& spec, const IntegratorConfig& config,
                         const SystemState& initial, const Eigen::VectorXd& m_frozen) {
    return integrate(spec, config, initial, &m_frozen);
}

Trajectory simulate_half_step(const SystemSpec& spec, const IntegratorConfig& config,
                              const SystemState& initial) {
    IntegratorConfig half = config;
    half.dt = config.dt / 2.0;
    half.sample_stride = config.sample_stride * 2;
    return simulate(spec, half, initial);
}

}  // namespace hoi
