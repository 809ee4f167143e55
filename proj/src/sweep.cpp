#include "hoi/sweep.hpp"

#include <array>
#include <atomic>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <thread>

namespace hoi {

double GridAxis::value(int index) const {
    if (index < 0 || index >= count) throw std::out_of_range("axis index out of range");
    if (log_spaced) return lo * std::pow(hi / lo, double(index) / double(count));
    return lo + (hi - lo) * double(index) / double(count);
}

void GridAxis::validate() const {
    if (count < 1) throw std::invalid_argument("axis " + name + ": count must be >= 1");
    if (!(lo < hi)) throw std::invalid_argument("axis " + name + ": lo must be < hi");
    if (log_spaced && !(lo > 0.0))
        throw std::invalid_argument("axis " + name + ": logarithmic axis requires lo > 0");
}

namespace {

void run_cells(int cell_count, int workers, const std::function<void(int)>& work) {
    if (workers < 1) workers = 1;
    if (workers == 1) {
        for (int c = 0; c < cell_count; ++c) work(c);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&]() {
            for (int c = next.fetch_add(1); c < cell_count; c = next.fetch_add(1))
                work(c);
        });
    }
    for (auto& t : pool) t.join();
}

bool any_limit_cycle(const OutcomeGrid& grid) {
    for (const auto& cell : grid.cells)
        if (cell.ok() && cell.outcome.kind == OutcomeKind::LimitCycle) return true;
    return false;
}

GridAxis mirrored_beta_axis(const GridAxis& axis) {
    GridAxis flipped = axis;
    flipped.lo = 0.0;
    flipped.hi = -axis.lo;
    return flipped;
}

// Distinguished pair index -> (alpha_ab, alpha_ac, alpha_bc) magnitudes.
std::array<double, 3> pair_magnitudes(int pair, double distinguished, double shared) {
    std::array<double, 3> mags{shared, shared, shared};
    mags[static_cast<std::size_t>(pair)] = distinguished;
    return mags;
}

}  // namespace

OutcomeGrid sweep_beta_omega(const SystemSpec& spec, const GridAxis& beta_axis,
                             const GridAxis& omega_axis, const IntegratorConfig& config,
                             const ClassifyConfig& classify, int workers) {
    beta_axis.validate();
    omega_axis.validate();
    {
        const auto violations = validate(spec);
        if (!violations.empty())
            throw std::invalid_argument("sweep_beta_omega: invalid spec: " + violations.front());
    }

    OutcomeGrid grid;
    grid.beta_axis = beta_axis;
    grid.omega_axis = omega_axis;
    grid.cells.resize(static_cast<std::size_t>(beta_axis.count) * omega_axis.count);

    run_cells(static_cast<int>(grid.cells.size()), workers, [&](int c) {
        const int b = c / omega_axis.count;
        const int w = c % omega_axis.count;
        SystemSpec local = spec;
        for (auto& hoi : local.hois) hoi.beta = beta_axis.value(b);
        IntegratorConfig cell_config = config;
        cell_config.omega = omega_axis.value(w);
        GridCell& cell = grid.cells[static_cast<std::size_t>(c)];
        try {
            const auto traj = simulate(local, cell_config);
            cell.outcome = classify_trajectory(traj, classify.amplitude_tol,
                                               classify.window_fraction);
        } catch (const std::exception& e) {
            cell.error = e.what();
        }
    });
    return grid;
}

double oscillation_probability(const OutcomeGrid& grid) {
    if (grid.cells.empty()) throw std::invalid_argument("empty grid");
    std::size_t cycles = 0;
    for (const auto& cell : grid.cells)
        if (cell.ok() && cell.outcome.kind == OutcomeKind::LimitCycle) ++cycles;
    return double(cycles) / double(grid.cells.size());
}

XiMap xi_map(Topology topology, HOIKind kind, const GridAxis& alpha_ab_axis,
             const GridAxis& alpha_other_axis, const GridAxis& beta_axis,
             const GridAxis& omega_axis, const IntegratorConfig& config,
             const ClassifyConfig& classify, int workers) {
    alpha_ab_axis.validate();
    alpha_other_axis.validate();

    XiMap map;
    map.alpha_ab_axis = alpha_ab_axis;
    map.alpha_other_axis = alpha_other_axis;
    map.xi.resize(alpha_ab_axis.count, alpha_other_axis.count);

    for (int a = 0; a < alpha_ab_axis.count; ++a) {
        for (int o = 0; o < alpha_other_axis.count; ++o) {
            const double ab = alpha_ab_axis.value(a);
            const double other = alpha_other_axis.value(o);
            const SystemSpec spec = build_canonical(topology, kind, ab, other, other);
            const auto grid =
                sweep_beta_omega(spec, beta_axis, omega_axis, config, classify, workers);
            map.xi(a, o) = oscillation_probability(grid);
        }
    }
    return map;
}

std::string distinguished_pair_name(int pair) {
    switch (pair) {
        case 0: return "AB";
        case 1: return "AC";
        case 2: return "BC";
    }
    throw std::invalid_argument("distinguished pair must be 0, 1 or 2");
}

std::vector<ExistenceRow> existence_table(const std::vector<double>& probe_alphas,
                                          const std::vector<double>& shared_alphas,
                                          const GridAxis& beta_axis,
                                          const GridAxis& omega_axis,
                                          const IntegratorConfig& config,
                                          const ClassifyConfig& classify, int workers) {
    if (probe_alphas.empty() || shared_alphas.empty())
        throw std::invalid_argument("existence_table: empty probe set");

    const Topology topologies[] = {Topology::TransitiveA, Topology::TransitiveB,
                                   Topology::TransitiveC, Topology::Intransitive};
    const HOIKind kinds[] = {HOIKind::Symmetric, HOIKind::AsymAffectedFirst,
                             HOIKind::AsymAffectedSecond};

    std::vector<ExistenceRow> rows;
    for (Topology topology : topologies) {
        for (HOIKind kind : kinds) {
            const GridAxis row_beta =
                kind == HOIKind::AsymAffectedSecond ? mirrored_beta_axis(beta_axis)
                                                    : beta_axis;
            for (int pair = 0; pair < 3; ++pair) {
                bool oscillates = false;
                for (double probe : probe_alphas) {
                    for (double shared : shared_alphas) {
                        const auto mags = pair_magnitudes(pair, probe, shared);
                        const SystemSpec spec =
                            build_canonical(topology, kind, mags[0], mags[1], mags[2]);
                        const auto grid = sweep_beta_omega(spec, row_beta, omega_axis,
                                                           config, classify, workers);
                        if (any_limit_cycle(grid)) {
                            oscillates = true;
                            break;
                        }
                    }
                    if (oscillates) break;
                }
                rows.push_back({topology, kind, pair, oscillates});
            }
        }
    }
    return rows;
}

double min_alpha_for_oscillation(Topology topology, HOIKind kind,
                                 const GridAxis& beta_axis, const GridAxis& omega_axis,
                                 const IntegratorConfig& config, double alpha_lo,
                                 double alpha_hi, double tol,
                                 const ClassifyConfig& classify, int workers) {
    if (!(alpha_lo < alpha_hi) || !(tol > 0.0))
        throw std::invalid_argument("min_alpha_for_oscillation: bad bracket or tol");

    const auto oscillates = [&](double alpha) {
        const SystemSpec spec = build_canonical(topology, kind, alpha, alpha, alpha);
        const auto grid =
            sweep_beta_omega(spec, beta_axis, omega_axis, config, classify, workers);
        return any_limit_cycle(grid);
    };

    if (oscillates(alpha_lo))
        throw std::invalid_argument(
            "invalid bracket: oscillations already occur at the lower endpoint");
    if (!oscillates(alpha_hi))
        throw std::invalid_argument(
            "invalid bracket: no oscillations at the upper endpoint");

    double lo = alpha_lo, hi = alpha_hi;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        (oscillates(mid) ? hi : lo) = mid;
    }
    return hi;
}

}  // namespace hoi
