#pragma once

#include "hoi/classify.hpp"

#include <string>
#include <vector>

namespace hoi {

/// Half-open parameter axis [lo, hi) sampled at the low edge of each of
/// `count` equal cells, linearly or logarithmically.
struct GridAxis {
    std::string name;
    double lo = 0.0;
    double hi = 1.0;
    int count = 1;
    bool log_spaced = false;

    double value(int index) const;
    void validate() const;  // throws std::invalid_argument
};

struct ClassifyConfig {
    double amplitude_tol = 1e-3;
    double window_fraction = 0.2;
};

/// One sweep cell: outcome or, if the simulation/classification threw, the
/// recorded error message (never aborts the grid).
struct GridCell {
    Outcome outcome;
    std::string error;
    bool ok() const { return error.empty(); }
};

struct OutcomeGrid {
    GridAxis beta_axis;
    GridAxis omega_axis;
    std::vector<GridCell> cells;  // row-major: index = b * omega_count + w

    const GridCell& at(int beta_index, int omega_index) const {
        return cells[static_cast<std::size_t>(beta_index) * omega_axis.count + omega_index];
    }
};

struct XiMap {
    GridAxis alpha_ab_axis;
    GridAxis alpha_other_axis;
    Eigen::MatrixXd xi;  // (alpha_ab index, alpha_other index)
};

struct ExistenceRow {
    Topology topology;
    HOIKind kind;
    int distinguished_pair;  // 0 = AB, 1 = AC, 2 = BC
    bool oscillates;
};
std::string distinguished_pair_name(int pair);

/// Simulates and classifies one cell per (beta, omega) grid point from the
/// standard initial state. Cells are independent and are distributed over
/// `workers` threads; results land in preallocated slots so the grid is
/// identical for any worker count.
OutcomeGrid sweep_beta_omega(const SystemSpec& spec, const GridAxis& beta_axis,
                             const GridAxis& omega_axis,
                             const IntegratorConfig& config,
                             const ClassifyConfig& classify = {}, int workers = 1);

/// Fraction of limit-cycle cells.
double oscillation_probability(const OutcomeGrid& grid);

/// Per-pixel oscillation probability over (alpha_AB, alpha_AC = alpha_BC),
/// each pixel evaluated on the given inner (beta, omega) grid.
XiMap xi_map(Topology topology, HOIKind kind, const GridAxis& alpha_ab_axis,
             const GridAxis& alpha_other_axis, const GridAxis& beta_axis,
             const GridAxis& omega_axis, const IntegratorConfig& config,
             const ClassifyConfig& classify = {}, int workers = 1);

/// All 36 (topology, HOI kind, distinguished pair) combinations; a row
/// oscillates when any probed pixel's inner grid holds a limit-cycle cell.
/// The distinguished pair's magnitude runs over probe_alphas and the shared
/// pair over shared_alphas. For AsymAffectedSecond rows the beta axis is
/// mirrored to [0, -lo).
std::vector<ExistenceRow> existence_table(const std::vector<double>& probe_alphas,
                                          const std::vector<double>& shared_alphas,
                                          const GridAxis& beta_axis,
                                          const GridAxis& omega_axis,
                                          const IntegratorConfig& config,
                                          const ClassifyConfig& classify = {},
                                          int workers = 1);

/// Bisection on the identical pairwise magnitude for the smallest value
/// whose inner grid oscillates. The bracket must straddle the onset.
double min_alpha_for_oscillation(Topology topology, HOIKind kind,
                                 const GridAxis& beta_axis, const GridAxis& omega_axis,
                                 const IntegratorConfig& config, double alpha_lo,
                                 double alpha_hi, double tol,
                                 const ClassifyConfig& classify = {}, int workers = 1);

}  // namespace hoi
