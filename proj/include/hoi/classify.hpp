#pragma once

#include "hoi/dynamics.hpp"

#include <optional>

namespace hoi {

enum class OutcomeKind { FixedPoint, LimitCycle, Unbounded, AllExtinct };
std::string outcome_kind_name(OutcomeKind k);

/// Trailing-window oscillation measurements. Period is the mean spacing of
/// strict local maxima of n_A on the sampled data; undefined with fewer
/// than two maxima.
struct OscillationMetrics {
    Eigen::VectorXd amplitude;  // per-species peak-to-trough
    std::optional<double> period;
    std::optional<double> frequency;
    double max_amplitude() const { return amplitude.size() ? amplitude.maxCoeff() : 0.0; }
};

struct Outcome {
    OutcomeKind kind = OutcomeKind::FixedPoint;
    int survivors = 0;
    std::optional<OscillationMetrics> metrics;
    Eigen::VectorXd final_n;
    Eigen::VectorXd final_m;
};

/// Number of strictly positive abundances.
int coexistence_count(const Eigen::VectorXd& n);

/// Peak-to-trough amplitudes and n_A period over the trailing
/// window_fraction of the samples.
OscillationMetrics oscillation_metrics(const Trajectory& traj,
                                       double window_fraction = 0.2);

/// Maps a trajectory to its categorical outcome. Diverged -> Unbounded,
/// all-extinct -> AllExtinct, Converged -> FixedPoint; a horizon run is a
/// LimitCycle when the trailing-window amplitude exceeds amplitude_tol and
/// n_A shows at least three local maxima, otherwise a FixedPoint (slow
/// transient). Throws std::invalid_argument when the window holds fewer
/// than 3 samples.
Outcome classify_trajectory(const Trajectory& traj, double amplitude_tol = 1e-3,
                            double window_fraction = 0.2);

/// Network regime implied by the sign of the modifier on the single
/// modified pair: the effective coefficient keeps its original sign (m > 0),
/// is reversed (m < 0), or nullified (m = 0).
enum class RegimeLabel { Intransitive, Transitive, Neutral };
std::string regime_label_name(RegimeLabel r);

/// Per-sample regime labels. Requires a spec with exactly one modified pair.
std::vector<std::pair<double, RegimeLabel>> regime_series(const SystemSpec& spec,
                                                          const Trajectory& traj);

}  // namespace hoi
