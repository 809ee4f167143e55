#include "hoi/classify.hpp"

#include <cmath>
#include <stdexcept>

namespace hoi {

std::string outcome_kind_name(OutcomeKind k) {
    switch (k) {
        case OutcomeKind::FixedPoint: return "fixedpoint";
        case OutcomeKind::LimitCycle: return "limitcycle";
        case OutcomeKind::Unbounded: return "unbounded";
        case OutcomeKind::AllExtinct: return "allextinct";
    }
    return "unknown";
}

int coexistence_count(const Eigen::VectorXd& n) {
    int count = 0;
    for (int i = 0; i < n.size(); ++i)
        if (n(i) > 0.0) ++count;
    return count;
}

namespace {

std::size_t window_start(const Trajectory& traj, double window_fraction) {
    const std::size_t total = traj.samples.size();
    auto keep = static_cast<std::size_t>(std::ceil(total * window_fraction));
    if (keep < 1) keep = 1;
    return total > keep ? total - keep : 0;
}

// Strict three-point local maxima of n_A over [start, end); no smoothing.
std::vector<double> maxima_times(const Trajectory& traj, std::size_t start) {
    std::vector<double> times;
    for (std::size_t s = std::max<std::size_t>(start, 1) ; s + 1 < traj.samples.size(); ++s) {
        const double prev = traj.samples[s - 1].n(0);
        const double cur = traj.samples[s].n(0);
        const double next = traj.samples[s + 1].n(0);
        if (cur > prev && cur > next) times.push_back(traj.samples[s].t);
    }
    return times;
}

}  // namespace

OscillationMetrics oscillation_metrics(const Trajectory& traj, double window_fraction) {
    if (traj.samples.empty())
        throw std::invalid_argument("oscillation_metrics: empty trajectory");
    const std::size_t start = window_start(traj, window_fraction);

    OscillationMetrics metrics;
    Eigen::VectorXd lo = traj.samples[start].n, hi = traj.samples[start].n;
    for (std::size_t s = start; s < traj.samples.size(); ++s) {
        lo = lo.cwiseMin(traj.samples[s].n);
        hi = hi.cwiseMax(traj.samples[s].n);
    }
    metrics.amplitude = hi - lo;

    const auto peaks = maxima_times(traj, start);
    if (peaks.size() >= 2) {
        metrics.period = (peaks.back() - peaks.front()) / double(peaks.size() - 1);
        if (*metrics.period > 0.0) metrics.frequency = 1.0 / *metrics.period;
    }
    return metrics;
}

Outcome classify_trajectory(const Trajectory& traj, double amplitude_tol,
                            double window_fraction) {
    if (traj.samples.empty())
        throw std::invalid_argument("classify_trajectory: empty trajectory");

    Outcome outcome;
    outcome.final_n = traj.final_state.n;
    outcome.final_m = traj.final_state.m;
    outcome.survivors = coexistence_count(traj.final_state.n);

    switch (traj.termination) {
        case Termination::Diverged:
            outcome.kind = OutcomeKind::Unbounded;
            return outcome;
        case Termination::AllExtinct:
            outcome.kind = OutcomeKind::AllExtinct;
            return outcome;
        case Termination::Converged:
            outcome.kind = OutcomeKind::FixedPoint;
            return outcome;
        case Termination::HorizonReached:
            break;
    }

    const std::size_t start = window_start(traj, window_fraction);
    if (traj.samples.size() - start < 3)
        throw std::invalid_argument("classify_trajectory: trailing window holds fewer than 3 samples");

    const auto metrics = oscillation_metrics(traj, window_fraction);
    const auto peaks = maxima_times(traj, start);
    if (metrics.max_amplitude() > amplitude_tol && peaks.size() >= 3) {
        outcome.kind = OutcomeKind::LimitCycle;
        outcome.metrics = metrics;
    } else {
        outcome.kind = OutcomeKind::FixedPoint;
    }
    return outcome;
}

std::string regime_label_name(RegimeLabel r) {
    switch (r) {
        case RegimeLabel::Intransitive: return "intransitive";
        case RegimeLabel::Transitive: return "transitive";
        case RegimeLabel::Neutral: return "neutral";
    }
    return "unknown";
}

std::vector<std::pair<double, RegimeLabel>> regime_series(const SystemSpec& spec,
                                                          const Trajectory& traj) {
    if (spec.hois.size() != 1)
        throw std::invalid_argument("regime_series requires exactly one modified pair");
    std::vector<std::pair<double, RegimeLabel>> series;
    series.reserve(traj.samples.size());
    for (const auto& s : traj.samples) {
        const double m = s.m(0);
        RegimeLabel label = m > 0.0   ? RegimeLabel::Intransitive
                            : m < 0.0 ? RegimeLabel::Transitive
                                      : RegimeLabel::Neutral;
        series.emplace_back(s.t, label);
    }
    return series;
}

}  // namespace hoi
