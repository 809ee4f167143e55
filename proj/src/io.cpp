#include "hoi/io.hpp"

#include <cstdio>
#include <ostream>

namespace hoi {

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

void write_trajectory_csv(std::ostream& out, const SystemSpec& spec,
                          const Trajectory& traj) {
    out << "t";
    for (int i = 0; i < spec.n_species; ++i) out << ",n_" << species_label(i);
    for (const auto& hoi : spec.hois)
        out << ",m_" << species_label(hoi.affected) << species_label(hoi.affecting);
    out << "\n";
    for (const auto& s : traj.samples) {
        out << format_double(s.t);
        for (int i = 0; i < s.n.size(); ++i) out << "," << format_double(s.n(i));
        for (int h = 0; h < s.m.size(); ++h) out << "," << format_double(s.m(h));
        out << "\n";
    }
    out << "# termination=" << termination_name(traj.termination) << "\n";
}

void write_grid_csv(std::ostream& out, const OutcomeGrid& grid) {
    out << "beta,omega,kind,survivors,amplitude,period\n";
    for (int b = 0; b < grid.beta_axis.count; ++b) {
        for (int w = 0; w < grid.omega_axis.count; ++w) {
            const auto& cell = grid.at(b, w);
            out << format_double(grid.beta_axis.value(b)) << ","
                << format_double(grid.omega_axis.value(w)) << ",";
            if (!cell.ok()) {
                out << "error,0,,\n";
                continue;
            }
            out << outcome_kind_name(cell.outcome.kind) << "," << cell.outcome.survivors
                << ",";
            if (cell.outcome.metrics) {
                out << format_double(cell.outcome.metrics->max_amplitude()) << ",";
                if (cell.outcome.metrics->period)
                    out << format_double(*cell.outcome.metrics->period);
            } else {
                out << ",";
            }
            out << "\n";
        }
    }
}

void write_xi_csv(std::ostream& out, const XiMap& map) {
    out << "alpha_ab,alpha_other,xi\n";
    for (int a = 0; a < map.alpha_ab_axis.count; ++a)
        for (int o = 0; o < map.alpha_other_axis.count; ++o)
            out << format_double(map.alpha_ab_axis.value(a)) << ","
                << format_double(map.alpha_other_axis.value(o)) << ","
                << format_double(map.xi(a, o)) << "\n";
}

void write_existence_csv(std::ostream& out, const std::vector<ExistenceRow>& rows) {
    out << "topology,hoi_kind,distinguished_pair,oscillates\n";
    for (const auto& row : rows)
        out << topology_name(row.topology) << "," << hoi_kind_name(row.kind) << ","
            << distinguished_pair_name(row.distinguished_pair) << ","
            << (row.oscillates ? "yes" : "no") << "\n";
}

namespace {

nlohmann::json vector_to_json(const Eigen::VectorXd& v) {
    nlohmann::json arr = nlohmann::json::array();
    for (int i = 0; i < v.size(); ++i) arr.push_back(v(i));
    return arr;
}

}  // namespace

nlohmann::json outcome_to_json(const Outcome& outcome) {
    nlohmann::json j;
    j["kind"] = outcome_kind_name(outcome.kind);
    j["survivors"] = outcome.survivors;
    if (outcome.metrics) {
        j["amplitude"] = outcome.metrics->max_amplitude();
        if (outcome.metrics->period)
            j["period"] = *outcome.metrics->period;
        else
            j["period"] = nullptr;
    } else {
        j["amplitude"] = nullptr;
        j["period"] = nullptr;
    }
    j["final_n"] = vector_to_json(outcome.final_n);
    j["final_m"] = vector_to_json(outcome.final_m);
    return j;
}

nlohmann::json equilibrium_to_json(const EquilibriumPoint& point,
                                   const StabilityReport* stability) {
    nlohmann::json j;
    j["n"] = vector_to_json(point.n);
    j["m"] = vector_to_json(point.m);
    j["residual"] = point.residual_norm;
    if (stability) {
        nlohmann::json eigs = nlohmann::json::array();
        for (int i = 0; i < stability->eigenvalues.size(); ++i)
            eigs.push_back({{"re", stability->eigenvalues(i).real()},
                            {"im", stability->eigenvalues(i).imag()}});
        j["eigenvalues"] = eigs;
        j["max_real_part"] = stability->max_real_part;
    }
    return j;
}

nlohmann::json bifurcation_to_json(const BifurcationResult& result) {
    nlohmann::json j;
    j["beta_star"] = result.beta_star;
    j["n"] = vector_to_json(result.point.n);
    j["m"] = vector_to_json(result.point.m);
    j["residual"] = result.point.residual_norm;
    return j;
}

}  // namespace hoi
