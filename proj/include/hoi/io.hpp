#pragma once

#include "hoi/equilibria.hpp"
#include "hoi/sweep.hpp"

#include <nlohmann/json.hpp>

#include <iosfwd>
#include <string>

namespace hoi {

/// Decimal text with 17 significant digits (shortest form via %.17g).
std::string format_double(double value);

/// Header t,n_A,...,m_<i><j> per HOISpec; one row per sample; trailing
/// comment line `# termination=<reason>`.
void write_trajectory_csv(std::ostream& out, const SystemSpec& spec,
                          const Trajectory& traj);

/// Header beta,omega,kind,survivors,amplitude,period; one row per cell.
void write_grid_csv(std::ostream& out, const OutcomeGrid& grid);

/// Header alpha_ab,alpha_other,xi.
void write_xi_csv(std::ostream& out, const XiMap& map);

/// Header topology,hoi_kind,distinguished_pair,oscillates.
void write_existence_csv(std::ostream& out, const std::vector<ExistenceRow>& rows);

nlohmann::json outcome_to_json(const Outcome& outcome);
nlohmann::json equilibrium_to_json(const EquilibriumPoint& point,
                                   const StabilityReport* stability = nullptr);
nlohmann::json bifurcation_to_json(const BifurcationResult& result);

}  // namespace hoi
