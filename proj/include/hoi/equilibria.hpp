#pragma once

#include "hoi/dynamics.hpp"

#include <Eigen/Core>

namespace hoi {

struct EquilibriumPoint {
    Eigen::VectorXd n;
    Eigen::VectorXd m;
    double residual_norm = 0.0;
    bool converged = true;
    bool negative_abundance = false;
};

struct StabilityReport {
    Eigen::VectorXcd eigenvalues;
    double max_real_part = 0.0;
};

struct BifurcationResult {
    double beta_star = 0.0;
    EquilibriumPoint point;
};

/// Stacked steady-state residual (dn; dm) at the point — the same vector
/// field the integrator steps.
Eigen::VectorXd steady_state_residual(const SystemSpec& spec, double omega,
                                      const EquilibriumPoint& point);

/// Damped Newton with a finite-difference Jacobian on the stacked (n, m)
/// vector. Steps are halved up to 30 times when the residual does not
/// decrease; gives up after 200 iterations (converged = false). Throws
/// on a singular Jacobian. A solution with a negative abundance is
/// returned flagged, not rejected.
EquilibriumPoint solve_steady_state(const SystemSpec& spec, double omega,
                                    const EquilibriumPoint& guess, double tol = 1e-10);

/// The alpha = 1 intransitive closed forms: for the asymmetric modification
/// of alpha_AB (AsymAffectedFirst) the equilibrium is
/// (2/(2-beta), 1, 2/(2-beta), m = (2+beta)/(2-beta)), valid for beta < 2;
/// for alpha_BA (AsymAffectedSecond) it is
/// (2/(2+beta), 2/(2+beta), 1, m = 1+beta), valid for beta > -2.
/// Outside the range growth is unbounded; throws std::domain_error.
EquilibriumPoint closed_form_equilibrium(HOIKind kind, double beta);

/// Locates the modifier-nullification point of the symmetric intransitive
/// system: solves the abundance steady state with m fixed at 0, then
/// beta_star = -1/n_C.
BifurcationResult nullification_bifurcation(double alpha);

/// Eigenvalues of the central finite-difference Jacobian (relative step
/// 1e-6) of the full (n, m) field at an equilibrium. Throws when the point
/// is not an equilibrium to `residual_tol`.
StabilityReport jacobian_eigenvalues(const SystemSpec& spec, double omega,
                                     const EquilibriumPoint& point,
                                     double residual_tol = 1e-6);

}  // namespace hoi
