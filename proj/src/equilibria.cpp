#include "hoi/equilibria.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <functional>
#include <stdexcept>

namespace hoi {

namespace {

using ResidualFn = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;

Eigen::MatrixXd fd_jacobian(const ResidualFn& f, const Eigen::VectorXd& x,
                            const Eigen::VectorXd& f0) {
    const int dim = static_cast<int>(x.size());
    Eigen::MatrixXd jac(f0.size(), dim);
    for (int c = 0; c < dim; ++c) {
        const double step = std::sqrt(1e-16) * std::max(1.0, std::abs(x(c)));
        Eigen::VectorXd xp = x;
        xp(c) += step;
        jac.col(c) = (f(xp) - f0) / step;
    }
    return jac;
}

struct NewtonResult {
    Eigen::VectorXd x;
    double residual_norm;
    bool converged;
};

NewtonResult damped_newton(const ResidualFn& f, Eigen::VectorXd x, double tol,
                           int max_iter = 200, int max_halvings = 30) {
    Eigen::VectorXd fx = f(x);
    double norm = fx.lpNorm<Eigen::Infinity>();
    for (int iter = 0; iter < max_iter; ++iter) {
        if (norm < tol) return {x, norm, true};
        Eigen::MatrixXd jac = fd_jacobian(f, x, fx);
        Eigen::FullPivLU<Eigen::MatrixXd> lu(jac);
        if (!lu.isInvertible())
            throw std::runtime_error("solve_steady_state: singular Jacobian at iterate");
        Eigen::VectorXd step = lu.solve(fx);

        double scale = 1.0;
        Eigen::VectorXd x_next;
        Eigen::VectorXd f_next;
        double norm_next = norm;
        for (int halving = 0; halving <= max_halvings; ++halving) {
            x_next = x - scale * step;
            f_next = f(x_next);
            norm_next = f_next.lpNorm<Eigen::Infinity>();
            if (std::isfinite(norm_next) && norm_next < norm) break;
            scale *= 0.5;
        }
        x = x_next;
        fx = f_next;
        norm = norm_next;
    }
    return {x, norm, norm < tol};
}

}  // namespace

Eigen::VectorXd steady_state_residual(const SystemSpec& spec, double omega,
                                      const EquilibriumPoint& point) {
    auto [dn, dm] = rhs(spec, {point.n, point.m, 0.0}, omega);
    Eigen::VectorXd res(dn.size() + dm.size());
    res << dn, dm;
    return res;
}

EquilibriumPoint solve_steady_state(const SystemSpec& spec, double omega,
                                    const EquilibriumPoint& guess, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
    const int N = spec.n_species;
    const int H = static_cast<int>(spec.hois.size());
    if (guess.n.size() != N || guess.m.size() != H)
        throw std::invalid_argument("guess has wrong dimensions");
    if (!guess.n.allFinite() || !guess.m.allFinite())
        throw std::invalid_argument("guess must be finite");

    ResidualFn f = [&](const Eigen::VectorXd& x) {
        EquilibriumPoint p;
        p.n = x.head(N);
        p.m = x.tail(H);
        return steady_state_residual(spec, omega, p);
    };
    Eigen::VectorXd x0(N + H);
    x0 << guess.n, guess.m;

    const auto result = damped_newton(f, x0, tol);
    EquilibriumPoint point;
    point.n = result.x.head(N);
    point.m = result.x.tail(H);
    point.residual_norm = result.residual_norm;
    point.converged = result.converged;
    point.negative_abundance = (point.n.minCoeff() < 0.0);
    return point;
}

EquilibriumPoint closed_form_equilibrium(HOIKind kind, double beta) {
    EquilibriumPoint point;
    point.n.resize(3);
    point.m.resize(1);
    switch (kind) {
        case HOIKind::AsymAffectedFirst:
            if (beta >= 2.0)
                throw std::domain_error(
                    "no equilibrium for beta >= 2: growth is unbounded");
            point.n << 2.0 / (2.0 - beta), 1.0, 2.0 / (2.0 - beta);
            point.m << (2.0 + beta) / (2.0 - beta);
            break;
        case HOIKind::AsymAffectedSecond:
            if (beta <= -2.0)
                throw std::domain_error(
                    "no equilibrium for beta <= -2: growth is unbounded");
            point.n << 2.0 / (2.0 + beta), 2.0 / (2.0 + beta), 1.0;
            point.m << 1.0 + beta;
            break;
        case HOIKind::Symmetric:
            throw std::invalid_argument(
                "closed_form_equilibrium covers the asymmetric cases only");
    }
    return point;
}

BifurcationResult nullification_bifurcation(double alpha) {
    if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
    SystemSpec spec = build_canonical(Topology::Intransitive, HOIKind::Symmetric, alpha);

    // Abundance subsystem with the modifier pinned at zero.
    const Eigen::VectorXd m_zero = Eigen::VectorXd::Zero(1);
    ResidualFn f = [&](const Eigen::VectorXd& n) { return glvm_rhs(spec, n, m_zero); };

    const auto result = damped_newton(f, Eigen::VectorXd::Ones(3), 1e-12);
    if (!result.converged || result.x.minCoeff() <= 0.0)
        throw std::runtime_error(
            "nullification_bifurcation: no positive-abundance solution found");

    BifurcationResult out;
    out.point.n = result.x;
    out.point.m = m_zero;
    out.point.residual_norm = result.residual_norm;
    out.beta_star = -1.0 / result.x(2);  // modifier equilibrium 1 + beta n_C = 0
    return out;
}

StabilityReport jacobian_eigenvalues(const SystemSpec& spec, double omega,
                                     const EquilibriumPoint& point,
                                     double residual_tol) {
    const Eigen::VectorXd res = steady_state_residual(spec, omega, point);
    if (res.lpNorm<Eigen::Infinity>() >= residual_tol)
        throw std::invalid_argument(
            "jacobian_eigenvalues: point is not an equilibrium to the given tolerance");

    const int N = spec.n_species;
    const int H = static_cast<int>(spec.hois.size());
    ResidualFn f = [&](const Eigen::VectorXd& x) {
        EquilibriumPoint p;
        p.n = x.head(N);
        p.m = x.tail(H);
        return steady_state_residual(spec, omega, p);
    };
    Eigen::VectorXd x(N + H);
    x << point.n, point.m;

    Eigen::MatrixXd jac(N + H, N + H);
    for (int c = 0; c < N + H; ++c) {
        const double step = 1e-6 * std::max(1.0, std::abs(x(c)));
        Eigen::VectorXd xp = x, xm = x;
        xp(c) += step;
        xm(c) -= step;
        jac.col(c) = (f(xp) - f(xm)) / (2.0 * step);
    }

    Eigen::EigenSolver<Eigen::MatrixXd> solver(jac);
    StabilityReport report;
    report.eigenvalues = solver.eigenvalues();
    report.max_real_part = report.eigenvalues.real().maxCoeff();
    return report;
}

}  // namespace hoi
