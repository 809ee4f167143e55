#include "hoi/equilibria.hpp"

#include <doctest.h>

using namespace hoi;

namespace {

EquilibriumPoint point_of(std::initializer_list<double> n_vals, double m_val) {
    EquilibriumPoint p;
    p.n.resize(static_cast<int>(n_vals.size()));
    int i = 0;
    for (double v : n_vals) p.n(i++) = v;
    p.m = Eigen::VectorXd::Constant(1, m_val);
    return p;
}

}  // namespace

TEST_CASE("steady-state residual matches the vector field") {
    const auto spec = build_canonical(Topology::Intransitive, HOIKind::Symmetric, 2.0, -9.0);

    SUBCASE("the nullification point is an exact equilibrium") {
        const auto r =
            steady_state_residual(spec, 1.0, point_of({7.0 / 9, 11.0 / 9, 1.0 / 9}, 0.0));
        CHECK(r.lpNorm<Eigen::Infinity>() < 1e-14);
    }
    SUBCASE("all-ones leaves only the modifier residual") {
        const auto r = steady_state_residual(spec, 1.0, point_of({1.0, 1.0, 1.0}, 1.0));
        CHECK(r.head(3).isZero(0.0));
        CHECK(r(3) == doctest::Approx(-9.0));
    }
    SUBCASE("omega scales the modifier component") {
        const auto p = point_of({1.0, 1.0, 1.0}, 1.0);
        const auto r1 = steady_state_residual(spec, 1.0, p);
        const auto r10 = steady_state_residual(spec, 10.0, p);
        CHECK(r10(3) == doctest::Approx(10.0 * r1(3)));
    }
}

TEST_CASE("closed-form equilibria") {
    SUBCASE("affected-first branch at beta = -2") {
        const auto p = closed_form_equilibrium(HOIKind::AsymAffectedFirst, -2.0);
        CHECK(p.n(0) == doctest::Approx(0.5));
        CHECK(p.n(1) == doctest::Approx(1.0));
        CHECK(p.n(2) == doctest::Approx(0.5));
        CHECK(p.m(0) == doctest::Approx(0.0));
    }
    SUBCASE("affected-second branch at beta = 2") {
        const auto p = closed_form_equilibrium(HOIKind::AsymAffectedSecond, 2.0);
        CHECK(p.n(0) == doctest::Approx(0.5));
        CHECK(p.n(1) == doctest::Approx(0.5));
        CHECK(p.n(2) == doctest::Approx(1.0));
        CHECK(p.m(0) == doctest::Approx(3.0));
    }
    SUBCASE("beta = 0 recovers the all-ones equilibrium on both branches") {
        for (auto kind : {HOIKind::AsymAffectedFirst, HOIKind::AsymAffectedSecond}) {
            const auto p = closed_form_equilibrium(kind, 0.0);
            CHECK(p.n.isApprox(Eigen::VectorXd::Ones(3)));
            CHECK(p.m(0) == doctest::Approx(1.0));
        }
    }
    SUBCASE("validity ranges") {
        CHECK_THROWS_AS(closed_form_equilibrium(HOIKind::AsymAffectedFirst, 2.0),
                        std::domain_error);
        CHECK_THROWS_AS(closed_form_equilibrium(HOIKind::AsymAffectedSecond, -2.0),
                        std::domain_error);
        CHECK_THROWS_AS(closed_form_equilibrium(HOIKind::Symmetric, 0.0),
                        std::invalid_argument);
    }
    SUBCASE("every in-range closed form annihilates the vector field") {
        for (int k = 0; k < 20; ++k) {
            const double beta_first = 1.9 - 0.4 * k;   // < 2
            const double beta_second = -1.9 + 0.4 * k; // > -2
            const auto first = closed_form_equilibrium(HOIKind::AsymAffectedFirst, beta_first);
            const auto spec_first = build_canonical(
                Topology::Intransitive, HOIKind::AsymAffectedFirst, 1.0, beta_first);
            CHECK(steady_state_residual(spec_first, 1.0, first).norm() < 1e-12);

            const auto second =
                closed_form_equilibrium(HOIKind::AsymAffectedSecond, beta_second);
            const auto spec_second = build_canonical(
                Topology::Intransitive, HOIKind::AsymAffectedSecond, 1.0, beta_second);
            CHECK(steady_state_residual(spec_second, 1.0, second).norm() < 1e-12);
        }
    }
}

TEST_CASE("Newton solver lands on the closed forms from the all-ones guess") {
    const auto guess = point_of({1.0, 1.0, 1.0}, 1.0);

    SUBCASE("affected-first at beta = -2") {
        const auto spec =
            build_canonical(Topology::Intransitive, HOIKind::AsymAffectedFirst, 1.0, -2.0);
        const auto p = solve_steady_state(spec, 1.0, guess);
        REQUIRE(p.converged);
        CHECK(p.n(0) == doctest::Approx(0.5).epsilon(1e-9));
        CHECK(p.n(1) == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(p.n(2) == doctest::Approx(0.5).epsilon(1e-9));
        CHECK(p.m(0) == doctest::Approx(0.0).epsilon(1e-9));
        CHECK(p.residual_norm < 1e-10);
    }
    SUBCASE("affected-second at beta = 2") {
        // From the all-ones guess the damped iteration drains into the
        // boundary root with A and B extinct; a guess in the interior
        // basin reaches the coexistence branch.
        const auto spec =
            build_canonical(Topology::Intransitive, HOIKind::AsymAffectedSecond, 1.0, 2.0);
        const auto p = solve_steady_state(spec, 1.0, point_of({0.6, 0.6, 1.0}, 2.5));
        REQUIRE(p.converged);
        CHECK(p.n(0) == doctest::Approx(0.5).epsilon(1e-9));
        CHECK(p.n(2) == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(p.m(0) == doctest::Approx(3.0).epsilon(1e-9));
    }
    SUBCASE("beta = 0 stays at all-ones") {
        const auto spec = build_canonical(Topology::Intransitive, HOIKind::Symmetric, 2.0, 0.0);
        const auto p = solve_steady_state(spec, 1.0, point_of({1.1, 0.9, 1.05}, 0.8));
        REQUIRE(p.converged);
        CHECK(p.n.isApprox(Eigen::VectorXd::Ones(3), 1e-9));
        CHECK(p.m(0) == doctest::Approx(1.0).epsilon(1e-9));
    }
    SUBCASE("the equilibrium location is independent of omega") {
        const auto spec =
            build_canonical(Topology::Intransitive, HOIKind::AsymAffectedFirst, 1.0, -2.0);
        const auto base = solve_steady_state(spec, 1.0, guess);
        for (double omega : {0.01, 100.0}) {
            const auto p = solve_steady_state(spec, omega, guess);
            REQUIRE(p.converged);
            CHECK((p.n - base.n).lpNorm<Eigen::Infinity>() < 1e-8);
            CHECK((p.m - base.m).lpNorm<Eigen::Infinity>() < 1e-8);
        }
    }
}

TEST_CASE("nullification bifurcation matches the elimination formula") {
    // Eliminating (n, m) by hand at m = 0 gives n_C = 1/(2 alpha^2 + 1),
    // so beta* = -(2 alpha^2 + 1).
    for (double alpha : {1.0, 1.5, 2.0}) {
        const auto result = nullification_bifurcation(alpha);
        CHECK(result.beta_star ==
              doctest::Approx(-(2.0 * alpha * alpha + 1.0)).epsilon(1e-10));
        CHECK(result.point.residual_norm < 1e-10);
        CHECK(result.point.m(0) == 0.0);
    }
    const auto at2 = nullification_bifurcation(2.0);
    CHECK(at2.beta_star == doctest::Approx(-9.0).epsilon(1e-10));
    CHECK(at2.point.n(0) == doctest::Approx(7.0 / 9).epsilon(1e-8));
    CHECK(at2.point.n(1) == doctest::Approx(11.0 / 9).epsilon(1e-8));
    CHECK(at2.point.n(2) == doctest::Approx(1.0 / 9).epsilon(1e-8));
}

TEST_CASE("Jacobian eigenvalues") {
    SUBCASE("the decoupled modifier contributes an exact -omega eigenvalue") {
        const auto spec = build_canonical(Topology::Intransitive, HOIKind::Symmetric, 2.0, 0.0);
        const double omega = 0.7;
        const auto report =
            jacobian_eigenvalues(spec, omega, point_of({1.0, 1.0, 1.0}, 1.0));
        bool found = false;
        for (int i = 0; i < report.eigenvalues.size(); ++i)
            if (std::abs(report.eigenvalues(i) - std::complex<double>(-omega, 0.0)) < 1e-6)
                found = true;
        CHECK(found);
    }
    SUBCASE("stability flips with modifier speed at the coexistence point") {
        const auto spec = build_canonical(Topology::Intransitive, HOIKind::Symmetric, 2.0, -3.0);
        const auto eq = solve_steady_state(spec, 1.0, point_of({0.6, 1.0, 0.6}, 0.1));
        REQUIRE(eq.converged);
        const auto slow = jacobian_eigenvalues(spec, 0.1, eq);
        const auto fast = jacobian_eigenvalues(spec, 1.0, eq);
        CHECK(slow.max_real_part < 0.0);
        CHECK(fast.max_real_part > 0.0);
    }
    SUBCASE("a non-equilibrium point is rejected") {
        const auto spec = build_canonical(Topology::Intransitive, HOIKind::Symmetric, 2.0, -3.0);
        CHECK_THROWS_AS(jacobian_eigenvalues(spec, 1.0, point_of({1.0, 1.0, 1.0}, 1.0)),
                        std::invalid_argument);
    }
}
