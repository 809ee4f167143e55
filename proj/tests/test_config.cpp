#include "hoi/config.hpp"

#include <doctest.h>

using namespace hoi;

TEST_CASE("an empty document yields the defaults") {
    const auto config = parse_config(std::string("{}"));
    CHECK(config.topology == Topology::Intransitive);
    CHECK(config.hoi == HOIKind::Symmetric);
    CHECK(config.alpha_ab == 2.0);
    CHECK(config.beta == -3.0);
    CHECK(config.omega == 1.0);
    CHECK(config.dt == 3e-3);
    CHECK(config.horizon == 1e4);
    CHECK(config.extinction_threshold == 1e-7);
    CHECK(config.convergence_tol == 1e-4);
    CHECK(config.beta_count == 27);
    CHECK(config.omega_count == 17);
    CHECK(config.omega_log);
}

TEST_CASE("explicit keys override single fields") {
    const auto config =
        parse_config(std::string(R"({"extinction_threshold": 1e-70, "omega": 0.1})"));
    CHECK(config.extinction_threshold == 1e-70);
    CHECK(config.omega == 0.1);
    CHECK(config.dt == 3e-3);
}

TEST_CASE("the alpha shorthand seeds all three pairs before specific keys") {
    const auto config =
        parse_config(std::string(R"({"alpha": 1.5, "alpha_bc": 0.5})"));
    CHECK(config.alpha_ab == 1.5);
    CHECK(config.alpha_ac == 1.5);
    CHECK(config.alpha_bc == 0.5);
}

TEST_CASE("validation names the offending path") {
    CHECK_THROWS_WITH_AS(parse_config(std::string(R"({"dt": -1})")),
                         "$.dt: must be positive", std::invalid_argument);
    CHECK_THROWS_AS(parse_config(std::string(R"({"window_fraction": 1.5})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_config(std::string(R"({"topology": "rock-paper"})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_config(std::string(R"({"beta_count": 0})")),
                    std::invalid_argument);
}

TEST_CASE("unknown keys are rejected, not ignored") {
    CHECK_THROWS_AS(parse_config(std::string(R"({"timestep": 0.001})")),
                    std::invalid_argument);
}

TEST_CASE("malformed JSON is a validation error") {
    CHECK_THROWS_AS(parse_config(std::string("{")), std::invalid_argument);
}

TEST_CASE("serialized configs round-trip exactly") {
    RunConfig config;
    config.command = "simulate";
    config.topology = Topology::TransitiveC;
    config.hoi = HOIKind::AsymAffectedSecond;
    config.alpha_ab = 1.5;
    config.beta = 42.0;
    config.omega = 1e-3;
    config.extinction_threshold = 1e-70;
    config.probe_alphas = {0.5, 3.0};
    config.workers = 4;

    const auto doc = config_to_json(config);
    const auto restored = parse_config(doc);
    CHECK(restored.command == config.command);
    CHECK(restored.topology == config.topology);
    CHECK(restored.hoi == config.hoi);
    CHECK(restored.alpha_ab == config.alpha_ab);
    CHECK(restored.alpha_ac == config.alpha_ac);
    CHECK(restored.beta == config.beta);
    CHECK(restored.omega == config.omega);
    CHECK(restored.extinction_threshold == config.extinction_threshold);
    CHECK(restored.probe_alphas == config.probe_alphas);
    CHECK(restored.workers == config.workers);
    // And the serialization itself is stable.
    CHECK(config_to_json(restored) == doc);
}

TEST_CASE("derived helpers reflect the configuration") {
    RunConfig config;
    config.topology = Topology::TransitiveB;
    config.hoi = HOIKind::AsymAffectedFirst;
    config.alpha_ab = 1.0;
    config.alpha_ac = 2.0;
    config.alpha_bc = 3.0;
    config.beta = -5.0;

    const auto spec = config.make_spec();
    CHECK(spec.alpha(0, 1) == 1.0);
    CHECK(spec.hois[0].modifier == 1);
    CHECK(spec.hois[0].beta == -5.0);
    CHECK_FALSE(spec.hois[0].symmetric);

    config.horizon_cap = 0.0;
    const auto integrator = config.make_integrator();
    CHECK(integrator.horizon_cap == std::numeric_limits<double>::infinity());
    CHECK(integrator.dt == config.dt);

    const auto beta_axis = config.make_beta_axis();
    CHECK(beta_axis.lo == -80.0);
    CHECK(beta_axis.count == 27);
    CHECK_FALSE(beta_axis.log_spaced);
    const auto omega_axis = config.make_omega_axis();
    CHECK(omega_axis.log_spaced);

    CHECK(config.resolved_workers() >= 1);
}
