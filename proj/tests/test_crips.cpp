#include "doctest.h"

#include <cfloat>
#include <cmath>
#include <random>

#include "crips/core.hpp"
#include "crips/crips.hpp"
#include "crips/objectives.hpp"

using namespace crips;

namespace {

double ref_uniform(std::mt19937_64& engine) {
    return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

SwarmState two_particle_swarm(Vector a, Vector b, Vector va, Vector vb) {
    SwarmState swarm;
    swarm.particles.resize(2);
    swarm.particles[0].position = std::move(a);
    swarm.particles[0].velocity = std::move(va);
    swarm.particles[1].position = std::move(b);
    swarm.particles[1].velocity = std::move(vb);
    for (auto& p : swarm.particles) {
        p.best_position = p.position;
        p.best_fitness = 0.0;
    }
    return swarm;
}

}  // namespace

TEST_CASE("velocity norm metric is zero for a motionless swarm") {
    SwarmState swarm = two_particle_swarm({1.0, 2.0}, {3.0, 4.0}, {0.0, 0.0}, {0.0, 0.0});
    CHECK(swarm_metric(swarm, Metric::VelocityNorm) == 0.0);
}

TEST_CASE("centroid and pairwise metrics match forced two-particle geometry") {
    SwarmState swarm = two_particle_swarm({0.0, 0.0}, {2.0, 0.0}, {0.0, 0.0}, {0.0, 0.0});
    CHECK(swarm_metric(swarm, Metric::CentroidDistance) == 1.0);
    CHECK(swarm_metric(swarm, Metric::InterparticleDistance) == 2.0);
}

TEST_CASE("centroid metric matches a brute-force recomputation") {
    RunConfig config;
    config.dimension = 3;
    config.particle_count = 5;
    RngStream rng(61);
    SwarmState swarm = initialize_swarm(config, rng);

    Vector centroid(3, 0.0);
    for (const auto& p : swarm.particles) {
        for (int d = 0; d < 3; d++) centroid[d] += p.position[d];
    }
    for (int d = 0; d < 3; d++) centroid[d] /= 5.0;
    double total = 0.0;
    for (const auto& p : swarm.particles) {
        double sq = 0.0;
        for (int d = 0; d < 3; d++) {
            double diff = p.position[d] - centroid[d];
            sq += diff * diff;
        }
        total += std::sqrt(sq);
    }
    CHECK(swarm_metric(swarm, Metric::CentroidDistance) == total / 5.0);
}

TEST_CASE("velocity norm metric matches a brute-force recomputation") {
    RunConfig config;
    config.dimension = 4;
    config.particle_count = 6;
    RngStream rng(62);
    SwarmState swarm = initialize_swarm(config, rng);

    double total = 0.0;
    for (const auto& p : swarm.particles) {
        double sq = 0.0;
        for (double v : p.velocity) sq += v * v;
        total += std::sqrt(sq);
    }
    CHECK(swarm_metric(swarm, Metric::VelocityNorm) == total / 6.0);
}

TEST_CASE("pairwise metric averages over unordered pairs") {
    SwarmState swarm;
    swarm.particles.resize(3);
    swarm.particles[0].position = {0.0};
    swarm.particles[1].position = {3.0};
    swarm.particles[2].position = {6.0};
    for (auto& p : swarm.particles) {
        p.velocity = {0.0};
        p.best_position = p.position;
        p.best_fitness = 0.0;
    }
    // Pair distances 3, 6, 3 over three unordered pairs.
    CHECK(swarm_metric(swarm, Metric::InterparticleDistance) == doctest::Approx(4.0));
}

TEST_CASE("diversity metrics are non-negative and reject an empty swarm") {
    SwarmState empty;
    CHECK_THROWS_AS(swarm_metric(empty, Metric::VelocityNorm), ArgumentError);

    RunConfig config;
    config.dimension = 2;
    config.particle_count = 7;
    RngStream rng(63);
    SwarmState swarm = initialize_swarm(config, rng);
    for (Metric m : {Metric::VelocityNorm, Metric::CentroidDistance, Metric::InterparticleDistance}) {
        CHECK(swarm_metric(swarm, m) >= 0.0);
    }

    SwarmState single;
    single.particles.resize(1);
    single.particles[0].position = {5.0};
    single.particles[0].velocity = {1.0};
    CHECK(swarm_metric(single, Metric::InterparticleDistance) == 0.0);
    CHECK(swarm_metric(single, Metric::CentroidDistance) == 0.0);
}

TEST_CASE("metric delta is exact subtraction") {
    CHECK(metric_delta(5.0, 5.0) == 0.0);
    CHECK(metric_delta(7.5, 5.0) == 2.5);
    CHECK(metric_delta(3.0, 5.0) == -2.0);
}

TEST_CASE("squash evaluates the rescaled sigmoid") {
    CHECK(squash(0.0, 1.0) == 0.0);
    CHECK(squash(-2.0, 1.0) == std::tanh(1.0));
    CHECK(squash(2.0, 1.0) == -std::tanh(1.0));
    CHECK(squash(-400.0, 200.0) == std::tanh(1.0));
    CHECK_THROWS_AS(squash(1.0, 0.0), ArgumentError);
    CHECK_THROWS_AS(squash(1.0, -2.0), ArgumentError);
}

TEST_CASE("squash is odd and bounded") {
    RngStream rng(71);
    for (int i = 0; i < 200; i++) {
        double delta = rng.next_uniform(-1000.0, 1000.0);
        double y = squash(delta, 200.0);
        CHECK(y > -1.0);
        CHECK(y < 1.0);
        CHECK(squash(-delta, 200.0) == -y);
    }
}

TEST_CASE("parameter update leaves parameters unchanged at zero delta") {
    PsoParams params{0.815, 1.0, 1.0};
    CHECK(update_params(params, 0.0, 0.15, 200.0) == params);
}

TEST_CASE("parameter update saturates to a full epsilon drop in the collapse limit") {
    PsoParams params{0.815, 1.0, 1.0};
    PsoParams next = update_params(params, -1e308, 0.15, 200.0);
    CHECK(next.omega == 0.815 - 0.15);
    CHECK(next.omega == doctest::Approx(0.665));
    CHECK(next.alpha1 == 1.0 - 0.15);
    CHECK(next.alpha2 == 1.0 - 0.15);
}

TEST_CASE("parameter update shifts all three parameters by the same formula value") {
    PsoParams params{0.815, 1.0, 1.0};
    PsoParams next = update_params(params, 100.0, 0.15, 200.0);
    double increment = -0.15 * std::tanh(-100.0 / (2.0 * 200.0));
    CHECK(next.omega == 0.815 + increment);
    CHECK(next.alpha1 == 1.0 + increment);
    CHECK(next.alpha2 == 1.0 + increment);
}

TEST_CASE("parameter update increments stay below epsilon in magnitude") {
    RngStream rng(72);
    PsoParams params{0.815, 1.0, 1.0};
    for (int i = 0; i < 500; i++) {
        double delta = rng.next_uniform(-2000.0, 2000.0);
        PsoParams next = update_params(params, delta, 0.15, 200.0);
        CHECK(std::fabs(next.omega - params.omega) < 0.15);
        CHECK(std::fabs(next.alpha1 - params.alpha1) < 0.15);
    }
}

TEST_CASE("parameter update response increases strictly with the delta") {
    PsoParams params{0.815, 1.0, 1.0};
    double previous = update_params(params, -600.0, 0.15, 200.0).omega;
    for (double delta = -550.0; delta <= 600.0; delta += 50.0) {
        double current = update_params(params, delta, 0.15, 200.0).omega;
        CHECK(current > previous);
        previous = current;
    }
}

TEST_CASE("controller bootstrap captures the pre-loop metric") {
    RunConfig config;
    config.dimension = 3;
    config.particle_count = 4;
    config.metric = Metric::CentroidDistance;
    config.epsilon = 0.2;
    config.sigma = 123.0;
    config.sigma_log = 3.5;
    config.delta_mode = DeltaMode::Absolute;
    config.sign_convention = SignConvention::Verbatim;
    RngStream rng(81);
    SwarmState swarm = initialize_swarm(config, rng);

    ControllerState controller = make_controller(config, swarm);
    CHECK(controller.previous_metric == swarm_metric(swarm, Metric::CentroidDistance));
    CHECK(controller.epsilon == 0.2);
    CHECK(controller.sigma == 123.0);
    CHECK(controller.sigma_log == 3.5);
    CHECK(controller.delta_mode == DeltaMode::Absolute);
    CHECK(controller.sign_convention == SignConvention::Verbatim);
}

TEST_CASE("a constant metric leaves the parameters untouched") {
    // A motionless swarm keeps every diversity metric constant, so the
    // update must be exactly zero in both delta modes.
    Objective objective = lookup_objective("schwefel", 2);
    for (DeltaMode mode : {DeltaMode::Absolute, DeltaMode::LogRatio}) {
        SwarmState swarm = two_particle_swarm({1.0, 1.0}, {2.0, 2.0}, {0.0, 0.0}, {0.0, 0.0});
        for (auto& p : swarm.particles) p.best_fitness = objective.evaluate(p.position);
        refresh_global_best(swarm);
        swarm.params = PsoParams{0.0, 0.0, 0.0};

        ControllerState controller;
        controller.delta_mode = mode;
        controller.previous_metric = swarm_metric(swarm, Metric::VelocityNorm);

        RngStream rng(5);
        crips_step(swarm, objective, controller, Metric::VelocityNorm, rng);
        CHECK(swarm.params == PsoParams{0.0, 0.0, 0.0});
        crips_step(swarm, objective, controller, Metric::VelocityNorm, rng);
        CHECK(swarm.params == PsoParams{0.0, 0.0, 0.0});
    }
}

TEST_CASE("an expanding swarm raises the parameters under the verbatim sign") {
    // Inertia above one with no attraction doubles every velocity, so the
    // velocity norm grows each step and the printed rule must push all three
    // parameters up.
    Objective objective = lookup_objective("schwefel", 2);
    SwarmState swarm = two_particle_swarm({10.0, 0.0}, {-10.0, 0.0}, {2.0, 1.0}, {-1.0, 2.0});
    for (auto& p : swarm.particles) p.best_fitness = objective.evaluate(p.position);
    refresh_global_best(swarm);
    swarm.params = PsoParams{2.0, 0.0, 0.0};

    ControllerState controller;
    controller.delta_mode = DeltaMode::Absolute;
    controller.sign_convention = SignConvention::Verbatim;
    controller.previous_metric = swarm_metric(swarm, Metric::VelocityNorm);

    RngStream rng(6);
    PsoParams before = swarm.params;
    crips_step(swarm, objective, controller, Metric::VelocityNorm, rng);
    CHECK(swarm.params.omega > before.omega);
    CHECK(swarm.params.alpha1 > before.alpha1);
    CHECK(swarm.params.alpha2 > before.alpha2);
}

TEST_CASE("an expanding swarm lowers the parameters under the stabilizing sign") {
    Objective objective = lookup_objective("schwefel", 2);
    for (DeltaMode mode : {DeltaMode::Absolute, DeltaMode::LogRatio}) {
        SwarmState swarm = two_particle_swarm({10.0, 0.0}, {-10.0, 0.0}, {2.0, 1.0}, {-1.0, 2.0});
        for (auto& p : swarm.particles) p.best_fitness = objective.evaluate(p.position);
        refresh_global_best(swarm);
        swarm.params = PsoParams{2.0, 0.0, 0.0};

        ControllerState controller;
        controller.delta_mode = mode;
        controller.sign_convention = SignConvention::Stabilizing;
        controller.previous_metric = swarm_metric(swarm, Metric::VelocityNorm);

        RngStream rng(6);
        PsoParams before = swarm.params;
        crips_step(swarm, objective, controller, Metric::VelocityNorm, rng);
        CHECK(swarm.params.omega < before.omega);
        CHECK(swarm.params.alpha1 < before.alpha1);
        CHECK(swarm.params.alpha2 < before.alpha2);
    }
}

TEST_CASE("a contracting swarm lowers the parameters under the verbatim sign") {
    Objective objective = lookup_objective("schwefel", 2);
    SwarmState swarm = two_particle_swarm({10.0, 0.0}, {-10.0, 0.0}, {2.0, 1.0}, {-1.0, 2.0});
    for (auto& p : swarm.particles) p.best_fitness = objective.evaluate(p.position);
    refresh_global_best(swarm);
    swarm.params = PsoParams{0.25, 0.0, 0.0};

    ControllerState controller;
    controller.delta_mode = DeltaMode::Absolute;
    controller.sign_convention = SignConvention::Verbatim;
    controller.previous_metric = swarm_metric(swarm, Metric::VelocityNorm);

    RngStream rng(7);
    for (int t = 0; t < 3; t++) {
        double omega = swarm.params.omega;
        double alpha1 = swarm.params.alpha1;
        crips_step(swarm, objective, controller, Metric::VelocityNorm, rng);
        CHECK(swarm.params.omega < omega);
        CHECK(swarm.params.alpha1 < alpha1);
    }
}

TEST_CASE("three controller iterations match a hand-stepped recomputation") {
    // Full recomputation of the update rules in loop order from a parallel
    // random stream: move, refresh bests, measure, squash, shift parameters.
    RunConfig config;
    config.dimension = 1;
    config.particle_count = 2;
    config.metric = Metric::VelocityNorm;
    config.delta_mode = DeltaMode::Absolute;
    config.sign_convention = SignConvention::Verbatim;
    config.epsilon = 0.15;
    config.sigma = 200.0;
    config.initial_params = PsoParams{0.815, 1.0, 1.0};

    Objective objective = lookup_objective("schwefel", 1);
    RngStream rng(555);
    SwarmState swarm = initialize_swarm(config, objective, rng);
    ControllerState controller = make_controller(config, swarm);
    for (int t = 0; t < 3; t++) {
        crips_step(swarm, objective, controller, Metric::VelocityNorm, rng);
    }

    std::mt19937_64 ref(555);
    double x[2], v[2], pb[2], pbf[2];
    for (int p = 0; p < 2; p++) {
        x[p] = -500.0 + ref_uniform(ref) * 1000.0;
        v[p] = -100.0 + ref_uniform(ref) * 200.0;
        pb[p] = x[p];
        pbf[p] = schwefel(Vector{x[p]});
    }
    double gb = pb[0], gbf = pbf[0];
    if (pbf[1] < gbf) { gbf = pbf[1]; gb = pb[1]; }
    double omega = 0.815, alpha1 = 1.0, alpha2 = 1.0;
    double previous = (std::fabs(v[0]) + std::fabs(v[1])) / 2.0;
    for (int t = 0; t < 3; t++) {
        double attractor = gb;
        for (int p = 0; p < 2; p++) {
            double r1 = ref_uniform(ref);
            double r2 = ref_uniform(ref);
            v[p] = omega * v[p] + alpha1 * r1 * (pb[p] - x[p]) + alpha2 * r2 * (attractor - x[p]);
            x[p] = x[p] + v[p];
        }
        for (int p = 0; p < 2; p++) {
            double fitness = schwefel(Vector{x[p]});
            if (fitness < pbf[p]) { pbf[p] = fitness; pb[p] = x[p]; }
        }
        for (int p = 0; p < 2; p++) {
            if (pbf[p] < gbf) { gbf = pbf[p]; gb = pb[p]; }
        }
        double metric = (std::fabs(v[0]) + std::fabs(v[1])) / 2.0;
        double delta = metric - previous;
        double increment = -0.15 * std::tanh(-delta / (2.0 * 200.0));
        omega += increment;
        alpha1 += increment;
        alpha2 += increment;
        previous = metric;
    }

    CHECK(swarm.params.omega == omega);
    CHECK(swarm.params.alpha1 == alpha1);
    CHECK(swarm.params.alpha2 == alpha2);
    CHECK(swarm.particles[0].position[0] == x[0]);
    CHECK(swarm.particles[1].position[0] == x[1]);
    CHECK(swarm.particles[0].velocity[0] == v[0]);
    CHECK(swarm.global_best_fitness == gbf);
    CHECK(controller.previous_metric == previous);
    CHECK(swarm.iteration == 3);
}

TEST_CASE("two controller iterations match a hand-stepped recomputation at the defaults") {
    RunConfig config;
    config.dimension = 1;
    config.particle_count = 2;
    // Default composition: velocity norm metric, log-ratio delta,
    // stabilizing sign, sigma_log 2.
    Objective objective = lookup_objective("schwefel", 1);
    RngStream rng(556);
    SwarmState swarm = initialize_swarm(config, objective, rng);
    ControllerState controller = make_controller(config, swarm);
    for (int t = 0; t < 2; t++) {
        crips_step(swarm, objective, controller, config.metric, rng);
    }

    std::mt19937_64 ref(556);
    double x[2], v[2], pb[2], pbf[2];
    for (int p = 0; p < 2; p++) {
        x[p] = -500.0 + ref_uniform(ref) * 1000.0;
        v[p] = -100.0 + ref_uniform(ref) * 200.0;
        pb[p] = x[p];
        pbf[p] = schwefel(Vector{x[p]});
    }
    double gb = pb[0], gbf = pbf[0];
    if (pbf[1] < gbf) { gbf = pbf[1]; gb = pb[1]; }
    double omega = 0.815, alpha1 = 1.0, alpha2 = 1.0;
    double previous = (std::fabs(v[0]) + std::fabs(v[1])) / 2.0;
    for (int t = 0; t < 2; t++) {
        double attractor = gb;
        for (int p = 0; p < 2; p++) {
            double r1 = ref_uniform(ref);
            double r2 = ref_uniform(ref);
            v[p] = omega * v[p] + alpha1 * r1 * (pb[p] - x[p]) + alpha2 * r2 * (attractor - x[p]);
            x[p] = x[p] + v[p];
        }
        for (int p = 0; p < 2; p++) {
            double fitness = schwefel(Vector{x[p]});
            if (fitness < pbf[p]) { pbf[p] = fitness; pb[p] = x[p]; }
        }
        for (int p = 0; p < 2; p++) {
            if (pbf[p] < gbf) { gbf = pbf[p]; gb = pb[p]; }
        }
        double metric = (std::fabs(v[0]) + std::fabs(v[1])) / 2.0;
        double delta = std::log(std::max(metric, DBL_MIN)) - std::log(std::max(previous, DBL_MIN));
        double increment = -0.15 * std::tanh(-(-delta) / (2.0 * 2.0));
        omega += increment;
        alpha1 += increment;
        alpha2 += increment;
        previous = metric;
    }

    CHECK(swarm.params.omega == omega);
    CHECK(swarm.params.alpha1 == alpha1);
    CHECK(swarm.params.alpha2 == alpha2);
    CHECK(controller.previous_metric == previous);
}

TEST_CASE("the controller moves all three parameters in lockstep over a run") {
    RunConfig config;
    config.dimension = 5;
    config.particle_count = 10;
    Objective objective = lookup_objective("schwefel", 5);
    RngStream rng(557);
    SwarmState swarm = initialize_swarm(config, objective, rng);
    ControllerState controller = make_controller(config, swarm);

    for (int t = 0; t < 100; t++) {
        PsoParams before = swarm.params;
        crips_step(swarm, objective, controller, config.metric, rng);
        // Both pull weights start equal and receive identical increments, so
        // they must stay bit-identical; each per-step shift stays below
        // epsilon.
        CHECK(swarm.params.alpha1 == swarm.params.alpha2);
        CHECK(std::fabs(swarm.params.omega - before.omega) <= 0.15);
        CHECK(swarm.params.alpha1 - swarm.params.omega ==
              doctest::Approx(1.0 - 0.815).epsilon(1e-9));
    }
}
