#include "crips/core.hpp"

#include <cmath>

#include "crips/objectives.hpp"

namespace crips {

double RngStream::next_normal() {
    // Box-Muller, cosine branch only; the two uniforms are drawn into locals
    // so the consumption order is fixed regardless of expression evaluation.
    double u1 = next_uniform();
    double u2 = next_uniform();
    constexpr double kTwoPi = 2.0 * 3.14159265358979323846;
    return std::sqrt(-2.0 * std::log(1.0 - u1)) * std::cos(kTwoPi * u2);
}

Vector uniform_vector(RngStream& rng, int n, double low, double high) {
    if (!(low < high)) {
        throw ArgumentError("uniform_vector: low must be strictly below high");
    }
    Vector v(static_cast<std::size_t>(n));
    for (auto& x : v) {
        x = rng.next_uniform(low, high);
    }
    return v;
}

SwarmState initialize_swarm(const RunConfig& config, const Objective& objective, RngStream& rng) {
    validate_config(config);
    SwarmState swarm;
    swarm.params = config.initial_params;
    swarm.iteration = 0;
    swarm.particles.resize(static_cast<std::size_t>(config.particle_count));
    for (auto& particle : swarm.particles) {
        particle.position.resize(static_cast<std::size_t>(config.dimension));
        for (int d = 0; d < config.dimension; d++) {
            particle.position[static_cast<std::size_t>(d)] =
                rng.next_uniform(objective.region_low[static_cast<std::size_t>(d)],
                                 objective.region_high[static_cast<std::size_t>(d)]);
        }
        particle.velocity.resize(static_cast<std::size_t>(config.dimension));
        for (int d = 0; d < config.dimension; d++) {
            double width = objective.region_high[static_cast<std::size_t>(d)] -
                           objective.region_low[static_cast<std::size_t>(d)];
            particle.velocity[static_cast<std::size_t>(d)] =
                rng.next_uniform(-width / 10.0, width / 10.0);
        }
        particle.best_position = particle.position;
        particle.best_fitness = objective.evaluate(particle.position);
    }
    refresh_global_best(swarm);
    return swarm;
}

SwarmState initialize_swarm(const RunConfig& config, RngStream& rng) {
    Objective objective =
        lookup_objective(config.objective_name, config.dimension, config.griewank_shift);
    return initialize_swarm(config, objective, rng);
}

int refresh_global_best(SwarmState& swarm) {
    int best_index = -1;
    for (std::size_t i = 0; i < swarm.particles.size(); i++) {
        if (swarm.particles[i].best_fitness < swarm.global_best_fitness) {
            swarm.global_best_fitness = swarm.particles[i].best_fitness;
            swarm.global_best_position = swarm.particles[i].best_position;
            best_index = static_cast<int>(i);
        }
    }
    if (best_index >= 0) {
        return best_index;
    }
    // Nothing improved on the stored best; report the first particle that
    // attains it, or -1 if none does (stale best retained by design).
    for (std::size_t i = 0; i < swarm.particles.size(); i++) {
        if (swarm.particles[i].best_fitness == swarm.global_best_fitness) {
            return static_cast<int>(i);
        }
    }
    return -1;
}

void validate_config(const RunConfig& config) {
    if (config.dimension <= 0) {
        throw ConfigurationError("dimension must be positive");
    }
    if (config.particle_count <= 0) {
        throw ConfigurationError("particles must be positive");
    }
    if (config.max_iterations <= 0) {
        throw ConfigurationError("iterations must be positive");
    }
    if (config.algorithm == Algorithm::Crips &&
        !(config.epsilon > 0.0 && config.epsilon < 1.0)) {
        throw ConfigurationError("epsilon must lie in (0, 1)");
    }
    if (!(config.sigma > 0.0)) {
        throw ConfigurationError("sigma must be positive");
    }
    if (!(config.sigma_log > 0.0)) {
        throw ConfigurationError("sigma_log must be positive");
    }
    if (config.algorithm == Algorithm::PsoVmax && config.vmax && !(*config.vmax > 0.0)) {
        throw ConfigurationError("vmax must be positive");
    }
    if (config.omega_start && config.omega_end && !(*config.omega_start >= *config.omega_end)) {
        throw ConfigurationError("omega_start must be at least omega_end");
    }
    if (!(config.powerlaw_exponent > 1.0)) {
        throw ConfigurationError("powerlaw_exponent must exceed 1");
    }
    if (!(config.min_step > 0.0)) {
        throw ConfigurationError("min_step must be positive");
    }
    if (config.max_step && !(*config.max_step > config.min_step)) {
        throw ConfigurationError("max_step must exceed min_step");
    }
    if (!(config.goal_tolerance >= 0.0)) {
        throw ConfigurationError("goal_tolerance must be non-negative");
    }
}

const char* algorithm_name(Algorithm algorithm) {
    switch (algorithm) {
        case Algorithm::Pso: return "pso";
        case Algorithm::PsoVmax: return "pso_vmax";
        case Algorithm::PsoLd: return "pso_ld";
        case Algorithm::Crips: return "crips";
        case Algorithm::RandUniform: return "rand_uniform";
        case Algorithm::RandPowerlaw: return "rand_powerlaw";
    }
    return "unknown";
}

const char* metric_name(Metric metric) {
    switch (metric) {
        case Metric::VelocityNorm: return "velocity_norm";
        case Metric::CentroidDistance: return "centroid_distance";
        case Metric::InterparticleDistance: return "interparticle_distance";
    }
    return "unknown";
}

const char* delta_mode_name(DeltaMode mode) {
    switch (mode) {
        case DeltaMode::Absolute: return "absolute";
        case DeltaMode::LogRatio: return "log_ratio";
    }
    return "unknown";
}

const char* sign_convention_name(SignConvention sign) {
    switch (sign) {
        case SignConvention::Verbatim: return "verbatim";
        case SignConvention::Stabilizing: return "stabilizing";
    }
    return "unknown";
}

Algorithm parse_algorithm(const std::string& text) {
    if (text == "pso") return Algorithm::Pso;
    if (text == "pso_vmax") return Algorithm::PsoVmax;
    if (text == "pso_ld") return Algorithm::PsoLd;
    if (text == "crips") return Algorithm::Crips;
    if (text == "rand_uniform") return Algorithm::RandUniform;
    if (text == "rand_powerlaw") return Algorithm::RandPowerlaw;
    throw ConfigurationError("unknown algorithm: " + text);
}

Metric parse_metric(const std::string& text) {
    if (text == "velocity_norm") return Metric::VelocityNorm;
    if (text == "centroid_distance") return Metric::CentroidDistance;
    if (text == "interparticle_distance") return Metric::InterparticleDistance;
    throw ConfigurationError("unknown metric: " + text);
}

DeltaMode parse_delta_mode(const std::string& text) {
    if (text == "absolute") return DeltaMode::Absolute;
    if (text == "log_ratio") return DeltaMode::LogRatio;
    throw ConfigurationError("unknown delta_mode: " + text);
}

SignConvention parse_sign_convention(const std::string& text) {
    if (text == "verbatim") return SignConvention::Verbatim;
    if (text == "stabilizing") return SignConvention::Stabilizing;
    throw ConfigurationError("unknown sign_convention: " + text);
}

}  // namespace crips
