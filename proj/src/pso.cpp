#include "crips/pso.hpp"

#include <algorithm>
#include <cmath>

namespace crips {

Vector velocity_update(const ParticleState& particle, const Vector& global_best,
                       const PsoParams& params, RngStream& rng) {
    Vector next(particle.velocity.size());
    for (std::size_t d = 0; d < next.size(); d++) {
        double r1 = rng.next_uniform();
        double r2 = rng.next_uniform();
        next[d] = params.omega * particle.velocity[d] +
                  params.alpha1 * r1 * (particle.best_position[d] - particle.position[d]) +
                  params.alpha2 * r2 * (global_best[d] - particle.position[d]);
    }
    return next;
}

Vector position_update(const Vector& position, const Vector& velocity) {
    Vector next(position.size());
    for (std::size_t d = 0; d < next.size(); d++) {
        next[d] = position[d] + velocity[d];
    }
    return next;
}

Vector clamp_velocity(const Vector& velocity, double vmax) {
    if (!(vmax > 0.0)) {
        throw ArgumentError("clamp_velocity: vmax must be positive");
    }
    Vector next(velocity.size());
    for (std::size_t d = 0; d < next.size(); d++) {
        next[d] = std::clamp(velocity[d], -vmax, vmax);
    }
    return next;
}

double linear_descent_omega(long iteration, long max_iterations, double omega_start,
                            double omega_end) {
    double fraction = static_cast<double>(iteration) / static_cast<double>(max_iterations);
    return omega_start + (omega_end - omega_start) * fraction;
}

void pso_step(SwarmState& swarm, const Objective& objective, const PsoVariant& variant,
              RngStream& rng) {
    // The attraction term reads swarm.global_best_position, which is only
    // refreshed after every particle has moved, so the whole iteration sees
    // the previous iteration's best.
    for (auto& particle : swarm.particles) {
        Vector velocity = velocity_update(particle, swarm.global_best_position, swarm.params, rng);
        if (variant.kind == PsoVariant::Kind::Vmax) {
            velocity = clamp_velocity(velocity, variant.vmax.value_or(50.0));
        }
        particle.velocity = std::move(velocity);
        particle.position = position_update(particle.position, particle.velocity);
    }
    for (auto& particle : swarm.particles) {
        double fitness = objective.evaluate(particle.position);
        if (fitness < particle.best_fitness) {
            particle.best_fitness = fitness;
            particle.best_position = particle.position;
        }
    }
    refresh_global_best(swarm);
    swarm.iteration++;
}

}  // namespace crips
