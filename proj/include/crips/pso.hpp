#ifndef CRIPS_PSO_HPP
#define CRIPS_PSO_HPP

#include <optional>

#include "crips/core.hpp"
#include "crips/objectives.hpp"

namespace crips {

// Update-rule variant for one swarm iteration. Standard applies the plain
// velocity/position rules; Vmax additionally clamps each velocity component;
// LinearDescent expects the caller to schedule omega between omega_start and
// omega_end across the run.
struct PsoVariant {
    enum class Kind { Standard, Vmax, LinearDescent };
    Kind kind = Kind::Standard;
    std::optional<double> vmax;
    std::optional<double> omega_start;
    std::optional<double> omega_end;
};

// New velocity for one particle: inertia plus randomly weighted pulls toward
// the personal best and the supplied global best. Consumes two uniforms per
// dimension, personal-best draw first.
Vector velocity_update(const ParticleState& particle, const Vector& global_best,
                       const PsoParams& params, RngStream& rng);

// Component-wise position shift by one velocity step.
Vector position_update(const Vector& position, const Vector& velocity);

// Component-wise clamp to [-vmax, +vmax]. Throws ArgumentError unless
// vmax > 0.
Vector clamp_velocity(const Vector& velocity, double vmax);

// Linearly interpolated inertia weight at `iteration` of `max_iterations`.
double linear_descent_omega(long iteration, long max_iterations, double omega_start,
                            double omega_end);

// One synchronous swarm iteration: every particle's velocity and position are
// updated against the previous iteration's global best, then personal and
// global bests are refreshed and the iteration counter advances. For the Vmax
// variant, velocities are clamped before positions move.
void pso_step(SwarmState& swarm, const Objective& objective, const PsoVariant& variant,
              RngStream& rng);

}  // namespace crips

#endif  // CRIPS_PSO_HPP
