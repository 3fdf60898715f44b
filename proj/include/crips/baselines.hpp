#ifndef CRIPS_BASELINES_HPP
#define CRIPS_BASELINES_HPP

#include "crips/core.hpp"
#include "crips/objectives.hpp"

namespace crips {

// Truncated power-law step-length distribution with density proportional to
// L^(-exponent) on [min_step, max_step].
struct PowerLawSampler {
    double exponent = 2.0;
    double min_step = 1.0;
    double max_step = 1000.0;
};

// Validates the sampler fields. Throws ArgumentError when exponent <= 1 or
// the step bounds are not 0 < min_step < max_step.
PowerLawSampler make_sampler(double exponent, double min_step, double max_step);

// Sampler for a run: bounds from the config where set, otherwise max_step
// defaults to the diagonal of the objective's region of interest so any
// point stays reachable in one step.
PowerLawSampler make_sampler(const RunConfig& config, const Objective& objective);

// Shared state for the random-search baselines: one best position per
// particle slot plus the global best over every evaluation so far.
struct BaselineState {
    std::vector<Vector> positions;
    std::vector<double> fitness;
    Vector global_best_position;
    double global_best_fitness = std::numeric_limits<double>::infinity();
};

// Uniform search starts with no evaluations: after k steps its global best
// is exactly the minimum of the k * slot_count points sampled.
BaselineState make_uniform_state(int slot_count);

// Power-law search starts from evaluated uniform positions, since candidates
// are generated around the incumbent per-slot bests.
BaselineState make_powerlaw_state(int slot_count, const Objective& objective, RngStream& rng);

// One iteration of uniform random search: a fresh uniform point in the
// region per slot, one evaluation each, global best updated on strict
// improvement.
void uniform_search_step(BaselineState& state, const Objective& objective, RngStream& rng);

// One step length drawn via the inverse-CDF transform of a single uniform.
double powerlaw_step_length(const PowerLawSampler& sampler, RngStream& rng);

// One iteration of power-law random search: per slot, a candidate at a
// power-law distance from the slot's best position in an isotropic random
// direction, kept only if strictly better. Consumes one uniform for the
// length and two per dimension for the direction, per slot.
void powerlaw_search_step(BaselineState& state, const PowerLawSampler& sampler,
                          const Objective& objective, RngStream& rng);

}  // namespace crips

#endif  // CRIPS_BASELINES_HPP
