#include "crips/baselines.hpp"

#include <cmath>

namespace crips {

PowerLawSampler make_sampler(double exponent, double min_step, double max_step) {
    if (!(exponent > 1.0)) {
        throw ArgumentError("power-law sampler: exponent must exceed 1");
    }
    if (!(min_step > 0.0)) {
        throw ArgumentError("power-law sampler: min_step must be positive");
    }
    if (!(min_step < max_step)) {
        throw ArgumentError("power-law sampler: min_step must be below max_step");
    }
    return PowerLawSampler{exponent, min_step, max_step};
}

PowerLawSampler make_sampler(const RunConfig& config, const Objective& objective) {
    double max_step;
    if (config.max_step) {
        max_step = *config.max_step;
    } else {
        double width = objective.region_high[0] - objective.region_low[0];
        max_step = std::sqrt(static_cast<double>(config.dimension)) * width;
    }
    return make_sampler(config.powerlaw_exponent, config.min_step, max_step);
}

BaselineState make_uniform_state(int slot_count) {
    if (slot_count <= 0) {
        throw ArgumentError("baseline state: slot count must be positive");
    }
    BaselineState state;
    state.positions.resize(static_cast<std::size_t>(slot_count));
    state.fitness.assign(static_cast<std::size_t>(slot_count),
                         std::numeric_limits<double>::infinity());
    return state;
}

BaselineState make_powerlaw_state(int slot_count, const Objective& objective, RngStream& rng) {
    BaselineState state = make_uniform_state(slot_count);
    for (std::size_t i = 0; i < state.positions.size(); i++) {
        Vector position(static_cast<std::size_t>(objective.dimension));
        for (std::size_t d = 0; d < position.size(); d++) {
            position[d] = rng.next_uniform(objective.region_low[d], objective.region_high[d]);
        }
        state.fitness[i] = objective.evaluate(position);
        if (state.fitness[i] < state.global_best_fitness) {
            state.global_best_fitness = state.fitness[i];
            state.global_best_position = position;
        }
        state.positions[i] = std::move(position);
    }
    return state;
}

void uniform_search_step(BaselineState& state, const Objective& objective, RngStream& rng) {
    for (std::size_t i = 0; i < state.positions.size(); i++) {
        Vector position(static_cast<std::size_t>(objective.dimension));
        for (std::size_t d = 0; d < position.size(); d++) {
            position[d] = rng.next_uniform(objective.region_low[d], objective.region_high[d]);
        }
        state.fitness[i] = objective.evaluate(position);
        if (state.fitness[i] < state.global_best_fitness) {
            state.global_best_fitness = state.fitness[i];
            state.global_best_position = position;
        }
        state.positions[i] = std::move(position);
    }
}

double powerlaw_step_length(const PowerLawSampler& sampler, RngStream& rng) {
    double one_minus = 1.0 - sampler.exponent;
    double low = std::pow(sampler.min_step, one_minus);
    double high = std::pow(sampler.max_step, one_minus);
    double u = rng.next_uniform();
    return std::pow(low + u * (high - low), 1.0 / one_minus);
}

void powerlaw_search_step(BaselineState& state, const PowerLawSampler& sampler,
                          const Objective& objective, RngStream& rng) {
    std::size_t dimension = static_cast<std::size_t>(objective.dimension);
    for (std::size_t i = 0; i < state.positions.size(); i++) {
        double length = powerlaw_step_length(sampler, rng);
        Vector direction(dimension);
        double norm_squared = 0.0;
        for (auto& c : direction) {
            c = rng.next_normal();
            norm_squared += c * c;
        }
        double norm = std::sqrt(norm_squared);
        Vector candidate(dimension);
        if (norm > 0.0) {
            for (std::size_t d = 0; d < dimension; d++) {
                candidate[d] = state.positions[i][d] + length * (direction[d] / norm);
            }
        } else {
            // A zero direction draw is essentially impossible; step along the
            // first axis to keep the call total and deterministic.
            candidate = state.positions[i];
            candidate[0] += length;
        }
        double fitness = objective.evaluate(candidate);
        if (fitness < state.fitness[i]) {
            state.fitness[i] = fitness;
            state.positions[i] = candidate;
            if (fitness < state.global_best_fitness) {
                state.global_best_fitness = fitness;
                state.global_best_position = candidate;
            }
        }
    }
}

}  // namespace crips
