#ifndef CRIPS_CRIPS_HPP
#define CRIPS_CRIPS_HPP

#include "crips/core.hpp"
#include "crips/objectives.hpp"
#include "crips/pso.hpp"

namespace crips {

// Feedback controller state. The response scale depends on how the metric
// change is measured: `sigma` applies to Absolute deltas (problem-space
// units), `sigma_log` to LogRatio deltas (log units). `previous_metric` is
// always the diversity metric of the immediately preceding iteration.
struct ControllerState {
    double epsilon = 0.15;
    double sigma = 200.0;
    double sigma_log = 2.0;
    DeltaMode delta_mode = DeltaMode::LogRatio;
    SignConvention sign_convention = SignConvention::Stabilizing;
    double previous_metric = 0.0;
};

// Scalar swarm diversity: mean velocity norm, mean distance from the position
// centroid, or mean pairwise distance. Throws ArgumentError on an empty
// swarm.
double swarm_metric(const SwarmState& swarm, Metric metric);

// Change in the diversity metric between consecutive iterations.
double metric_delta(double current, double previous);

// Rescaled sigmoid of the metric change: tanh(-delta_s / (2 * sigma)), an odd
// function with range (-1, 1). Throws ArgumentError unless sigma > 0.
double squash(double delta_s, double sigma);

// Shifts omega, alpha1, and alpha2 by the identical increment
// -epsilon * squash(delta_s, sigma). The increment magnitude is below
// epsilon at every call.
PsoParams update_params(const PsoParams& params, double delta_s, double epsilon, double sigma);

// Controller bootstrap: captures the run settings and seeds previous_metric
// from the swarm as it stands before the first step.
ControllerState make_controller(const RunConfig& config, const SwarmState& swarm);

// One controller iteration: move the swarm one plain step (no velocity cap,
// no position bounds), measure the metric, and shift the parameters from the
// measured change. Under the Stabilizing sign convention the response is
// negated, so expansion lowers the parameters and contraction raises them;
// Verbatim keeps the printed direction. Under LogRatio the change is measured
// between logarithms of the metric, floored at the smallest positive double.
void crips_step(SwarmState& swarm, const Objective& objective, ControllerState& controller,
                Metric metric, RngStream& rng);

}  // namespace crips

#endif  // CRIPS_CRIPS_HPP
