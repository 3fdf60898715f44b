#include "crips/crips.hpp"

#include <cfloat>
#include <cmath>

namespace crips {

namespace {

double euclidean_norm(const Vector& v) {
    double sum = 0.0;
    for (double c : v) {
        sum += c * c;
    }
    return std::sqrt(sum);
}

double distance(const Vector& a, const Vector& b) {
    double sum = 0.0;
    for (std::size_t d = 0; d < a.size(); d++) {
        double diff = a[d] - b[d];
        sum += diff * diff;
    }
    return std::sqrt(sum);
}

}  // namespace

double swarm_metric(const SwarmState& swarm, Metric metric) {
    std::size_t count = swarm.particles.size();
    if (count == 0) {
        throw ArgumentError("swarm_metric: swarm has no particles");
    }
    switch (metric) {
        case Metric::VelocityNorm: {
            double total = 0.0;
            for (const auto& p : swarm.particles) {
                total += euclidean_norm(p.velocity);
            }
            return total / static_cast<double>(count);
        }
        case Metric::CentroidDistance: {
            Vector centroid(swarm.particles[0].position.size(), 0.0);
            for (const auto& p : swarm.particles) {
                for (std::size_t d = 0; d < centroid.size(); d++) {
                    centroid[d] += p.position[d];
                }
            }
            for (auto& c : centroid) {
                c /= static_cast<double>(count);
            }
            double total = 0.0;
            for (const auto& p : swarm.particles) {
                total += distance(p.position, centroid);
            }
            return total / static_cast<double>(count);
        }
        case Metric::InterparticleDistance: {
            if (count == 1) {
                return 0.0;
            }
            double total = 0.0;
            std::size_t pairs = 0;
            for (std::size_t i = 0; i < count; i++) {
                for (std::size_t j = i + 1; j < count; j++) {
                    total += distance(swarm.particles[i].position, swarm.particles[j].position);
                    pairs++;
                }
            }
            return total / static_cast<double>(pairs);
        }
    }
    throw ArgumentError("swarm_metric: unknown metric");
}

double metric_delta(double current, double previous) {
    return current - previous;
}

double squash(double delta_s, double sigma) {
    if (!(sigma > 0.0)) {
        throw ArgumentError("squash: sigma must be positive");
    }
    return std::tanh(-delta_s / (2.0 * sigma));
}

PsoParams update_params(const PsoParams& params, double delta_s, double epsilon, double sigma) {
    double increment = -epsilon * squash(delta_s, sigma);
    PsoParams next = params;
    next.omega += increment;
    next.alpha1 += increment;
    next.alpha2 += increment;
    return next;
}

ControllerState make_controller(const RunConfig& config, const SwarmState& swarm) {
    ControllerState controller;
    controller.epsilon = config.epsilon;
    controller.sigma = config.sigma;
    controller.sigma_log = config.sigma_log;
    controller.delta_mode = config.delta_mode;
    controller.sign_convention = config.sign_convention;
    controller.previous_metric = swarm_metric(swarm, config.metric);
    return controller;
}

void crips_step(SwarmState& swarm, const Objective& objective, ControllerState& controller,
                Metric metric, RngStream& rng) {
    pso_step(swarm, objective, PsoVariant{}, rng);
    double current = swarm_metric(swarm, metric);

    double delta;
    double sigma;
    if (controller.delta_mode == DeltaMode::LogRatio) {
        // Relative change, floored so an exactly collapsed metric still maps
        // to a finite value instead of minus infinity.
        delta = metric_delta(std::log(std::max(current, DBL_MIN)),
                             std::log(std::max(controller.previous_metric, DBL_MIN)));
        sigma = controller.sigma_log;
    } else {
        delta = metric_delta(current, controller.previous_metric);
        sigma = controller.sigma;
    }
    if (controller.sign_convention == SignConvention::Stabilizing) {
        delta = -delta;
    }
    swarm.params = update_params(swarm.params, delta, controller.epsilon, sigma);
    controller.previous_metric = current;
}

}  // namespace crips
