#include "crips/runner.hpp"

#include <filesystem>
#include <system_error>

#include "crips/baselines.hpp"
#include "crips/crips.hpp"
#include "crips/objectives.hpp"
#include "crips/pso.hpp"
#include "crips/trace_io.hpp"

namespace crips {

namespace {

namespace fs = std::filesystem;

TraceRecord make_record(long iteration, double best_fitness, double metric,
                        const PsoParams& params) {
    return {iteration, best_fitness, metric, params.omega, params.alpha1, params.alpha2};
}

void run_swarm(RunTrace& trace, const RunConfig& config, const Objective& objective,
               RngStream& rng) {
    SwarmState swarm = initialize_swarm(config, objective, rng);

    PsoVariant variant;
    if (config.algorithm == Algorithm::PsoVmax) {
        variant.kind = PsoVariant::Kind::Vmax;
        variant.vmax = config.vmax;
    } else if (config.algorithm == Algorithm::PsoLd) {
        variant.kind = PsoVariant::Kind::LinearDescent;
        variant.omega_start = config.omega_start;
        variant.omega_end = config.omega_end;
    }
    double omega_start = config.omega_start.value_or(0.7);
    double omega_end = config.omega_end.value_or(0.4);

    bool adaptive = config.algorithm == Algorithm::Crips;
    ControllerState controller;
    if (adaptive) {
        controller = make_controller(config, swarm);
    }
    if (config.algorithm == Algorithm::PsoLd) {
        swarm.params.omega =
            linear_descent_omega(0, config.max_iterations, omega_start, omega_end);
    }
    double metric = adaptive ? controller.previous_metric : swarm_metric(swarm, config.metric);
    trace.initial = make_record(0, swarm.global_best_fitness, metric, swarm.params);

    for (long t = 1; t <= config.max_iterations; t++) {
        if (swarm.global_best_fitness < config.goal_tolerance) {
            break;
        }
        double previous_best = swarm.global_best_fitness;
        if (adaptive) {
            crips_step(swarm, objective, controller, config.metric, rng);
            metric = controller.previous_metric;
        } else {
            if (config.algorithm == Algorithm::PsoLd) {
                swarm.params.omega = linear_descent_omega(swarm.iteration, config.max_iterations,
                                                          omega_start, omega_end);
            }
            pso_step(swarm, objective, variant, rng);
            metric = swarm_metric(swarm, config.metric);
        }
        trace.records.push_back(
            make_record(t, swarm.global_best_fitness, metric, swarm.params));
        if (swarm.global_best_fitness < previous_best) {
            trace.improvement_events.push_back({t, swarm.global_best_fitness});
        }
    }
}

void run_baseline(RunTrace& trace, const RunConfig& config, const Objective& objective,
                  RngStream& rng) {
    bool powerlaw = config.algorithm == Algorithm::RandPowerlaw;
    PowerLawSampler sampler;
    BaselineState state;
    if (powerlaw) {
        sampler = make_sampler(config, objective);
        state = make_powerlaw_state(config.particle_count, objective, rng);
    } else {
        state = make_uniform_state(config.particle_count);
    }

    PsoParams no_params{0.0, 0.0, 0.0};
    trace.initial = make_record(0, state.global_best_fitness, 0.0, no_params);

    for (long t = 1; t <= config.max_iterations; t++) {
        if (state.global_best_fitness < config.goal_tolerance) {
            break;
        }
        double previous_best = state.global_best_fitness;
        if (powerlaw) {
            powerlaw_search_step(state, sampler, objective, rng);
        } else {
            uniform_search_step(state, objective, rng);
        }
        trace.records.push_back(make_record(t, state.global_best_fitness, 0.0, no_params));
        if (state.global_best_fitness < previous_best) {
            trace.improvement_events.push_back({t, state.global_best_fitness});
        }
    }
}

}  // namespace

RunTrace run_single(const RunConfig& config) {
    validate_config(config);
    Objective objective =
        lookup_objective(config.objective_name, config.dimension, config.griewank_shift);
    RngStream rng(config.seed);
    RunTrace trace;
    trace.config = config;
    trace.seed = config.seed;
    if (config.algorithm == Algorithm::RandUniform || config.algorithm == Algorithm::RandPowerlaw) {
        run_baseline(trace, config, objective, rng);
    } else {
        run_swarm(trace, config, objective, rng);
    }
    return trace;
}

std::string trace_file_name(int run_index) {
    return "trace_" + std::to_string(run_index) + ".csv";
}

std::string events_file_name(int run_index) {
    return "events_" + std::to_string(run_index) + ".csv";
}

const char* const kConfigFileName = "config_resolved.txt";
const char* const kSummaryFileName = "summary.txt";

std::vector<RunTrace> run_experiment(const ExperimentSpec& spec_in) {
    ExperimentSpec spec = spec_in;
    finalize_spec(spec);

    fs::path directory(spec.output_directory);
    std::error_code error;
    fs::create_directories(directory, error);
    if (error) {
        throw IoError("cannot create output directory " + spec.output_directory);
    }

    std::vector<RunTrace> traces;
    traces.reserve(static_cast<std::size_t>(spec.repetitions));
    for (int r = 0; r < spec.repetitions; r++) {
        RunConfig config = spec.config;
        config.seed = spec.base_seed + static_cast<std::uint64_t>(r);
        traces.push_back(run_single(config));
        write_trace(traces.back(), (directory / trace_file_name(r)).string(),
                    (directory / events_file_name(r)).string());
    }
    write_text_file((directory / kConfigFileName).string(), render_spec(spec));
    write_text_file((directory / kSummaryFileName).string(),
                    render_summary(traces, spec.snapshot_iterations));
    return traces;
}

ExperimentSpec read_experiment_spec(const std::string& directory) {
    return load_experiment_file((fs::path(directory) / kConfigFileName).string());
}

std::vector<RunTrace> read_experiment(const std::string& directory) {
    ExperimentSpec spec = read_experiment_spec(directory);
    fs::path base(directory);
    std::vector<RunTrace> traces;
    traces.reserve(static_cast<std::size_t>(spec.repetitions));
    for (int r = 0; r < spec.repetitions; r++) {
        RunConfig config = spec.config;
        config.seed = spec.base_seed + static_cast<std::uint64_t>(r);
        traces.push_back(read_trace((base / trace_file_name(r)).string(),
                                    (base / events_file_name(r)).string(), config));
    }
    return traces;
}

std::string render_summary(const std::vector<RunTrace>& traces,
                           const std::vector<long>& snapshot_iterations) {
    if (traces.empty()) {
        throw ArgumentError("summary needs at least one trace");
    }
    const RunConfig& config = traces.front().config;
    std::string out;
    auto line = [&out](const std::string& key, const std::string& value) {
        out += key;
        out += " = ";
        out += value;
        out += '\n';
    };
    line("runs", std::to_string(traces.size()));
    line("algorithm", algorithm_name(config.algorithm));
    line("function", config.objective_name);
    line("dims", std::to_string(config.dimension));
    line("particles", std::to_string(config.particle_count));
    line("iterations", std::to_string(config.max_iterations));

    BatchSummary finals = summarize_runs(traces, 0);
    line("final_min", format_double(finals.finals.min));
    line("final_q1", format_double(finals.finals.q1));
    line("final_median", format_double(finals.finals.median));
    line("final_q3", format_double(finals.finals.q3));
    line("final_max", format_double(finals.finals.max));

    for (long snapshot : snapshot_iterations) {
        BatchSummary batch = summarize_runs(traces, snapshot);
        std::string prefix = "snapshot_" + std::to_string(snapshot) + "_";
        line(prefix + "min", format_double(batch.snapshots.min));
        line(prefix + "q1", format_double(batch.snapshots.q1));
        line(prefix + "median", format_double(batch.snapshots.median));
        line(prefix + "q3", format_double(batch.snapshots.q3));
        line(prefix + "max", format_double(batch.snapshots.max));
    }
    return out;
}

}  // namespace crips
