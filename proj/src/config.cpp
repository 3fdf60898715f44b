#include "crips/config.hpp"

#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "crips/objectives.hpp"
#include "crips/trace_io.hpp"

namespace crips {

namespace {

std::string trim(const std::string& text) {
    const char* whitespace = " \t\r";
    std::size_t begin = text.find_first_not_of(whitespace);
    if (begin == std::string::npos) {
        return "";
    }
    std::size_t end = text.find_last_not_of(whitespace);
    return text.substr(begin, end - begin + 1);
}

[[noreturn]] void bad_value(const std::string& key, const std::string& value) {
    throw ConfigurationError("invalid value for " + key + ": '" + value + "'");
}

double double_setting(const std::string& key, const std::string& value) {
    try {
        return parse_double(value);
    } catch (const ArgumentError&) {
        bad_value(key, value);
    }
}

long long_setting(const std::string& key, const std::string& value) {
    try {
        return parse_long(value);
    } catch (const ArgumentError&) {
        bad_value(key, value);
    }
}

int int_setting(const std::string& key, const std::string& value) {
    long parsed = long_setting(key, value);
    if (parsed < std::numeric_limits<int>::min() || parsed > std::numeric_limits<int>::max()) {
        bad_value(key, value);
    }
    return static_cast<int>(parsed);
}

std::uint64_t seed_setting(const std::string& key, const std::string& value) {
    try {
        return parse_seed(value);
    } catch (const ArgumentError&) {
        bad_value(key, value);
    }
}

std::vector<long> snapshot_setting(const std::string& value) {
    std::vector<long> iterations;
    std::size_t start = 0;
    while (true) {
        std::size_t stop = value.find(',', start);
        std::string item = trim(value.substr(start, stop - start));
        long iteration = long_setting("snapshot", item);
        if (iteration < 0) {
            throw ConfigurationError("snapshot iterations must be non-negative");
        }
        iterations.push_back(iteration);
        if (stop == std::string::npos) {
            return iterations;
        }
        start = stop + 1;
    }
}

}  // namespace

void apply_setting(ExperimentSpec& spec, const std::string& key, const std::string& value) {
    RunConfig& config = spec.config;
    if (key == "algorithm") {
        config.algorithm = parse_algorithm(value);
    } else if (key == "function") {
        config.objective_name = value;
    } else if (key == "dims") {
        config.dimension = int_setting(key, value);
    } else if (key == "particles") {
        config.particle_count = int_setting(key, value);
    } else if (key == "iterations") {
        config.max_iterations = long_setting(key, value);
    } else if (key == "runs") {
        spec.repetitions = int_setting(key, value);
        if (spec.repetitions < 1) {
            throw ConfigurationError("runs must be at least 1");
        }
    } else if (key == "seed") {
        spec.base_seed = seed_setting(key, value);
    } else if (key == "out") {
        spec.output_directory = value;
    } else if (key == "snapshot") {
        spec.snapshot_iterations = snapshot_setting(value);
    } else if (key == "omega") {
        config.initial_params.omega = double_setting(key, value);
    } else if (key == "alpha1") {
        config.initial_params.alpha1 = double_setting(key, value);
        spec.alpha_given = true;
    } else if (key == "alpha2") {
        config.initial_params.alpha2 = double_setting(key, value);
        spec.alpha_given = true;
    } else if (key == "epsilon") {
        config.epsilon = double_setting(key, value);
    } else if (key == "metric") {
        config.metric = parse_metric(value);
    } else if (key == "sigma") {
        config.sigma = double_setting(key, value);
    } else if (key == "sigma_log") {
        config.sigma_log = double_setting(key, value);
    } else if (key == "delta_mode") {
        config.delta_mode = parse_delta_mode(value);
    } else if (key == "sign_convention") {
        config.sign_convention = parse_sign_convention(value);
    } else if (key == "vmax") {
        config.vmax = double_setting(key, value);
    } else if (key == "omega_start") {
        config.omega_start = double_setting(key, value);
    } else if (key == "omega_end") {
        config.omega_end = double_setting(key, value);
    } else if (key == "goal_tolerance") {
        config.goal_tolerance = double_setting(key, value);
    } else if (key == "shift") {
        config.griewank_shift = double_setting(key, value);
    } else if (key == "min_step") {
        config.min_step = double_setting(key, value);
    } else if (key == "max_step") {
        config.max_step = double_setting(key, value);
    } else if (key == "powerlaw_exponent") {
        config.powerlaw_exponent = double_setting(key, value);
    } else {
        throw ConfigurationError("unknown configuration key: " + key);
    }
}

ExperimentSpec parse_settings(const std::string& text) {
    ExperimentSpec spec;
    std::istringstream stream(text);
    std::string line;
    int line_number = 0;
    while (std::getline(stream, line)) {
        line_number++;
        std::size_t comment = line.find('#');
        if (comment != std::string::npos) {
            line = line.substr(0, comment);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        std::size_t equals = line.find('=');
        if (equals == std::string::npos) {
            throw ConfigurationError("line " + std::to_string(line_number) +
                                     ": expected key = value");
        }
        std::string key = trim(line.substr(0, equals));
        std::string value = trim(line.substr(equals + 1));
        if (key.empty()) {
            throw ConfigurationError("line " + std::to_string(line_number) + ": missing key");
        }
        apply_setting(spec, key, value);
    }
    return spec;
}

void finalize_spec(ExperimentSpec& spec) {
    RunConfig& config = spec.config;
    if (config.algorithm == Algorithm::PsoLd) {
        if (!config.omega_start) {
            config.omega_start = 0.7;
        }
        if (!config.omega_end) {
            config.omega_end = 0.4;
        }
        if (!spec.alpha_given) {
            config.initial_params.alpha1 = 2.0;
            config.initial_params.alpha2 = 2.0;
        }
    }
    if (config.algorithm == Algorithm::PsoVmax && !config.vmax) {
        config.vmax = 50.0;
    }
    if (spec.repetitions < 1) {
        throw ConfigurationError("runs must be at least 1");
    }
    if (spec.snapshot_iterations.empty()) {
        throw ConfigurationError("snapshot list must not be empty");
    }
    validate_config(config);
    lookup_objective(config.objective_name, config.dimension, config.griewank_shift);
}

ExperimentSpec parse_experiment_text(const std::string& text) {
    ExperimentSpec spec = parse_settings(text);
    finalize_spec(spec);
    return spec;
}

std::string render_spec(const ExperimentSpec& spec) {
    const RunConfig& config = spec.config;
    std::string out;
    auto line = [&out](const std::string& key, const std::string& value) {
        out += key;
        out += " = ";
        out += value;
        out += '\n';
    };
    line("algorithm", algorithm_name(config.algorithm));
    line("function", config.objective_name);
    line("dims", std::to_string(config.dimension));
    line("particles", std::to_string(config.particle_count));
    line("iterations", std::to_string(config.max_iterations));
    line("runs", std::to_string(spec.repetitions));
    line("seed", std::to_string(spec.base_seed));
    line("out", spec.output_directory);
    std::string snapshots;
    for (std::size_t i = 0; i < spec.snapshot_iterations.size(); i++) {
        if (i > 0) {
            snapshots += ',';
        }
        snapshots += std::to_string(spec.snapshot_iterations[i]);
    }
    line("snapshot", snapshots);
    line("omega", format_double(config.initial_params.omega));
    line("alpha1", format_double(config.initial_params.alpha1));
    line("alpha2", format_double(config.initial_params.alpha2));
    line("epsilon", format_double(config.epsilon));
    line("metric", metric_name(config.metric));
    line("sigma", format_double(config.sigma));
    line("sigma_log", format_double(config.sigma_log));
    line("delta_mode", delta_mode_name(config.delta_mode));
    line("sign_convention", sign_convention_name(config.sign_convention));
    line("goal_tolerance", format_double(config.goal_tolerance));
    line("shift", format_double(config.griewank_shift));
    line("min_step", format_double(config.min_step));
    line("powerlaw_exponent", format_double(config.powerlaw_exponent));
    if (config.vmax) {
        line("vmax", format_double(*config.vmax));
    }
    if (config.omega_start) {
        line("omega_start", format_double(*config.omega_start));
    }
    if (config.omega_end) {
        line("omega_end", format_double(*config.omega_end));
    }
    if (config.max_step) {
        line("max_step", format_double(*config.max_step));
    }
    return out;
}

ExperimentSpec load_experiment_file(const std::string& path) {
    return parse_experiment_text(read_text_file(path));
}

}  // namespace crips
