#ifndef CRIPS_CONFIG_HPP
#define CRIPS_CONFIG_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "crips/core.hpp"

namespace crips {

// A batch of identically configured runs; run r draws its seed as
// base_seed + r.
struct ExperimentSpec {
    RunConfig config;
    int repetitions = 1;
    std::uint64_t base_seed = 1;
    std::string output_directory = ".";
    std::vector<long> snapshot_iterations = {1000};

    // Whether these keys appeared explicitly, so that finalize_spec can apply
    // algorithm-conditional defaults without clobbering user choices.
    bool alpha_given = false;
};

// Applies one key = value setting. Throws ConfigurationError naming the key
// for unknown keys and unparseable or out-of-range values.
void apply_setting(ExperimentSpec& spec, const std::string& key, const std::string& value);

// Parses the flat key = value format; '#' starts a comment, blank lines are
// skipped. No defaults or validation are applied, so overrides can still be
// layered on top.
ExperimentSpec parse_settings(const std::string& text);

// Fills algorithm-conditional defaults (linear-descent schedule ends and
// attraction weights, maximum velocity) and validates the whole spec.
void finalize_spec(ExperimentSpec& spec);

// parse_settings followed by finalize_spec.
ExperimentSpec parse_experiment_text(const std::string& text);

// Renders every resolved setting, round-trippable through
// parse_experiment_text.
std::string render_spec(const ExperimentSpec& spec);

// Loads and parses a configuration file. Throws IoError when unreadable.
ExperimentSpec load_experiment_file(const std::string& path);

}  // namespace crips

#endif  // CRIPS_CONFIG_HPP
