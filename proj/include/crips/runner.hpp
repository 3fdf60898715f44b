#ifndef CRIPS_RUNNER_HPP
#define CRIPS_RUNNER_HPP

#include <string>
#include <vector>

#include "crips/analysis.hpp"
#include "crips/config.hpp"
#include "crips/core.hpp"

namespace crips {

// Executes one seeded run of the configured algorithm and records a full
// trace: the iteration-0 state, one record per executed iteration, and every
// global-best improvement. The run stops early once the best fitness falls
// below the goal tolerance, so a goal hit at iteration k leaves exactly k
// records.
RunTrace run_single(const RunConfig& config);

// Executes the batch, writes per-run trace and event files, the resolved
// configuration, and the batch summary into the output directory, and
// returns the traces.
std::vector<RunTrace> run_experiment(const ExperimentSpec& spec);

std::string trace_file_name(int run_index);
std::string events_file_name(int run_index);
extern const char* const kConfigFileName;
extern const char* const kSummaryFileName;

// Reads back a directory written by run_experiment.
ExperimentSpec read_experiment_spec(const std::string& directory);
std::vector<RunTrace> read_experiment(const std::string& directory);

// Five-point statistics of the batch as flat key = value text, one snapshot
// block per requested iteration.
std::string render_summary(const std::vector<RunTrace>& traces,
                           const std::vector<long>& snapshot_iterations);

}  // namespace crips

#endif  // CRIPS_RUNNER_HPP
