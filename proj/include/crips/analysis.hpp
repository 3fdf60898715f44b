#ifndef CRIPS_ANALYSIS_HPP
#define CRIPS_ANALYSIS_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "crips/core.hpp"

namespace crips {

// One row of a run trace. The iteration-0 row captures the state right after
// initialization; rows 1..k capture the state after each loop iteration.
struct TraceRecord {
    long iteration = 0;
    double best_fitness = 0.0;
    double metric = 0.0;
    double omega = 0.0;
    double alpha1 = 0.0;
    double alpha2 = 0.0;

    bool operator==(const TraceRecord&) const = default;
};

struct ImprovementEvent {
    long iteration = 0;
    double best_fitness = 0.0;

    bool operator==(const ImprovementEvent&) const = default;
};

// Complete record of one run: configuration, seed, the initial state, one
// record per executed iteration (contiguous from 1), and the global-best
// improvements observed while the run was executing.
struct RunTrace {
    RunConfig config;
    std::uint64_t seed = 0;
    TraceRecord initial;
    std::vector<TraceRecord> records;
    std::vector<ImprovementEvent> improvement_events;
};

// Log-binned histogram plus the fit annotations attached by callers. Values
// above the last edge are tallied in overshoot_count; values below the first
// edge (zeros and negatives included) are tallied in discard_count.
struct HistogramFit {
    std::vector<double> bin_edges;
    std::vector<long long> counts;
    long long overshoot_count = 0;
    long long discard_count = 0;
    double fitted_exponent = 0.0;
    double fitted_prefactor = 0.0;
    std::pair<double, double> fit_range{0.0, 0.0};
};

struct PowerLawFit {
    double exponent = 0.0;   // slope of the log-log line; negative for decaying laws
    double prefactor = 0.0;  // density extrapolated to 1, from the intercept
    double residual = 0.0;   // sum of squared log-density deviations from the line
    int bins_used = 0;
};

struct FivePointSummary {
    double min = 0.0;
    double q1 = 0.0;
    double median = 0.0;
    double q3 = 0.0;
    double max = 0.0;
};

struct BatchSummary {
    int run_count = 0;
    FivePointSummary finals;
    long snapshot_iteration = 0;
    FivePointSummary snapshots;
};

// One event per strict decrease of best fitness across the records, measured
// against the initial record. Reconstructs exactly the events captured online.
std::vector<ImprovementEvent> extract_improvement_events(const RunTrace& trace);

// |D(t+1) - D(t)| over the recorded metric series, initial row included, so a
// trace with k records yields k changes. The trace must have been recorded
// with the centroid-distance metric; throws AnalysisError otherwise, and
// ArgumentError when there are no records to diff against.
std::vector<double> size_change_series(const RunTrace& trace);

// bins + 1 geometrically spaced edges; first and last are exactly low/high.
std::vector<double> histogram_bin_edges(int bins, double low, double high);

// Bin lower edges are inclusive; a value equal to the last edge lands in the
// last bin. Throws ArgumentError for non-positive low, high <= low, bins < 1.
HistogramFit log_binned_histogram(const std::vector<double>& values, int bins, double low,
                                  double high);

// Least-squares line through (log x, log y). Returns (slope, intercept).
// Throws ArgumentError with fewer than two points or non-positive
// coordinates.
std::pair<double, double> fit_loglog_line(const std::vector<std::pair<double, double>>& points);

// Everything strictly between the first and the last nonempty bin: the range
// runs from the upper edge of the first nonempty bin to the lower edge of the
// last one. Throws AnalysisError when the histogram is empty.
std::pair<double, double> default_fit_range(const HistogramFit& hist);

// Least-squares power law on (bin center, count / bin width) over the
// nonempty bins whose geometric-mean centers fall inside fit_range. Throws
// AnalysisError with fewer than three such bins.
PowerLawFit fit_powerlaw(const HistogramFit& hist, std::pair<double, double> fit_range);
PowerLawFit fit_powerlaw(const HistogramFit& hist);

// Best fitness the run had at the given iteration: the value at the largest
// recorded iteration not beyond it (the final value once the run has ended).
double fitness_at(const RunTrace& trace, long iteration);

double final_fitness(const RunTrace& trace);

// Linear-interpolation quantile of an ascending-sorted sample.
double linear_quantile(const std::vector<double>& sorted_values, double p);

// Five-point statistics of final fitness plus the same at a snapshot
// iteration. Throws ArgumentError on an empty batch.
BatchSummary summarize_runs(const std::vector<RunTrace>& traces, long snapshot_iteration);

}  // namespace crips

#endif  // CRIPS_ANALYSIS_HPP
