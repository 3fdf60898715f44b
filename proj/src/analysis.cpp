#include "crips/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

namespace crips {

std::vector<ImprovementEvent> extract_improvement_events(const RunTrace& trace) {
    std::vector<ImprovementEvent> events;
    double best = trace.initial.best_fitness;
    for (const TraceRecord& record : trace.records) {
        if (record.best_fitness < best) {
            best = record.best_fitness;
            events.push_back({record.iteration, record.best_fitness});
        }
    }
    return events;
}

std::vector<double> size_change_series(const RunTrace& trace) {
    if (trace.config.metric != Metric::CentroidDistance) {
        throw AnalysisError("size-change series needs a trace recorded with centroid_distance");
    }
    if (trace.records.empty()) {
        throw ArgumentError("size-change series needs at least one recorded iteration");
    }
    std::vector<double> series;
    series.reserve(trace.records.size());
    double previous = trace.initial.metric;
    for (const TraceRecord& record : trace.records) {
        series.push_back(std::fabs(record.metric - previous));
        previous = record.metric;
    }
    return series;
}

std::vector<double> histogram_bin_edges(int bins, double low, double high) {
    if (bins < 1) {
        throw ArgumentError("histogram bins must be positive");
    }
    if (!(low > 0.0)) {
        throw ArgumentError("histogram low edge must be positive");
    }
    if (!(high > low)) {
        throw ArgumentError("histogram high edge must exceed the low edge");
    }
    std::vector<double> edges(static_cast<std::size_t>(bins) + 1);
    double ratio = high / low;
    for (std::size_t i = 0; i < edges.size(); i++) {
        edges[i] = low * std::pow(ratio, static_cast<double>(i) / static_cast<double>(bins));
    }
    edges.front() = low;
    edges.back() = high;
    return edges;
}

HistogramFit log_binned_histogram(const std::vector<double>& values, int bins, double low,
                                  double high) {
    HistogramFit hist;
    hist.bin_edges = histogram_bin_edges(bins, low, high);
    hist.counts.assign(static_cast<std::size_t>(bins), 0);
    for (double value : values) {
        if (!(value >= low)) {
            hist.discard_count++;
            continue;
        }
        if (value > high) {
            hist.overshoot_count++;
            continue;
        }
        auto it = std::upper_bound(hist.bin_edges.begin(), hist.bin_edges.end(), value);
        std::size_t index = static_cast<std::size_t>(it - hist.bin_edges.begin()) - 1;
        if (index >= hist.counts.size()) {
            index = hist.counts.size() - 1;
        }
        hist.counts[index]++;
    }
    return hist;
}

std::pair<double, double> fit_loglog_line(const std::vector<std::pair<double, double>>& points) {
    if (points.size() < 2) {
        throw ArgumentError("log-log line fit needs at least two points");
    }
    double sum_x = 0.0;
    double sum_y = 0.0;
    double sum_xx = 0.0;
    double sum_xy = 0.0;
    for (const auto& [x, y] : points) {
        if (!(x > 0.0) || !(y > 0.0)) {
            throw ArgumentError("log-log line fit needs positive coordinates");
        }
        double lx = std::log(x);
        double ly = std::log(y);
        sum_x += lx;
        sum_y += ly;
        sum_xx += lx * lx;
        sum_xy += lx * ly;
    }
    double n = static_cast<double>(points.size());
    double denominator = n * sum_xx - sum_x * sum_x;
    if (denominator == 0.0) {
        throw ArgumentError("log-log line fit needs at least two distinct abscissae");
    }
    double slope = (n * sum_xy - sum_x * sum_y) / denominator;
    double intercept = (sum_y - slope * sum_x) / n;
    return {slope, intercept};
}

std::pair<double, double> default_fit_range(const HistogramFit& hist) {
    std::size_t first = hist.counts.size();
    std::size_t last = hist.counts.size();
    for (std::size_t i = 0; i < hist.counts.size(); i++) {
        if (hist.counts[i] > 0) {
            if (first == hist.counts.size()) {
                first = i;
            }
            last = i;
        }
    }
    if (first == hist.counts.size()) {
        throw AnalysisError("default fit range needs a nonempty histogram");
    }
    return {hist.bin_edges[first + 1], hist.bin_edges[last]};
}

PowerLawFit fit_powerlaw(const HistogramFit& hist, std::pair<double, double> fit_range) {
    std::vector<std::pair<double, double>> points;
    for (std::size_t i = 0; i < hist.counts.size(); i++) {
        if (hist.counts[i] <= 0) {
            continue;
        }
        double center = std::sqrt(hist.bin_edges[i] * hist.bin_edges[i + 1]);
        if (center < fit_range.first || center > fit_range.second) {
            continue;
        }
        double width = hist.bin_edges[i + 1] - hist.bin_edges[i];
        points.push_back({center, static_cast<double>(hist.counts[i]) / width});
    }
    if (points.size() < 3) {
        throw AnalysisError("power-law fit needs at least three nonempty bins in the fit range");
    }
    auto [slope, intercept] = fit_loglog_line(points);
    PowerLawFit fit;
    fit.exponent = slope;
    fit.prefactor = std::exp(intercept);
    fit.bins_used = static_cast<int>(points.size());
    for (const auto& [x, y] : points) {
        double deviation = std::log(y) - (intercept + slope * std::log(x));
        fit.residual += deviation * deviation;
    }
    return fit;
}

PowerLawFit fit_powerlaw(const HistogramFit& hist) {
    return fit_powerlaw(hist, default_fit_range(hist));
}

double fitness_at(const RunTrace& trace, long iteration) {
    if (iteration <= 0 || trace.records.empty()) {
        return trace.initial.best_fitness;
    }
    std::size_t index = std::min(static_cast<std::size_t>(iteration), trace.records.size());
    return trace.records[index - 1].best_fitness;
}

double final_fitness(const RunTrace& trace) {
    return trace.records.empty() ? trace.initial.best_fitness : trace.records.back().best_fitness;
}

double linear_quantile(const std::vector<double>& sorted_values, double p) {
    if (sorted_values.empty()) {
        throw ArgumentError("quantile needs a nonempty sample");
    }
    if (!(p >= 0.0) || !(p <= 1.0)) {
        throw ArgumentError("quantile probability must lie in [0, 1]");
    }
    double h = (static_cast<double>(sorted_values.size()) - 1.0) * p;
    std::size_t lo = static_cast<std::size_t>(h);
    if (lo + 1 >= sorted_values.size()) {
        return sorted_values.back();
    }
    return sorted_values[lo] + (h - static_cast<double>(lo)) * (sorted_values[lo + 1] - sorted_values[lo]);
}

namespace {

FivePointSummary five_point(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    FivePointSummary summary;
    summary.min = values.front();
    summary.q1 = linear_quantile(values, 0.25);
    summary.median = linear_quantile(values, 0.5);
    summary.q3 = linear_quantile(values, 0.75);
    summary.max = values.back();
    return summary;
}

}  // namespace

BatchSummary summarize_runs(const std::vector<RunTrace>& traces, long snapshot_iteration) {
    if (traces.empty()) {
        throw ArgumentError("summary needs at least one trace");
    }
    std::vector<double> finals;
    std::vector<double> snapshots;
    finals.reserve(traces.size());
    snapshots.reserve(traces.size());
    for (const RunTrace& trace : traces) {
        finals.push_back(final_fitness(trace));
        snapshots.push_back(fitness_at(trace, snapshot_iteration));
    }
    BatchSummary summary;
    summary.run_count = static_cast<int>(traces.size());
    summary.finals = five_point(std::move(finals));
    summary.snapshot_iteration = snapshot_iteration;
    summary.snapshots = five_point(std::move(snapshots));
    return summary;
}

}  // namespace crips
