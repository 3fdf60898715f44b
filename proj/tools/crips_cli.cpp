#include <cstdio>
#include <exception>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "crips/analysis.hpp"
#include "crips/config.hpp"
#include "crips/core.hpp"
#include "crips/runner.hpp"
#include "crips/trace_io.hpp"

namespace {

namespace fs = std::filesystem;

// Command-line flags funnel through the same key = value settings as the
// configuration file, so validation and error wording stay uniform and the
// command line always wins over the file.
const std::vector<std::pair<const char*, const char*>> kSettingFlags = {
    {"--algorithm", "algorithm"},
    {"--function", "function"},
    {"--dims", "dims"},
    {"--particles", "particles"},
    {"--iterations", "iterations"},
    {"--runs", "runs"},
    {"--seed", "seed"},
    {"--epsilon", "epsilon"},
    {"--metric", "metric"},
    {"--sigma", "sigma"},
    {"--sigma-log", "sigma_log"},
    {"--delta-mode", "delta_mode"},
    {"--sign-convention", "sign_convention"},
    {"--vmax", "vmax"},
    {"--omega", "omega"},
    {"--alpha1", "alpha1"},
    {"--alpha2", "alpha2"},
    {"--omega-start", "omega_start"},
    {"--omega-end", "omega_end"},
    {"--goal-tolerance", "goal_tolerance"},
    {"--shift", "shift"},
    {"--min-step", "min_step"},
    {"--max-step", "max_step"},
    {"--powerlaw-exponent", "powerlaw_exponent"},
    {"--out", "out"},
    {"--snapshot", "snapshot"},
};

int run_batch(const std::string& config_path,
              const std::vector<std::pair<std::string, std::string>>& overrides) {
    crips::ExperimentSpec spec;
    if (!config_path.empty()) {
        spec = crips::parse_settings(crips::read_text_file(config_path));
    }
    for (const auto& [key, value] : overrides) {
        crips::apply_setting(spec, key, value);
    }
    crips::finalize_spec(spec);
    std::vector<crips::RunTrace> traces = crips::run_experiment(spec);
    std::printf("wrote %d run(s) to %s\n", spec.repetitions, spec.output_directory.c_str());
    std::fputs(crips::render_summary(traces, spec.snapshot_iterations).c_str(), stdout);
    return 0;
}

int run_analyze(const std::string& directory, int bins, double low, double high,
                bool fit_range_given, double fit_low, double fit_high) {
    std::vector<crips::RunTrace> traces = crips::read_experiment(directory);
    std::vector<double> changes;
    for (const crips::RunTrace& trace : traces) {
        std::vector<double> series = crips::size_change_series(trace);
        changes.insert(changes.end(), series.begin(), series.end());
    }
    crips::HistogramFit hist = crips::log_binned_histogram(changes, bins, low, high);

    std::string histogram_text = "bin_low,bin_high,count,density\n";
    for (std::size_t i = 0; i < hist.counts.size(); i++) {
        double width = hist.bin_edges[i + 1] - hist.bin_edges[i];
        histogram_text += crips::format_double(hist.bin_edges[i]);
        histogram_text += ',';
        histogram_text += crips::format_double(hist.bin_edges[i + 1]);
        histogram_text += ',';
        histogram_text += std::to_string(hist.counts[i]);
        histogram_text += ',';
        histogram_text += crips::format_double(static_cast<double>(hist.counts[i]) / width);
        histogram_text += '\n';
    }

    std::string fit_text;
    fit_text += "values = " + std::to_string(changes.size()) + "\n";
    fit_text += "overshoot_count = " + std::to_string(hist.overshoot_count) + "\n";
    fit_text += "discard_count = " + std::to_string(hist.discard_count) + "\n";
    try {
        std::pair<double, double> range =
            fit_range_given ? std::pair<double, double>{fit_low, fit_high}
                            : crips::default_fit_range(hist);
        crips::PowerLawFit fit = crips::fit_powerlaw(hist, range);
        fit_text += "fit_low = " + crips::format_double(range.first) + "\n";
        fit_text += "fit_high = " + crips::format_double(range.second) + "\n";
        fit_text += "exponent = " + crips::format_double(fit.exponent) + "\n";
        fit_text += "prefactor = " + crips::format_double(fit.prefactor) + "\n";
        fit_text += "residual = " + crips::format_double(fit.residual) + "\n";
        fit_text += "bins_used = " + std::to_string(fit.bins_used) + "\n";
    } catch (const crips::AnalysisError& error) {
        fit_text += std::string("fit_error = ") + error.what() + "\n";
    }

    fs::path base(directory);
    crips::write_text_file((base / "histogram.csv").string(), histogram_text);
    crips::write_text_file((base / "fit.txt").string(), fit_text);
    std::fputs(fit_text.c_str(), stdout);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Critical particle swarm experiment harness"};
    app.require_subcommand(0, 1);

    std::string config_path;
    app.add_option("--config", config_path, "Configuration file (flat key = value lines)");

    std::vector<std::pair<std::string, CLI::Option*>> setting_options;
    std::vector<std::string> setting_values(kSettingFlags.size());
    for (std::size_t i = 0; i < kSettingFlags.size(); i++) {
        CLI::Option* option =
            app.add_option(kSettingFlags[i].first, setting_values[i],
                           std::string("Sets the '") + kSettingFlags[i].second + "' key");
        setting_options.push_back({kSettingFlags[i].second, option});
    }

    CLI::App* analyze =
        app.add_subcommand("analyze", "Histogram and power-law fit of recorded size changes");
    std::string analyze_dir;
    int bins = 40;
    double low = 1e-2;
    double high = 1e4;
    double fit_low = 0.0;
    double fit_high = 0.0;
    analyze->add_option("--out", analyze_dir, "Experiment directory to read")->required();
    analyze->add_option("--bins", bins, "Number of geometric bins");
    analyze->add_option("--low", low, "Lowest bin edge");
    analyze->add_option("--high", high, "Highest bin edge");
    CLI::Option* fit_low_option = analyze->add_option("--fit-low", fit_low, "Fit range low edge");
    CLI::Option* fit_high_option =
        analyze->add_option("--fit-high", fit_high, "Fit range high edge");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& error) {
        int code = app.exit(error);
        return code == 0 ? 0 : 2;
    }

    try {
        if (analyze->parsed()) {
            bool fit_range_given = fit_low_option->count() > 0 && fit_high_option->count() > 0;
            return run_analyze(analyze_dir, bins, low, high, fit_range_given, fit_low, fit_high);
        }
        std::vector<std::pair<std::string, std::string>> overrides;
        for (std::size_t i = 0; i < setting_options.size(); i++) {
            if (setting_options[i].second->count() > 0) {
                overrides.push_back({setting_options[i].first, setting_values[i]});
            }
        }
        return run_batch(config_path, overrides);
    } catch (const crips::IoError& error) {
        std::fprintf(stderr, "io error: %s\n", error.what());
        return 3;
    } catch (const crips::ConfigurationError& error) {
        std::fprintf(stderr, "configuration error: %s\n", error.what());
        return 2;
    } catch (const crips::AnalysisError& error) {
        std::fprintf(stderr, "analysis error: %s\n", error.what());
        return 2;
    } catch (const crips::ArgumentError& error) {
        std::fprintf(stderr, "argument error: %s\n", error.what());
        return 2;
    } catch (const std::exception& error) {
        std::fprintf(stderr, "error: %s\n", error.what());
        return 1;
    }
}
