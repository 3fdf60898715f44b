#ifndef CRIPS_CORE_HPP
#define CRIPS_CORE_HPP

#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace crips {

using Vector = std::vector<double>;

// Raised for invalid run/experiment configuration (unknown names, out-of-range values).
struct ConfigurationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised for invalid arguments to library operations.
struct ArgumentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Raised when an analysis cannot be performed on the given data.
struct AnalysisError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised for file read/write failures.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Algorithm {
    Pso,
    PsoVmax,
    PsoLd,
    Crips,
    RandUniform,
    RandPowerlaw,
};

enum class Metric {
    VelocityNorm,
    CentroidDistance,
    InterparticleDistance,
};

// How the controller measures the change in the diversity metric between
// iterations: as a raw difference in problem-space units, or as a difference
// of logarithms (a scale-free relative change).
enum class DeltaMode {
    Absolute,
    LogRatio,
};

// Direction of the parameter response to a metric change. Verbatim follows
// the update rule as printed (expansion raises the parameters); Stabilizing
// negates it (expansion lowers the parameters, contraction raises them).
enum class SignConvention {
    Verbatim,
    Stabilizing,
};

struct PsoParams {
    double omega = 0.815;
    double alpha1 = 1.0;
    double alpha2 = 1.0;

    bool operator==(const PsoParams&) const = default;
};

struct ParticleState {
    Vector position;
    Vector velocity;
    Vector best_position;
    double best_fitness = std::numeric_limits<double>::infinity();

    bool operator==(const ParticleState&) const = default;
};

struct SwarmState {
    std::vector<ParticleState> particles;
    Vector global_best_position;
    double global_best_fitness = std::numeric_limits<double>::infinity();
    PsoParams params;
    long iteration = 0;

    bool operator==(const SwarmState&) const = default;
};

// Deterministic random stream: one per run, consumed in a documented fixed
// order so that identical seeds replay bit-identically.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    // Uniform double in [0, 1) with 53 random bits.
    double next_uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    // Uniform double in [low, high).
    double next_uniform(double low, double high) {
        return low + next_uniform() * (high - low);
    }

    // Standard normal via Box-Muller; consumes exactly two uniforms per call.
    double next_normal();

    std::uint64_t seed() const { return seed_; }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

struct RunConfig {
    Algorithm algorithm = Algorithm::Pso;
    int dimension = 20;
    int particle_count = 25;
    long max_iterations = 10000;
    std::uint64_t seed = 1;
    std::string objective_name = "schwefel";
    PsoParams initial_params;
    double epsilon = 0.15;
    Metric metric = Metric::VelocityNorm;
    // Response scale for Absolute delta mode, in problem-space units.
    double sigma = 200.0;
    // Response scale for LogRatio delta mode, in log units.
    double sigma_log = 2.0;
    DeltaMode delta_mode = DeltaMode::LogRatio;
    SignConvention sign_convention = SignConvention::Stabilizing;
    std::optional<double> vmax;
    std::optional<double> omega_start;
    std::optional<double> omega_end;
    double goal_tolerance = 0.001;
    double griewank_shift = 60.0;
    // Power-law baseline sampler settings; max_step defaults to the diagonal
    // of the objective's region of interest when unset.
    double powerlaw_exponent = 2.0;
    double min_step = 1.0;
    std::optional<double> max_step;

    bool operator==(const RunConfig&) const = default;
};

// Throws ConfigurationError naming the offending field.
void validate_config(const RunConfig& config);

struct Objective;

// n independent uniform components in [low, high). Throws ArgumentError if
// low >= high.
Vector uniform_vector(RngStream& rng, int n, double low, double high);

// Positions uniform inside the objective's region of interest; velocities
// uniform in one tenth of the region width, centered on zero. Personal bests
// start at the initial positions; the global best is consistent with them.
// Stream order: per particle, all position components then all velocity
// components.
SwarmState initialize_swarm(const RunConfig& config, const Objective& objective, RngStream& rng);

// Same, looking the objective up by config.objective_name. Throws
// ConfigurationError for an unknown name.
SwarmState initialize_swarm(const RunConfig& config, RngStream& rng);

// Rescans personal bests and updates the global best. Strict improvement
// only; on exact ties the lowest particle index wins. Returns the index of
// the global-best particle found by the scan.
int refresh_global_best(SwarmState& swarm);

const char* algorithm_name(Algorithm algorithm);
const char* metric_name(Metric metric);
const char* delta_mode_name(DeltaMode mode);
const char* sign_convention_name(SignConvention sign);

Algorithm parse_algorithm(const std::string& text);
Metric parse_metric(const std::string& text);
DeltaMode parse_delta_mode(const std::string& text);
SignConvention parse_sign_convention(const std::string& text);

}  // namespace crips

#endif  // CRIPS_CORE_HPP
