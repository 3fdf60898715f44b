#include "crips/objectives.hpp"

#include <cmath>

namespace crips {

namespace {

bool inside_box(const Vector& x, double low, double high) {
    for (double xi : x) {
        if (!(xi >= low && xi <= high)) {
            return false;
        }
    }
    return true;
}

}  // namespace

double schwefel(const Vector& x) {
    double n = static_cast<double>(x.size());
    if (!inside_box(x, -500.0, 500.0)) {
        return 500.0 * n;
    }
    double sum = 0.0;
    for (double xi : x) {
        sum += xi * std::sin(std::sqrt(std::fabs(xi)));
    }
    return 418.9829 * n - sum;
}

double griewank(const Vector& x) {
    double n = static_cast<double>(x.size());
    if (!inside_box(x, -600.0, 600.0)) {
        return 700.0 * n;
    }
    double sum = 0.0;
    double product = 1.0;
    for (std::size_t i = 0; i < x.size(); i++) {
        sum += x[i] * x[i] / 4000.0;
        product *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
    }
    return 1.0 + sum - product;
}

double shifted_griewank(const Vector& x, const Vector& shift) {
    if (x.size() != shift.size()) {
        throw ArgumentError("shifted_griewank: position and shift lengths differ");
    }
    Vector translated(x.size());
    for (std::size_t i = 0; i < x.size(); i++) {
        translated[i] = x[i] - shift[i];
    }
    return griewank(translated);
}

Objective lookup_objective(const std::string& name, int dimension, double shift) {
    if (dimension <= 0) {
        throw ConfigurationError("objective dimension must be positive");
    }
    std::size_t n = static_cast<std::size_t>(dimension);
    Objective objective;
    objective.name = name;
    objective.dimension = dimension;
    if (name == "schwefel") {
        objective.region_low.assign(n, -500.0);
        objective.region_high.assign(n, 500.0);
        objective.evaluate = [](const Vector& x) { return schwefel(x); };
        objective.optimum_position = Vector(n, 420.9687);
        objective.optimum_value = 0.0;
        return objective;
    }
    if (name == "griewank") {
        objective.region_low.assign(n, -600.0);
        objective.region_high.assign(n, 600.0);
        objective.evaluate = [](const Vector& x) { return griewank(x); };
        objective.optimum_position = Vector(n, 0.0);
        objective.optimum_value = 0.0;
        return objective;
    }
    if (name == "shifted_griewank") {
        Vector shift_vector(n, shift);
        objective.region_low.assign(n, -600.0 + shift);
        objective.region_high.assign(n, 600.0 + shift);
        objective.evaluate = [shift_vector](const Vector& x) {
            return shifted_griewank(x, shift_vector);
        };
        objective.optimum_position = shift_vector;
        objective.optimum_value = 0.0;
        return objective;
    }
    throw ConfigurationError("unknown objective: " + name);
}

}  // namespace crips
