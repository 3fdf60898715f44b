#ifndef CRIPS_OBJECTIVES_HPP
#define CRIPS_OBJECTIVES_HPP

#include <functional>
#include <optional>
#include <string>

#include "crips/core.hpp"

namespace crips {

// A test function with its region of interest. Evaluation is total: points
// outside the region receive a constant penalty larger than any value of
// interest inside, so particles may roam freely.
struct Objective {
    std::string name;
    int dimension = 0;
    Vector region_low;
    Vector region_high;
    std::function<double(const Vector&)> evaluate;
    std::optional<Vector> optimum_position;
    std::optional<double> optimum_value;
};

// Schwefel function on [-500, 500]^N; outside the region the fitness is the
// constant 500*N.
double schwefel(const Vector& x);

// Griewank function on [-600, 600]^N; outside the region the fitness is the
// constant 700*N.
double griewank(const Vector& x);

// Griewank translated so its optimum sits at `shift`; the penalty region is
// shifted identically. Throws ArgumentError on length mismatch.
double shifted_griewank(const Vector& x, const Vector& shift);

// Registry lookup for {schwefel, griewank, shifted_griewank}. The shifted
// variant uses a uniform shift of `shift` in every dimension (default 60).
// Throws ConfigurationError for unknown names.
Objective lookup_objective(const std::string& name, int dimension, double shift = 60.0);

}  // namespace crips

#endif  // CRIPS_OBJECTIVES_HPP
