#pragma once

#include <stdexcept>

namespace primeap {

struct QuadratureSpec {
    double relative_tolerance = 1e-12;
    int max_subdivisions = 60;
};

// Raised when the requested tolerance is not reached; carries the best value.
struct QuadratureConvergenceError : std::runtime_error {
    QuadratureConvergenceError(const char* what, double estimate)
        : std::runtime_error(what), best_estimate(estimate) {}
    double best_estimate;
};

// li(x) = integral of 1/log t over [2, x]. The lower limit 2 keeps the
// integrand smooth, so no principal-value handling is needed.
double li(double x, QuadratureSpec spec = {});

}  // namespace primeap
