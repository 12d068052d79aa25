#include "primeap/logint.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>

namespace primeap {

double li(double x, QuadratureSpec spec) {
    if (!(x >= 2.0))
        throw std::domain_error("li: x must be >= 2");
    if (spec.relative_tolerance <= 0 || spec.relative_tolerance > 1e-6)
        throw std::domain_error("li: relative_tolerance must be in (0, 1e-6]");
    if (spec.max_subdivisions < 10)
        throw std::domain_error("li: max_subdivisions must be >= 10");
    if (x == 2.0) return 0.0;

    const auto integrand = [](double t) { return 1.0 / std::log(t); };
    double error = 0.0;
    const double value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
        integrand, 2.0, x, spec.max_subdivisions, spec.relative_tolerance, &error);
    if (value != 0.0 && std::abs(error / value) > spec.relative_tolerance)
        throw QuadratureConvergenceError("li: quadrature did not converge", value);
    return value;
}

}  // namespace primeap
