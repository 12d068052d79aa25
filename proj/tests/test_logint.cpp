#include <doctest.h>

#include <cmath>

#include "primeap/logint.hpp"

using namespace primeap;

namespace {
// Frozen from an arbitrary-precision quadrature of int_2^x dt/log t
// (40-digit working precision), before this module was written.
struct LiOracle {
    double x;
    double value;
};
constexpr LiOracle kLiOracle[] = {
    {10.0, 5.120435724669805152678393},
    {100.0, 29.08097780396213714105715},
    {1000.0, 176.564494210034733902796},
    {10'000.0, 1245.092052119270966907927},
    {1'000'000.0, 78626.50399568206442707807},
};
}  // namespace

TEST_CASE("li at the frozen oracle points") {
    for (const auto& [x, value] : kLiOracle)
        CHECK(std::abs(li(x) - value) <= 1e-10 * value);
}

TEST_CASE("li boundary and domain errors") {
    CHECK(li(2.0) == 0.0);
    CHECK_THROWS_AS(li(1.5), std::domain_error);
    CHECK_THROWS_AS(li(10.0, QuadratureSpec{1e-3, 60}), std::domain_error);
    CHECK_THROWS_AS(li(10.0, QuadratureSpec{1e-12, 5}), std::domain_error);
}

TEST_CASE("li is strictly increasing on a grid") {
    double prev = 0.0;
    for (double x = 2.5; x < 1e6; x *= 1.7) {
        const double v = li(x);
        CHECK(v > prev);
        prev = v;
    }
}

TEST_CASE("central difference matches 1/log x") {
    for (double x : {10.0, 1000.0, 123'456.0}) {
        const double h = 1e-3 * x;
        const double deriv = (li(x + h) - li(x - h)) / (2 * h);
        CHECK(std::abs(deriv - 1.0 / std::log(x)) < 1e-4 / std::log(x));
    }
}

namespace {
// Composite Simpson over [a, b], independent of the module's quadrature.
double simpson(double a, double b, int panels) {
    const auto f = [](double t) { return 1.0 / std::log(t); };
    const double h = (b - a) / panels;
    double sum = f(a) + f(b);
    for (int i = 1; i < panels; ++i) sum += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
    return sum * h / 3.0;
}
}  // namespace

TEST_CASE("additivity over subintervals") {
    const double a = 50.0, b = 9000.0;
    const double parts = li(a) + simpson(a, b, 200'000);
    CHECK(std::abs(li(b) - parts) <= 1e-9 * li(b));
}
