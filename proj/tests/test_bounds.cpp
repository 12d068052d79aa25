#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "primeap/bounds.hpp"

using namespace primeap;

namespace {
const Sieve& shared_sieve() {
    static Sieve sieve;
    return sieve;
}
}  // namespace

TEST_CASE("check_pnt_ap psi at x = 10^3") {
    const auto v = check_pnt_ap(shared_sieve(), 1000, ResidueClass(3, 1), PntPart::Psi);
    CHECK(v.pass);
    CHECK(v.claim == ClaimId::PsiBound);
    CHECK(v.rhs == doctest::Approx(0.19 * 1000.0 / std::log(1000.0)).epsilon(1e-12));
    // lhs = |psi(10^3, 3, 1) - 1000/2|, recomputed from the oracle
    const double expected_lhs = std::abs(oracle::psi(1000, 3, 1, false) - 500.0);
    CHECK(v.lhs == doctest::Approx(expected_lhs).epsilon(1e-9));
}

TEST_CASE("check_pnt_ap pi at x = 10^3, q = 1") {
    const auto v = check_pnt_ap(shared_sieve(), 1000, ResidueClass(1, 0), PntPart::Pi);
    CHECK(v.pass);
    // pi(10^3) = 168 by trial division; li(10^3) from the frozen oracle
    CHECK(v.lhs == doctest::Approx(std::abs(168.0 - 176.564494210034733902796)).epsilon(1e-9));
    CHECK(v.rhs == doctest::Approx(0.53 * 1000.0 / std::pow(std::log(1000.0), 2)).epsilon(1e-12));
}

TEST_CASE("check_pnt_ap domain gates") {
    CHECK_THROWS_AS(check_pnt_ap(shared_sieve(), 999, ResidueClass(3, 1), PntPart::Psi),
                    std::domain_error);
    CHECK_THROWS_AS(check_pnt_ap(shared_sieve(), 1000, ResidueClass(200'000, 1), PntPart::Psi),
                    std::domain_error);
}

TEST_CASE("short interval diff verdicts") {
    const auto [lo, hi] =
        check_short_interval_diff(shared_sieve(), 10'000, 100, ResidueClass(3, 1));
    CHECK(lo.pass);
    CHECK(hi.pass);
    CHECK(lo.z == 100);
    CHECK(lo.claim == ClaimId::DiffLower);
    CHECK(hi.claim == ClaimId::DiffUpper);

    // z = x boundary is admissible
    const auto [lo2, hi2] =
        check_short_interval_diff(shared_sieve(), 10'000, 10'000, ResidueClass(1, 0));
    CHECK(lo2.pass);
    CHECK(hi2.pass);

    CHECK_THROWS_AS(check_short_interval_diff(shared_sieve(), 10'000, 0, ResidueClass(3, 1)),
                    std::domain_error);
    CHECK_THROWS_AS(
        check_short_interval_diff(shared_sieve(), 10'000, 10'001, ResidueClass(3, 1)),
        std::domain_error);
}

TEST_CASE("diff verdicts are implied by endpoint psi verdicts") {
    const auto& sieve = shared_sieve();
    for (std::uint64_t x : {1000ull, 31'623ull, 100'000ull}) {
        for (std::uint64_t z : {x / 10, x}) {
            for (std::uint64_t q : {1ull, 7ull, 12ull}) {
                const ResidueClass cls(q, q == 1 ? 0 : 1);
                const auto at_x = check_pnt_ap(sieve, x, cls, PntPart::Psi);
                const auto at_xz = check_pnt_ap(sieve, x + z, cls, PntPart::Psi);
                const auto [lo, hi] = check_short_interval_diff(sieve, x, z, cls);
                if (at_x.pass && at_xz.pass) {
                    CHECK(lo.pass);
                    CHECK(hi.pass);
                }
            }
        }
    }
}

TEST_CASE("squares bounds at the spec points") {
    const auto& sieve = shared_sieve();
    const auto v100 = check_squares_bounds(sieve, 100, ResidueClass(4, 1));
    CHECK(v100[0].pass);
    CHECK(v100[1].pass);
    CHECK(v100[2].pass);
    CHECK(v100[0].claim == ClaimId::SquaresLower);
    CHECK(v100[1].claim == ClaimId::SquaresUpper);
    CHECK(v100[2].claim == ClaimId::Merged);
    // D(100) is the exact psi difference over [10000, 10201]
    const double d = oracle::psi(10'201, 4, 1, false) - oracle::psi(10'000, 4, 1, false);
    CHECK(v100[0].lhs == doctest::Approx(d).epsilon(1e-9));

    const auto v32 = check_squares_bounds(sieve, 32, ResidueClass(1, 0));
    CHECK(v32[0].pass);
    CHECK(v32[1].pass);

    CHECK_THROWS_AS(check_squares_bounds(sieve, 10, ResidueClass(1, 0)), std::domain_error);
}

TEST_CASE("error_term_ratio decreasing trend") {
    const auto a = error_term_ratio(1000);
    const auto b = error_term_ratio(1'000'000);
    CHECK(std::isfinite(a.margin));
    CHECK(b.margin < a.margin);
    CHECK(a.pass);
    CHECK_NOTHROW(error_term_ratio(10));
    CHECK_THROWS_AS(error_term_ratio(9), std::domain_error);
}

TEST_CASE("exponent_condition exact rational check") {
    CHECK_FALSE(exponent_condition(2).pass);
    CHECK(exponent_condition(3).pass);
    CHECK(exponent_condition(19).pass);
    for (std::uint64_t v = 3; v <= 100; ++v) CHECK(exponent_condition(v).pass);
}

TEST_CASE("verdicts are reproducible") {
    const auto a = check_pnt_ap(shared_sieve(), 5000, ResidueClass(5, 3), PntPart::Theta);
    const auto b = check_pnt_ap(shared_sieve(), 5000, ResidueClass(5, 3), PntPart::Theta);
    CHECK(a.lhs == b.lhs);
    CHECK(a.margin == b.margin);
    CHECK(a.pass == b.pass);
}
