#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>

#include "primeap/counting.hpp"
#include "primeap/logint.hpp"

namespace primeap {

// Explicit constants imported from the literature; fixed program data.
inline constexpr double kPsiConstant = 0.19;
inline constexpr double kThetaConstant = 0.40;
inline constexpr double kPiConstant = 0.53;

inline constexpr std::uint64_t kBoundThresholdX = 1000;  // validity floor x >= 10^3
inline constexpr std::uint64_t kBoundMaxModulus = 100'000;

enum class ClaimId {
    PsiBound,
    ThetaBound,
    PiBound,
    DiffLower,
    DiffUpper,
    SquaresLower,
    SquaresUpper,
    Merged,
    ErrorTermRatio,
    ExponentCondition,
};

const char* to_string(ClaimId id);

struct BoundVerdict {
    ClaimId claim = ClaimId::PsiBound;
    std::uint64_t x = 0;
    std::optional<std::uint64_t> z;
    ResidueClass cls;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;  // rhs - lhs for upper-type claims, lhs - rhs for lower-type
    bool pass = false;
    PsiVariant variant = PsiVariant::ConditionOnPrimePower;
};

enum class PntPart { Psi, Theta, Pi };

// |psi(x,q,a) - x/phi(q)| < 0.19 x/log x and the theta/pi analogues.
// All inequalities are checked strictly.
BoundVerdict check_pnt_ap(const Sieve& sieve, std::uint64_t x, ResidueClass cls,
                          PntPart part,
                          PsiVariant variant = PsiVariant::ConditionOnPrimePower);

// Same comparison from a precomputed snapshot (sweep-friendly). li_x is
// only consulted for the Pi part; pass NaN otherwise.
BoundVerdict pnt_ap_verdict(const CountSnapshot& snap, PntPart part, double li_x);

// psi(x+z,q,a) - psi(x,q,a) against z/phi(q) -/+ 0.19*((x+z)/log(x+z) + x/log x).
// The error term is the sum of the endpoint errors: that is what the
// subtraction of the two-sided endpoint bounds actually yields, and it is
// the form under which "endpoint verdicts pass implies difference verdicts
// pass" is a theorem.
std::pair<BoundVerdict, BoundVerdict> check_short_interval_diff(
    const Sieve& sieve, std::uint64_t x, std::uint64_t z, ResidueClass cls,
    PsiVariant variant = PsiVariant::ConditionOnPrimePower);

std::pair<BoundVerdict, BoundVerdict> short_interval_diff_verdict(
    const CountSnapshot& at_x, const CountSnapshot& at_x_plus_z);

// D(x) = psi((x+1)^2,q,a) - psi(x^2,q,a) against (2x+1)/phi(q) -/+ 0.19*sigma,
// sigma = (x+1)^2/log((x+1)^2) + x^2/log(x^2) (endpoint error sum, as for
// the short-interval difference). Returns {lower, upper, merged}.
std::array<BoundVerdict, 3> check_squares_bounds(
    const Sieve& sieve, std::uint64_t x, ResidueClass cls,
    PsiVariant variant = PsiVariant::ConditionOnPrimePower);

std::array<BoundVerdict, 3> squares_bounds_verdict(const CountSnapshot& at_sq,
                                                   const CountSnapshot& at_next_sq);

// Normalized remainder of delta = (2x+1)/(2 log x) + O(x/(log x)^2): margin
// stores |delta - (2x+1)/(2 log x)| * (log x)^2 / x and pass means it is at
// most `cap` (an empirical harness parameter, not a literature claim).
BoundVerdict error_term_ratio(std::uint64_t x, double cap = 2.0);

// 0.525 v < v - 1, decided in exact integers: 21v < 40(v-1), i.e. 19v > 40.
BoundVerdict exponent_condition(std::uint64_t v);

}  // namespace primeap
