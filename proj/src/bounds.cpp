#include "primeap/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace primeap {

const char* to_string(ClaimId id) {
    switch (id) {
        case ClaimId::PsiBound: return "psi_bound";
        case ClaimId::ThetaBound: return "theta_bound";
        case ClaimId::PiBound: return "pi_bound";
        case ClaimId::DiffLower: return "diff_lower";
        case ClaimId::DiffUpper: return "diff_upper";
        case ClaimId::SquaresLower: return "squares_lower";
        case ClaimId::SquaresUpper: return "squares_upper";
        case ClaimId::Merged: return "merged";
        case ClaimId::ErrorTermRatio: return "error_term_ratio";
        case ClaimId::ExponentCondition: return "exponent_condition";
    }
    return "?";
}

namespace {

void check_theorem_domain(std::uint64_t x, const ResidueClass& cls) {
    if (x < kBoundThresholdX)
        throw std::domain_error("bounds: x must be >= 10^3 (theorem threshold)");
    if (cls.q > kBoundMaxModulus)
        throw std::domain_error("bounds: modulus q must be <= 10^5");
}

// (x+1)^2 / log((x+1)^2) - x^2 / log(x^2)
double squares_delta(double x) {
    const double a = x + 1.0;
    return a * a / std::log(a * a) - x * x / std::log(x * x);
}

// Subtracting the two-sided endpoint bounds adds their error terms; the
// valid enclosure for a difference carries the SUM u/log u + w/log w, not
// the difference of the two terms.
double endpoint_error_sum(double u, double w) {
    return kPsiConstant * (u / std::log(u) + w / std::log(w));
}

}  // namespace

BoundVerdict pnt_ap_verdict(const CountSnapshot& snap, PntPart part, double li_x) {
    check_theorem_domain(snap.x, snap.cls);
    const double x = static_cast<double>(snap.x);
    const double phi = static_cast<double>(euler_phi(snap.cls.q));
    const double lx = std::log(x);

    BoundVerdict v;
    v.x = snap.x;
    v.cls = snap.cls;
    v.variant = snap.variant;
    switch (part) {
        case PntPart::Psi:
            v.claim = ClaimId::PsiBound;
            v.lhs = std::abs(snap.psi - x / phi);
            v.rhs = kPsiConstant * x / lx;
            break;
        case PntPart::Theta:
            v.claim = ClaimId::ThetaBound;
            v.lhs = std::abs(snap.theta - x / phi);
            v.rhs = kThetaConstant * x / lx;
            break;
        case PntPart::Pi:
            v.claim = ClaimId::PiBound;
            v.lhs = std::abs(static_cast<double>(snap.pi) - li_x / phi);
            v.rhs = kPiConstant * x / (lx * lx);
            break;
    }
    v.margin = v.rhs - v.lhs;
    v.pass = v.lhs < v.rhs;
    return v;
}

BoundVerdict check_pnt_ap(const Sieve& sieve, std::uint64_t x, ResidueClass cls,
                          PntPart part, PsiVariant variant) {
    check_theorem_domain(x, cls);
    const double li_x = part == PntPart::Pi ? li(static_cast<double>(x)) : NAN;
    return pnt_ap_verdict(snapshot(sieve, x, cls, variant), part, li_x);
}

std::pair<BoundVerdict, BoundVerdict> short_interval_diff_verdict(
    const CountSnapshot& at_x, const CountSnapshot& at_x_plus_z) {
    if (at_x.cls != at_x_plus_z.cls || at_x.variant != at_x_plus_z.variant)
        throw std::domain_error("short_interval_diff: mismatched snapshots");
    if (at_x_plus_z.x <= at_x.x)
        throw std::domain_error("short_interval_diff: z must be >= 1");
    const std::uint64_t z = at_x_plus_z.x - at_x.x;
    if (z > at_x.x)
        throw std::domain_error("short_interval_diff: z must be <= x");
    check_theorem_domain(at_x.x, at_x.cls);

    const double x = static_cast<double>(at_x.x);
    const double xz = static_cast<double>(at_x_plus_z.x);
    const double phi = static_cast<double>(euler_phi(at_x.cls.q));
    const double dpsi = at_x_plus_z.psi - at_x.psi;
    const double main = (xz - x) / phi;
    const double err = endpoint_error_sum(xz, x);

    BoundVerdict lower;
    lower.claim = ClaimId::DiffLower;
    lower.x = at_x.x;
    lower.z = z;
    lower.cls = at_x.cls;
    lower.variant = at_x.variant;
    lower.lhs = dpsi;
    lower.rhs = main - err;
    lower.margin = lower.lhs - lower.rhs;
    lower.pass = lower.lhs > lower.rhs;

    BoundVerdict upper = lower;
    upper.claim = ClaimId::DiffUpper;
    upper.rhs = main + err;
    upper.margin = upper.rhs - upper.lhs;
    upper.pass = upper.lhs < upper.rhs;
    return {lower, upper};
}

std::pair<BoundVerdict, BoundVerdict> check_short_interval_diff(
    const Sieve& sieve, std::uint64_t x, std::uint64_t z, ResidueClass cls,
    PsiVariant variant) {
    check_theorem_domain(x, cls);
    if (z == 0)
        throw std::domain_error("short_interval_diff: z must be >= 1");
    if (z > x)
        throw std::domain_error("short_interval_diff: z must be <= x");
    const std::uint64_t xs[] = {x, x + z};
    const ResidueClass cs[] = {cls};
    const auto snaps = snapshot_grid(sieve, xs, cs, variant);
    return short_interval_diff_verdict(snaps[0], snaps[1]);
}

std::array<BoundVerdict, 3> squares_bounds_verdict(const CountSnapshot& at_sq,
                                                   const CountSnapshot& at_next_sq) {
    if (at_sq.cls != at_next_sq.cls || at_sq.variant != at_next_sq.variant)
        throw std::domain_error("squares_bounds: mismatched snapshots");
    const std::uint64_t x = integer_kth_root(at_sq.x, 2);
    if (x * x != at_sq.x || (x + 1) * (x + 1) != at_next_sq.x)
        throw std::domain_error("squares_bounds: snapshots must sit at x^2 and (x+1)^2");
    if (x < 32)
        throw std::domain_error("squares_bounds: x must be >= 32 so x^2 >= 10^3");
    check_theorem_domain(at_sq.x, at_sq.cls);

    const double xd = static_cast<double>(x);
    const double phi = static_cast<double>(euler_phi(at_sq.cls.q));
    const double d = at_next_sq.psi - at_sq.psi;
    const double main = (2.0 * xd + 1.0) / phi;
    const double err = endpoint_error_sum((xd + 1.0) * (xd + 1.0), xd * xd);

    BoundVerdict lower;
    lower.claim = ClaimId::SquaresLower;
    lower.x = x;
    lower.cls = at_sq.cls;
    lower.variant = at_sq.variant;
    lower.lhs = d;
    lower.rhs = main - err;
    lower.margin = lower.lhs - lower.rhs;
    lower.pass = lower.lhs > lower.rhs;

    BoundVerdict upper = lower;
    upper.claim = ClaimId::SquaresUpper;
    upper.rhs = main + err;
    upper.margin = upper.rhs - upper.lhs;
    upper.pass = upper.lhs < upper.rhs;

    BoundVerdict merged = lower;
    merged.claim = ClaimId::Merged;
    merged.rhs = main;
    merged.margin = std::min(lower.margin, upper.margin);
    merged.pass = lower.pass && upper.pass;
    return {lower, upper, merged};
}

std::array<BoundVerdict, 3> check_squares_bounds(const Sieve& sieve, std::uint64_t x,
                                                 ResidueClass cls, PsiVariant variant) {
    if (x < 32)
        throw std::domain_error("squares_bounds: x must be >= 32 so x^2 >= 10^3");
    const std::uint64_t next_sq = checked_pow_or_throw(x + 1, 2);
    const std::uint64_t xs[] = {x * x, next_sq};
    const ResidueClass cs[] = {cls};
    const auto snaps = snapshot_grid(sieve, xs, cs, variant);
    return squares_bounds_verdict(snaps[0], snaps[1]);
}

BoundVerdict error_term_ratio(std::uint64_t x, double cap) {
    if (x < 10)
        throw std::domain_error("error_term_ratio: x must be >= 10");
    if (!(cap > 0))
        throw std::domain_error("error_term_ratio: cap must be positive");
    const double xd = static_cast<double>(x);
    const double lx = std::log(xd);
    const double approx = (2.0 * xd + 1.0) / (2.0 * lx);

    BoundVerdict v;
    v.claim = ClaimId::ErrorTermRatio;
    v.x = x;
    v.lhs = std::abs(squares_delta(xd) - approx);
    v.rhs = cap;
    v.margin = v.lhs * lx * lx / xd;  // normalized ratio
    v.pass = v.margin <= cap;
    return v;
}

BoundVerdict exponent_condition(std::uint64_t v) {
    BoundVerdict out;
    out.claim = ClaimId::ExponentCondition;
    out.x = v;
    out.lhs = 0.525 * static_cast<double>(v);
    out.rhs = static_cast<double>(v) - 1.0;
    out.margin = out.rhs - out.lhs;
    // 0.525 v < v - 1  <=>  21v < 40v - 40  <=>  19v > 40, decided exactly.
    out.pass = 19 * v > 40;
    return out;
}

}  // namespace primeap
