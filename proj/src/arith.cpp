#include "primeap/arith.hpp"

#include <algorithm>
#include <cmath>

namespace primeap {

ResidueClass::ResidueClass(std::uint64_t q_, std::uint64_t a_) : q(q_), a(a_) {
    if (q == 0)
        throw std::domain_error("ResidueClass: modulus q must be positive");
    if (q == 1) {
        if (a != 0)
            throw std::domain_error("ResidueClass: canonical class for q=1 is (1,0)");
        return;
    }
    if (a >= q)
        throw std::domain_error("ResidueClass: residue a must satisfy a < q");
    if (gcd(a, q) != 1)
        throw std::domain_error("ResidueClass: gcd(a,q) != 1");
}

std::uint64_t euler_phi(std::uint64_t q) {
    if (q == 0)
        throw std::domain_error("euler_phi: q must be positive");
    std::uint64_t phi = q;
    std::uint64_t n = q;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        phi -= phi / d;
        while (n % d == 0) n /= d;
    }
    if (n > 1) phi -= phi / n;
    return phi;
}

namespace {

// Exact test r^k > x without overflow: result > x/r implies result*r > x.
bool pow_exceeds(std::uint64_t r, unsigned k, std::uint64_t x) {
    std::uint64_t result = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (r != 0 && result > x / r) return true;
        result *= r;
    }
    return result > x;
}

}  // namespace

std::uint64_t integer_kth_root(std::uint64_t x, unsigned k) {
    if (k == 0)
        throw std::domain_error("integer_kth_root: k must be >= 1");
    if (k == 1 || x <= 1) return x;

    // Float seed, then exact integer correction in both directions.
    std::uint64_t r = static_cast<std::uint64_t>(
        std::min(1.8e19, std::pow(static_cast<double>(x), 1.0 / k)));
    while (r > 0 && pow_exceeds(r, k, x)) --r;
    while (!pow_exceeds(r + 1, k, x)) ++r;
    return r;
}

std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp) {
    std::uint64_t result = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && result > UINT64_MAX / base) return std::nullopt;
        result *= base;
    }
    return result;
}

std::uint64_t checked_pow_or_throw(std::uint64_t base, unsigned exp) {
    auto r = checked_pow(base, exp);
    if (!r)
        throw std::overflow_error("integer power overflows 64 bits");
    return *r;
}

}  // namespace primeap
