// Test-only oracles, deliberately independent of the sieve/counting
// implementation paths they are used to check.
#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

namespace oracle {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = lo; n < hi; ++n)
        if (is_prime(n)) out.push_back(n);
    return out;
}

inline std::uint64_t phi(std::uint64_t q) {
    std::uint64_t count = 0;
    for (std::uint64_t k = 1; k <= q; ++k)
        if (std::gcd(k, q) == 1) ++count;
    return count;
}

// theta(x, q, a) by direct enumeration, long double accumulation.
inline double theta(std::uint64_t x, std::uint64_t q, std::uint64_t a) {
    long double sum = 0;
    for (std::uint64_t p = 2; p <= x; ++p)
        if (is_prime(p) && p % q == a) sum += std::log(static_cast<long double>(p));
    return static_cast<double>(sum);
}

// psi by direct enumeration of prime powers n = p^k <= x.
// condition_on_prime selects which side carries the residue condition.
inline double psi(std::uint64_t x, std::uint64_t q, std::uint64_t a,
                  bool condition_on_prime) {
    long double sum = 0;
    for (std::uint64_t p = 2; p <= x; ++p) {
        if (!is_prime(p)) continue;
        for (std::uint64_t pw = p;; pw *= p) {
            const std::uint64_t conditioned = condition_on_prime ? p : pw;
            if (conditioned % q == a) sum += std::log(static_cast<long double>(p));
            if (pw > x / p) break;
        }
    }
    return static_cast<double>(sum);
}

}  // namespace oracle
