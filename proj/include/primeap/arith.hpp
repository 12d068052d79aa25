#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace primeap {

// An arithmetic progression a mod q with gcd(a,q)=1.
// q=1 is the degenerate "all primes" class with canonical residue 0.
struct ResidueClass {
    std::uint64_t q = 1;
    std::uint64_t a = 0;

    ResidueClass() = default;
    ResidueClass(std::uint64_t q_, std::uint64_t a_);

    bool contains(std::uint64_t n) const { return n % q == a; }
    bool operator==(const ResidueClass&) const = default;
};

inline std::uint64_t gcd(std::uint64_t u, std::uint64_t v) {
    return std::gcd(u, v);
}

// #{1 <= k <= q : gcd(k,q)=1}, by trial-division factorization.
std::uint64_t euler_phi(std::uint64_t q);

// Largest r with r^k <= x, exact integer arithmetic throughout.
std::uint64_t integer_kth_root(std::uint64_t x, unsigned k);

// base^exp, or nullopt on uint64 overflow.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp);

// Throwing variant for callers that treat overflow as a usage error.
std::uint64_t checked_pow_or_throw(std::uint64_t base, unsigned exp);

}  // namespace primeap
