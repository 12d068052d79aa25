#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "primeap/arith.hpp"

namespace primeap {

struct SieveConfig {
    std::uint64_t segment_size = std::uint64_t{1} << 22;  // integers per block
    std::uint64_t base_prime_limit = 1'000'000;           // supports hi <= 10^12
};

// All primes <= limit by a plain in-memory sieve. limit capped at 2^30.
std::vector<std::uint32_t> base_primes(std::uint64_t limit);

// Segmented, odd-only sieve over sub-intervals of [2, base_prime_limit^2].
// The base-prime cache is built at construction and read-only afterwards,
// so a const Sieve may be shared freely across threads.
class Sieve {
public:
    explicit Sieve(SieveConfig config = {});

    const SieveConfig& config() const { return config_; }
    std::uint64_t capability() const { return capability_; }  // max admissible hi

    // Visit primes in [lo, hi) ascending; fn returning false stops the walk.
    void for_each_prime(std::uint64_t lo, std::uint64_t hi,
                        const std::function<bool(std::uint64_t)>& fn) const;

    std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi,
                                         std::optional<ResidueClass> cls = {}) const;

    std::uint64_t count_range(std::uint64_t lo, std::uint64_t hi,
                              std::optional<ResidueClass> cls = {},
                              unsigned threads = 1) const;

    std::optional<std::uint64_t> first_prime_in(std::uint64_t lo, std::uint64_t hi,
                                                std::optional<ResidueClass> cls = {}) const;

    const std::vector<std::uint32_t>& base_prime_cache() const { return base_; }

private:
    void check_range(std::uint64_t lo, std::uint64_t hi) const;

    SieveConfig config_;
    std::uint64_t capability_;
    std::vector<std::uint32_t> base_;
};

}  // namespace primeap
