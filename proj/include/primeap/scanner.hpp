#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "primeap/arith.hpp"
#include "primeap/sieve.hpp"

namespace primeap {

// One open interval (n^v, (n+1)^v) scanned for primes in a residue class.
struct ScanRecord {
    std::uint64_t n = 0;
    unsigned v = 2;
    ResidueClass cls;
    std::uint64_t interval_lo = 0;  // n^v
    std::uint64_t interval_hi = 0;  // (n+1)^v
    std::uint64_t count = 0;
    std::optional<std::uint64_t> first_prime;
    std::optional<std::uint64_t> last_prime;
    bool exception = false;  // count == 0
};

struct ClassExceptionSummary {
    ResidueClass cls;
    std::uint64_t scanned = 0;  // records seen for this class ("not scanned" = absent)
    std::uint64_t exceptions = 0;
    std::optional<std::uint64_t> largest_exceptional_n;
    std::uint64_t clear_from_n = 0;  // smallest n with no exception at or beyond it
};

// Consecutive-prime record gaps below `limit`, with the two short-interval
// thresholds evaluated at the gap's left endpoint. Reported as data only;
// the threshold statements are asymptotic, not per-gap claims.
struct GapRecord {
    std::uint64_t p = 0;
    std::uint64_t next_p = 0;
    std::uint64_t gap = 0;
    std::optional<double> westzynthius_threshold;  // log p * lll p / llll p, when llll p > 0
    double power_threshold = 0.0;                  // (log p)^(1+epsilon)
};

// One sieve pass per n, shared across classes; records ordered by n
// ascending, classes in input order. threads > 1 fans out over n.
std::vector<ScanRecord> scan_legendre_ap(const Sieve& sieve, std::uint64_t n_min,
                                         std::uint64_t n_max, unsigned v,
                                         std::span<const ResidueClass> classes,
                                         unsigned threads = 1);

std::vector<ClassExceptionSummary> exception_summary(std::span<const ScanRecord> records);

std::vector<GapRecord> scan_gaps(const Sieve& sieve, std::uint64_t limit, double epsilon);

}  // namespace primeap
