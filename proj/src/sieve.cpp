#include "primeap/sieve.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>

namespace primeap {

namespace {

constexpr std::uint64_t kMaxBasePrimeLimit = std::uint64_t{1} << 30;
constexpr std::uint64_t kMaxCapability = 1'000'000'000'000ull;  // 10^12

}  // namespace

std::vector<std::uint32_t> base_primes(std::uint64_t limit) {
    if (limit < 2)
        throw std::domain_error("base_primes: limit must be >= 2");
    if (limit > kMaxBasePrimeLimit)
        throw std::domain_error("base_primes: limit exceeds memory budget (2^30)");
    std::vector<std::uint8_t> composite(limit + 1, 0);
    std::vector<std::uint32_t> primes;
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        primes.push_back(static_cast<std::uint32_t>(i));
        for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = 1;
    }
    return primes;
}

Sieve::Sieve(SieveConfig config) : config_(config) {
    if (config_.segment_size < (std::uint64_t{1} << 10))
        throw std::domain_error("SieveConfig: segment_size must be >= 2^10");
    if (config_.base_prime_limit < 2)
        throw std::domain_error("SieveConfig: base_prime_limit must be >= 2");
    base_ = base_primes(config_.base_prime_limit);
    capability_ = std::min(config_.base_prime_limit * config_.base_prime_limit,
                           kMaxCapability);
}

void Sieve::check_range(std::uint64_t lo, std::uint64_t hi) const {
    if (lo > hi)
        throw std::domain_error("sieve: invalid range, lo > hi");
    if (lo < 2)
        throw std::domain_error("sieve: lo must be >= 2");
    if (hi > capability_)
        throw std::domain_error("sieve: hi exceeds sieve capability");
}

void Sieve::for_each_prime(std::uint64_t lo, std::uint64_t hi,
                           const std::function<bool(std::uint64_t)>& fn) const {
    check_range(lo, hi);
    if (lo >= hi) return;
    if (lo <= 2 && 2 < hi && !fn(2)) return;

    std::uint64_t s = std::max<std::uint64_t>(lo, 3);
    if (s % 2 == 0) ++s;
    std::vector<std::uint64_t> bits;
    while (s < hi) {
        const std::uint64_t e = std::min(hi, s + config_.segment_size);
        const std::uint64_t n_odd = (e - s + 1) / 2;  // odds in [s, e), s odd
        bits.assign((n_odd + 63) / 64, ~std::uint64_t{0});

        for (std::uint32_t p : base_) {
            if (p == 2) continue;
            const std::uint64_t pp = std::uint64_t{p} * p;
            if (pp >= e) break;
            std::uint64_t m = std::max(pp, (s + p - 1) / p * p);
            if (m % 2 == 0) m += p;
            for (std::uint64_t v = m; v < e; v += 2 * std::uint64_t{p})
                bits[(v - s) >> 7] &= ~(std::uint64_t{1} << (((v - s) >> 1) & 63));
        }

        for (std::uint64_t w = 0; w < bits.size(); ++w) {
            std::uint64_t word = bits[w];
            while (word != 0) {
                const unsigned bit = static_cast<unsigned>(__builtin_ctzll(word));
                word &= word - 1;
                const std::uint64_t idx = w * 64 + bit;
                if (idx >= n_odd) break;
                if (!fn(s + 2 * idx)) return;
            }
        }
        s = e + (e % 2 == 0 ? 1 : 0);
    }
}

std::vector<std::uint64_t> Sieve::primes_in(std::uint64_t lo, std::uint64_t hi,
                                            std::optional<ResidueClass> cls) const {
    std::vector<std::uint64_t> out;
    for_each_prime(lo, hi, [&](std::uint64_t p) {
        if (!cls || cls->contains(p)) out.push_back(p);
        return true;
    });
    return out;
}

std::uint64_t Sieve::count_range(std::uint64_t lo, std::uint64_t hi,
                                 std::optional<ResidueClass> cls,
                                 unsigned threads) const {
    check_range(lo, hi);
    if (threads > 1 && hi - lo >= 2 * config_.segment_size) {
        const std::uint64_t chunk = (hi - lo + threads - 1) / threads;
        std::vector<std::future<std::uint64_t>> parts;
        for (std::uint64_t a = lo; a < hi; a += chunk) {
            const std::uint64_t b = std::min(hi, a + chunk);
            parts.push_back(std::async(std::launch::async, [this, a, b, cls] {
                return count_range(a, b, cls, 1);
            }));
        }
        std::uint64_t total = 0;
        for (auto& f : parts) total += f.get();
        return total;
    }
    std::uint64_t count = 0;
    for_each_prime(lo, hi, [&](std::uint64_t p) {
        if (!cls || cls->contains(p)) ++count;
        return true;
    });
    return count;
}

std::optional<std::uint64_t> Sieve::first_prime_in(std::uint64_t lo, std::uint64_t hi,
                                                   std::optional<ResidueClass> cls) const {
    std::optional<std::uint64_t> found;
    for_each_prime(lo, hi, [&](std::uint64_t p) {
        if (!cls || cls->contains(p)) {
            found = p;
            return false;
        }
        return true;
    });
    return found;
}

}  // namespace primeap
