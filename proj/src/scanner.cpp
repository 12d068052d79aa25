#include "primeap/scanner.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <stdexcept>

namespace primeap {

namespace {

ScanRecord make_record(std::uint64_t n, unsigned v, const ResidueClass& cls,
                       std::uint64_t lo, std::uint64_t hi) {
    ScanRecord r;
    r.n = n;
    r.v = v;
    r.cls = cls;
    r.interval_lo = lo;
    r.interval_hi = hi;
    return r;
}

std::vector<ScanRecord> scan_chunk(const Sieve& sieve, std::uint64_t n_lo,
                                   std::uint64_t n_hi, unsigned v,
                                   std::span<const ResidueClass> classes) {
    std::vector<ScanRecord> out;
    out.reserve((n_hi - n_lo + 1) * classes.size());
    for (std::uint64_t n = n_lo; n <= n_hi; ++n) {
        const std::uint64_t lo = checked_pow_or_throw(n, v);
        const std::uint64_t hi = checked_pow_or_throw(n + 1, v);
        std::vector<ScanRecord> per_class;
        for (const auto& cls : classes) per_class.push_back(make_record(n, v, cls, lo, hi));

        // Open interval (lo, hi): one pass, all classes filtered on the fly.
        sieve.for_each_prime(std::max<std::uint64_t>(lo + 1, 2), hi, [&](std::uint64_t p) {
            for (auto& rec : per_class) {
                if (!rec.cls.contains(p)) continue;
                if (rec.count == 0) rec.first_prime = p;
                rec.last_prime = p;
                ++rec.count;
            }
            return true;
        });
        for (auto& rec : per_class) {
            rec.exception = rec.count == 0;
            out.push_back(rec);
        }
    }
    return out;
}

}  // namespace

std::vector<ScanRecord> scan_legendre_ap(const Sieve& sieve, std::uint64_t n_min,
                                         std::uint64_t n_max, unsigned v,
                                         std::span<const ResidueClass> classes,
                                         unsigned threads) {
    if (n_min < 1)
        throw std::domain_error("scan_legendre_ap: n_min must be >= 1");
    if (n_min > n_max)
        throw std::domain_error("scan_legendre_ap: n_min must be <= n_max");
    if (v < 2)
        throw std::domain_error("scan_legendre_ap: power v must be >= 2");
    if (classes.empty())
        throw std::domain_error("scan_legendre_ap: class list must be nonempty");
    if (checked_pow_or_throw(n_max + 1, v) > sieve.capability())
        throw std::domain_error("scan_legendre_ap: (n_max+1)^v exceeds sieve capability");

    const std::uint64_t span_n = n_max - n_min + 1;
    if (threads <= 1 || span_n < 2) return scan_chunk(sieve, n_min, n_max, v, classes);

    // Fan out over n; chunks are concatenated in range order, so the
    // result is identical to the sequential scan.
    const std::uint64_t chunk = (span_n + threads - 1) / threads;
    std::vector<std::future<std::vector<ScanRecord>>> parts;
    for (std::uint64_t a = n_min; a <= n_max; a += chunk) {
        const std::uint64_t b = std::min(n_max, a + chunk - 1);
        parts.push_back(std::async(std::launch::async, [&sieve, a, b, v, classes] {
            return scan_chunk(sieve, a, b, v, classes);
        }));
    }
    std::vector<ScanRecord> out;
    for (auto& f : parts) {
        auto part = f.get();
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

std::vector<ClassExceptionSummary> exception_summary(std::span<const ScanRecord> records) {
    if (records.empty())
        throw std::domain_error("exception_summary: record list must be nonempty");
    const unsigned v = records.front().v;
    for (const auto& r : records)
        if (r.v != v)
            throw std::invalid_argument("exception_summary: mixed powers v in input");

    std::vector<ClassExceptionSummary> out;
    std::vector<std::uint64_t> min_scanned_n;
    const auto slot = [&](const ResidueClass& cls) -> std::size_t {
        for (std::size_t i = 0; i < out.size(); ++i)
            if (out[i].cls == cls) return i;
        out.push_back(ClassExceptionSummary{cls, 0, 0, std::nullopt, 0});
        min_scanned_n.push_back(UINT64_MAX);
        return out.size() - 1;
    };

    for (const auto& r : records) {
        const std::size_t i = slot(r.cls);
        ++out[i].scanned;
        min_scanned_n[i] = std::min(min_scanned_n[i], r.n);
        if (r.exception) {
            ++out[i].exceptions;
            out[i].largest_exceptional_n =
                std::max(out[i].largest_exceptional_n.value_or(0), r.n);
        }
    }
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i].clear_from_n = out[i].largest_exceptional_n
                                  ? *out[i].largest_exceptional_n + 1
                                  : min_scanned_n[i];
    return out;
}

std::vector<GapRecord> scan_gaps(const Sieve& sieve, std::uint64_t limit, double epsilon) {
    if (limit < 3)
        throw std::domain_error("scan_gaps: limit must be >= 3");
    if (!(epsilon > 0.0 && epsilon <= 1.0))
        throw std::domain_error("scan_gaps: epsilon must be in (0, 1]");
    if (limit > sieve.capability())
        throw std::domain_error("scan_gaps: limit exceeds sieve capability");

    const auto fill_thresholds = [epsilon](GapRecord& r) {
        const double lp = std::log(static_cast<double>(r.p));
        r.power_threshold = std::pow(lp, 1.0 + epsilon);
        const double llp = std::log(lp);
        if (llp > 0.0) {
            const double lll = std::log(llp);
            if (lll > 1.0) r.westzynthius_threshold = lp * lll / std::log(lll);
        }
    };

    std::vector<GapRecord> out;
    std::uint64_t prev = 0;
    std::uint64_t best = 0;
    const auto consider = [&](std::uint64_t p, std::uint64_t next) {
        const std::uint64_t gap = next - p;
        if (gap > best) {
            best = gap;
            GapRecord r;
            r.p = p;
            r.next_p = next;
            r.gap = gap;
            fill_thresholds(r);
            out.push_back(r);
        }
    };

    sieve.for_each_prime(2, limit, [&](std::uint64_t p) {
        if (prev != 0) consider(prev, p);
        prev = p;
        return true;
    });
    if (prev != 0) {
        // Stitch: the largest prime below limit pairs with its successor,
        // which may lie at or beyond limit.
        const std::uint64_t hi = std::min(sieve.capability(), limit + 100'000);
        if (const auto next = sieve.first_prime_in(limit, hi)) consider(prev, *next);
    }
    return out;
}

}  // namespace primeap
