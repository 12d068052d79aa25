#include "primeap/counting.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace primeap {

const char* to_string(PsiVariant v) {
    return v == PsiVariant::ConditionOnPrime ? "prime" : "prime-power";
}

namespace {

// Contribution of p^k terms with k >= 2; the k = 1 terms are theta's.
double psi_power_part(const Sieve& sieve, std::uint64_t x, const ResidueClass& cls,
                      PsiVariant variant) {
    KahanSum sum;
    for (std::uint32_t p : sieve.base_prime_cache()) {
        const std::uint64_t p64 = p;
        if (p64 > x / p64) break;
        const double lp = std::log(static_cast<double>(p64));
        std::uint64_t pw = p64 * p64;
        for (;;) {
            const std::uint64_t conditioned = variant == PsiVariant::ConditionOnPrime ? p64 : pw;
            if (cls.contains(conditioned)) sum.add(lp);
            if (pw > x / p64) break;
            pw *= p64;
        }
    }
    return sum.value();
}

}  // namespace

std::vector<CountSnapshot> snapshot_grid(const Sieve& sieve,
                                         std::span<const std::uint64_t> xs,
                                         std::span<const ResidueClass> classes,
                                         PsiVariant variant) {
    if (xs.empty() || classes.empty())
        throw std::domain_error("snapshot_grid: xs and classes must be nonempty");
    for (std::uint64_t x : xs)
        if (x < 2) throw std::domain_error("snapshot_grid: x must be >= 2");

    std::vector<std::uint64_t> points(xs.begin(), xs.end());
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());

    // Group classes by modulus: one p % q per distinct q, then a direct
    // residue -> class-index lookup.
    std::map<std::uint64_t, std::vector<int>> by_q;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        auto& table = by_q[classes[i].q];
        if (table.empty()) table.assign(classes[i].q, -1);
        table[classes[i].a] = static_cast<int>(i);
    }

    std::vector<std::uint64_t> pi(classes.size(), 0);
    std::vector<KahanSum> theta_sum(classes.size());

    std::vector<CountSnapshot> out;
    out.reserve(points.size() * classes.size());
    std::size_t next_point = 0;
    const auto flush_through = [&](std::uint64_t p_exclusive) {
        while (next_point < points.size() && points[next_point] < p_exclusive) {
            const std::uint64_t x = points[next_point];
            for (std::size_t i = 0; i < classes.size(); ++i) {
                CountSnapshot snap;
                snap.x = x;
                snap.cls = classes[i];
                snap.pi = pi[i];
                snap.theta = theta_sum[i].value();
                snap.psi = snap.theta + psi_power_part(sieve, x, classes[i], variant);
                snap.variant = variant;
                out.push_back(snap);
            }
            ++next_point;
        }
    };

    sieve.for_each_prime(2, points.back() + 1, [&](std::uint64_t p) {
        flush_through(p);
        const double lp = std::log(static_cast<double>(p));
        for (const auto& [q, table] : by_q) {
            const int idx = table[p % q];
            if (idx >= 0) {
                ++pi[idx];
                theta_sum[idx].add(lp);
            }
        }
        return true;
    });
    flush_through(UINT64_MAX);
    return out;
}

CountSnapshot snapshot(const Sieve& sieve, std::uint64_t x, ResidueClass cls,
                       PsiVariant variant) {
    const std::uint64_t xs[] = {x};
    const ResidueClass cs[] = {cls};
    return snapshot_grid(sieve, xs, cs, variant)[0];
}

std::uint64_t pi_count(const Sieve& sieve, std::uint64_t x, ResidueClass cls) {
    return snapshot(sieve, x, cls).pi;
}

double theta(const Sieve& sieve, std::uint64_t x, ResidueClass cls) {
    return snapshot(sieve, x, cls).theta;
}

double psi(const Sieve& sieve, std::uint64_t x, ResidueClass cls, PsiVariant variant) {
    return snapshot(sieve, x, cls, variant).psi;
}

}  // namespace primeap
