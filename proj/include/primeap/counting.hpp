#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "primeap/arith.hpp"
#include "primeap/sieve.hpp"

namespace primeap {

// Which side of "p^k <= x" the residue condition applies to. The two
// variants agree at q = 1 and on the k = 1 terms always.
enum class PsiVariant {
    ConditionOnPrime,       // sum over p^k <= x with p = a mod q
    ConditionOnPrimePower,  // sum over n = p^k <= x with n = a mod q
};

const char* to_string(PsiVariant v);

struct CountSnapshot {
    std::uint64_t x = 0;
    ResidueClass cls;
    std::uint64_t pi = 0;
    double theta = 0.0;  // natural-log units
    double psi = 0.0;
    PsiVariant variant = PsiVariant::ConditionOnPrimePower;
};

// Compensated (Kahan) accumulator; keeps log-sums reproducible to 1e-9
// relative over ~10^8 terms.
struct KahanSum {
    double sum = 0.0;
    double carry = 0.0;
    void add(double v) {
        const double y = v - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    double value() const { return sum; }
};

std::uint64_t pi_count(const Sieve& sieve, std::uint64_t x, ResidueClass cls);
double theta(const Sieve& sieve, std::uint64_t x, ResidueClass cls);
double psi(const Sieve& sieve, std::uint64_t x, ResidueClass cls,
           PsiVariant variant = PsiVariant::ConditionOnPrimePower);

CountSnapshot snapshot(const Sieve& sieve, std::uint64_t x, ResidueClass cls,
                       PsiVariant variant = PsiVariant::ConditionOnPrimePower);

// All (x, class) pairs in one sieve pass over [2, max x]. xs need not be
// sorted; output is ordered by ascending x, then classes in input order.
std::vector<CountSnapshot> snapshot_grid(const Sieve& sieve,
                                         std::span<const std::uint64_t> xs,
                                         std::span<const ResidueClass> classes,
                                         PsiVariant variant = PsiVariant::ConditionOnPrimePower);

}  // namespace primeap
