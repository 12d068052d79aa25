#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "primeap/arith.hpp"
#include "primeap/bounds.hpp"
#include "primeap/counting.hpp"
#include "primeap/logint.hpp"
#include "primeap/report.hpp"
#include "primeap/scanner.hpp"
#include "primeap/sieve.hpp"

namespace {

using namespace primeap;

struct GlobalOpts {
    std::string format = "csv";
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    bool seed_free = false;
};

ReportFormat parse_format(const std::string& f) {
    if (f == "csv") return ReportFormat::Csv;
    if (f == "json") return ReportFormat::Json;
    throw std::domain_error("unknown format: " + f);
}

PsiVariant parse_variant(const std::string& v) {
    if (v == "prime") return PsiVariant::ConditionOnPrime;
    if (v == "prime-power") return PsiVariant::ConditionOnPrimePower;
    throw std::domain_error("unknown psi variant: " + v);
}

// All coprime classes for q in [1, q_max], ordered by q then a.
std::vector<ResidueClass> classes_up_to(std::uint64_t q_max) {
    std::vector<ResidueClass> out;
    out.emplace_back(1, 0);
    for (std::uint64_t q = 2; q <= q_max; ++q)
        for (std::uint64_t a = 1; a < q; ++a)
            if (gcd(a, q) == 1) out.emplace_back(q, a);
    return out;
}

// Rounded geometric grid, deduplicated ascending.
std::vector<std::uint64_t> geometric_grid(std::uint64_t x_min, std::uint64_t x_max,
                                          unsigned samples) {
    if (x_min < 2 || x_min > x_max || samples < 1)
        throw std::domain_error("malformed grid: need 2 <= x-min <= x-max, samples >= 1");
    std::vector<std::uint64_t> xs;
    if (samples == 1 || x_min == x_max) {
        xs = {x_min, x_max};
    } else {
        const double ratio = static_cast<double>(x_max) / static_cast<double>(x_min);
        for (unsigned i = 0; i < samples; ++i) {
            const double t = static_cast<double>(i) / (samples - 1);
            xs.push_back(static_cast<std::uint64_t>(
                std::llround(static_cast<double>(x_min) * std::pow(ratio, t))));
        }
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
}

void write_verdict(ReportWriter& w, const BoundVerdict& v) {
    ReportRow row;
    row.add("claim", std::string(to_string(v.claim)))
        .add("x", v.x)
        .add("z", v.z ? ReportRow::Cell{*v.z} : ReportRow::Cell{std::monostate{}})
        .add("q", v.cls.q)
        .add("a", v.cls.a)
        .add("variant", std::string(to_string(v.variant)))
        .add("lhs", v.lhs)
        .add("rhs", v.rhs)
        .add("margin", v.margin)
        .add("pass", v.pass);
    w.write(row);
}

int cmd_count(const GlobalOpts& g, std::uint64_t x, std::uint64_t q, std::uint64_t a,
              const std::string& variant_name) {
    const ResidueClass cls(q, a);
    const PsiVariant variant = parse_variant(variant_name);
    Sieve sieve;
    const CountSnapshot snap = snapshot(sieve, x, cls, variant);
    const double li_x = li(static_cast<double>(x));
    const double phi = static_cast<double>(euler_phi(q));

    ReportWriter writer(std::cout, parse_format(g.format));
    ReportRow row;
    row.add("x", x)
        .add("q", q)
        .add("a", a)
        .add("variant", std::string(to_string(variant)))
        .add("pi", snap.pi)
        .add("theta", snap.theta)
        .add("psi", snap.psi)
        .add("li", li_x)
        .add("x_over_phi", static_cast<double>(x) / phi)
        .add("li_over_phi", li_x / phi);
    writer.write(row);
    return 0;
}

struct BoundsArgs {
    std::uint64_t x_min = 1000, x_max = 100000;
    unsigned x_samples = 20;
    std::uint64_t q_max = 1;
    std::vector<std::string> claims = {"psi", "theta", "pi"};
    std::string variant = "prime-power";
    double z_exp = 0.5;
    std::uint64_t v_min = 2, v_max = 10;
    double cap = 2.0;
};

int cmd_bounds(const GlobalOpts& g, const BoundsArgs& args) {
    const PsiVariant variant = parse_variant(args.variant);
    const std::set<std::string> claims(args.claims.begin(), args.claims.end());
    for (const auto& c : claims)
        if (c != "psi" && c != "theta" && c != "pi" && c != "diff" && c != "squares" &&
            c != "error-term" && c != "exponent")
            throw std::domain_error("unknown claim: " + c);

    Sieve sieve;
    ReportWriter writer(std::cout, parse_format(g.format));
    std::vector<BoundVerdict> verdicts;

    const bool wants_pnt = claims.count("psi") || claims.count("theta") || claims.count("pi");
    if (wants_pnt || claims.count("diff") || claims.count("squares") ||
        claims.count("error-term")) {
        const auto xs = geometric_grid(args.x_min, args.x_max, args.x_samples);
        const auto classes = classes_up_to(args.q_max);

        if (wants_pnt) {
            const auto snaps = snapshot_grid(sieve, xs, classes, variant);
            std::vector<double> li_at(xs.size(), NAN);
            if (claims.count("pi"))
                for (std::size_t i = 0; i < xs.size(); ++i)
                    li_at[i] = li(static_cast<double>(xs[i]));
            for (std::size_t i = 0; i < snaps.size(); ++i) {
                const double li_x = li_at[i / classes.size()];
                if (claims.count("psi"))
                    verdicts.push_back(pnt_ap_verdict(snaps[i], PntPart::Psi, NAN));
                if (claims.count("theta"))
                    verdicts.push_back(pnt_ap_verdict(snaps[i], PntPart::Theta, NAN));
                if (claims.count("pi"))
                    verdicts.push_back(pnt_ap_verdict(snaps[i], PntPart::Pi, li_x));
            }
        }
        if (claims.count("diff")) {
            for (std::uint64_t x : xs) {
                const auto z = static_cast<std::uint64_t>(
                    std::ceil(std::pow(static_cast<double>(x), args.z_exp)));
                for (const auto& cls : classes) {
                    auto [lo, hi] = check_short_interval_diff(sieve, x, std::min(z, x), cls,
                                                              variant);
                    verdicts.push_back(lo);
                    verdicts.push_back(hi);
                }
            }
        }
        if (claims.count("squares")) {
            for (std::uint64_t x : xs)
                for (const auto& cls : classes)
                    for (const auto& v : check_squares_bounds(sieve, x, cls, variant))
                        verdicts.push_back(v);
        }
        if (claims.count("error-term"))
            for (std::uint64_t x : xs) verdicts.push_back(error_term_ratio(x, args.cap));
    }
    if (claims.count("exponent")) {
        if (args.v_min > args.v_max)
            throw std::domain_error("malformed grid: v-min > v-max");
        for (std::uint64_t v = args.v_min; v <= args.v_max; ++v)
            verdicts.push_back(exponent_condition(v));
    }

    bool all_pass = true;
    for (const auto& v : verdicts) {
        write_verdict(writer, v);
        all_pass = all_pass && v.pass;
    }

    // Per-claim summary table: min margin and failure count.
    std::vector<std::string> seen;
    for (const auto& v : verdicts) {
        const std::string name = to_string(v.claim);
        if (std::find(seen.begin(), seen.end(), name) == seen.end()) seen.push_back(name);
    }
    for (const auto& name : seen) {
        double min_margin = INFINITY;
        std::uint64_t rows = 0, failures = 0;
        for (const auto& v : verdicts) {
            if (to_string(v.claim) != name) continue;
            min_margin = std::min(min_margin, v.margin);
            ++rows;
            if (!v.pass) ++failures;
        }
        ReportRow row;
        row.add("summary_claim", name)
            .add("rows", rows)
            .add("failures", failures)
            .add("min_margin", min_margin);
        writer.write(row);
    }
    return all_pass ? 0 : 1;
}

struct ScanArgs {
    std::uint64_t n_min = 1, n_max = 1;
    unsigned power = 2;
    std::uint64_t q_max = 0;  // 0 = use explicit q/a
    std::uint64_t q = 1, a = 0;
    bool exceptions_only = false;
};

int cmd_scan(const GlobalOpts& g, const ScanArgs& args) {
    const std::vector<ResidueClass> classes =
        args.q_max > 0 ? classes_up_to(args.q_max)
                       : std::vector<ResidueClass>{ResidueClass(args.q, args.a)};
    Sieve sieve;
    const auto records =
        scan_legendre_ap(sieve, args.n_min, args.n_max, args.power, classes, g.threads);

    ReportWriter writer(std::cout, parse_format(g.format));
    for (const auto& r : records) {
        if (args.exceptions_only && !r.exception) continue;
        ReportRow row;
        row.add("n", r.n)
            .add("v", std::uint64_t{r.v})
            .add("q", r.cls.q)
            .add("a", r.cls.a)
            .add("interval_lo", r.interval_lo)
            .add("interval_hi", r.interval_hi)
            .add("count", r.count)
            .add("first_prime",
                 r.first_prime ? ReportRow::Cell{*r.first_prime} : ReportRow::Cell{})
            .add("last_prime",
                 r.last_prime ? ReportRow::Cell{*r.last_prime} : ReportRow::Cell{})
            .add("exception", r.exception);
        writer.write(row);
    }
    for (const auto& s : exception_summary(records)) {
        ReportRow row;
        row.add("summary_q", s.cls.q)
            .add("summary_a", s.cls.a)
            .add("scanned", s.scanned)
            .add("exceptions", s.exceptions)
            .add("largest_exceptional_n", s.largest_exceptional_n
                                              ? ReportRow::Cell{*s.largest_exceptional_n}
                                              : ReportRow::Cell{})
            .add("clear_from_n", s.clear_from_n);
        writer.write(row);
    }
    return 0;
}

int cmd_gaps(const GlobalOpts& g, std::uint64_t limit, double epsilon) {
    Sieve sieve;
    ReportWriter writer(std::cout, parse_format(g.format));
    for (const auto& r : scan_gaps(sieve, limit, epsilon)) {
        ReportRow row;
        row.add("p", r.p)
            .add("next_p", r.next_p)
            .add("gap", r.gap)
            .add("westzynthius", r.westzynthius_threshold
                                     ? ReportRow::Cell{*r.westzynthius_threshold}
                                     : ReportRow::Cell{})
            .add("power_threshold", r.power_threshold);
        writer.write(row);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"prime counting, explicit bound checking, and interval scans"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    GlobalOpts g;
    app.add_option("--format", g.format, "output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--threads", g.threads, "worker threads");
    app.add_flag("--seed-free", g.seed_free,
                 "reserved; the tool uses no randomness anywhere");

    auto* count = app.add_subcommand("count", "pi/theta/psi/li at one point");
    std::uint64_t cx = 0, cq = 1, ca = 0;
    std::string cvariant = "prime-power";
    count->add_option("--x", cx, "evaluation point")->required();
    count->add_option("--q", cq, "modulus");
    count->add_option("--a", ca, "residue");
    count->add_option("--variant", cvariant, "psi variant: prime or prime-power");

    auto* bounds = app.add_subcommand("bounds", "explicit inequality sweeps");
    BoundsArgs ba;
    bounds->add_option("--x-min", ba.x_min, "grid start");
    bounds->add_option("--x-max", ba.x_max, "grid end");
    bounds->add_option("--x-samples", ba.x_samples, "geometric grid size");
    bounds->add_option("--q-max", ba.q_max, "check all coprime classes with q <= q-max");
    bounds->add_option("--claims", ba.claims,
                       "subset of psi,theta,pi,diff,squares,error-term,exponent")
        ->delimiter(',');
    bounds->add_option("--variant", ba.variant, "psi variant");
    bounds->add_option("--z-exp", ba.z_exp, "z = ceil(x^z-exp) for diff claims");
    bounds->add_option("--v-min", ba.v_min, "exponent claim range start");
    bounds->add_option("--v-max", ba.v_max, "exponent claim range end");
    bounds->add_option("--cap", ba.cap, "error-term normalized ratio cap");

    auto* scan = app.add_subcommand("scan", "primes between consecutive v-th powers");
    ScanArgs sa;
    scan->add_option("--n-min", sa.n_min, "first base")->required();
    scan->add_option("--n-max", sa.n_max, "last base")->required();
    scan->add_option("--power", sa.power, "power v >= 2");
    scan->add_option("--q-max", sa.q_max, "all coprime classes with q <= q-max");
    scan->add_option("--q", sa.q, "modulus");
    scan->add_option("--a", sa.a, "residue");
    scan->add_flag("--exceptions-only", sa.exceptions_only, "emit only primefree records");

    auto* gaps = app.add_subcommand("gaps", "record prime gaps with thresholds");
    std::uint64_t glimit = 0;
    double gepsilon = 0.1;
    gaps->add_option("--limit", glimit, "scan primes below this bound")->required();
    gaps->add_option("--epsilon", gepsilon, "exponent for (log p)^(1+epsilon)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (count->parsed()) return cmd_count(g, cx, cq, ca, cvariant);
        if (bounds->parsed()) return cmd_bounds(g, ba);
        if (scan->parsed()) return cmd_scan(g, sa);
        if (gaps->parsed()) return cmd_gaps(g, glimit, gepsilon);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
