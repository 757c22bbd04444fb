// Acceptance gate: one PASS/FAIL line per criterion.
// Usage: acceptance [--criterion N] [--threads T]

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "oracles.hpp"
#include "shiftdiv/census.hpp"
#include "shiftdiv/constructions.hpp"
#include "shiftdiv/dynamics.hpp"
#include "shiftdiv/errors.hpp"
#include "shiftdiv/fibres.hpp"
#include "shiftdiv/golden.hpp"
#include "shiftdiv/stats.hpp"

using namespace shiftdiv;
using V = std::vector<std::uint64_t>;

namespace {

constexpr std::uint64_t x6 = 1000000;
unsigned g_threads = 1;

const SieveTable& sieve()
{
    static const SieveTable table(x6);
    return table;
}

const SumTable& sums()
{
    static const SumTable table = make_sum_table(sieve(), x6);
    return table;
}

struct Outcome {
    bool pass = false;
    std::string summary;
    std::vector<std::string> notes;
};

template <typename... Args>
std::string fmt(const char* f, Args... args)
{
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

std::string show(const V& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i ? "," : "") + std::to_string(v[i]);
    }
    return s + ")";
}

std::set<V> nontrivial_set(const CensusReport& r)
{
    std::set<V> out;
    for (const auto& c : r.nontrivial_cycles()) {
        out.insert(c.members);
    }
    return out;
}

Outcome table_reproduction()
{
    Outcome o;
    CensusOptions options;
    options.threads = g_threads;
    std::size_t matched = 0;
    for (const auto& row : golden::table1()) {
        const auto cmp = golden::compare(row, run_census(Shift{row.a}, x6, sums(), options));
        if (cmp.match) {
            ++matched;
            continue;
        }
        for (const auto& m : cmp.missing) {
            std::string why;
            try {
                canonicalize(m, Shift{row.a}, sieve());
            } catch (const consistency_error&) {
                why = " (not closed under B_a)";
            }
            o.notes.push_back(fmt("a=%llu expected %s not found%s", static_cast<unsigned long long>(row.a),
                                  show(m).c_str(), why.c_str()));
        }
        for (const auto& u : cmp.unexpected) {
            o.notes.push_back(fmt("a=%llu found %s", static_cast<unsigned long long>(row.a), show(u).c_str()));
        }
    }
    o.pass = matched == golden::table1().size();
    o.summary = fmt("census a=1..20, n<=10^6: %zu/%zu rows match exactly", matched, golden::table1().size());
    return o;
}

Outcome census_39()
{
    const std::set<V> expected{{43, 82}, {13, 52, 17, 56}, {7, 46, 25, 10}, {5, 44, 15, 8, 6}};
    const std::set<V> got = nontrivial_set(run_census(Shift{39}, x6, sums()));
    Outcome o;
    o.pass = got == expected;
    o.summary = fmt("a=39: %zu nontrivial cycles, set %s", got.size(), o.pass ? "equal" : "differs");
    if (!o.pass) {
        for (const auto& c : got) {
            o.notes.push_back("found " + show(c));
        }
    }
    return o;
}

Outcome sweep_200()
{
    CensusOptions options;
    options.threads = g_threads;
    const SweepResult s = cycle_count_sweep(200, x6, sieve(), options);
    Outcome o;
    o.pass = s.max_count == 4;
    std::string where;
    for (const auto a : s.argmax) {
        where += ' ' + std::to_string(a);
    }
    o.summary = fmt("a<=200, n<=10^6: max distinct nontrivial cycles %zu at a =%s", s.max_count, where.c_str());
    return o;
}

Outcome b1_dynamics()
{
    Outcome o;
    const CensusReport r = run_census(Shift{1}, x6, sums());
    bool cycles_ok = r.cycles.size() == 2 && r.cycles[0].cycle.members == V{4}
                     && r.cycles[1].cycle.members == V{5, 6};
    std::size_t bad_sigma = 0;
    for (std::uint64_t n = 7; n <= x6; ++n) {
        const auto s = stopping_time(n, Shift{1}, sieve());
        const std::size_t want = sums().is_prime(n) ? 2 : 1;
        if (!s || *s != want) {
            if (++bad_sigma <= 5) {
                o.notes.push_back(fmt("sigma(%llu) unexpected", static_cast<unsigned long long>(n)));
            }
        }
    }
    o.pass = cycles_ok && bad_sigma == 0;
    o.summary = fmt("a=1: %zu cycles reached (%s), sigma violations %zu", r.cycles.size(),
                    cycles_ok ? "(4) and (5,6)" : "unexpected", bad_sigma);
    return o;
}

Outcome fixed_points()
{
    Outcome o;
    std::size_t bad = 0;
    for (std::uint64_t a = 1; a <= 100; ++a) {
        for (std::uint64_t n = 2; n <= 100000; ++n) {
            const bool fixed = sums().shifted_B(n, Shift{a}) == n;
            if (fixed != (n == 4)) {
                ++bad;
                o.notes.push_back(fmt("a=%llu n=%llu", static_cast<unsigned long long>(a),
                                      static_cast<unsigned long long>(n)));
            }
        }
    }
    o.pass = bad == 0;
    o.summary = fmt("a=1..100, n<=10^5: %zu fixed points other than 4", bad);
    return o;
}

Outcome composite_bound()
{
    Outcome o;
    std::size_t bad = 0;
    std::uint64_t tight = 0;
    for (std::uint64_t n = 4; n <= x6; ++n) {
        if (sums().is_prime(n)) {
            continue;
        }
        const std::uint64_t b = sums().big_B(n);
        if (2 * b > 4 + n) {
            ++bad;
        } else if (2 * b == 4 + n) {
            ++tight;
        }
    }
    o.pass = bad == 0;
    o.summary = fmt("composite 4<=n<=10^6: %zu violations of B(n) <= 2 + n/2 (%llu with equality)", bad,
                    static_cast<unsigned long long>(tight));
    return o;
}

Outcome descent_bound()
{
    Outcome o;
    const SieveTable big(2 * x6);
    std::size_t checked = 0;
    std::size_t bad = 0;
    for (std::uint64_t a = 1; a <= 50; ++a) {
        const Shift shift{a};
        const ShiftedMap map(big, shift);
        for (std::uint64_t p = descent_threshold(shift) + 1; p <= 100000; ++p) {
            if (!big.covers(p) || big.spf(p) != p) {
                continue;
            }
            ++checked;
            if (!descends_within(p, map, 2 * a + 1)) {
                ++bad;
                o.notes.push_back(fmt("a=%llu p=%llu", static_cast<unsigned long long>(a),
                                      static_cast<unsigned long long>(p)));
            }
        }
    }
    o.pass = bad == 0 && checked > 0;
    o.summary = fmt("a=1..50: %zu primes above 2a^2+10 checked, %zu fail to descend within 2a+1 steps", checked, bad);
    return o;
}

Outcome amicable()
{
    Outcome o;
    std::size_t built = 0;
    std::size_t invalid = 0;
    for (std::uint64_t p = 5; p <= 10000; ++p) {
        if (!sums().is_prime(p)) {
            continue;
        }
        ++built;
        const AmicablePair pair = build_amicable(p, sieve());
        if (!is_valid_amicable(pair, sieve()) || oracle::big_B(pair.n) != p || oracle::is_prime(pair.n)) {
            ++invalid;
        }
    }
    std::size_t compared = 0;
    std::vector<std::string> findings;
    for (std::uint64_t p = 5; p <= 1000; ++p) {
        if (!sums().is_prime(p)) {
            continue;
        }
        ++compared;
        const std::uint64_t n = build_amicable(p, sieve()).n;
        std::uint64_t least = 4;
        while (oracle::is_prime(least) || oracle::big_B(least) != p) {
            ++least;
        }
        if (least != n) {
            findings.push_back(fmt("p=%llu constructed %llu, least composite preimage %llu",
                                   static_cast<unsigned long long>(p), static_cast<unsigned long long>(n),
                                   static_cast<unsigned long long>(least)));
        }
    }
    o.notes.push_back(fmt("finding: construction is not minimal for %zu of %zu primes p<=10^3", findings.size(),
                          compared));
    for (std::size_t i = 0; i < findings.size() && i < 5; ++i) {
        o.notes.push_back("finding: " + findings[i]);
    }
    o.pass = invalid == 0;
    o.summary = fmt("%zu primes 3<p<=10^4: %zu invalid 2-cycles; minimality findings %zu", built, invalid,
                    findings.size());
    return o;
}

Outcome kappa_oracle()
{
    const KappaTable k = build_kappa(60, sieve());
    std::size_t bad = 0;
    for (std::uint64_t m = 1; m <= 60; ++m) {
        if (k.kappa(m) != oracle::prime_partitions(m).size()) {
            ++bad;
        }
    }
    const bool values = k.kappa(1) == 0 && k.kappa(2) == 1 && k.kappa(7) == 3;
    Outcome o;
    o.pass = bad == 0 && values;
    o.summary = fmt("m<=60: %zu disagreements with enumeration; kappa(1,2,7) = (0,1,3) %s", bad,
                    values ? "holds" : "fails");
    return o;
}

Outcome kappa_trend()
{
    const KappaTable k = build_kappa(10000, sieve());
    const double r2 = kappa_asymptotic_ratio(100, k);
    const double r3 = kappa_asymptotic_ratio(1000, k);
    const double r4 = kappa_asymptotic_ratio(10000, k);
    Outcome o;
    o.pass = r2 < r3 && r3 < r4 && r3 > 0.5 && r3 < 1.1;
    o.summary = fmt("ratios at 10^2, 10^3, 10^4: %.4f %.4f %.4f", r2, r3, r4);
    return o;
}

Outcome average_order()
{
    const V cp{10000, 100000, x6};
    const auto base = average_order_series(Shift{0}, cp, sieve(), g_threads);
    const double r4 = base.ratios[0], r5 = base.ratios[1], r6 = base.ratios[2];
    const bool band = r6 > 0.9 && r6 < 1.4;
    const bool approach = std::abs(r5 - 1) < std::abs(r4 - 1) && std::abs(r6 - 1) < std::abs(r5 - 1);
    bool shift_exact = true;
    for (const std::uint64_t a : {1ull, 10ull}) {
        const auto s = average_order_series(Shift{a}, V{x6}, sieve(), g_threads);
        shift_exact = shift_exact && s.sums[0] - base.sums[2] == static_cast<std::int64_t>(a * sieve().prime_count(x6));
    }
    Outcome o;
    o.pass = band && approach && shift_exact;
    o.summary = fmt("ratios %.4f %.4f %.4f; shift decomposition %s", r4, r5, r6, shift_exact ? "exact" : "broken");
    return o;
}

Outcome parity()
{
    const V cp{x6};
    const auto even = parity_sum(Shift{0}, cp, sieve(), g_threads);
    const auto odd = parity_sum(Shift{1}, cp, sieve(), g_threads);
    const double e = std::abs(static_cast<double>(even.sums[0])) / static_cast<double>(x6);
    const double d = static_cast<double>(odd.sums[0]) / (2.0 * static_cast<double>(sieve().prime_count(x6)));
    Outcome o;
    o.pass = e < 0.02 && d > 0.7 && d < 1.3;
    o.summary = fmt("|S_0|/x = %.5f, S_1/(2 pi(x)) = %.4f", e, d);
    return o;
}

Outcome local_density()
{
    const double d0 = estimate_local_density(0, x6, sieve());
    const double target = 6.0 / (std::numbers::pi * std::numbers::pi);
    const auto hist = excess_histogram(x6, sieve());
    auto tail = [&](std::uint64_t K) {
        std::uint64_t t = 0;
        for (const auto& [N, c] : hist) {
            t += N > K ? c : 0;
        }
        return static_cast<double>(t);
    };
    const double x = static_cast<double>(x6);
    const double C = tail(4) * 4.0 / x;
    bool bound = true;
    std::string scaled;
    for (const std::uint64_t K : {4ull, 8ull, 16ull}) {
        bound = bound && tail(K) <= C * x / static_cast<double>(K);
        scaled += fmt(" K=%llu:%.4f", static_cast<unsigned long long>(K), tail(K) * static_cast<double>(K) / x);
    }
    Outcome o;
    o.pass = std::abs(d0 - target) < 0.01 && bound;
    o.summary = fmt("N=0 density %.6f vs %.6f; tail*K/x%s, fitted C=%.4f", d0, target, scaled.c_str(), C);
    return o;
}

Outcome square_preimages()
{
    auto squares = [](std::uint64_t v) { return is_perfect_square(v); };
    const double d4 = preimage_density(squares, 10000, sieve()).density;
    const double d5 = preimage_density(squares, 100000, sieve()).density;
    const double d6 = preimage_density(squares, x6, sieve()).density;
    Outcome o;
    o.pass = d4 > d5 && d5 > d6;
    o.summary = fmt("density of B(n) square at 10^4, 10^5, 10^6: %.5f %.5f %.5f", d4, d5, d6);
    return o;
}

Outcome ascending_chain()
{
    const auto w = find_ascending_chain(4, 1000, sieve());
    const auto want = oracle::prime_ap(4, 1000);
    Outcome o;
    if (!w) {
        o.summary = "no chain found";
        return o;
    }
    o.pass = w->chain == V{5, 11, 17, 23, 29} && w->shift.a == 6 && validate_chain(*w, sieve()) && want
             && want->first == w->n && want->second == w->shift.a;
    o.summary = fmt("k=4, bound 10^3: %s with a=%llu, validator %s", show(w->chain).c_str(),
                    static_cast<unsigned long long>(w->shift.a), validate_chain(*w, sieve()) ? "ok" : "rejects");
    return o;
}

struct Criterion {
    const char* name;
    std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria()
{
    static const std::vector<Criterion> all{
        {"table reproduction", table_reproduction},
        {"a=39 census", census_39},
        {"cycle count sweep", sweep_200},
        {"B_1 dynamics", b1_dynamics},
        {"fixed points", fixed_points},
        {"composite bound", composite_bound},
        {"descent bound", descent_bound},
        {"amicable construction", amicable},
        {"kappa recursion", kappa_oracle},
        {"kappa trend", kappa_trend},
        {"average order", average_order},
        {"parity sums", parity},
        {"local density", local_density},
        {"square preimage density", square_preimages},
        {"ascending chain", ascending_chain},
    };
    return all;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Acceptance criteria"};
    std::optional<std::size_t> only;
    g_threads = std::max(1u, std::thread::hardware_concurrency());
    app.add_option("--criterion", only, "Run a single criterion")->check(CLI::Range(1, 15));
    app.add_option("--threads", g_threads, "Worker threads")->check(CLI::Range(1u, 1024u));
    CLI11_PARSE(app, argc, argv);

    int failed = 0;
    for (std::size_t i = 0; i < criteria().size(); ++i) {
        if (only && *only != i + 1) {
            continue;
        }
        const auto& c = criteria()[i];
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.summary = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        for (const auto& note : o.notes) {
            std::printf("    %s\n", note.c_str());
        }
        std::printf("[%s] %2zu %s: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", i + 1, c.name, o.summary.c_str(), secs);
        std::fflush(stdout);
        failed += o.pass ? 0 : 1;
    }
    return failed == 0 ? 0 : 1;
}
