#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "shiftdiv/census.hpp"
#include "shiftdiv/errors.hpp"
#include "shiftdiv/golden.hpp"

using namespace shiftdiv;
using V = std::vector<std::uint64_t>;

namespace {

const SieveTable& sieve_1e6()
{
    static const SieveTable table(1000000);
    return table;
}

const SumTable& sums_1e6()
{
    static const SumTable sums(sieve_1e6());
    return sums;
}

std::set<V> nontrivial_set(const CensusReport& r)
{
    std::set<V> out;
    for (const auto& c : r.nontrivial_cycles()) {
        out.insert(c.members);
    }
    return out;
}

// Cycles reached from 2..limit by plain brute-force iteration.
std::set<V> oracle_cycles(std::uint64_t a, std::uint64_t limit)
{
    std::set<V> out;
    for (std::uint64_t n = 2; n <= limit; ++n) {
        const V t = oracle::orbit(n, a);
        const auto entry = std::find(t.begin(), t.end(), t.back()) - t.begin();
        V cyc(t.begin() + entry, t.end() - 1);
        if (cyc.size() > 1) {
            std::rotate(cyc.begin(), std::min_element(cyc.begin(), cyc.end()), cyc.end());
            out.insert(cyc);
        }
    }
    return out;
}

} // namespace

TEST_CASE("run_census: examples at 10^6")
{
    CHECK(nontrivial_set(run_census(Shift{1}, 1000000, sums_1e6())) == std::set<V>{{5, 6}});
    CHECK(nontrivial_set(run_census(Shift{12}, 1000000, sums_1e6()))
          == std::set<V>{{5, 17, 29, 41, 53, 65, 18, 8, 6}});
    CHECK(nontrivial_set(run_census(Shift{39}, 1000000, sums_1e6()))
          == std::set<V>{{43, 82}, {13, 52, 17, 56}, {7, 46, 25, 10}, {5, 44, 15, 8, 6}});
}

TEST_CASE("run_census: agrees with brute-force orbits on small ranges")
{
    for (std::uint64_t a = 0; a <= 25; ++a) {
        CHECK(nontrivial_set(run_census(Shift{a}, 3000, sums_1e6())) == oracle_cycles(a, 3000));
    }
}

TEST_CASE("run_census: table rows, with three cycles corrected by direct iteration")
{
    // The published cycles (5,15,9,6), (5,15,8,6), (5,16,8,6) for a = 9, 11, 13 are not closed under B_a.
    const std::map<std::uint64_t, V> corrected{{9, {5, 14, 9, 6}}, {11, {5, 16, 8, 6}}, {13, {5, 18, 8, 6}}};
    for (const auto& row : golden::table1()) {
        const CensusReport r = run_census(Shift{row.a}, 1000000, sums_1e6());
        const auto cmp = golden::compare(row, r);
        if (!corrected.contains(row.a)) {
            CHECK_MESSAGE(cmp.match, "a=" << row.a);
            continue;
        }
        CHECK_FALSE(cmp.match);
        const V& fixed = corrected.at(row.a);
        std::set<V> expected{fixed};
        for (const auto& published : row.cycles) {
            if (published.front() == 5) {
                CHECK_THROWS_AS(canonicalize(published, Shift{row.a}, sieve_1e6()), consistency_error);
            } else {
                expected.insert(canonicalize(published, Shift{row.a}, sieve_1e6()).members);
            }
        }
        V closed = fixed;
        closed.push_back(fixed.front());
        CHECK(oracle::orbit(5, row.a) == closed);
        CHECK(nontrivial_set(r) == expected);
    }
}

TEST_CASE("run_census: report invariants")
{
    const CensusOptions options{.threads = 1, .memoize = true, .record_fates = true};
    for (std::uint64_t a : {0ull, 1ull, 7ull, 39ull}) {
        const CensusReport r = run_census(Shift{a}, 20000, sums_1e6(), options);
        CHECK(r.starts_processed == 19999);
        const std::uint64_t basins = std::accumulate(r.cycles.begin(), r.cycles.end(), std::uint64_t{0},
                                                     [](std::uint64_t s, const CycleBasin& cb) { return s + cb.basin; });
        CHECK(basins == r.starts_processed);
        std::uint64_t hist = 0;
        for (const auto& [d, c] : r.stopping_time_histogram) {
            hist += c;
        }
        CHECK(hist == r.starts_processed);
        for (std::size_t i = 1; i < r.cycles.size(); ++i) {
            CHECK(r.cycles[i - 1].cycle.minimum() < r.cycles[i].cycle.minimum());
        }
        for (const auto& cb : r.cycles) {
            CHECK_NOTHROW(canonicalize(cb.cycle.members, Shift{a}, sieve_1e6()));
        }
        // B_a^{sigma_inf}(start) lies on the recorded cycle.
        REQUIRE(r.fates.size() == 19999);
        std::uint32_t max_seen = 0;
        for (const auto& f : r.fates) {
            std::uint64_t v = f.start;
            for (std::uint32_t k = 0; k < f.total_stopping_time; ++k) {
                v = shifted_B(v, Shift{a}, sieve_1e6());
            }
            const CycleBasin* cb = r.find(f.cycle_minimum);
            REQUIRE(cb != nullptr);
            const auto& m = cb->cycle.members;
            REQUIRE(std::find(m.begin(), m.end(), v) != m.end());
            REQUIRE(f.total_stopping_time == iterate_orbit(f.start, Shift{a}, sieve_1e6()).entry_index);
            max_seen = std::max(max_seen, f.total_stopping_time);
        }
        CHECK(r.max_total_stopping_time == max_seen);
    }
}

TEST_CASE("run_census: memoized and plain censuses agree")
{
    for (std::uint64_t a = 1; a <= 5; ++a) {
        CensusOptions memo, plain;
        plain.memoize = false;
        const CensusReport m = run_census(Shift{a}, 10000, sums_1e6(), memo);
        const CensusReport p = run_census(Shift{a}, 10000, sums_1e6(), plain);
        REQUIRE(m.cycles.size() == p.cycles.size());
        for (std::size_t i = 0; i < m.cycles.size(); ++i) {
            CHECK(m.cycles[i].cycle == p.cycles[i].cycle);
            CHECK(m.cycles[i].basin == p.cycles[i].basin);
        }
        CHECK(m.stopping_time_histogram == p.stopping_time_histogram);
    }
}

TEST_CASE("run_census: independent of start order")
{
    std::vector<std::uint64_t> starts(9999);
    std::iota(starts.begin(), starts.end(), 2);
    std::mt19937_64 rng(1234);
    for (std::uint64_t a = 1; a <= 5; ++a) {
        const CensusReport forward = run_census(Shift{a}, starts, sums_1e6());
        auto shuffled = starts;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        const CensusReport permuted = run_census(Shift{a}, shuffled, sums_1e6());
        CHECK(nontrivial_set(forward) == nontrivial_set(permuted));
        REQUIRE(forward.cycles.size() == permuted.cycles.size());
        for (std::size_t i = 0; i < forward.cycles.size(); ++i) {
            CHECK(forward.cycles[i].basin == permuted.cycles[i].basin);
        }
        CHECK(forward.stopping_time_histogram == permuted.stopping_time_histogram);
    }
}

TEST_CASE("run_census: identical across thread counts")
{
    for (std::uint64_t a : {3ull, 17ull, 39ull}) {
        CensusOptions one, many;
        many.threads = 4;
        const CensusReport r1 = run_census(Shift{a}, 300000, sums_1e6(), one);
        const CensusReport r4 = run_census(Shift{a}, 300000, sums_1e6(), many);
        REQUIRE(r1.cycles.size() == r4.cycles.size());
        for (std::size_t i = 0; i < r1.cycles.size(); ++i) {
            CHECK(r1.cycles[i].cycle == r4.cycles[i].cycle);
            CHECK(r1.cycles[i].basin == r4.cycles[i].basin);
        }
        CHECK(r1.stopping_time_histogram == r4.stopping_time_histogram);
    }
}

TEST_CASE("run_census: beta variant")
{
    CensusOptions options;
    options.variant = Variant::small_beta;
    const CensusReport r = run_census(Shift{2}, 5000, sums_1e6(), options);
    const ShiftedMap map(sieve_1e6(), Shift{2}, Variant::small_beta);
    for (const auto& cb : r.cycles) {
        CHECK_NOTHROW(canonicalize(cb.cycle.members, map));
    }
    CHECK(r.variant == Variant::small_beta);
}

TEST_CASE("run_census: errors")
{
    CHECK_THROWS_AS(run_census(Shift{1}, 1, sums_1e6()), domain_error);
    CHECK_THROWS_AS(run_census(Shift{1}, 2000000, sums_1e6()), domain_error);
    const std::vector<std::uint64_t> bad{5, 1};
    CHECK_THROWS_AS(run_census(Shift{1}, bad, sums_1e6()), domain_error);
    CensusOptions tight;
    tight.max_steps = 2;
    CHECK_THROWS_AS(run_census(Shift{12}, 1000, sums_1e6(), tight), nontermination_error);
}

TEST_CASE("cycle_count_sweep: small sweeps")
{
    const SweepResult one = cycle_count_sweep(1, 1000000, sieve_1e6());
    CHECK(one.counts == std::map<std::uint64_t, std::size_t>{{1, 1}});

    const SweepResult twenty = cycle_count_sweep(20, 1000000, sieve_1e6());
    for (const auto& row : golden::table1()) {
        CHECK_MESSAGE(twenty.counts.at(row.a) == row.cycles.size(), "a=" << row.a);
    }
    CHECK(twenty.counts.at(17) == 2);
    CHECK(twenty.max_count == 2);

    CensusOptions par;
    par.threads = 3;
    const SweepResult parallel = cycle_count_sweep(20, 1000000, sieve_1e6(), par);
    CHECK(parallel.counts == twenty.counts);
    CHECK(parallel.argmax == twenty.argmax);
}

TEST_CASE("sign patterns of 3-cycles")
{
    const SweepResult s = cycle_count_sweep(200, 10000, sieve_1e6());
    const auto three = sign_patterns_of_length(3, s.reports);
    CHECK(three.contains("(+,+,-)"));
    CHECK(three.contains("(+,-,-)"));
    CHECK(sign_patterns_of_length(1, s.reports) == std::set<std::string>{"(-)"});
    const auto two = sign_patterns_of_length(2, std::span(&s.reports[38], 1));
    CHECK(two.contains("(+,-)"));
}
