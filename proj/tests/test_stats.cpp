#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "shiftdiv/errors.hpp"
#include "shiftdiv/stats.hpp"

using namespace shiftdiv;
using V = std::vector<std::uint64_t>;

namespace {

const SieveTable& sieve_1e6()
{
    static const SieveTable table(1000000);
    return table;
}

} // namespace

TEST_CASE("default_checkpoints")
{
    CHECK(default_checkpoints(1000) == V{10, 100, 1000});
    CHECK(default_checkpoints(5000) == V{10, 100, 1000, 5000});
    CHECK(default_checkpoints(7) == V{7});
}

TEST_CASE("average_order_series: small sums")
{
    const auto& t = sieve_1e6();
    const V cp{10};
    CHECK(average_order_series(Shift{0}, cp, t).sums[0] == 45);
    CHECK(average_order_series(Shift{5}, cp, t).sums[0] == 45 + 4 * 5);

    const auto s = average_order_series(Shift{0}, V{10, 100, 1000}, t);
    std::int64_t brute = 0;
    for (std::uint64_t n = 2; n <= 1000; ++n) {
        brute += static_cast<std::int64_t>(oracle::big_B(n));
    }
    CHECK(s.sums[2] == brute);
    const double x = 1000.0;
    CHECK(s.reference[2] == doctest::Approx(std::numbers::pi * std::numbers::pi * x * x / (12.0 * std::log(x))));
    CHECK(s.ratios[2] == doctest::Approx(static_cast<double>(brute) / s.reference[2]));
}

TEST_CASE("property: a shift adds a times pi(x)")
{
    const auto& t = sieve_1e6();
    const V cp{100, 10000, 1000000};
    const auto base = average_order_series(Shift{0}, cp, t);
    for (const std::uint64_t a : {1ull, 2ull, 39ull, 1000ull}) {
        const auto shifted = average_order_series(Shift{a}, cp, t, 2);
        for (std::size_t i = 0; i < cp.size(); ++i) {
            CHECK(shifted.sums[i] - base.sums[i] == static_cast<std::int64_t>(a * t.prime_count(cp[i])));
        }
    }
}

TEST_CASE("b_minus_beta_series")
{
    const auto& t = sieve_1e6();
    CHECK(b_minus_beta_series(Shift{0}, V{16}, t).sums[0] == 17);
    const V cp{1000, 100000};
    const auto base = b_minus_beta_series(Shift{0}, cp, t);
    const auto shifted = b_minus_beta_series(Shift{7}, cp, t, 3);
    CHECK(base.sums == shifted.sums);
    const double x = 100000.0;
    CHECK(base.reference[1] == doctest::Approx(x * std::log(std::log(x))));
}

TEST_CASE("local densities of B - beta")
{
    const auto& t = sieve_1e6();
    CHECK(estimate_local_density(1, 1000000, t) == 0.0);
    const double squarefree = estimate_local_density(0, 1000000, t);
    CHECK(std::abs(squarefree - 6.0 / (std::numbers::pi * std::numbers::pi)) < 1e-3);
    const double d5 = estimate_local_density(2, 100000, t);
    const double d6 = estimate_local_density(2, 1000000, t);
    CHECK(std::abs(d5 - d6) < 1e-3);

    const auto hist = excess_histogram(10000, t);
    std::uint64_t total = 0;
    for (const auto& [excess, count] : hist) {
        total += count;
    }
    CHECK(total == 9999);
    CHECK(hist.count(1) == 0);
    CHECK(static_cast<double>(hist.at(0)) / 10000.0 == doctest::Approx(estimate_local_density(0, 10000, t)));
}

TEST_CASE("parity_sum")
{
    const auto& t = sieve_1e6();
    const V cp{1000, 100000};
    const auto even = parity_sum(Shift{0}, cp, t);
    const auto even2 = parity_sum(Shift{2}, cp, t);
    CHECK(even.sums == even2.sums);
    CHECK(even.reference[0] == 0.0);
    CHECK(even.ratios[1] == doctest::Approx(static_cast<double>(even.sums[1]) / 100000.0));

    std::int64_t brute = 0;
    for (std::uint64_t n = 2; n <= 1000; ++n) {
        brute += oracle::shifted_B(n, 1) % 2 == 0 ? 1 : -1;
    }
    const auto odd = parity_sum(Shift{1}, cp, t);
    CHECK(odd.sums[0] == brute);
    // An odd shift flips the sign of every prime: odd primes gain 2, the prime 2 loses 2.
    CHECK(odd.sums[1] - even.sums[1] == 2 * static_cast<std::int64_t>(t.prime_count(100000)) - 4);
    CHECK(odd.reference[1] == doctest::Approx(2.0 * 100000.0 / std::log(100000.0)));
}

TEST_CASE("residue_distribution")
{
    const auto& t = sieve_1e6();
    const auto dist = residue_distribution(Shift{0}, 3, 1000000, t);
    CHECK(dist.size() == 3);
    std::uint64_t total = 0;
    for (const auto& [h, count] : dist) {
        total += count;
        CHECK(std::abs(static_cast<double>(count) - 1000000.0 / 3.0) < 0.03 * 1000000.0 / 3.0);
    }
    CHECK(total == 999999);

    const auto small = residue_distribution(Shift{4}, 5, 10, t);
    V counts(5, 0);
    for (std::uint64_t n = 2; n <= 10; ++n) {
        ++counts[oracle::shifted_B(n, 4) % 5];
    }
    for (std::uint64_t h = 0; h < 5; ++h) {
        CHECK(small.at(h) == counts[h]);
    }
    CHECK_THROWS_AS(residue_distribution(Shift{0}, 2, 100, t), domain_error);
}

TEST_CASE("checkpoint validation and threads")
{
    const auto& t = sieve_1e6();
    CHECK_THROWS_AS(average_order_series(Shift{0}, V{}, t), domain_error);
    CHECK_THROWS_AS(average_order_series(Shift{0}, V{100, 10}, t), domain_error);
    CHECK_THROWS_AS(average_order_series(Shift{0}, V{1}, t), domain_error);
    CHECK_THROWS_AS(average_order_series(Shift{0}, V{2000000}, t), domain_error);

    const V cp{10, 1000, 654321};
    const auto one = average_order_series(Shift{3}, cp, t, 1);
    const auto many = average_order_series(Shift{3}, cp, t, 7);
    CHECK(one.sums == many.sums);
    CHECK(parity_sum(Shift{3}, cp, t, 1).sums == parity_sum(Shift{3}, cp, t, 5).sums);
}
