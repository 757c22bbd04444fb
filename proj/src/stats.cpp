#include "shiftdiv/stats.hpp"

#include <atomic>
#include <cmath>
#include <numbers>
#include <string>
#include <thread>

#include "shiftdiv/errors.hpp"

namespace shiftdiv {

namespace {

void check_checkpoints(std::span<const std::uint64_t> checkpoints, const SieveTable& table)
{
    if (checkpoints.empty()) {
        throw domain_error("at least one checkpoint is required");
    }
    std::uint64_t prev = 1;
    for (const std::uint64_t x : checkpoints) {
        if (x <= prev) {
            throw domain_error("checkpoints must be strictly increasing and at least 2");
        }
        if (x > table.limit()) {
            throw domain_error("checkpoint " + std::to_string(x) + " exceeds sieve limit "
                               + std::to_string(table.limit()));
        }
        prev = x;
    }
}

std::int64_t checked_sum(std::int64_t x, std::int64_t y)
{
    std::int64_t r;
    if (__builtin_add_overflow(x, y, &r)) {
        throw arithmetic_error("partial sum exceeds the 64-bit range");
    }
    return r;
}

// Sums term(n) over 2..x for each checkpoint x. Ranges are cut into chunks that never
// straddle a checkpoint; chunks are summed in parallel and reduced in order.
template <class Term, class Reference>
PartialSumSeries series(std::span<const std::uint64_t> checkpoints, const SieveTable& table, unsigned threads,
                        Term term, Reference reference)
{
    check_checkpoints(checkpoints, table);
    const SumTable sums(table, checkpoints.back());

    struct Chunk {
        std::uint64_t lo, hi;
        std::size_t checkpoint;
        std::int64_t sum;
    };
    constexpr std::uint64_t chunk_size = 1 << 16;
    std::vector<Chunk> chunks;
    std::uint64_t lo = 2;
    for (std::size_t c = 0; c < checkpoints.size(); ++c) {
        while (lo <= checkpoints[c]) {
            const std::uint64_t hi = std::min(checkpoints[c], lo + chunk_size - 1);
            chunks.push_back({lo, hi, c, 0});
            lo = hi + 1;
        }
    }

    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= chunks.size()) {
                return;
            }
            std::int64_t s = 0;
            for (std::uint64_t n = chunks[i].lo; n <= chunks[i].hi; ++n) {
                s += term(n, sums);
            }
            chunks[i].sum = s;
        }
    };
    const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(chunks.size())));
    if (workers == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(work);
        }
    }

    PartialSumSeries out;
    std::int64_t running = 0;
    std::size_t ci = 0;
    for (std::size_t c = 0; c < checkpoints.size(); ++c) {
        for (; ci < chunks.size() && chunks[ci].checkpoint == c; ++ci) {
            running = checked_sum(running, chunks[ci].sum);
        }
        const std::uint64_t x = checkpoints[c];
        const double ref = reference(x);
        out.checkpoints.push_back(x);
        out.sums.push_back(running);
        out.reference.push_back(ref);
        out.ratios.push_back(static_cast<double>(running) / (ref != 0.0 ? ref : static_cast<double>(x)));
    }
    return out;
}

std::int64_t as_signed(std::uint64_t v)
{
    if (v > static_cast<std::uint64_t>(INT64_MAX)) {
        throw arithmetic_error("term exceeds the signed 64-bit range");
    }
    return static_cast<std::int64_t>(v);
}

} // namespace

std::vector<std::uint64_t> default_checkpoints(std::uint64_t x)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 10; p <= x; p *= 10) {
        out.push_back(p);
        if (p > UINT64_MAX / 10) {
            break;
        }
    }
    if (out.empty() || out.back() != x) {
        if (x >= 2) {
            out.push_back(x);
        }
    }
    return out;
}

PartialSumSeries average_order_series(Shift shift, std::span<const std::uint64_t> checkpoints,
                                      const SieveTable& table, unsigned threads)
{
    return series(
        checkpoints, table, threads,
        [shift](std::uint64_t n, const SumTable& s) { return as_signed(s.shifted_B(n, shift)); },
        [](std::uint64_t x) {
            const double xd = static_cast<double>(x);
            return std::numbers::pi * std::numbers::pi * xd * xd / (12.0 * std::log(xd));
        });
}

PartialSumSeries b_minus_beta_series(Shift, std::span<const std::uint64_t> checkpoints, const SieveTable& table,
                                     unsigned threads)
{
    // B_a(n) - beta_a(n) = B(n) - beta(n): both sides pick up the same +a at primes.
    return series(
        checkpoints, table, threads,
        [](std::uint64_t n, const SumTable& s) {
            return static_cast<std::int64_t>(s.big_B(n)) - static_cast<std::int64_t>(s.small_beta(n));
        },
        [](std::uint64_t x) {
            const double xd = static_cast<double>(x);
            return xd * std::log(std::log(xd));
        });
}

PartialSumSeries parity_sum(Shift shift, std::span<const std::uint64_t> checkpoints, const SieveTable& table,
                            unsigned threads)
{
    const bool odd = shift.a % 2 == 1;
    return series(
        checkpoints, table, threads,
        [shift](std::uint64_t n, const SumTable& s) -> std::int64_t {
            return s.shifted_B(n, shift) % 2 == 0 ? 1 : -1;
        },
        [odd](std::uint64_t x) {
            const double xd = static_cast<double>(x);
            return odd ? 2.0 * xd / std::log(xd) : 0.0;
        });
}

std::map<std::uint64_t, std::uint64_t> excess_histogram(std::uint64_t x, const SieveTable& table)
{
    if (x > table.limit()) {
        throw domain_error("x exceeds sieve limit");
    }
    std::map<std::uint64_t, std::uint64_t> out;
    if (x < 2) {
        return out;
    }
    const SumTable sums(table, x);
    std::vector<std::uint64_t> dense;
    for (std::uint64_t n = 2; n <= x; ++n) {
        const std::uint64_t e = sums.big_B(n) - sums.small_beta(n);
        if (e >= dense.size()) {
            dense.resize(e + 1, 0);
        }
        ++dense[e];
    }
    for (std::uint64_t e = 0; e < dense.size(); ++e) {
        if (dense[e] != 0) {
            out[e] = dense[e];
        }
    }
    return out;
}

double estimate_local_density(std::uint64_t N, std::uint64_t x, const SieveTable& table)
{
    if (x < 1) {
        throw domain_error("x must be positive");
    }
    const auto hist = excess_histogram(x, table);
    const auto it = hist.find(N);
    const std::uint64_t count = it == hist.end() ? 0 : it->second;
    return static_cast<double>(count) / static_cast<double>(x);
}

std::map<std::uint64_t, std::uint64_t> residue_distribution(Shift shift, std::uint64_t q, std::uint64_t x,
                                                            const SieveTable& table)
{
    if (q <= 2) {
        throw domain_error("residue_distribution requires q > 2");
    }
    if (x > table.limit()) {
        throw domain_error("x exceeds sieve limit");
    }
    std::vector<std::uint64_t> counts(q, 0);
    if (x >= 2) {
        const SumTable sums(table, x);
        for (std::uint64_t n = 2; n <= x; ++n) {
            ++counts[sums.shifted_B(n, shift) % q];
        }
    }
    std::map<std::uint64_t, std::uint64_t> out;
    for (std::uint64_t h = 0; h < q; ++h) {
        out[h] = counts[h];
    }
    return out;
}

} // namespace shiftdiv
