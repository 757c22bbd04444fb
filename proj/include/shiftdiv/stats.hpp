#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "shiftdiv/arith.hpp"

namespace shiftdiv {

/// Exact partial sums of an arithmetic function over 2 <= n <= x at each checkpoint,
/// paired with an analytic main term.
///
/// ratios[i] = sums[i] / reference[i], or sums[i] / x when the reference is zero.
struct PartialSumSeries {
    std::vector<std::uint64_t> checkpoints;
    std::vector<std::int64_t> sums;
    std::vector<double> reference;
    std::vector<double> ratios;
};

/// 10, 100, ... up to x, plus x itself if it is not a power of ten.
std::vector<std::uint64_t> default_checkpoints(std::uint64_t x);

/// Sum of B_a(n); reference pi^2 x^2 / (12 log x).
PartialSumSeries average_order_series(Shift shift, std::span<const std::uint64_t> checkpoints,
                                      const SieveTable& table, unsigned threads = 1);

/// Sum of B_a(n) - beta_a(n) (shift-independent); reference x log log x.
PartialSumSeries b_minus_beta_series(Shift shift, std::span<const std::uint64_t> checkpoints,
                                     const SieveTable& table, unsigned threads = 1);

/// S(x) = sum of (-1)^{B_a(n)}; reference 0 for even a, 2x / log x for odd a.
PartialSumSeries parity_sum(Shift shift, std::span<const std::uint64_t> checkpoints, const SieveTable& table,
                            unsigned threads = 1);

/// #{2 <= n <= x : B(n) - beta(n) = N} / x.
double estimate_local_density(std::uint64_t N, std::uint64_t x, const SieveTable& table);

/// B(n) - beta(n) -> number of 2 <= n <= x taking that value.
std::map<std::uint64_t, std::uint64_t> excess_histogram(std::uint64_t x, const SieveTable& table);

/// h -> #{2 <= n <= x : B_a(n) = h mod q}, for every h in 0..q-1. Requires q > 2.
std::map<std::uint64_t, std::uint64_t> residue_distribution(Shift shift, std::uint64_t q, std::uint64_t x,
                                                            const SieveTable& table);

} // namespace shiftdiv
