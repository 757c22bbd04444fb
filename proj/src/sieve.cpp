#include "shiftdiv/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <new>
#include <string>

#include "shiftdiv/errors.hpp"

namespace shiftdiv {

SieveTable::SieveTable(std::uint64_t limit, std::uint64_t rho_seed)
    : limit_(limit), rho_seed_(rho_seed)
{
    if (limit < 2) {
        throw domain_error("sieve limit must be at least 2, got " + std::to_string(limit));
    }
    if (limit > max_limit) {
        throw resource_error("sieve limit " + std::to_string(limit) + " exceeds the supported maximum "
                             + std::to_string(max_limit));
    }
    try {
        spf_.assign(limit + 1, 0);
        // pi(x) < 1.26 x / ln x for x > 1
        const double lx = std::log(static_cast<double>(limit));
        primes_.reserve(static_cast<std::size_t>(1.26 * static_cast<double>(limit) / lx) + 16);
    } catch (const std::bad_alloc&) {
        throw resource_error("cannot allocate sieve table for limit " + std::to_string(limit));
    }

    // Linear sieve: every composite is struck exactly once, by its smallest prime factor.
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (spf_[i] == 0) {
            spf_[i] = static_cast<std::uint32_t>(i);
            primes_.push_back(static_cast<std::uint32_t>(i));
        }
        const std::uint32_t lp = spf_[i];
        for (const std::uint32_t p : primes_) {
            const std::uint64_t m = static_cast<std::uint64_t>(p) * i;
            if (p > lp || m > limit) {
                break;
            }
            spf_[m] = p;
        }
    }
    primes_.shrink_to_fit();
}

std::uint64_t SieveTable::prime_count(std::uint64_t x) const noexcept
{
    const auto it = std::upper_bound(primes_.begin(), primes_.end(), x,
                                     [](std::uint64_t v, std::uint32_t p) { return v < p; });
    return static_cast<std::uint64_t>(it - primes_.begin());
}

SieveTable build_sieve(std::uint64_t limit)
{
    return SieveTable(limit);
}

} // namespace shiftdiv
