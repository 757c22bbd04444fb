#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace shiftdiv {

/// Smallest-prime-factor table for 0..limit, built with a linear sieve.
///
/// spf(n) == n exactly when n is prime; for composite n, spf(n) <= sqrt(n).
/// Entries 0 and 1 hold 0. The table is immutable once built and may be
/// shared freely between threads.
class SieveTable {
public:
    /// Largest supported limit; spf entries are stored as 32-bit values.
    static constexpr std::uint64_t max_limit = 0xFFFFFFFFull;
    static constexpr std::uint64_t default_rho_seed = 0x9E3779B97F4A7C15ull;

    /// Throws domain_error if limit < 2, resource_error if the table cannot be allocated.
    explicit SieveTable(std::uint64_t limit, std::uint64_t rho_seed = default_rho_seed);

    std::uint64_t limit() const noexcept { return limit_; }

    /// Seed for the randomized splitting step used above the limit.
    std::uint64_t rho_seed() const noexcept { return rho_seed_; }

    /// Requires 2 <= n <= limit().
    std::uint32_t spf(std::uint64_t n) const noexcept { return spf_[n]; }

    bool covers(std::uint64_t n) const noexcept { return n <= limit_; }

    /// All primes <= limit(), ascending.
    std::span<const std::uint32_t> primes() const noexcept { return primes_; }

    /// pi(x) for x <= limit().
    std::uint64_t prime_count(std::uint64_t x) const noexcept;

    std::span<const std::uint32_t> spf_view() const noexcept { return spf_; }

private:
    std::uint64_t limit_;
    std::uint64_t rho_seed_;
    std::vector<std::uint32_t> spf_;
    std::vector<std::uint32_t> primes_;
};

SieveTable build_sieve(std::uint64_t limit);

} // namespace shiftdiv
