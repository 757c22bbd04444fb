#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "shiftdiv/arith.hpp"

namespace shiftdiv {

/// A 2-cycle p -> n -> p under B_a, with p prime and n composite.
struct AmicablePair {
    std::uint64_t p = 0;
    std::uint64_t n = 0;
    Shift shift;
    /// Largest prime below p used by the construction.
    std::uint64_t q = 0;
};

/// Largest prime strictly below n. Throws domain_error for n <= 2.
std::uint64_t previous_prime(std::uint64_t n, const SieveTable& table);

/// Builds a composite n with B(n) = p from the prime gap g = p - q, q the previous prime:
/// n = q*g if g is prime, otherwise n = q*r^(g/r) for a prime divisor r of g.
/// The largest prime divisor of g is used unless gap_divisor names another one.
///
/// Throws domain_error if p <= 3, p is composite, or gap_divisor does not divide the gap;
/// arithmetic_error if the power overflows.
AmicablePair build_amicable(std::uint64_t p, const SieveTable& table,
                            std::optional<std::uint64_t> gap_divisor = std::nullopt);

/// True if (pair.p, pair.n) is a genuine 2-cycle of B_a with p prime and n composite.
bool is_valid_amicable(const AmicablePair& pair, const SieveTable& table);

/// Least composite n with B(n) = p, by upward scan. Requires p >= 5.
std::uint64_t min_composite_preimage(std::uint64_t p, const SieveTable& table);

/// n < B_a(n) < ... < B_a^k(n) built from a run of primes in arithmetic progression.
struct ChainWitness {
    std::uint64_t n = 0;
    Shift shift;
    std::size_t k = 0;
    /// k + 1 values starting at n.
    std::vector<std::uint64_t> chain;
};

/// Smallest-start prime progression p, p+a, ..., p+k*a with every term <= search_bound
/// and a even; ties on p go to the smallest a.
std::optional<ChainWitness> find_ascending_chain(std::size_t k, std::uint64_t search_bound,
                                                 const SieveTable& table);

/// Recomputes each step with shifted_B and checks strict increase.
bool validate_chain(const ChainWitness& witness, const SieveTable& table);

} // namespace shiftdiv
