#include "shiftdiv/constructions.hpp"

#include <string>

#include "shiftdiv/errors.hpp"

namespace shiftdiv {

std::uint64_t previous_prime(std::uint64_t n, const SieveTable& table)
{
    if (n <= 2) {
        throw domain_error("no prime below " + std::to_string(n));
    }
    std::uint64_t q = n - 1;
    while (!is_prime(q, table)) {
        --q;
    }
    return q;
}

AmicablePair build_amicable(std::uint64_t p, const SieveTable& table, std::optional<std::uint64_t> gap_divisor)
{
    if (p <= 3 || !is_prime(p, table)) {
        throw domain_error("amicable construction needs a prime p > 3, got " + std::to_string(p));
    }
    const std::uint64_t q = previous_prime(p, table);
    const std::uint64_t gap = p - q;

    std::uint64_t n = 0;
    if (is_prime(gap, table) && !gap_divisor) {
        n = checked_mul(q, gap);
    } else {
        std::uint64_t r = 0;
        if (gap_divisor) {
            r = *gap_divisor;
            if (!is_prime(r, table) || gap % r != 0) {
                throw domain_error(std::to_string(r) + " is not a prime divisor of the gap " + std::to_string(gap));
            }
        } else {
            r = factorize(gap, table).factors.back().prime;
        }
        const std::uint64_t b = gap / r;
        n = checked_mul(q, checked_pow(r, static_cast<unsigned>(b)));
    }
    // B(n) = q + gap = p, and n >= 2q > p by Bertrand, so a = n - p is a valid shift.
    return AmicablePair{p, n, Shift{n - p}, q};
}

bool is_valid_amicable(const AmicablePair& pair, const SieveTable& table)
{
    if (pair.p < 2 || pair.n < 4 || !is_prime(pair.p, table) || is_prime(pair.n, table)) {
        return false;
    }
    if (pair.n != pair.p + pair.shift.a) {
        return false;
    }
    return shifted_B(pair.p, pair.shift, table) == pair.n && shifted_B(pair.n, pair.shift, table) == pair.p;
}

std::uint64_t min_composite_preimage(std::uint64_t p, const SieveTable& table)
{
    if (p < 5) {
        throw domain_error("min_composite_preimage requires p >= 5, got " + std::to_string(p));
    }
    // p = 2 + (p-2) or 3 + (p-3) style partitions always exist, so the scan terminates.
    for (std::uint64_t n = 4;; ++n) {
        if (!is_prime(n, table) && big_B(n, table) == p) {
            return n;
        }
    }
}

std::optional<ChainWitness> find_ascending_chain(std::size_t k, std::uint64_t search_bound, const SieveTable& table)
{
    if (k < 1) {
        throw domain_error("chain length k must be at least 1");
    }
    // Every prime r <= k+1 must divide a, unless r itself is a term: among any r
    // consecutive terms one is divisible by r. For p > k+1 no term can equal such an r.
    std::uint64_t forced = 1;
    bool forced_overflow = false;
    for (std::uint64_t r = 2; r <= k + 1; ++r) {
        if (is_prime(r)) {
            if (forced > search_bound / r) {
                forced_overflow = true;
                break;
            }
            forced *= r;
        }
    }

    auto is_chain = [&](std::uint64_t p, std::uint64_t a) {
        for (std::size_t j = 1; j <= k; ++j) {
            if (!is_prime(p + j * a, table)) {
                return false;
            }
        }
        return true;
    };

    for (std::uint64_t p = 2; p <= search_bound; ++p) {
        if (!is_prime(p, table)) {
            continue;
        }
        if (p > k + 1 && forced_overflow) {
            break;
        }
        if ((search_bound - p) / k < 2) {
            break;
        }
        const std::uint64_t a_max = (search_bound - p) / k;
        const std::uint64_t step = p > k + 1 ? forced : 2;
        for (std::uint64_t a = step; a <= a_max; a += step) {
            if (is_chain(p, a)) {
                ChainWitness w{p, Shift{a}, k, {}};
                for (std::size_t j = 0; j <= k; ++j) {
                    w.chain.push_back(p + j * a);
                }
                return w;
            }
        }
    }
    return std::nullopt;
}

bool validate_chain(const ChainWitness& witness, const SieveTable& table)
{
    if (witness.chain.size() != witness.k + 1 || witness.chain.front() != witness.n) {
        return false;
    }
    for (std::size_t j = 0; j < witness.k; ++j) {
        const std::uint64_t cur = witness.chain[j];
        if (cur < 2 || shifted_B(cur, witness.shift, table) != witness.chain[j + 1]) {
            return false;
        }
        if (witness.chain[j + 1] <= cur) {
            return false;
        }
    }
    return true;
}

} // namespace shiftdiv
