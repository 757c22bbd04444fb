#include "shiftdiv/arith.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <string>

#include "shiftdiv/errors.hpp"

namespace shiftdiv {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) noexcept
{
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 pow_mod(u64 base, u64 exp, u64 m) noexcept
{
    u64 result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) {
            result = mul_mod(result, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

// The first twelve primes are a complete witness set for n < 3.3e24.
constexpr std::array<u64, 12> mr_witnesses{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

bool strong_probable_prime(u64 n, u64 d, unsigned s, u64 base) noexcept
{
    u64 x = pow_mod(base, d, n);
    if (x == 1 || x == n - 1) {
        return true;
    }
    for (unsigned r = 1; r < s; ++r) {
        x = mul_mod(x, x, n);
        if (x == n - 1) {
            return true;
        }
    }
    return false;
}

// Brent's variant of Pollard rho. n must be an odd composite that is not a prime power
// of a small prime; returns a nontrivial divisor.
u64 pollard_brent(u64 n, std::mt19937_64& rng)
{
    if (n % 2 == 0) {
        return 2;
    }
    std::uniform_int_distribution<u64> dist(1, n - 1);
    for (;;) {
        const u64 c = dist(rng);
        u64 y = dist(rng);
        const u64 m = 128;
        u64 g = 1, r = 1, q = 1, x = 0, ys = 0;
        auto f = [&](u64 v) {
            const u64 sq = mul_mod(v, v, n);
            return sq >= n - c ? sq - (n - c) : sq + c;
        };
        do {
            x = y;
            for (u64 i = 0; i < r; ++i) {
                y = f(y);
            }
            u64 k = 0;
            do {
                ys = y;
                for (u64 i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = mul_mod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) {
            return g;
        }
    }
}

void split_into(u64 n, std::vector<u64>& primes, std::mt19937_64& rng)
{
    if (n == 1) {
        return;
    }
    if (is_prime(n)) {
        primes.push_back(n);
        return;
    }
    const u64 d = pollard_brent(n, rng);
    split_into(d, primes, rng);
    split_into(n / d, primes, rng);
}

void append_power(std::vector<PrimePower>& out, u64 p)
{
    if (!out.empty() && out.back().prime == p) {
        ++out.back().exponent;
    } else {
        out.push_back({p, 1});
    }
}

void factor_with_spf(u64 m, const SieveTable& table, std::vector<PrimePower>& out)
{
    while (m > 1) {
        const u64 p = table.spf(m);
        append_power(out, p);
        m /= p;
    }
}

} // namespace

bool Factorization::is_squarefree() const noexcept
{
    return std::all_of(factors.begin(), factors.end(), [](const PrimePower& f) { return f.exponent == 1; });
}

u64 checked_add(u64 x, u64 y)
{
    u64 r;
    if (__builtin_add_overflow(x, y, &r)) {
        throw arithmetic_error("64-bit overflow in " + std::to_string(x) + " + " + std::to_string(y));
    }
    return r;
}

u64 checked_mul(u64 x, u64 y)
{
    u64 r;
    if (__builtin_mul_overflow(x, y, &r)) {
        throw arithmetic_error("64-bit overflow in " + std::to_string(x) + " * " + std::to_string(y));
    }
    return r;
}

u64 checked_pow(u64 base, unsigned exponent)
{
    u64 r = 1;
    for (unsigned i = 0; i < exponent; ++i) {
        r = checked_mul(r, base);
    }
    return r;
}

bool is_prime(u64 n) noexcept
{
    if (n < 2) {
        return false;
    }
    for (const u64 p : mr_witnesses) {
        if (n % p == 0) {
            return n == p;
        }
    }
    if (n < 41 * 41) {
        return true;
    }
    u64 d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    return std::all_of(mr_witnesses.begin(), mr_witnesses.end(),
                       [&](u64 base) { return strong_probable_prime(n, d, s, base); });
}

bool is_prime(u64 n, const SieveTable& table) noexcept
{
    if (n < 2) {
        return false;
    }
    if (table.covers(n)) {
        return table.spf(n) == n;
    }
    return is_prime(n);
}

Factorization factorize(u64 n, const SieveTable& table)
{
    if (n < 2) {
        throw domain_error("factorize requires n >= 2, got " + std::to_string(n));
    }
    Factorization result{n, {}};
    auto& out = result.factors;
    if (table.covers(n)) {
        factor_with_spf(n, table, out);
        return result;
    }

    u64 m = n;
    bool settled = is_prime(m);
    if (!settled) {
        for (const u64 p : table.primes()) {
            if (p * p > m) {
                break;
            }
            if (m % p != 0) {
                continue;
            }
            do {
                append_power(out, p);
                m /= p;
            } while (m % p == 0);
            if (table.covers(m)) {
                factor_with_spf(m, table, out);
                return result;
            }
            if (is_prime(m)) {
                settled = true;
                break;
            }
        }
    }
    if (m == 1) {
        return result;
    }
    const u64 largest_trial = table.primes().empty() ? 1 : table.primes().back();
    if (settled || static_cast<u128>(largest_trial) * largest_trial >= m) {
        // Either known prime, or no factor <= sqrt(m) survived trial division.
        append_power(out, m);
        return result;
    }

    // Remaining cofactor has all prime factors above the sieve limit.
    std::mt19937_64 rng(table.rho_seed() ^ n);
    std::vector<u64> primes;
    split_into(m, primes, rng);
    std::sort(primes.begin(), primes.end());
    for (const u64 p : primes) {
        append_power(out, p);
    }
    return result;
}

u64 big_B(const Factorization& f) noexcept
{
    u64 sum = 0;
    for (const auto& [p, r] : f.factors) {
        sum += p * r;
    }
    return sum;
}

u64 small_beta(const Factorization& f) noexcept
{
    u64 sum = 0;
    for (const auto& pp : f.factors) {
        sum += pp.prime;
    }
    return sum;
}

u64 big_B(u64 n, const SieveTable& table)
{
    if (n < 2) {
        throw domain_error("B(n) requires n >= 2, got " + std::to_string(n));
    }
    if (table.covers(n)) {
        u64 sum = 0;
        while (n > 1) {
            const u64 p = table.spf(n);
            sum += p;
            n /= p;
        }
        return sum;
    }
    return big_B(factorize(n, table));
}

u64 small_beta(u64 n, const SieveTable& table)
{
    if (n < 2) {
        throw domain_error("beta(n) requires n >= 2, got " + std::to_string(n));
    }
    if (table.covers(n)) {
        u64 sum = 0;
        u64 last = 0;
        while (n > 1) {
            const u64 p = table.spf(n);
            if (p != last) {
                sum += p;
                last = p;
            }
            n /= p;
        }
        return sum;
    }
    return small_beta(factorize(n, table));
}

u64 shifted_B(u64 n, Shift shift, const SieveTable& table)
{
    if (n < 2) {
        throw domain_error("B_a(n) requires n >= 2, got " + std::to_string(n));
    }
    return is_prime(n, table) ? checked_add(n, shift.a) : big_B(n, table);
}

u64 shifted_beta(u64 n, Shift shift, const SieveTable& table)
{
    if (n < 2) {
        throw domain_error("beta_a(n) requires n >= 2, got " + std::to_string(n));
    }
    return is_prime(n, table) ? checked_add(n, shift.a) : small_beta(n, table);
}

std::string to_string(Variant v)
{
    return v == Variant::big_B ? "B" : "beta";
}

u64 ShiftedMap::operator()(u64 n) const
{
    if (n < 2 && extend_domain_) {
        return n;
    }
    return variant_ == Variant::big_B ? shifted_B(n, shift_, *table_) : shifted_beta(n, shift_, *table_);
}

SumTable::SumTable(const SieveTable& table) : SumTable(table, table.limit()) {}

SumTable::SumTable(const SieveTable& table, u64 limit) : sieve_(&table), limit_(limit)
{
    if (limit > table.limit()) {
        throw domain_error("sum table limit " + std::to_string(limit) + " exceeds sieve limit "
                           + std::to_string(table.limit()));
    }
    try {
        big_B_.assign(limit + 1, 0);
        beta_.assign(limit + 1, 0);
    } catch (const std::bad_alloc&) {
        throw resource_error("cannot allocate sum table for limit " + std::to_string(limit));
    }
    if (limit >= 1) {
        big_B_[1] = 1;
        beta_[1] = 1;
    }
    for (u64 n = 2; n <= limit; ++n) {
        const std::uint32_t p = table.spf(n);
        const u64 m = n / p;
        if (m == 1) {
            big_B_[n] = p;
            beta_[n] = p;
            continue;
        }
        big_B_[n] = big_B_[m] + p;
        beta_[n] = beta_[m] + (table.spf(m) == p ? 0 : p);
    }
}

} // namespace shiftdiv
