#include "shiftdiv/fibres.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "shiftdiv/errors.hpp"

namespace shiftdiv {

namespace {

// Products of multisets of primes (non-decreasing, each >= min_prime) summing to remaining.
void products_of_partitions(std::uint64_t remaining, std::size_t first, std::uint64_t product,
                            const std::vector<std::uint64_t>& primes, std::vector<std::uint64_t>& out)
{
    if (remaining == 0) {
        out.push_back(product);
        return;
    }
    for (std::size_t i = first; i < primes.size() && primes[i] <= remaining; ++i) {
        const std::uint64_t rest = remaining - primes[i];
        if (rest == 1) {
            continue;
        }
        products_of_partitions(rest, i, checked_mul(product, primes[i]), primes, out);
    }
}

} // namespace

const BigInt& KappaTable::kappa(std::uint64_t m) const
{
    if (m < 1 || m >= kappa_.size()) {
        throw domain_error("kappa(" + std::to_string(m) + ") outside 1.." + std::to_string(limit()));
    }
    return kappa_[m];
}

KappaTable build_kappa(std::uint64_t limit, const SieveTable& table)
{
    if (limit < 1) {
        throw domain_error("kappa table limit must be at least 1");
    }
    KappaTable t;
    t.beta_.assign(limit + 1, 0);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        t.beta_[i] = small_beta(i, table);
    }
    t.kappa_.assign(limit + 1, BigInt(0));
    t.kappa_[0] = 1;
    BigInt acc;
    for (std::uint64_t n = 1; n <= limit; ++n) {
        acc = 0;
        // i = n contributes beta(n) * kappa(0) = beta(n).
        for (std::uint64_t i = 2; i <= n; ++i) {
            if (t.beta_[i] != 0 && t.kappa_[n - i] != 0) {
                acc += t.kappa_[n - i] * t.beta_[i];
            }
        }
        BigInt quotient;
        BigInt remainder;
        boost::multiprecision::divide_qr(acc, BigInt(n), quotient, remainder);
        if (remainder != 0) {
            throw consistency_error("kappa recursion not exact at n=" + std::to_string(n));
        }
        t.kappa_[n] = std::move(quotient);
    }
    return t;
}

double log_big(const BigInt& x)
{
    if (x <= 0) {
        throw domain_error("log of a non-positive integer");
    }
    const std::size_t bits = boost::multiprecision::msb(x) + 1;
    if (bits <= 60) {
        return std::log(x.convert_to<double>());
    }
    const std::size_t shift = bits - 60;
    const BigInt top = x >> shift;
    return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::numbers::ln2;
}

double kappa_asymptotic_ratio(std::uint64_t m, const KappaTable& ktable)
{
    if (m < 3 || m > ktable.limit()) {
        throw domain_error("kappa_asymptotic_ratio requires 3 <= m <= " + std::to_string(ktable.limit()));
    }
    const BigInt& k = ktable.kappa(m);
    const double md = static_cast<double>(m);
    const double scale = 2.0 * std::numbers::pi * std::sqrt(md / (3.0 * std::log(md)));
    return log_big(k) / scale;
}

std::vector<std::uint64_t> enumerate_fibre(std::uint64_t m, Shift shift, std::uint64_t x_bound,
                                           const SieveTable& table)
{
    if (m < 2) {
        throw domain_error("fibre target must be at least 2");
    }
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = 2; n <= x_bound; ++n) {
        if (shifted_B(n, shift, table) == m) {
            out.push_back(n);
        }
    }
    return out;
}

std::vector<std::uint64_t> enumerate_fibre_all(std::uint64_t m, Shift shift, const SieveTable& table)
{
    if (m < 2) {
        throw domain_error("fibre target must be at least 2");
    }
    std::vector<std::uint64_t> primes;
    for (std::uint64_t p = 2; p <= m; ++p) {
        if (is_prime(p, table)) {
            primes.push_back(p);
        }
    }
    std::vector<std::uint64_t> out;
    products_of_partitions(m, 0, 1, primes, out);
    if (shift.a != 0) {
        // The only prime in the unshifted fibre is m itself; under B_a it maps to m + a instead,
        // and the prime m - a (if any) joins.
        std::erase_if(out, [&](std::uint64_t n) { return is_prime(n, table); });
        if (m > shift.a && is_prime(m - shift.a, table)) {
            out.push_back(m - shift.a);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

DensityCount preimage_density(const std::function<bool(std::uint64_t)>& target, std::uint64_t x,
                              const SieveTable& table, Shift shift)
{
    if (x > table.limit()) {
        throw domain_error("density bound " + std::to_string(x) + " exceeds sieve limit "
                           + std::to_string(table.limit()));
    }
    if (x < 2) {
        return {};
    }
    const SumTable sums(table, x);
    DensityCount result;
    for (std::uint64_t n = 2; n <= x; ++n) {
        if (target(sums.shifted_B(n, shift))) {
            ++result.count;
        }
    }
    result.density = static_cast<double>(result.count) / static_cast<double>(x);
    return result;
}

bool is_perfect_square(std::uint64_t v) noexcept
{
    auto r = std::min<std::uint64_t>(static_cast<std::uint64_t>(std::sqrt(static_cast<double>(v))), 0xFFFFFFFFull);
    while (r > 0 && r * r > v) {
        --r;
    }
    while (r + 1 <= v / (r + 1)) {
        ++r;
    }
    return r * r == v;
}

} // namespace shiftdiv
