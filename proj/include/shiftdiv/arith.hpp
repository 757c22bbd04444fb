#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "shiftdiv/sieve.hpp"

namespace shiftdiv {

/// Perturbation applied at primes. a = 0 recovers the unshifted functions.
struct Shift {
    std::uint64_t a = 0;

    friend bool operator==(Shift, Shift) = default;
    friend auto operator<=>(Shift, Shift) = default;
};

struct PrimePower {
    std::uint64_t prime;
    unsigned exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// n = prod p_i^{r_i}, primes strictly increasing.
struct Factorization {
    std::uint64_t n = 0;
    std::vector<PrimePower> factors;

    std::size_t distinct() const noexcept { return factors.size(); }
    bool is_prime() const noexcept { return factors.size() == 1 && factors[0].exponent == 1; }
    bool is_squarefree() const noexcept;
};

// Checked 64-bit helpers; throw arithmetic_error instead of wrapping.
std::uint64_t checked_add(std::uint64_t x, std::uint64_t y);
std::uint64_t checked_mul(std::uint64_t x, std::uint64_t y);
std::uint64_t checked_pow(std::uint64_t base, unsigned exponent);

/// Deterministic Miller-Rabin, exact on the whole 64-bit range.
bool is_prime(std::uint64_t n) noexcept;

/// Sieve lookup below the table limit, Miller-Rabin above.
bool is_prime(std::uint64_t n, const SieveTable& table) noexcept;

/// Throws domain_error for n < 2.
Factorization factorize(std::uint64_t n, const SieveTable& table);

/// Sum of prime divisors with multiplicity. Throws domain_error for n < 2.
std::uint64_t big_B(std::uint64_t n, const SieveTable& table);

/// Sum of distinct prime divisors. Throws domain_error for n < 2.
std::uint64_t small_beta(std::uint64_t n, const SieveTable& table);

std::uint64_t big_B(const Factorization& f) noexcept;
std::uint64_t small_beta(const Factorization& f) noexcept;

/// n + a at primes, B(n) elsewhere. Throws arithmetic_error if n + a overflows.
std::uint64_t shifted_B(std::uint64_t n, Shift shift, const SieveTable& table);

/// n + a at primes, beta(n) elsewhere.
std::uint64_t shifted_beta(std::uint64_t n, Shift shift, const SieveTable& table);

enum class Variant { big_B, small_beta };

std::string to_string(Variant v);

/// The map n -> B_a(n) (or beta_a(n)) as a callable, optionally extended to
/// n in {0, 1} with B_a(0) = 0 and B_a(1) = 1.
class ShiftedMap {
public:
    ShiftedMap(const SieveTable& table, Shift shift, Variant variant = Variant::big_B,
               bool extend_domain = false) noexcept
        : table_(&table), shift_(shift), variant_(variant), extend_domain_(extend_domain)
    {
    }

    std::uint64_t operator()(std::uint64_t n) const;

    const SieveTable& table() const noexcept { return *table_; }
    Shift shift() const noexcept { return shift_; }
    Variant variant() const noexcept { return variant_; }
    bool extends_domain() const noexcept { return extend_domain_; }

    /// Smallest value the map accepts: 0 with the extension, 2 otherwise.
    std::uint64_t domain_floor() const noexcept { return extend_domain_ ? 0 : 2; }

private:
    const SieveTable* table_;
    Shift shift_;
    Variant variant_;
    bool extend_domain_;
};

/// B(n) and beta(n) for every n <= limit, derived from the sieve in one pass.
/// Entries 0 and 1 hold 0 and 1 (the extended values).
class SumTable {
public:
    explicit SumTable(const SieveTable& table);
    /// Covers only 0..limit, which must not exceed the sieve limit.
    SumTable(const SieveTable& table, std::uint64_t limit);

    std::uint64_t limit() const noexcept { return limit_; }
    std::uint32_t big_B(std::uint64_t n) const noexcept { return big_B_[n]; }
    std::uint32_t small_beta(std::uint64_t n) const noexcept { return beta_[n]; }
    bool is_prime(std::uint64_t n) const noexcept { return n >= 2 && sieve_->spf(n) == n; }

    /// B_a(n) for 2 <= n <= limit.
    std::uint64_t shifted_B(std::uint64_t n, Shift shift) const
    {
        return is_prime(n) ? checked_add(n, shift.a) : big_B_[n];
    }

    const SieveTable& sieve() const noexcept { return *sieve_; }

private:
    const SieveTable* sieve_;
    std::uint64_t limit_;
    std::vector<std::uint32_t> big_B_;
    std::vector<std::uint32_t> beta_;
};

} // namespace shiftdiv
