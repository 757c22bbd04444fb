#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "shiftdiv/arith.hpp"

namespace shiftdiv {

using BigInt = boost::multiprecision::cpp_int;

/// Prime-partition counts kappa(m) for 1 <= m <= limit.
class KappaTable {
public:
    std::uint64_t limit() const noexcept { return kappa_.size() - 1; }

    /// Number of multisets of primes summing to m. Throws domain_error outside 1..limit.
    const BigInt& kappa(std::uint64_t m) const;

    /// beta(i) as used by the recursion, with beta(1) = 0.
    std::uint64_t beta(std::uint64_t i) const { return beta_.at(i); }

private:
    friend KappaTable build_kappa(std::uint64_t limit, const SieveTable& table);

    // kappa_[0] = 1 is the empty partition that seeds the beta(n) term.
    std::vector<BigInt> kappa_;
    std::vector<std::uint64_t> beta_;
};

/// kappa(n) = (beta(n) + sum_{i=1}^{n-1} kappa(n-i) beta(i)) / n with kappa(1) = 0.
/// The division is exact; a remainder throws consistency_error.
KappaTable build_kappa(std::uint64_t limit, const SieveTable& table);

/// log kappa(m) / (2 pi sqrt(m / (3 log m))). Zero when kappa(m) = 1. Requires 3 <= m <= limit.
double kappa_asymptotic_ratio(std::uint64_t m, const KappaTable& ktable);

/// Natural log of a positive big integer.
double log_big(const BigInt& x);

/// All n <= x_bound with B_a(n) = m, ascending, by direct scan.
std::vector<std::uint64_t> enumerate_fibre(std::uint64_t m, Shift shift, std::uint64_t x_bound,
                                           const SieveTable& table);

/// The whole fibre {n : B_a(n) = m}, generated as products of the prime partitions of m
/// (replacing the prime solution n = m by m - a when the shift moves it).
/// Throws arithmetic_error if some product exceeds 64 bits.
std::vector<std::uint64_t> enumerate_fibre_all(std::uint64_t m, Shift shift, const SieveTable& table);

struct DensityCount {
    std::uint64_t count = 0;
    double density = 0.0;
};

/// #{2 <= n <= x : B_a(n) in target} and that count divided by x. Requires x <= table.limit().
DensityCount preimage_density(const std::function<bool(std::uint64_t)>& target, std::uint64_t x,
                              const SieveTable& table, Shift shift = {});

bool is_perfect_square(std::uint64_t v) noexcept;

} // namespace shiftdiv
