#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "shiftdiv/arith.hpp"

namespace shiftdiv {

/// A periodic orbit rotated so its least member comes first.
struct Cycle {
    std::vector<std::uint64_t> members;
    Shift shift;
    /// One character per member: '+' prime, '-' composite.
    std::string sign_pattern;

    std::size_t length() const noexcept { return members.size(); }
    std::uint64_t minimum() const noexcept { return members.front(); }
    bool is_trivial() const noexcept { return members.size() == 1; }

    /// "(5,7,9,6)"
    std::string members_string() const;
    /// "(+,+,-,-)"
    std::string pattern_string() const;

    friend bool operator==(const Cycle&, const Cycle&) = default;
};

/// Trajectory of a start value up to and including the first repeated value.
///
/// trajectory.back() == trajectory[entry_index], so the cycle is
/// trajectory[entry_index .. size-2].
struct OrbitRecord {
    std::uint64_t start = 0;
    Shift shift;
    std::vector<std::uint64_t> trajectory;
    std::size_t entry_index = 0;
    /// Least k with B_a^k(start) < start; empty if the orbit never drops below start.
    std::optional<std::size_t> stopping_time;

    std::size_t total_stopping_time() const noexcept { return entry_index; }
    std::size_t cycle_length() const noexcept { return trajectory.size() - 1 - entry_index; }
    std::span<const std::uint64_t> cycle_values() const noexcept
    {
        return std::span(trajectory).subspan(entry_index, cycle_length());
    }
};

enum class CycleDetection {
    /// Hash set of visited values; exact entry index, full trajectory kept.
    visited_set,
    /// Brent's algorithm with O(1) memory plus a second pass for the entry index.
    brent,
};

struct OrbitOptions {
    /// 0 selects default_max_steps(start, shift).
    std::size_t max_steps = 0;
    /// Re-check the large-prime descent bound on every prime above 2a^2 + 10 in the orbit.
    bool check_descent = false;
};

/// 10 * (ceil(log2 start) + 1) + 4a + 100, saturating.
std::size_t default_max_steps(std::uint64_t start, Shift shift) noexcept;

/// 2a^2 + 10, saturating at the 64-bit maximum.
std::uint64_t descent_threshold(Shift shift) noexcept;

/// Iterates map from n with visited-set detection.
/// Throws nontermination_error past the step budget; arithmetic_error propagates.
OrbitRecord iterate_orbit(std::uint64_t n, const ShiftedMap& map, const OrbitOptions& options = {});
OrbitRecord iterate_orbit(std::uint64_t n, Shift shift, const SieveTable& table, std::size_t max_steps = 0);

/// Entry index (tail length), period and least cycle member, found without storing the trajectory.
struct OrbitSummary {
    std::size_t entry_index = 0;
    std::size_t period = 0;
    std::uint64_t cycle_minimum = 0;
};

OrbitSummary summarize_orbit(std::uint64_t n, const ShiftedMap& map, CycleDetection detection,
                             std::size_t max_steps = 0);

std::optional<std::size_t> stopping_time(std::uint64_t n, Shift shift, const SieveTable& table);
std::size_t total_stopping_time(std::uint64_t n, Shift shift, const SieveTable& table);

/// Least k <= max_k with map^k(n) < n, if any.
std::optional<std::size_t> descends_within(std::uint64_t n, const ShiftedMap& map, std::size_t max_k);

/// Rotates to the minimum and computes the sign pattern.
/// Throws consistency_error if raw is empty or not closed under the map.
Cycle canonicalize(std::span<const std::uint64_t> raw, const ShiftedMap& map);
Cycle canonicalize(std::span<const std::uint64_t> raw, Shift shift, const SieveTable& table);

/// Rotation to the minimum only, without closure validation.
std::vector<std::uint64_t> rotate_to_minimum(std::span<const std::uint64_t> values);

std::set<std::string> sign_patterns_of_length(std::size_t k, std::span<const Cycle> cycles);

} // namespace shiftdiv
