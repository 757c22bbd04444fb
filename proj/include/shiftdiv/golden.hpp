#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "shiftdiv/census.hpp"

namespace shiftdiv::golden {

/// Bumped whenever the embedded fixture changes.
inline constexpr int table1_version = 1;

struct Row {
    std::uint64_t a;
    /// Cycles as published; not necessarily rotated to the minimum.
    std::vector<std::vector<std::uint64_t>> cycles;
};

/// Nontrivial cycles for a = 1..20 over starts n <= 10^6.
const std::vector<Row>& table1();

/// Nontrivial cycles for a = 39 over starts n <= 10^6.
const Row& a39();

struct RowComparison {
    std::uint64_t a = 0;
    bool match = false;
    /// Rotated to the minimum.
    std::vector<std::vector<std::uint64_t>> missing;
    std::vector<std::vector<std::uint64_t>> unexpected;
};

/// Set equality of nontrivial cycles up to rotation.
RowComparison compare(const Row& expected, const CensusReport& report);

} // namespace shiftdiv::golden
