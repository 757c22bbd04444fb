#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "shiftdiv/arith.hpp"
#include "shiftdiv/dynamics.hpp"

namespace shiftdiv {

struct CensusOptions {
    unsigned threads = 1;
    /// Share a value -> (cycle, tail length) cache across starts.
    bool memoize = true;
    Variant variant = Variant::big_B;
    /// Per-orbit step budget; 0 selects default_max_steps.
    std::size_t max_steps = 0;
    /// Keep per-start fates in CensusReport::fates.
    bool record_fates = false;
};

struct CycleBasin {
    Cycle cycle;
    /// Number of processed starts whose orbit ends in this cycle.
    std::uint64_t basin = 0;
};

struct StartFate {
    std::uint64_t start = 0;
    std::uint64_t cycle_minimum = 0;
    std::uint32_t total_stopping_time = 0;
};

/// All cycles reached from starts 2..start_limit under one shift.
struct CensusReport {
    Shift shift;
    Variant variant = Variant::big_B;
    std::uint64_t start_limit = 0;
    std::uint64_t starts_processed = 0;
    /// Ordered by cycle minimum; fixed points included (see is_trivial()).
    std::vector<CycleBasin> cycles;
    /// sigma_inf -> number of starts.
    std::map<std::uint32_t, std::uint64_t> stopping_time_histogram;
    std::uint32_t max_total_stopping_time = 0;
    /// Filled only with CensusOptions::record_fates, in processing order.
    std::vector<StartFate> fates;

    std::vector<Cycle> nontrivial_cycles() const;
    std::vector<Cycle> trivial_cycles() const;
    std::size_t nontrivial_count() const;
    const CycleBasin* find(std::uint64_t cycle_minimum) const;
};

/// Precomputed B/beta values shared by censuses over the same range.
SumTable make_sum_table(const SieveTable& table, std::uint64_t start_limit);

CensusReport run_census(Shift shift, std::uint64_t start_limit, const SumTable& sums,
                        const CensusOptions& options = {});
CensusReport run_census(Shift shift, std::uint64_t start_limit, const SieveTable& table,
                        const CensusOptions& options = {});

/// Census over an explicit list of starts (each >= 2 and <= sums.limit()), processed in the given order.
/// start_limit in the report is the largest start.
CensusReport run_census(Shift shift, std::span<const std::uint64_t> starts, const SumTable& sums,
                        const CensusOptions& options = {});

struct SweepResult {
    std::uint64_t start_limit = 0;
    /// a -> number of distinct nontrivial cycles.
    std::map<std::uint64_t, std::size_t> counts;
    std::size_t max_count = 0;
    std::vector<std::uint64_t> argmax;
    std::vector<CensusReport> reports;
};

/// Censuses for a = 1..a_max, parallel over a with options.threads workers.
SweepResult cycle_count_sweep(std::uint64_t a_max, std::uint64_t start_limit, const SieveTable& table,
                              const CensusOptions& options = {});

std::set<std::string> sign_patterns_of_length(std::size_t k, std::span<const CensusReport> reports);

} // namespace shiftdiv
