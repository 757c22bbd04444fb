#pragma once

#include <span>
#include <string>

#include <json.hpp>

#include "shiftdiv/census.hpp"
#include "shiftdiv/stats.hpp"

namespace shiftdiv::report {

/// Version stamped into every JSON document as "schema_version".
inline constexpr int schema_version = 1;

/// Header "a,cycle_id,length,members,sign_pattern,basin_count"; members joined by ';'.
/// cycle_id counts from 1 in order of cycle minimum within each shift. LF line endings.
std::string census_csv(std::span<const CensusReport> reports, bool include_trivial = true);

nlohmann::json census_json(const CensusReport& report);

/// Header "x,sum,reference,ratio".
std::string series_csv(const PartialSumSeries& series);

nlohmann::json series_json(const PartialSumSeries& series, const std::string& kind);

/// Stable decimal rendering used by every CSV writer ("%.12g").
std::string format_real(double v);

std::string join(std::span<const std::uint64_t> values, char sep);

} // namespace shiftdiv::report
