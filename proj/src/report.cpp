#include "shiftdiv/report.hpp"

#include <cstdio>

namespace shiftdiv::report {

std::string format_real(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string join(std::span<const std::uint64_t> values, char sep)
{
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) {
            out += sep;
        }
        out += std::to_string(values[i]);
    }
    return out;
}

std::string census_csv(std::span<const CensusReport> reports, bool include_trivial)
{
    std::string out = "a,cycle_id,length,members,sign_pattern,basin_count\n";
    for (const auto& r : reports) {
        std::size_t id = 0;
        for (const auto& cb : r.cycles) {
            ++id;
            if (!include_trivial && cb.cycle.is_trivial()) {
                continue;
            }
            out += std::to_string(r.shift.a) + ',' + std::to_string(id) + ',' + std::to_string(cb.cycle.length())
                   + ',' + join(cb.cycle.members, ';') + ',' + cb.cycle.sign_pattern + ','
                   + std::to_string(cb.basin) + '\n';
        }
    }
    return out;
}

nlohmann::json census_json(const CensusReport& report)
{
    nlohmann::json cycles = nlohmann::json::array();
    std::size_t id = 0;
    for (const auto& cb : report.cycles) {
        cycles.push_back({
            {"cycle_id", ++id},
            {"members", cb.cycle.members},
            {"length", cb.cycle.length()},
            {"sign_pattern", cb.cycle.sign_pattern},
            {"trivial", cb.cycle.is_trivial()},
            {"basin_count", cb.basin},
        });
    }
    nlohmann::json hist = nlohmann::json::array();
    for (const auto& [d, c] : report.stopping_time_histogram) {
        hist.push_back({{"total_stopping_time", d}, {"count", c}});
    }
    return {
        {"schema_version", schema_version},
        {"kind", "census"},
        {"a", report.shift.a},
        {"variant", to_string(report.variant)},
        {"start_limit", report.start_limit},
        {"starts_processed", report.starts_processed},
        {"nontrivial_count", report.nontrivial_count()},
        {"cycles", cycles},
        {"stopping_time_histogram", hist},
        {"max_total_stopping_time", report.max_total_stopping_time},
    };
}

std::string series_csv(const PartialSumSeries& series)
{
    std::string out = "x,sum,reference,ratio\n";
    for (std::size_t i = 0; i < series.checkpoints.size(); ++i) {
        out += std::to_string(series.checkpoints[i]) + ',' + std::to_string(series.sums[i]) + ','
               + format_real(series.reference[i]) + ',' + format_real(series.ratios[i]) + '\n';
    }
    return out;
}

nlohmann::json series_json(const PartialSumSeries& series, const std::string& kind)
{
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < series.checkpoints.size(); ++i) {
        rows.push_back({
            {"x", series.checkpoints[i]},
            {"sum", series.sums[i]},
            {"reference", series.reference[i]},
            {"ratio", series.ratios[i]},
        });
    }
    return {{"schema_version", schema_version}, {"kind", kind}, {"rows", rows}};
}

} // namespace shiftdiv::report
