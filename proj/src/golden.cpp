#include "shiftdiv/golden.hpp"

#include <algorithm>
#include <set>

namespace shiftdiv::golden {

const std::vector<Row>& table1()
{
    static const std::vector<Row> rows{
        {1, {{5, 6}}},
        {2, {{5, 7, 9, 6}}},
        {3, {{5, 8, 6}, {7, 10}}},
        {4, {{5, 9, 6}}},
        {5, {{7, 12}}},
        {6, {{7, 13, 19, 25, 10}}},
        {7, {{5, 12, 7, 14, 9, 6}}},
        {8, {{5, 13, 21, 10, 7, 15, 8, 6}}},
        {9, {{5, 15, 9, 6}, {13, 22}}},
        {10, {{5, 15, 8, 6}}},
        {11, {{5, 15, 8, 6}}},
        {12, {{5, 17, 29, 41, 53, 65, 18, 8, 6}}},
        {13, {{5, 16, 8, 6}}},
        {14, {{5, 19, 33, 14, 9, 6}, {7, 21, 10}}},
        {15, {{5, 20, 9, 6}, {19, 34}}},
        {16, {{7, 23, 39, 16, 8, 6, 5, 21, 10}}},
        {17, {{7, 24, 9, 6, 5, 22, 13, 30, 10}, {11, 28}}},
        {18, {{5, 23, 41, 59, 77, 18, 8, 6}, {7, 25, 10}}},
        {19, {{5, 24, 9, 6}}},
        {20, {{5, 25, 10, 7, 27, 9, 6}}},
    };
    return rows;
}

const Row& a39()
{
    static const Row row{39, {{43, 82}, {13, 52, 17, 56}, {7, 46, 25, 10}, {5, 44, 15, 8, 6}}};
    return row;
}

RowComparison compare(const Row& expected, const CensusReport& report)
{
    using Key = std::vector<std::uint64_t>;
    std::set<Key> want;
    for (const auto& c : expected.cycles) {
        want.insert(rotate_to_minimum(c));
    }
    std::set<Key> got;
    for (const auto& c : report.nontrivial_cycles()) {
        got.insert(c.members);
    }
    RowComparison out;
    out.a = expected.a;
    std::set_difference(want.begin(), want.end(), got.begin(), got.end(), std::back_inserter(out.missing));
    std::set_difference(got.begin(), got.end(), want.begin(), want.end(), std::back_inserter(out.unexpected));
    out.match = out.missing.empty() && out.unexpected.empty() && report.shift.a == expected.a;
    return out;
}

} // namespace shiftdiv::golden
