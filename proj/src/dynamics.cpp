#include "shiftdiv/dynamics.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <unordered_map>

#include "shiftdiv/errors.hpp"

namespace shiftdiv {

namespace {

std::string join_values(std::span<const std::uint64_t> values)
{
    std::string out = "(";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += std::to_string(values[i]);
    }
    out += ')';
    return out;
}

void check_floor(std::uint64_t n, const ShiftedMap& map)
{
    if (n < map.domain_floor()) {
        throw domain_error("orbit start " + std::to_string(n) + " is below the domain floor "
                           + std::to_string(map.domain_floor()));
    }
}

std::size_t budget(std::uint64_t start, const ShiftedMap& map, std::size_t requested)
{
    return requested != 0 ? requested : default_max_steps(start, map.shift());
}

[[noreturn]] void report_nontermination(std::uint64_t start, Shift shift, std::size_t steps)
{
    throw nontermination_error("orbit of " + std::to_string(start) + " under a=" + std::to_string(shift.a)
                               + " did not close within " + std::to_string(steps) + " steps");
}

// For each prime above 2a^2+10 in the orbit, require a smaller value within 2a+1 steps,
// continuing around the cycle where the trajectory ends.
void verify_descent(const OrbitRecord& orbit, const ShiftedMap& map)
{
    const Shift shift = map.shift();
    if (shift.a == 0 || map.variant() != Variant::big_B) {
        return;
    }
    const std::uint64_t threshold = descent_threshold(shift);
    const std::size_t window = shift.a > (std::numeric_limits<std::size_t>::max() - 1) / 2
                                   ? std::numeric_limits<std::size_t>::max()
                                   : static_cast<std::size_t>(2 * shift.a + 1);
    const auto& t = orbit.trajectory;
    const std::size_t body = t.size() - 1;
    const std::size_t period = orbit.cycle_length();
    auto at = [&](std::size_t idx) {
        if (idx < body) {
            return t[idx];
        }
        return t[orbit.entry_index + (idx - orbit.entry_index) % period];
    };
    for (std::size_t i = 0; i < body; ++i) {
        const std::uint64_t v = t[i];
        if (v <= threshold || !is_prime(v, map.table())) {
            continue;
        }
        const std::size_t horizon = std::min(window, body + period);
        bool dropped = false;
        for (std::size_t k = 1; k <= horizon && !dropped; ++k) {
            dropped = at(i + k) < v;
        }
        if (!dropped) {
            throw consistency_error("prime " + std::to_string(v) + " above " + std::to_string(threshold)
                                    + " did not descend within " + std::to_string(window)
                                    + " steps under a=" + std::to_string(shift.a));
        }
    }
}

} // namespace

std::string Cycle::members_string() const
{
    return join_values(members);
}

std::string Cycle::pattern_string() const
{
    std::string out = "(";
    for (std::size_t i = 0; i < sign_pattern.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += sign_pattern[i];
    }
    out += ')';
    return out;
}

std::size_t default_max_steps(std::uint64_t start, Shift shift) noexcept
{
    const std::size_t ceil_log2 = start <= 1 ? 0 : static_cast<std::size_t>(std::bit_width(start - 1));
    const std::size_t base = 10 * (ceil_log2 + 1) + 100;
    constexpr std::size_t cap = std::numeric_limits<std::size_t>::max();
    if (shift.a > (cap - base) / 4) {
        return cap;
    }
    return base + 4 * static_cast<std::size_t>(shift.a);
}

std::uint64_t descent_threshold(Shift shift) noexcept
{
    constexpr std::uint64_t cap = std::numeric_limits<std::uint64_t>::max();
    if (shift.a > 0xFFFFFFFFull) {
        return cap;
    }
    const std::uint64_t sq = shift.a * shift.a;
    if (sq > (cap - 10) / 2) {
        return cap;
    }
    return 2 * sq + 10;
}

OrbitRecord iterate_orbit(std::uint64_t n, const ShiftedMap& map, const OrbitOptions& options)
{
    check_floor(n, map);
    const std::size_t max_steps = budget(n, map, options.max_steps);

    OrbitRecord orbit;
    orbit.start = n;
    orbit.shift = map.shift();
    std::unordered_map<std::uint64_t, std::size_t> seen;
    std::uint64_t v = n;
    for (;;) {
        const auto [it, inserted] = seen.emplace(v, orbit.trajectory.size());
        orbit.trajectory.push_back(v);
        if (!inserted) {
            orbit.entry_index = it->second;
            break;
        }
        if (orbit.trajectory.size() > max_steps) {
            report_nontermination(n, map.shift(), max_steps);
        }
        if (!orbit.stopping_time && v < n) {
            orbit.stopping_time = orbit.trajectory.size() - 1;
        }
        v = map(v);
    }
    if (options.check_descent) {
        verify_descent(orbit, map);
    }
    return orbit;
}

OrbitRecord iterate_orbit(std::uint64_t n, Shift shift, const SieveTable& table, std::size_t max_steps)
{
    OrbitOptions options;
    options.max_steps = max_steps;
    return iterate_orbit(n, ShiftedMap(table, shift), options);
}

OrbitSummary summarize_orbit(std::uint64_t n, const ShiftedMap& map, CycleDetection detection,
                             std::size_t max_steps)
{
    check_floor(n, map);
    max_steps = budget(n, map, max_steps);
    if (detection == CycleDetection::visited_set) {
        OrbitOptions options;
        options.max_steps = max_steps;
        const OrbitRecord orbit = iterate_orbit(n, map, options);
        const auto cycle = orbit.cycle_values();
        return {orbit.entry_index, orbit.cycle_length(), *std::min_element(cycle.begin(), cycle.end())};
    }

    // Brent: find the period with power-of-two windows, then the tail length.
    const std::size_t eval_cap = max_steps > std::numeric_limits<std::size_t>::max() / 4
                                     ? std::numeric_limits<std::size_t>::max()
                                     : 4 * max_steps;
    std::size_t evals = 0;
    auto step = [&](std::uint64_t x) {
        if (++evals > eval_cap) {
            report_nontermination(n, map.shift(), max_steps);
        }
        return map(x);
    };

    std::size_t power = 1;
    std::size_t period = 1;
    std::uint64_t tortoise = n;
    std::uint64_t hare = step(n);
    while (tortoise != hare) {
        if (power == period) {
            tortoise = hare;
            power *= 2;
            period = 0;
        }
        hare = step(hare);
        ++period;
    }

    tortoise = n;
    hare = n;
    for (std::size_t i = 0; i < period; ++i) {
        hare = step(hare);
    }
    std::size_t entry = 0;
    while (tortoise != hare) {
        tortoise = step(tortoise);
        hare = step(hare);
        ++entry;
    }

    std::uint64_t least = tortoise;
    std::uint64_t v = tortoise;
    for (std::size_t i = 1; i < period; ++i) {
        v = step(v);
        least = std::min(least, v);
    }
    if (entry + period > max_steps) {
        report_nontermination(n, map.shift(), max_steps);
    }
    return {entry, period, least};
}

std::optional<std::size_t> stopping_time(std::uint64_t n, Shift shift, const SieveTable& table)
{
    return iterate_orbit(n, shift, table).stopping_time;
}

std::size_t total_stopping_time(std::uint64_t n, Shift shift, const SieveTable& table)
{
    return iterate_orbit(n, shift, table).total_stopping_time();
}

std::optional<std::size_t> descends_within(std::uint64_t n, const ShiftedMap& map, std::size_t max_k)
{
    check_floor(n, map);
    std::uint64_t v = n;
    for (std::size_t k = 1; k <= max_k; ++k) {
        v = map(v);
        if (v < n) {
            return k;
        }
    }
    return std::nullopt;
}

std::vector<std::uint64_t> rotate_to_minimum(std::span<const std::uint64_t> values)
{
    std::vector<std::uint64_t> out(values.begin(), values.end());
    if (!out.empty()) {
        std::rotate(out.begin(), std::min_element(out.begin(), out.end()), out.end());
    }
    return out;
}

Cycle canonicalize(std::span<const std::uint64_t> raw, const ShiftedMap& map)
{
    if (raw.empty()) {
        throw consistency_error("empty cycle");
    }
    for (std::size_t i = 0; i < raw.size(); ++i) {
        const std::uint64_t next = raw[(i + 1) % raw.size()];
        if (map(raw[i]) != next) {
            throw consistency_error("not a cycle under a=" + std::to_string(map.shift().a) + ": "
                                    + std::to_string(raw[i]) + " does not map to " + std::to_string(next));
        }
    }
    Cycle cycle;
    cycle.members = rotate_to_minimum(raw);
    cycle.shift = map.shift();
    cycle.sign_pattern.reserve(cycle.members.size());
    for (const std::uint64_t m : cycle.members) {
        cycle.sign_pattern += is_prime(m, map.table()) ? '+' : '-';
    }
    return cycle;
}

Cycle canonicalize(std::span<const std::uint64_t> raw, Shift shift, const SieveTable& table)
{
    return canonicalize(raw, ShiftedMap(table, shift));
}

std::set<std::string> sign_patterns_of_length(std::size_t k, std::span<const Cycle> cycles)
{
    std::set<std::string> out;
    for (const Cycle& c : cycles) {
        if (c.length() == k) {
            out.insert(c.pattern_string());
        }
    }
    return out;
}

} // namespace shiftdiv
