#include "shiftdiv/census.hpp"

#include <algorithm>
#include <atomic>
#include <memory>
#include <mutex>
#include <thread>

#include "shiftdiv/errors.hpp"

namespace shiftdiv {

namespace {

constexpr std::uint64_t unknown_fate = 0;

// value -> (cycle minimum, sigma_inf) for values <= limit. Entries are a pure
// function of the value, so concurrent workers may race to write identical data.
class FateCache {
public:
    explicit FateCache(std::uint64_t limit) : fate_(limit + 1), dist_(limit + 1)
    {
        for (auto& f : fate_) {
            f.store(unknown_fate, std::memory_order_relaxed);
        }
    }

    std::uint64_t limit() const noexcept { return fate_.size() - 1; }

    bool lookup(std::uint64_t v, std::uint64_t& fate, std::uint32_t& dist) const noexcept
    {
        fate = fate_[v].load(std::memory_order_acquire);
        if (fate == unknown_fate) {
            return false;
        }
        dist = dist_[v].load(std::memory_order_relaxed);
        return true;
    }

    void store(std::uint64_t v, std::uint64_t fate, std::uint32_t dist) noexcept
    {
        dist_[v].store(dist, std::memory_order_relaxed);
        fate_[v].store(fate, std::memory_order_release);
    }

private:
    std::vector<std::atomic<std::uint64_t>> fate_;
    std::vector<std::atomic<std::uint32_t>> dist_;
};

struct WorkerResult {
    std::map<std::uint64_t, CycleBasin> cycles;
    std::map<std::uint32_t, std::uint64_t> histogram;
    std::uint64_t processed = 0;
};

class CensusWorker {
public:
    CensusWorker(Shift shift, const SumTable& sums, const CensusOptions& options, FateCache* cache)
        : shift_(shift), sums_(sums), options_(options), cache_(cache),
          map_(sums.sieve(), shift, options.variant)
    {
    }

    StartFate process(std::uint64_t start, WorkerResult& out)
    {
        const StartFate fate = cache_ ? walk_memoized(start, out) : walk_plain(start, out);
        ++out.cycles.at(fate.cycle_minimum).basin;
        ++out.histogram[fate.total_stopping_time];
        ++out.processed;
        return fate;
    }

private:
    std::uint64_t next(std::uint64_t v) const
    {
        if (v <= sums_.limit()) {
            if (sums_.is_prime(v)) {
                return checked_add(v, shift_.a);
            }
            return options_.variant == Variant::big_B ? sums_.big_B(v) : sums_.small_beta(v);
        }
        return map_(v);
    }

    std::size_t max_steps(std::uint64_t start) const
    {
        return options_.max_steps != 0 ? options_.max_steps : default_max_steps(start, shift_);
    }

    std::uint64_t record_cycle(std::span<const std::uint64_t> raw, WorkerResult& out) const
    {
        const std::uint64_t least = *std::min_element(raw.begin(), raw.end());
        if (!out.cycles.contains(least)) {
            // canonicalize re-verifies closure under the map.
            out.cycles.emplace(least, CycleBasin{canonicalize(raw, map_), 0});
        }
        return least;
    }

    StartFate walk_plain(std::uint64_t start, WorkerResult& out) const
    {
        OrbitOptions orbit_options;
        orbit_options.max_steps = max_steps(start);
        const OrbitRecord orbit = iterate_orbit(start, map_, orbit_options);
        const std::uint64_t least = record_cycle(orbit.cycle_values(), out);
        return {start, least, static_cast<std::uint32_t>(orbit.entry_index)};
    }

    StartFate walk_memoized(std::uint64_t start, WorkerResult& out)
    {
        path_.clear();
        const std::size_t budget = max_steps(start);
        std::uint64_t v = start;
        std::uint64_t fate = unknown_fate;
        std::uint32_t tail = 0;
        std::size_t cycle_at = 0;
        bool closed_here = false;
        for (;;) {
            if (v <= cache_->limit() && cache_->lookup(v, fate, tail)) {
                break;
            }
            const auto seen = std::find(path_.begin(), path_.end(), v);
            if (seen != path_.end()) {
                cycle_at = static_cast<std::size_t>(seen - path_.begin());
                closed_here = true;
                break;
            }
            path_.push_back(v);
            if (path_.size() > budget) {
                throw nontermination_error("orbit of " + std::to_string(start) + " under a="
                                           + std::to_string(shift_.a) + " did not close within "
                                           + std::to_string(budget) + " steps");
            }
            v = next(v);
        }

        if (closed_here) {
            fate = record_cycle(std::span(path_).subspan(cycle_at), out);
            for (std::size_t i = 0; i < path_.size(); ++i) {
                const auto d = static_cast<std::uint32_t>(i < cycle_at ? cycle_at - i : 0);
                if (path_[i] <= cache_->limit()) {
                    cache_->store(path_[i], fate, d);
                }
            }
        } else {
            if (!out.cycles.contains(fate)) {
                // Cycle first found by another worker; rebuild it locally from its minimum.
                const OrbitRecord orbit = iterate_orbit(fate, map_);
                record_cycle(orbit.cycle_values(), out);
            }
            const std::size_t hit = path_.size();
            for (std::size_t i = 0; i < hit; ++i) {
                if (path_[i] <= cache_->limit()) {
                    cache_->store(path_[i], fate, static_cast<std::uint32_t>(tail + (hit - i)));
                }
            }
        }
        std::uint32_t dist = 0;
        cache_->lookup(start, fate, dist);
        return {start, fate, dist};
    }

    Shift shift_;
    const SumTable& sums_;
    const CensusOptions& options_;
    FateCache* cache_;
    ShiftedMap map_;
    std::vector<std::uint64_t> path_;
};

template <class StartAt>
CensusReport census_impl(Shift shift, std::size_t count, StartAt start_at, std::uint64_t start_limit,
                         const SumTable& sums, const CensusOptions& options)
{
    std::unique_ptr<FateCache> cache;
    if (options.memoize) {
        cache = std::make_unique<FateCache>(std::min(start_limit, sums.limit()));
    }

    CensusReport report;
    report.shift = shift;
    report.variant = options.variant;
    report.start_limit = start_limit;
    if (options.record_fates) {
        report.fates.resize(count);
    }

    const unsigned workers = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(
                                                                                  std::max<std::size_t>(count, 1))));
    std::vector<WorkerResult> results(workers);
    const std::size_t block = std::max<std::size_t>(1024, count / (static_cast<std::size_t>(workers) * 16) + 1);
    std::atomic<std::size_t> next_block{0};
    std::mutex error_mutex;
    std::exception_ptr error;

    auto work = [&](unsigned w) {
        try {
            CensusWorker worker(shift, sums, options, cache.get());
            for (;;) {
                const std::size_t lo = next_block.fetch_add(block, std::memory_order_relaxed);
                if (lo >= count) {
                    break;
                }
                const std::size_t hi = std::min(count, lo + block);
                for (std::size_t i = lo; i < hi; ++i) {
                    const StartFate fate = worker.process(start_at(i), results[w]);
                    if (options.record_fates) {
                        report.fates[i] = fate;
                    }
                }
                std::lock_guard lock(error_mutex);
                if (error) {
                    break;
                }
            }
        } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) {
                error = std::current_exception();
            }
            next_block.store(count, std::memory_order_relaxed);
        }
    };

    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(work, w);
        }
    }
    if (error) {
        std::rethrow_exception(error);
    }

    // Merge keyed by cycle minimum, so the result is independent of the worker split.
    std::map<std::uint64_t, CycleBasin> merged;
    for (auto& r : results) {
        for (auto& [least, cb] : r.cycles) {
            auto [it, inserted] = merged.try_emplace(least, cb);
            if (!inserted) {
                it->second.basin += cb.basin;
            }
        }
        for (const auto& [d, c] : r.histogram) {
            report.stopping_time_histogram[d] += c;
        }
        report.starts_processed += r.processed;
    }
    for (auto& [least, cb] : merged) {
        report.cycles.push_back(std::move(cb));
    }
    if (!report.stopping_time_histogram.empty()) {
        report.max_total_stopping_time = report.stopping_time_histogram.rbegin()->first;
    }
    return report;
}

} // namespace

std::vector<Cycle> CensusReport::nontrivial_cycles() const
{
    std::vector<Cycle> out;
    for (const auto& cb : cycles) {
        if (!cb.cycle.is_trivial()) {
            out.push_back(cb.cycle);
        }
    }
    return out;
}

std::vector<Cycle> CensusReport::trivial_cycles() const
{
    std::vector<Cycle> out;
    for (const auto& cb : cycles) {
        if (cb.cycle.is_trivial()) {
            out.push_back(cb.cycle);
        }
    }
    return out;
}

std::size_t CensusReport::nontrivial_count() const
{
    return static_cast<std::size_t>(
        std::count_if(cycles.begin(), cycles.end(), [](const CycleBasin& cb) { return !cb.cycle.is_trivial(); }));
}

const CycleBasin* CensusReport::find(std::uint64_t cycle_minimum) const
{
    for (const auto& cb : cycles) {
        if (cb.cycle.minimum() == cycle_minimum) {
            return &cb;
        }
    }
    return nullptr;
}

SumTable make_sum_table(const SieveTable& table, std::uint64_t start_limit)
{
    if (start_limit > table.limit()) {
        throw domain_error("census start limit " + std::to_string(start_limit) + " exceeds sieve limit "
                           + std::to_string(table.limit()));
    }
    return SumTable(table, start_limit);
}

CensusReport run_census(Shift shift, std::uint64_t start_limit, const SumTable& sums,
                        const CensusOptions& options)
{
    if (start_limit < 2) {
        throw domain_error("census start limit must be at least 2");
    }
    if (start_limit > sums.limit()) {
        throw domain_error("census start limit " + std::to_string(start_limit) + " exceeds table limit "
                           + std::to_string(sums.limit()));
    }
    const auto count = static_cast<std::size_t>(start_limit - 1);
    return census_impl(
        shift, count, [](std::size_t i) { return static_cast<std::uint64_t>(i) + 2; }, start_limit, sums, options);
}

CensusReport run_census(Shift shift, std::uint64_t start_limit, const SieveTable& table,
                        const CensusOptions& options)
{
    const SumTable sums = make_sum_table(table, start_limit);
    return run_census(shift, start_limit, sums, options);
}

CensusReport run_census(Shift shift, std::span<const std::uint64_t> starts, const SumTable& sums,
                        const CensusOptions& options)
{
    std::uint64_t largest = 0;
    for (const std::uint64_t s : starts) {
        if (s < 2 || s > sums.limit()) {
            throw domain_error("census start " + std::to_string(s) + " outside [2, "
                               + std::to_string(sums.limit()) + "]");
        }
        largest = std::max(largest, s);
    }
    return census_impl(
        shift, starts.size(), [starts](std::size_t i) { return starts[i]; }, largest, sums, options);
}

SweepResult cycle_count_sweep(std::uint64_t a_max, std::uint64_t start_limit, const SieveTable& table,
                              const CensusOptions& options)
{
    if (a_max < 1) {
        throw domain_error("sweep requires a_max >= 1");
    }
    const SumTable sums = make_sum_table(table, start_limit);
    SweepResult result;
    result.start_limit = start_limit;
    result.reports.resize(a_max);

    CensusOptions inner = options;
    inner.threads = 1;
    const unsigned workers = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(a_max)));
    std::atomic<std::uint64_t> next_a{1};
    std::mutex error_mutex;
    std::exception_ptr error;
    auto work = [&] {
        for (;;) {
            const std::uint64_t a = next_a.fetch_add(1, std::memory_order_relaxed);
            if (a > a_max) {
                return;
            }
            try {
                result.reports[a - 1] = run_census(Shift{a}, start_limit, sums, inner);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) {
                    error = std::current_exception();
                }
                next_a.store(a_max + 1);
                return;
            }
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(work);
        }
    }
    if (error) {
        std::rethrow_exception(error);
    }

    for (const auto& report : result.reports) {
        const std::size_t c = report.nontrivial_count();
        result.counts[report.shift.a] = c;
        if (c > result.max_count) {
            result.max_count = c;
            result.argmax.clear();
        }
        if (c == result.max_count) {
            result.argmax.push_back(report.shift.a);
        }
    }
    return result;
}

std::set<std::string> sign_patterns_of_length(std::size_t k, std::span<const CensusReport> reports)
{
    std::set<std::string> out;
    for (const auto& report : reports) {
        for (const auto& cb : report.cycles) {
            if (cb.cycle.length() == k) {
                out.insert(cb.cycle.pattern_string());
            }
        }
    }
    return out;
}

} // namespace shiftdiv
