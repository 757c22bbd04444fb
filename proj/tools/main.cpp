// shiftdiv: command-line front end for the shifted prime-divisor library.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <memory>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "shiftdiv/arith.hpp"
#include "shiftdiv/census.hpp"
#include "shiftdiv/constructions.hpp"
#include "shiftdiv/dynamics.hpp"
#include "shiftdiv/errors.hpp"
#include "shiftdiv/fibres.hpp"
#include "shiftdiv/golden.hpp"
#include "shiftdiv/report.hpp"
#include "shiftdiv/stats.hpp"

namespace {

using namespace shiftdiv;
using json = nlohmann::json;

constexpr int exit_ok = 0;
constexpr int exit_domain = 1;
constexpr int exit_resource = 2;
constexpr int exit_usage = 64;

struct RunConfig {
    std::uint64_t sieve_limit = 1000000;
    std::string format;
    unsigned threads = 1;
    bool extend_domain = false;
    std::uint64_t seed = SieveTable::default_rho_seed;
    std::string out_path;
};

std::uint64_t env_sieve_limit()
{
    if (const char* v = std::getenv("DD_SIEVE_LIMIT"); v != nullptr && *v != '\0') {
        try {
            std::size_t used = 0;
            const std::uint64_t limit = std::stoull(v, &used);
            if (used == std::string(v).size()) {
                return limit;
            }
        } catch (const std::exception&) {
        }
        throw domain_error(std::string("DD_SIEVE_LIMIT is not an integer: ") + v);
    }
    return 1000000;
}

class Runner {
public:
    explicit Runner(RunConfig& config) : config_(config) {}

    // The table always covers at least what the subcommand needs.
    const SieveTable& sieve(std::uint64_t needed = 0)
    {
        const std::uint64_t limit = std::max({config_.sieve_limit, needed, std::uint64_t{2}});
        if (!table_ || table_->limit() < limit) {
            table_.emplace(limit, config_.seed);
        }
        return *table_;
    }

    std::string format(const std::string& fallback) const
    {
        return config_.format.empty() ? fallback : config_.format;
    }

    void emit(const std::string& text)
    {
        if (config_.out_path.empty()) {
            std::cout << text;
            std::cout.flush();
            return;
        }
        std::ofstream out(config_.out_path, std::ios::binary);
        if (!out) {
            throw resource_error("cannot open output file " + config_.out_path);
        }
        out << text;
    }

    void emit_json(const json& doc) { emit(doc.dump(2) + "\n"); }

    const RunConfig& config() const { return config_; }

private:
    RunConfig& config_;
    std::optional<SieveTable> table_;
};

std::string bracket_trajectory(const OrbitRecord& orbit)
{
    std::ostringstream out;
    const auto& t = orbit.trajectory;
    for (std::size_t i = 0; i + 1 < t.size(); ++i) {
        if (i > 0) {
            out << ' ';
        }
        out << t[i];
    }
    if (orbit.entry_index == 0) {
        out << " [cycle]";
    } else {
        out << " [cycle from " << t[orbit.entry_index] << "]";
    }
    return out.str();
}

int cmd_orbit(Runner& run, std::uint64_t n, std::uint64_t a, const std::string& variant_name,
              std::size_t max_steps, bool check_descent)
{
    const Variant variant = variant_name == "beta" ? Variant::small_beta : Variant::big_B;
    const SieveTable& table = run.sieve();
    const ShiftedMap map(table, Shift{a}, variant, run.config().extend_domain);
    OrbitOptions options;
    options.max_steps = max_steps;
    options.check_descent = check_descent;
    const OrbitRecord orbit = iterate_orbit(n, map, options);
    const Cycle cycle = canonicalize(orbit.cycle_values(), map);

    const std::string fmt = run.format("text");
    if (fmt == "json") {
        json doc = {
            {"schema_version", report::schema_version},
            {"kind", "orbit"},
            {"n", n},
            {"a", a},
            {"variant", to_string(variant)},
            {"trajectory", orbit.trajectory},
            {"entry_index", orbit.entry_index},
            {"total_stopping_time", orbit.total_stopping_time()},
            {"stopping_time", orbit.stopping_time ? json(*orbit.stopping_time) : json(nullptr)},
            {"cycle", cycle.members},
            {"sign_pattern", cycle.sign_pattern},
        };
        run.emit_json(doc);
    } else if (fmt == "csv") {
        std::string out = "n,a,trajectory,entry_index,stopping_time,total_stopping_time,cycle,sign_pattern\n";
        out += std::to_string(n) + ',' + std::to_string(a) + ',' + report::join(orbit.trajectory, ';') + ','
               + std::to_string(orbit.entry_index) + ','
               + (orbit.stopping_time ? std::to_string(*orbit.stopping_time) : std::string("none")) + ','
               + std::to_string(orbit.total_stopping_time()) + ',' + report::join(cycle.members, ';') + ','
               + cycle.sign_pattern + '\n';
        run.emit(out);
    } else {
        std::string out = bracket_trajectory(orbit) + '\n';
        out += "cycle " + cycle.members_string() + " pattern " + cycle.pattern_string() + '\n';
        out += "sigma " + (orbit.stopping_time ? std::to_string(*orbit.stopping_time) : std::string("none"))
               + " sigma_inf " + std::to_string(orbit.total_stopping_time()) + '\n';
        run.emit(out);
    }
    return exit_ok;
}

int cmd_census(Runner& run, std::uint64_t a, std::uint64_t limit, bool nontrivial_only, bool no_memo,
               const std::string& variant_name)
{
    if (limit == 0) {
        limit = run.config().sieve_limit;
    }
    const SieveTable& table = run.sieve(limit);
    CensusOptions options;
    options.threads = run.config().threads;
    options.memoize = !no_memo;
    options.variant = variant_name == "beta" ? Variant::small_beta : Variant::big_B;
    const CensusReport report = run_census(Shift{a}, limit, table, options);
    if (run.format("csv") == "json") {
        run.emit_json(report::census_json(report));
    } else {
        run.emit(report::census_csv(std::span(&report, 1), !nontrivial_only));
    }
    return exit_ok;
}

int cmd_sweep(Runner& run, std::uint64_t a_max, std::uint64_t limit)
{
    if (limit == 0) {
        limit = run.config().sieve_limit;
    }
    const SieveTable& table = run.sieve(limit);
    CensusOptions options;
    options.threads = run.config().threads;
    const SweepResult sweep = cycle_count_sweep(a_max, limit, table, options);
    if (run.format("csv") == "json") {
        json counts = json::array();
        for (const auto& [a, c] : sweep.counts) {
            counts.push_back({{"a", a}, {"nontrivial_count", c}});
        }
        run.emit_json({
            {"schema_version", report::schema_version},
            {"kind", "sweep"},
            {"start_limit", limit},
            {"counts", counts},
            {"max_count", sweep.max_count},
            {"argmax", sweep.argmax},
        });
    } else {
        std::string out = "a,nontrivial_count\n";
        for (const auto& [a, c] : sweep.counts) {
            out += std::to_string(a) + ',' + std::to_string(c) + '\n';
        }
        run.emit(out);
    }
    return exit_ok;
}

int cmd_table1(Runner& run, std::uint64_t limit)
{
    const SieveTable& table = run.sieve(limit);
    const SumTable sums = make_sum_table(table, limit);
    CensusOptions options;
    options.threads = run.config().threads;
    std::ostringstream out;
    std::size_t matched = 0;
    const auto& rows = golden::table1();
    for (const auto& row : rows) {
        const CensusReport report = run_census(Shift{row.a}, limit, sums, options);
        const auto cmp = golden::compare(row, report);
        std::string cycles;
        for (const auto& c : report.nontrivial_cycles()) {
            cycles += ' ' + c.members_string();
        }
        out << "a=" << row.a << (cmp.match ? " OK " : " DIFF") << cycles << '\n';
        for (const auto& m : cmp.missing) {
            out << "  missing (" << report::join(m, ',') << ")\n";
        }
        for (const auto& u : cmp.unexpected) {
            out << "  unexpected (" << report::join(u, ',') << ")\n";
        }
        matched += cmp.match ? 1 : 0;
    }
    out << (matched == rows.size() ? "MATCH: " : "MISMATCH: ") << matched << '/' << rows.size() << " rows\n";
    run.emit(out.str());
    return matched == rows.size() ? exit_ok : exit_domain;
}

int cmd_amicable(Runner& run, std::uint64_t p, std::uint64_t p_max, std::optional<std::uint64_t> divisor,
                 bool check_min)
{
    const SieveTable& table = run.sieve();
    std::vector<std::uint64_t> primes;
    if (p_max != 0) {
        for (std::uint64_t v = 5; v <= p_max; ++v) {
            if (is_prime(v, table)) {
                primes.push_back(v);
            }
        }
    } else {
        primes.push_back(p);
    }
    const std::string fmt = run.format(p_max != 0 || check_min ? "csv" : "text");
    std::string out = fmt == "csv" ? (check_min ? "p,n,a,min_preimage,minimal\n" : "p,n,a\n") : "";
    json rows = json::array();
    for (const std::uint64_t v : primes) {
        const AmicablePair pair = build_amicable(v, table, divisor);
        if (!is_valid_amicable(pair, table)) {
            throw consistency_error("construction for p=" + std::to_string(v) + " is not a 2-cycle");
        }
        std::optional<std::uint64_t> least;
        if (check_min) {
            least = min_composite_preimage(v, table);
        }
        if (fmt == "json") {
            json row = {{"p", pair.p}, {"n", pair.n}, {"a", pair.shift.a}};
            if (least) {
                row["min_preimage"] = *least;
                row["minimal"] = *least == pair.n;
            }
            rows.push_back(row);
        } else if (fmt == "csv") {
            out += std::to_string(pair.p) + ',' + std::to_string(pair.n) + ',' + std::to_string(pair.shift.a);
            if (least) {
                out += ',' + std::to_string(*least) + ',' + (*least == pair.n ? "true" : "false");
            }
            out += '\n';
        } else {
            out += "p=" + std::to_string(pair.p) + " n=" + std::to_string(pair.n) + " a="
                   + std::to_string(pair.shift.a);
            if (least) {
                out += " min=" + std::to_string(*least);
            }
            out += '\n';
        }
    }
    if (fmt == "json") {
        run.emit_json({{"schema_version", report::schema_version}, {"kind", "amicable"}, {"pairs", rows}});
    } else {
        run.emit(out);
    }
    return exit_ok;
}

int cmd_chain(Runner& run, std::size_t k, std::uint64_t bound)
{
    const SieveTable& table = run.sieve(bound);
    const auto witness = find_ascending_chain(k, bound, table);
    if (witness && !validate_chain(*witness, table)) {
        throw consistency_error("chain witness failed validation");
    }
    const std::string fmt = run.format("csv");
    if (fmt == "json") {
        json doc = {{"schema_version", report::schema_version}, {"kind", "chain"}, {"k", k}, {"bound", bound}};
        if (witness) {
            doc["n"] = witness->n;
            doc["a"] = witness->shift.a;
            doc["chain"] = witness->chain;
        } else {
            doc["chain"] = nullptr;
        }
        run.emit_json(doc);
    } else {
        std::string out = "k,n,a,chain\n";
        if (witness) {
            out += std::to_string(k) + ',' + std::to_string(witness->n) + ',' + std::to_string(witness->shift.a)
                   + ',' + report::join(witness->chain, ';') + '\n';
        }
        run.emit(out);
    }
    return exit_ok;
}

int cmd_kappa(Runner& run, std::uint64_t limit)
{
    const SieveTable& table = run.sieve(limit);
    const KappaTable kt = build_kappa(limit, table);
    if (run.format("csv") == "json") {
        json rows = json::array();
        for (std::uint64_t m = 1; m <= limit; ++m) {
            rows.push_back({{"m", m}, {"kappa", kt.kappa(m).str()}});
        }
        run.emit_json({{"schema_version", report::schema_version}, {"kind", "kappa"}, {"rows", rows}});
        return exit_ok;
    }
    std::string out = "m,kappa\n";
    for (std::uint64_t m = 1; m <= limit; ++m) {
        out += std::to_string(m) + ',' + kt.kappa(m).str() + '\n';
    }
    run.emit(out);
    return exit_ok;
}

int cmd_fibre(Runner& run, std::uint64_t m, std::uint64_t a, std::uint64_t bound)
{
    const SieveTable& table = run.sieve();
    const std::vector<std::uint64_t> fibre =
        bound != 0 ? enumerate_fibre(m, Shift{a}, bound, table) : enumerate_fibre_all(m, Shift{a}, table);
    if (run.format("csv") == "json") {
        run.emit_json({{"schema_version", report::schema_version},
                       {"kind", "fibre"},
                       {"m", m},
                       {"a", a},
                       {"bound", bound == 0 ? json(nullptr) : json(bound)},
                       {"preimages", fibre}});
        return exit_ok;
    }
    std::string out = "m,a,n\n";
    for (const std::uint64_t n : fibre) {
        out += std::to_string(m) + ',' + std::to_string(a) + ',' + std::to_string(n) + '\n';
    }
    run.emit(out);
    return exit_ok;
}

std::function<bool(std::uint64_t)> parse_target_set(const std::string& spec, const SieveTable& table)
{
    if (spec == "squares") {
        return [](std::uint64_t v) { return is_perfect_square(v); };
    }
    if (spec == "primes") {
        return [&table](std::uint64_t v) { return is_prime(v, table); };
    }
    if (spec.rfind("file:", 0) == 0) {
        const std::string path = spec.substr(5);
        std::ifstream in(path);
        if (!in) {
            throw resource_error("cannot read set file " + path);
        }
        auto members = std::make_shared<std::unordered_set<std::uint64_t>>();
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) {
                continue;
            }
            try {
                members->insert(std::stoull(line));
            } catch (const std::exception&) {
                throw domain_error("bad integer in " + path + ": " + line);
            }
        }
        return [members](std::uint64_t v) { return members->contains(v); };
    }
    throw domain_error("unknown set '" + spec + "' (expected squares, primes or file:<path>)");
}

int cmd_density(Runner& run, const std::string& set_spec, std::uint64_t x, std::uint64_t a)
{
    const SieveTable& table = run.sieve(x);
    const auto target = parse_target_set(set_spec, table);
    const DensityCount d = preimage_density(target, x, table, Shift{a});
    if (run.format("csv") == "json") {
        run.emit_json({{"schema_version", report::schema_version},
                       {"kind", "density"},
                       {"set", set_spec},
                       {"a", a},
                       {"x", x},
                       {"count", d.count},
                       {"density", d.density}});
        return exit_ok;
    }
    run.emit("x,count,density\n" + std::to_string(x) + ',' + std::to_string(d.count) + ','
             + report::format_real(d.density) + '\n');
    return exit_ok;
}

int cmd_stats(Runner& run, const std::string& kind, std::uint64_t a, std::uint64_t x, std::uint64_t q,
              std::uint64_t N)
{
    const SieveTable& table = run.sieve(x);
    const bool as_json = run.format("csv") == "json";
    if (kind == "avg" || kind == "bmb" || kind == "parity") {
        const auto checkpoints = default_checkpoints(x);
        const unsigned threads = run.config().threads;
        const PartialSumSeries s = kind == "avg"   ? average_order_series(Shift{a}, checkpoints, table, threads)
                                   : kind == "bmb" ? b_minus_beta_series(Shift{a}, checkpoints, table, threads)
                                                   : parity_sum(Shift{a}, checkpoints, table, threads);
        if (as_json) {
            json doc = report::series_json(s, kind);
            doc["a"] = a;
            run.emit_json(doc);
        } else {
            run.emit(report::series_csv(s));
        }
        return exit_ok;
    }
    if (kind == "density") {
        const double d = estimate_local_density(N, x, table);
        if (as_json) {
            run.emit_json({{"schema_version", report::schema_version},
                           {"kind", "local_density"},
                           {"N", N},
                           {"x", x},
                           {"density", d}});
        } else {
            run.emit("N,x,density\n" + std::to_string(N) + ',' + std::to_string(x) + ','
                     + report::format_real(d) + '\n');
        }
        return exit_ok;
    }
    if (kind == "residue") {
        const auto counts = residue_distribution(Shift{a}, q, x, table);
        const double expected = static_cast<double>(x) / static_cast<double>(q);
        if (as_json) {
            json rows = json::array();
            for (const auto& [h, c] : counts) {
                rows.push_back({{"h", h}, {"count", c}, {"expected", expected}});
            }
            run.emit_json({{"schema_version", report::schema_version},
                           {"kind", "residue"},
                           {"a", a},
                           {"q", q},
                           {"x", x},
                           {"rows", rows}});
        } else {
            std::string out = "h,count,expected\n";
            for (const auto& [h, c] : counts) {
                out += std::to_string(h) + ',' + std::to_string(c) + ',' + report::format_real(expected) + '\n';
            }
            run.emit(out);
        }
        return exit_ok;
    }
    throw domain_error("unknown stats kind " + kind);
}

int run_cli(int argc, char** argv)
{
    RunConfig config;
    CLI::App app{"Shifted prime-divisor functions B_a(n), beta_a(n): orbits, cycle censuses, "
                 "constructions, prime-partition fibres and empirical statistics."};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--sieve-limit", config.sieve_limit,
                   "Smallest-prime-factor table size (default 10^6, env DD_SIEVE_LIMIT)");
    app.add_option("--format", config.format, "Output format")->check(CLI::IsMember({"csv", "json", "text"}));
    app.add_option("--threads", config.threads, "Worker threads for census and stats")->check(CLI::Range(1u, 1024u));
    app.add_flag("--extend-domain", config.extend_domain, "Allow n in {0,1} with B(0)=0, B(1)=1");
    app.add_option("--seed", config.seed, "Seed for the randomized factorization fallback");
    app.add_option("--out", config.out_path, "Write output to a file instead of stdout");

    std::uint64_t n = 0, a = 0, limit = 0, a_max = 0, p = 0, p_max = 0, m = 0, bound = 0, x = 0, q = 3, N = 0;
    std::size_t k = 0, max_steps = 0;
    std::optional<std::uint64_t> divisor;
    std::string variant = "B", set_spec, kind;
    bool nontrivial_only = false, no_memo = false, check_min = false, check_descent = false;

    auto* orbit = app.add_subcommand("orbit", "Iterate B_a from n until a cycle closes");
    orbit->add_option("--n", n, "Start value")->required();
    orbit->add_option("--a", a, "Shift");
    orbit->add_option("--variant", variant, "B or beta")->check(CLI::IsMember({"B", "beta"}));
    orbit->add_option("--max-steps", max_steps, "Step budget (0 = default)");
    orbit->add_flag("--check-descent", check_descent, "Verify large primes descend within 2a+1 steps");
    orbit->footer("example: orbit --n 5 --a 2   ->   5 7 9 6 [cycle]");

    auto* census = app.add_subcommand("census", "All cycles reached from starts 2..limit for one shift");
    census->add_option("--a", a, "Shift")->required();
    census->add_option("--limit", limit, "Largest start (default: sieve limit)");
    census->add_flag("--nontrivial-only", nontrivial_only, "Omit fixed points");
    census->add_flag("--no-memo", no_memo, "Iterate every start independently");
    census->add_option("--variant", variant, "B or beta")->check(CLI::IsMember({"B", "beta"}));
    census->footer("example: census --a 39 --nontrivial-only   ->   cycles (5,44,15,8,6) (7,46,25,10) "
                   "(13,52,17,56) (43,82)");

    auto* sweep = app.add_subcommand("sweep", "Number of distinct nontrivial cycles for a = 1..a-max");
    sweep->add_option("--a-max", a_max, "Largest shift")->required();
    sweep->add_option("--limit", limit, "Largest start (default: sieve limit)");
    sweep->footer("example: sweep --a-max 200   ->   at most 4 cycles per shift, 4 at a=39");

    std::uint64_t table1_limit = 1000000;
    auto* table1 = app.add_subcommand("table1", "Census for a = 1..20 compared with the embedded cycle table");
    table1->add_option("--limit", table1_limit, "Largest start");
    table1->footer("example: table1   ->   MATCH: 20/20 rows");

    auto* amicable = app.add_subcommand("amicable", "2-cycle (p, n) built from the gap to the previous prime");
    auto* p_opt = amicable->add_option("--p", p, "Prime p > 3");
    auto* pmax_opt = amicable->add_option("--p-max", p_max, "Every prime 5 <= p <= p-max");
    p_opt->excludes(pmax_opt);
    amicable->add_option("--divisor", divisor, "Prime divisor of the gap to use instead of the largest");
    amicable->add_flag("--check-min", check_min, "Also report the least composite preimage by scan");
    amicable->footer("example: amicable --p 11   ->   p=11 n=28 a=17");

    auto* chain = app.add_subcommand("chain", "Ascending chain from a prime arithmetic progression");
    chain->add_option("--k", k, "Chain length")->required();
    chain->add_option("--bound", bound, "Every term <= bound")->required();
    chain->footer("example: chain --k 4 --bound 1000   ->   4,5,6,5;11;17;23;29");

    std::uint64_t kappa_limit = 0;
    auto* kappa = app.add_subcommand("kappa", "Prime-partition counts kappa(m)");
    kappa->add_option("--limit", kappa_limit, "Largest m")->required();
    kappa->footer("example: kappa --limit 7   ->   last row 7,3");

    auto* fibre = app.add_subcommand("fibre", "Solutions of B_a(n) = m");
    fibre->add_option("--m", m, "Target value")->required();
    fibre->add_option("--a", a, "Shift");
    fibre->add_option("--bound", bound, "Scan n <= bound (default: generate the whole fibre)");
    fibre->footer("example: fibre --m 7   ->   7, 10, 12");

    auto* density = app.add_subcommand("density", "Density of n <= x with B_a(n) in a set");
    density->add_option("--set", set_spec, "squares | primes | file:<path>")->required();
    density->add_option("--x", x, "Upper bound")->required();
    density->add_option("--a", a, "Shift");
    density->footer("example: density --set squares --x 1000000   ->   density below the x = 10^4 value");

    auto* stats = app.add_subcommand("stats", "Partial sums, local densities and residue counts");
    stats->add_option("kind", kind, "avg | bmb | density | parity | residue")
        ->required()
        ->check(CLI::IsMember({"avg", "bmb", "density", "parity", "residue"}));
    stats->add_option("--a", a, "Shift");
    stats->add_option("--x", x, "Upper bound")->required();
    stats->add_option("--q", q, "Modulus for residue");
    stats->add_option("--N", N, "Excess value for density");
    stats->footer("example: stats parity --a 1 --x 1000000   ->   ratio near 1 against 2x/log x");

    if (const char* v = std::getenv("DD_SIEVE_LIMIT"); v != nullptr && *v != '\0') {
        config.sieve_limit = env_sieve_limit();
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    Runner run(config);
    if (*orbit) {
        return cmd_orbit(run, n, a, variant, max_steps, check_descent);
    }
    if (*census) {
        return cmd_census(run, a, limit, nontrivial_only, no_memo, variant);
    }
    if (*sweep) {
        return cmd_sweep(run, a_max, limit);
    }
    if (*table1) {
        return cmd_table1(run, table1_limit);
    }
    if (*amicable) {
        if (!*p_opt && !*pmax_opt) {
            throw domain_error("amicable needs --p or --p-max");
        }
        return cmd_amicable(run, p, p_max, divisor, check_min);
    }
    if (*chain) {
        return cmd_chain(run, k, bound);
    }
    if (*kappa) {
        return cmd_kappa(run, kappa_limit);
    }
    if (*fibre) {
        return cmd_fibre(run, m, a, bound);
    }
    if (*density) {
        return cmd_density(run, set_spec, x, a);
    }
    return cmd_stats(run, kind, a, x, q, N);
}

} // namespace

int main(int argc, char** argv)
{
    try {
        return run_cli(argc, argv);
    } catch (const shiftdiv::domain_error& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return exit_domain;
    } catch (const shiftdiv::arithmetic_error& e) {
        std::cerr << "arithmetic error: " << e.what() << '\n';
        return exit_resource;
    } catch (const shiftdiv::resource_error& e) {
        std::cerr << "resource error: " << e.what() << '\n';
        return exit_resource;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_resource;
    }
}
