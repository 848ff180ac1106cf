// lacuna: verify lacunary harmonic/binomial congruences over prime ranges.
//
//   lacuna verify --checks t1,t2 --pmin 5 --pmax 499 --moduli 2..12 --format json
//   lacuna compute H --r 5 --m 3 --p 5 --e 2
//   lacuna list --format json
//
// Exit status: 0 all asserted rows pass, 1 a failure, 2 usage error.

#include <cstdlib>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lacuna/report.hpp"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else if (c != ' ') {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

long long parse_ll(const std::string& s)
{
    std::size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &pos);
    } catch (const std::exception&) {
        throw UsageError("not an integer: '" + s + "'");
    }
    if (pos != s.size()) throw UsageError("not an integer: '" + s + "'");
    return v;
}

// "2..12", "3,5,7" or a mix: "2..4,8".
std::vector<long long> parse_moduli(const std::string& spec)
{
    std::vector<long long> out;
    for (const auto& part : split(spec, ',')) {
        const auto dots = part.find("..");
        if (dots == std::string::npos) {
            out.push_back(parse_ll(part));
            continue;
        }
        const long long lo = parse_ll(part.substr(0, dots)), hi = parse_ll(part.substr(dots + 2));
        if (lo > hi) throw UsageError("empty modulus range '" + part + "'");
        for (long long m = lo; m <= hi; ++m) out.push_back(m);
    }
    for (long long m : out)
        if (m < 2) throw UsageError("moduli must be >= 2, got " + std::to_string(m));
    return out;
}

unsigned default_jobs()
{
    if (const char* env = std::getenv("LACUNA_JOBS")) {
        const long long v = parse_ll(env);
        if (v < 1) throw UsageError("LACUNA_JOBS must be >= 1");
        return static_cast<unsigned>(v);
    }
    return 1;
}

struct VerifyArgs {
    std::string checks = "all";
    long long pmin = 5;
    long long pmax = 100;
    std::string moduli = "2..12";
    std::string exclude;
    std::string format = "table";
    long long jobs = 0;
    bool include_p_dividing_m = false;
    bool fail_fast = false;
    bool report_only_exceptions = false;
    bool verbose = false;
};

int cmd_verify(const VerifyArgs& a)
{
    if (a.pmin < 0 || a.pmax < 0) throw UsageError("prime bounds must be non-negative");
    if (a.pmin > a.pmax)
        throw UsageError("pmin " + std::to_string(a.pmin) + " > pmax " + std::to_string(a.pmax));
    const auto fmt = lacuna::parse_format(a.format);

    std::set<std::uint64_t> excluded;
    for (const auto& e : split(a.exclude, ',')) excluded.insert(static_cast<std::uint64_t>(parse_ll(e)));

    std::vector<std::string> ids;
    if (a.checks != "all") {
        ids = split(a.checks, ',');
        for (const auto& id : ids) lacuna::find_check(id);  // unknown id -> usage error
    }

    lacuna::SuiteOptions opts;
    opts.include_p_dividing_m = a.include_p_dividing_m;
    opts.report_only_exceptions = a.report_only_exceptions;
    opts.fail_fast = a.fail_fast;
    if (a.jobs < 0) throw UsageError("--jobs must be >= 1");
    opts.jobs = a.jobs > 0 ? static_cast<unsigned>(a.jobs) : default_jobs();

    const lacuna::PrimeRange range(static_cast<std::uint64_t>(a.pmin), static_cast<std::uint64_t>(a.pmax), excluded);
    const auto rep = lacuna::run_suite(range, parse_moduli(a.moduli), ids, opts);
    std::cout << lacuna::render(rep, fmt, a.verbose);
    return rep.failed() ? kExitFail : 0;
}

struct ComputeArgs {
    std::string what;
    long long r = 0, m = 2, n = -1, p = 0;
    int e = 1;
    bool signed_terms = false;
    std::string kind = "fibonacci";
    std::string id;
};

std::uint64_t require_prime(long long p)
{
    if (p < 3 || !lacuna::is_prime(static_cast<std::uint64_t>(p)))
        throw UsageError("--p must be an odd prime, got " + std::to_string(p));
    return static_cast<std::uint64_t>(p);
}

int cmd_compute(const ComputeArgs& a)
{
    using namespace lacuna;
    if (a.what == "H" || a.what == "S") {
        const auto p = require_prime(a.p);
        const long long n = a.n < 0 ? a.p - 1 : a.n;
        if (n >= a.p) throw UsageError("summation bound must be < p");
        if (a.e < 1 || a.e > kMaxExponent) throw UsageError("--e must be in [1, 6]");
        const ClassSpec spec(a.r, a.m, n);
        const Residue v = a.what == "H" ? harmonic_lacunary(spec, p, a.e, a.signed_terms) : harmonic_double(spec, p, a.e);
        std::cout << v.str() << '\n';
        return 0;
    }
    if (a.what == "T" || a.what == "Tstar") {
        if (a.n < 0) throw UsageError("--n is required");
        std::cout << to_string(binomial_lacunary(ClassSpec(a.r, a.m, a.n), a.what == "Tstar")) << '\n';
        return 0;
    }
    if (a.what == "seq") {
        if (a.n < 0) throw UsageError("--n is required");
        const auto kind = parse_kind(a.kind);
        if (a.p != 0) {
            if (a.e < 1 || a.e > kMaxExponent) throw UsageError("--e must be in [1, 6]");
            std::cout << seq_mod(kind, static_cast<std::uint64_t>(a.n), require_prime(a.p), a.e).str() << '\n';
        } else {
            std::cout << to_string(seq_exact(kind, static_cast<std::uint64_t>(a.n))) << '\n';
        }
        return 0;
    }
    if (a.what == "check") {
        if (a.id.empty()) throw UsageError("--id is required");
        const auto& def = find_check(a.id);
        std::optional<std::uint64_t> p;
        std::optional<long long> m;
        if (def.scope != Scope::global) p = require_prime(a.p);
        if (def.scope == Scope::per_modulus) m = a.m;
        CheckOptions opts;
        opts.report_only_exceptions = true;
        int rc = 0;
        for (const auto& r : run_check(def, p, m, opts)) {
            std::cout << r.check << (r.sub.empty() ? "" : " [" + r.sub + "]") << ": lhs=" << r.lhs << " rhs=" << r.rhs
                      << (r.modulus == "exact" ? " exact" : " mod " + r.modulus) << ' ' << status_name(r.status)
                      << (r.report_only ? " (report-only)" : "") << '\n';
            if (r.is_failure()) rc = kExitFail;
        }
        return rc;
    }
    throw UsageError("unknown quantity '" + a.what + "' (expected H, S, T, Tstar, seq or check)");
}

int cmd_list(const std::string& format)
{
    if (format == "json") {
        std::cout << lacuna::checks_to_json().dump(2) << '\n';
        return 0;
    }
    if (format != "table") throw UsageError("list supports --format table|json");
    for (const auto& d : lacuna::list_checks())
        std::cout << d.id << "  "
                  << (d.modulus == "exact" ? std::string("exact") : "mod " + d.modulus) << "  " << d.applicability
                  << "  " << d.description << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Verify lacunary harmonic and binomial congruences modulo prime powers"};
    app.require_subcommand(1);

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "Sweep checks over a prime range");
    verify->add_option("--checks", va.checks, "Comma-separated check ids, or 'all'");
    verify->add_option("--pmin", va.pmin, "Smallest prime");
    verify->add_option("--pmax", va.pmax, "Largest prime");
    verify->add_option("--moduli", va.moduli, "Moduli m, e.g. 2..12 or 3,5,8");
    verify->add_option("--exclude", va.exclude, "Comma-separated primes to skip");
    verify->add_option("--format", va.format, "table, json or csv");
    verify->add_option("--jobs", va.jobs, "Worker threads (default: LACUNA_JOBS or 1)");
    verify->add_flag("--include-p-dividing-m", va.include_p_dividing_m, "Evaluate p | m cells as report-only");
    verify->add_flag("--fail-fast", va.fail_fast, "Stop after the first failing cell");
    verify->add_flag("--report-only-exceptions", va.report_only_exceptions, "Also run gated report-only checks");
    verify->add_flag("--verbose", va.verbose, "Table format: print every row");

    ComputeArgs ca;
    auto* compute = app.add_subcommand("compute", "Compute a single quantity");
    compute->add_option("what", ca.what, "H, S, T, Tstar, seq or check")->required();
    compute->add_option("--r", ca.r, "Residue class");
    compute->add_option("--m", ca.m, "Class modulus");
    compute->add_option("--n", ca.n, "Summation bound / sequence index");
    compute->add_option("--p", ca.p, "Prime");
    compute->add_option("--e", ca.e, "Exponent of p");
    compute->add_flag("--signed", ca.signed_terms, "H: alternate signs (-1)^k");
    compute->add_option("--kind", ca.kind, "seq: fibonacci, lucas, pell or pell-lucas");
    compute->add_option("--id", ca.id, "check: registry id");

    std::string list_format = "table";
    auto* list = app.add_subcommand("list", "List registered checks");
    list->add_option("--format", list_format, "table or json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (*verify) return cmd_verify(va);
        if (*compute) return cmd_compute(ca);
        if (*list) return cmd_list(list_format);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFail;
    }
    return kExitUsage;
}
