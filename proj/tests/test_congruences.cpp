#include <gtest/gtest.h>

#include <set>

#include "lacuna/congruences.hpp"
#include "oracle.hpp"

using namespace lacuna;

namespace {

CheckResult only(const std::vector<CheckResult>& rs)
{
    EXPECT_EQ(rs.size(), 1U);
    return rs.empty() ? CheckResult{} : rs.front();
}

std::set<Status> statuses(const std::vector<CheckResult>& rs)
{
    std::set<Status> s;
    for (const auto& r : rs) s.insert(r.status);
    return s;
}

} // namespace

TEST(Registry, ContainsExpectedIds)
{
    std::set<std::string> ids;
    for (const auto& d : list_checks()) ids.insert(d.id);
    for (const char* id : {"lehmer3", "lemma2_identity", "t1", "t2", "t3", "t4", "wolstenholme_sum", "binom2pp",
                           "closed_m10_fifth", "l1e2_general", "seq_identities"})
        EXPECT_TRUE(ids.count(id)) << id;
}

TEST(Registry, IdsUniqueAndSorted)
{
    const auto& checks = list_checks();
    for (std::size_t i = 1; i < checks.size(); ++i) EXPECT_LT(checks[i - 1].id, checks[i].id);
    EXPECT_GE(checks.size(), 30U);
}

TEST(Registry, DocumentedExceptionsAreReportOnly)
{
    EXPECT_TRUE(find_check("closed_m10_fifth").report_only);
    EXPECT_TRUE(find_check("l1e2_general").report_only);
    EXPECT_TRUE(find_check("l1e2_general").gated);
    EXPECT_FALSE(find_check("closed_m10").report_only);
}

TEST(RunCheck, UnknownIdThrows) { EXPECT_THROW(run_check("no_such_check", 5), std::invalid_argument); }

TEST(RunCheck, SpotValues)
{
    const auto a = only(run_check("lehmer3", 5));
    EXPECT_EQ(a.lhs, "13");
    EXPECT_EQ(a.rhs, "13");
    EXPECT_EQ(a.modulus, "25");
    EXPECT_EQ(a.status, Status::pass);

    const auto b = only(run_check("t3", 7));
    EXPECT_EQ(b.lhs, "25");
    EXPECT_EQ(b.rhs, "25");
    EXPECT_EQ(b.modulus, "49");
    EXPECT_EQ(b.status, Status::pass);

    const auto c = only(run_check("t4", 11));
    EXPECT_EQ(c.lhs, "81");
    EXPECT_EQ(c.rhs, "81");
    EXPECT_EQ(c.modulus, "121");
    EXPECT_EQ(c.status, Status::pass);
}

TEST(RunCheck, SpotValuesAgreeWithRationalOracle)
{
    // lehmer3 at p = 5: H = 1/2, RHS = (3^4-1)/(2*5) - (3^4-1)^2/(4*5) exactly.
    oracle::Int q1, q2;
    ASSERT_TRUE(oracle::quotient(80, 2, 5, 1, 2, q1));
    ASSERT_TRUE(oracle::quotient(6400, 4, 5, 1, 2, q2));
    EXPECT_EQ(oracle::modn(q1 - q2, 25), 13);
    EXPECT_EQ(oracle::frac_mod(oracle::harmonic(5, 3, 4), 25), 13);

    // t3 at p = 7 with F_7 = 13, F_15 = 610 ((5/7) = -1 so 2p+1 = 15).
    const oracle::Int x = oracle::ipow(5, 3) * oracle::fib(7) - 1;
    const oracle::Int y = oracle::ipow(5, 6) * oracle::fib(15) - 1;
    ASSERT_TRUE(oracle::quotient(x, 1, 7, 1, 2, q1));
    ASSERT_TRUE(oracle::quotient(y, 4, 7, 1, 2, q2));
    EXPECT_EQ(oracle::modn(q1 - q2, 49), 25);
    EXPECT_EQ(oracle::frac_mod(oracle::harmonic(7, 5, 6), 49), 25);

    // t4 at p = 11 with P_11 = 5741, P_23 ((2/11) = -1).
    const oracle::Int u = oracle::ipow(2, 18) + oracle::ipow(2, 8) + oracle::ipow(2, 4) * oracle::pell(11) - 1;
    const oracle::Int v = oracle::ipow(2, 38) + oracle::ipow(2, 18) + oracle::ipow(2, 9) * oracle::pell(23) - 1;
    ASSERT_TRUE(oracle::quotient(u, 1, 11, 1, 2, q1));
    ASSERT_TRUE(oracle::quotient(v, 4, 11, 1, 2, q2));
    EXPECT_EQ(oracle::modn(q1 - q2, 121), 81);
    EXPECT_EQ(oracle::frac_mod(oracle::harmonic(11, 8, 10), 121), 81);
}

TEST(RunCheck, T1AgreesWithPascalOracle)
{
    const auto tri = oracle::pascal(2 * 61);
    for (long p : oracle::primes(5, 61))
        for (long m = 2; m <= 12; ++m) {
            if (m % p == 0) continue;
            const oracle::Int t1 = oracle::tsum(tri[p], p, m, true), t2 = oracle::tsum(tri[2 * p], p, m, true);
            oracle::Int a, b;
            ASSERT_TRUE(oracle::quotient(-(2 * t1 + 2), 1, p, 1, 2, a));
            ASSERT_TRUE(oracle::quotient(t2 + 2, 4, p, 1, 2, b));
            const auto r = only(run_check("t1", p, m));
            EXPECT_EQ(r.rhs, oracle::modn(a + b, oracle::ipow(p, 2)).get_str());
            EXPECT_EQ(r.lhs, oracle::frac_mod(oracle::harmonic(p, m, p - 1), oracle::ipow(p, 2)).get_str());
            EXPECT_EQ(r.status, Status::pass);
        }
}

TEST(RunCheck, OneRowPerResidueForAllResidueChecks)
{
    const auto rs = run_check("firstorder", 11, 7);
    ASSERT_EQ(rs.size(), 7U);
    for (long r = 0; r < 7; ++r) EXPECT_EQ(rs[r].sub, "r=" + std::to_string(r));
    EXPECT_EQ(statuses(rs), std::set<Status>{Status::pass});
}

TEST(RunCheck, ApplicabilityYieldsSkipped)
{
    EXPECT_EQ(only(run_check("t3", 5)).status, Status::skipped);
    EXPECT_EQ(only(run_check("lehmer3", 3)).status, Status::skipped);
    EXPECT_EQ(only(run_check("c2e2", 7, 3)).status, Status::skipped);
    EXPECT_EQ(only(run_check("binom2pp", 2)).status, Status::skipped);
}

TEST(RunCheck, PDividingMSkippedUnlessRequested)
{
    EXPECT_EQ(only(run_check("t1", 5, 5)).status, Status::skipped);
    EXPECT_EQ(only(run_check("t1", 5, 10)).status, Status::skipped);
    CheckOptions opts;
    opts.include_p_dividing_m = true;
    const auto rs = run_check("t1", 5, 10, opts);
    ASSERT_FALSE(rs.empty());
    for (const auto& r : rs) EXPECT_TRUE(r.report_only);
}

TEST(RunCheck, NonPrimeRejected) { EXPECT_THROW(run_check("lehmer3", 9), std::invalid_argument); }

TEST(RunCheck, ModulusRequiredForPerModulusChecks) { EXPECT_THROW(run_check("t1", 7), std::invalid_argument); }

TEST(RunCheck, C2e2AtMEqualsTwoIsADivisibilityFailure)
{
    // T*_{p+1,2}(2p) = 2^{2p-1} is never divisible by p.
    const auto r = only(run_check("c2e2", 7, 2));
    EXPECT_EQ(r.status, Status::divisibility_failure);
    EXPECT_NE(r.rhs.find("not divisible"), std::string::npos);
    EXPECT_EQ(only(run_check("c2e2", 7, 4)).status, Status::pass);
}

TEST(RunCheck, Hp26MergedFormFailsAsStated)
{
    const auto r = only(run_check("hp26", 5));
    EXPECT_EQ(r.lhs, "4");
    EXPECT_EQ(r.rhs, "0");
    EXPECT_EQ(r.status, Status::fail);
    EXPECT_EQ(only(run_check("hp26_cases", 5)).status, Status::pass);
}

TEST(RunCheck, PellLucasHalfIndexMismatchAtSeven)
{
    const auto rs = run_check("pelllucas_half", 7);
    ASSERT_EQ(rs.size(), 2U);
    EXPECT_EQ(rs[0].status, Status::pass);
    EXPECT_EQ(rs[1].lhs, "6");  // Q_4 = 34
    EXPECT_EQ(rs[1].rhs, "3");
    EXPECT_EQ(rs[1].status, Status::fail);
}

TEST(RunCheck, ChainedChecksVerifyAllPairs)
{
    EXPECT_EQ(run_check("sunsun_F", 13).size(), 3U);
    EXPECT_EQ(run_check("sun93_pell", 13).size(), 3U);
    EXPECT_EQ(statuses(run_check("sunsun_F", 13)), std::set<Status>{Status::pass});
}

TEST(RunCheck, GatedCheckNeedsFlag)
{
    EXPECT_EQ(only(run_check("l1e2_general", 7, 3)).status, Status::skipped);
    CheckOptions opts;
    opts.report_only_exceptions = true;
    const auto rs = run_check("l1e2_general", 7, 3, opts);
    EXPECT_EQ(rs.size(), 6U * 3U * 2U);
    for (const auto& r : rs) EXPECT_TRUE(r.report_only);
}

TEST(RunCheck, GlobalChecksIgnorePrime)
{
    const auto rs = run_check("closed_m10_fifth", std::nullopt);
    ASSERT_FALSE(rs.empty());
    bool saw_n5 = false;
    for (const auto& r : rs) {
        EXPECT_TRUE(r.report_only);
        EXPECT_FALSE(r.p.has_value());
        if (r.sub.rfind("n=5,", 0) == 0) {
            saw_n5 = true;
            EXPECT_EQ(r.lhs, "1");
            EXPECT_EQ(r.rhs, "0");
            EXPECT_EQ(r.status, Status::fail);
        }
    }
    EXPECT_TRUE(saw_n5);
}

TEST(RunSuite, T1SweepPasses)
{
    const auto rep = run_suite(PrimeRange(5, 50), {2, 3}, {"t1"});
    EXPECT_FALSE(rep.failed());
    EXPECT_EQ(rep.summary.fail, 0U);
    EXPECT_GT(rep.summary.pass, 0U);
}

TEST(RunSuite, WolstenholmeSweepPasses)
{
    const auto rep = run_suite(PrimeRange(5, 50), {2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12}, {"wolstenholme_sum"});
    EXPECT_FALSE(rep.failed());
    EXPECT_EQ(rep.summary.pass, 13U);
}

TEST(RunSuite, EmptyRangeGivesEmptyReport)
{
    const auto rep = run_suite(PrimeRange(24, 28), {2, 3}, {});
    EXPECT_TRUE(rep.results.empty());
    EXPECT_EQ(rep.summary, Summary{});
    EXPECT_FALSE(rep.failed());
}

TEST(RunSuite, SortedByCheckThenPrimeThenModulus)
{
    const auto rep = run_suite(PrimeRange(5, 30), {3, 2, 4}, {"t2", "c1e2", "lehmer3"});
    EXPECT_EQ(rep.moduli, (std::vector<long long>{2, 3, 4}));
    for (std::size_t i = 1; i < rep.results.size(); ++i) {
        const auto& a = rep.results[i - 1];
        const auto& b = rep.results[i];
        const auto ka = std::make_tuple(a.check, a.p.value_or(0), a.m.value_or(0));
        const auto kb = std::make_tuple(b.check, b.p.value_or(0), b.m.value_or(0));
        EXPECT_LE(ka, kb);
    }
}

TEST(RunSuite, FailFastStopsAtFirstFailingCell)
{
    SuiteOptions opts;
    opts.fail_fast = true;
    const auto rep = run_suite(PrimeRange(5, 100), {2, 4}, {"c2e2"}, opts);
    ASSERT_FALSE(rep.results.empty());
    EXPECT_TRUE(rep.results.back().is_failure());
    EXPECT_EQ(rep.results.size(), 1U);
}

TEST(RunSuite, SkippedCellsCounted)
{
    const auto rep = run_suite(PrimeRange(5, 5), {5}, {"t1"});
    ASSERT_EQ(rep.results.size(), 1U);
    EXPECT_EQ(rep.summary.skip, 1U);
    EXPECT_FALSE(rep.failed());
}
