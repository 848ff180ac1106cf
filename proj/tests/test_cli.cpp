// Runs the built lacuna binary and checks output and exit status.

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#ifndef LACUNA_CLI
#error "LACUNA_CLI must name the CLI binary"
#endif

namespace {

struct Run {
    int status;
    std::string out;
};

Run run(const std::string& args, const std::string& env = "")
{
    const std::string cmd = env + " " + std::string(LACUNA_CLI) + " " + args + " 2>/dev/null";
    FILE* f = popen(cmd.c_str(), "r");
    if (!f) return {-1, {}};
    std::string out;
    std::array<char, 4096> buf{};
    while (std::size_t n = fread(buf.data(), 1, buf.size(), f)) out.append(buf.data(), n);
    const int raw = pclose(f);
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

} // namespace

TEST(Cli, VerifyLehmer3Passes)
{
    const auto r = run("verify --checks lehmer3 --pmin 5 --pmax 97");
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("fail 0"), std::string::npos);
}

TEST(Cli, PEqualsMIsSkipped)
{
    const auto r = run("verify --checks t1 --pmin 5 --pmax 5 --moduli 5 --format json");
    EXPECT_EQ(r.status, 0);
    const auto j = nlohmann::json::parse(r.out);
    ASSERT_EQ(j.at("results").size(), 1U);
    EXPECT_EQ(j.at("results")[0].at("status"), "skipped");
}

TEST(Cli, InvertedRangeIsUsageError) { EXPECT_EQ(run("verify --pmin 10 --pmax 9").status, 2); }

TEST(Cli, UnknownCheckIsUsageError) { EXPECT_EQ(run("verify --checks nope --pmin 5 --pmax 7").status, 2); }

TEST(Cli, BadFlagIsUsageError) { EXPECT_EQ(run("verify --frobnicate").status, 2); }

TEST(Cli, FailureGivesExitOne)
{
    EXPECT_EQ(run("verify --checks hp26 --pmin 5 --pmax 13").status, 1);
    EXPECT_EQ(run("verify --checks c2e2 --pmin 5 --pmax 13 --moduli 2").status, 1);
}

TEST(Cli, ReportOnlyRowsNeverFailTheRun)
{
    const auto r = run("verify --checks closed_m10_fifth --pmin 5 --pmax 5 --format json");
    EXPECT_EQ(r.status, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_GT(j.at("summary").at("report_only").get<int>(), 0);
}

TEST(Cli, JsonRoundTripsSummary)
{
    const auto r = run("verify --checks t1,t2,c2e2 --pmin 5 --pmax 40 --moduli 2..6 --format json");
    EXPECT_EQ(r.status, 1);
    const auto j = nlohmann::json::parse(r.out);
    std::size_t pass = 0, fail = 0, skip = 0, divfail = 0;
    for (const auto& row : j.at("results")) {
        if (row.at("report_only").get<bool>()) continue;
        const auto s = row.at("status").get<std::string>();
        pass += s == "pass";
        fail += s == "fail";
        skip += s == "skipped";
        divfail += s == "divisibility-failure";
    }
    EXPECT_EQ(j.at("summary").at("pass"), pass);
    EXPECT_EQ(j.at("summary").at("fail"), fail);
    EXPECT_EQ(j.at("summary").at("skip"), skip);
    EXPECT_EQ(j.at("summary").at("divfail"), divfail);
}

TEST(Cli, JobsEnvironmentDoesNotChangeOutput)
{
    const std::string args = "verify --checks t1,c1e1,williams --pmin 5 --pmax 60 --format csv";
    const auto a = run(args, "LACUNA_JOBS=1"), b = run(args, "LACUNA_JOBS=3");
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.status, b.status);
}

TEST(Cli, ComputeValues)
{
    EXPECT_EQ(run("compute H --r 5 --m 3 --p 5 --e 2").out, "13 (mod 25)\n");
    EXPECT_EQ(run("compute H --r 1 --m 3 --p 5 --e 2").out, "20 (mod 25)\n");
    EXPECT_EQ(run("compute T --r 2 --m 10 --n 5").out, "10\n");
    EXPECT_EQ(run("compute Tstar --r 0 --m 2 --n 4").out, "8\n");
    EXPECT_EQ(run("compute seq --kind pell --n 11").out, "5741\n");
    EXPECT_EQ(run("compute seq --kind fibonacci --n 7 --p 5 --e 3").out, "13 (mod 125)\n");
    EXPECT_EQ(run("compute S --r 0 --m 2 --n 4 --p 5 --e 1").out, "2 (mod 5)\n");
}

TEST(Cli, ComputeErrors)
{
    EXPECT_EQ(run("compute H --r 1 --m 3 --p 9 --e 2").status, 2);
    EXPECT_EQ(run("compute H --r 1 --m 3 --p 5 --e 9").status, 2);
    EXPECT_EQ(run("compute frob").status, 2);
    EXPECT_EQ(run("compute T --r 1 --m 3").status, 2);
}

TEST(Cli, ComputeCheckReportsDivisibilityFailure)
{
    const auto r = run("compute check --id c2e2 --p 7 --m 2");
    EXPECT_EQ(r.status, 1);
    EXPECT_NE(r.out.find("divisibility-failure"), std::string::npos);
    EXPECT_EQ(run("compute check --id lehmer3 --p 5").status, 0);
}

TEST(Cli, ListIncludesChecks)
{
    const auto r = run("list");
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("t3  mod p^2  p>5"), std::string::npos);
    EXPECT_NE(r.out.find("lemma2_identity  exact"), std::string::npos);
    const auto j = nlohmann::json::parse(run("list --format json").out);
    EXPECT_TRUE(j.is_array());
}
