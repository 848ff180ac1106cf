// Randomised and exhaustive property checks over small domains.

#include <gtest/gtest.h>

#include "lacuna/congruences.hpp"
#include "oracle.hpp"

using namespace lacuna;

namespace {

struct Gen {
    std::mt19937_64 g = oracle::rng();
    std::vector<std::uint64_t> primes = primes_in_range({3, 200});

    std::uint64_t prime() { return primes[g() % primes.size()]; }
    int exponent() { return 1 + static_cast<int>(g() % kMaxExponent); }
    long small(long lo, long hi) { return lo + static_cast<long>(g() % static_cast<std::uint64_t>(hi - lo + 1)); }
    BigInt big()
    {
        BigInt v = 0;
        for (int i = 0; i < 3; ++i) v = v * BigInt("18446744073709551616") + BigInt(std::to_string(g()));
        return (g() & 1) ? BigInt(-v) : v;
    }
};

} // namespace

TEST(Property, ResidueStaysCanonical)
{
    Gen gen;
    for (int i = 0; i < 500; ++i) {
        const auto p = gen.prime();
        const int e = gen.exponent();
        const auto a = make_residue(gen.big(), p, e), b = make_residue(gen.big(), p, e);
        for (const auto& x : {a + b, a - b, a * b, -a, 7L * a}) {
            EXPECT_GE(x.value(), 0);
            EXPECT_LT(x.value(), prime_power(p, e));
        }
    }
}

TEST(Property, InverseIsInvolution)
{
    Gen gen;
    for (int i = 0; i < 500; ++i) {
        const auto p = gen.prime();
        const auto x = make_residue(gen.big(), p, gen.exponent());
        if (!x.is_unit()) continue;
        EXPECT_EQ(inv_unit(inv_unit(x)), x);
        EXPECT_EQ(x * inv_unit(x), x.with_value(1));
    }
}

TEST(Property, ExactDivOfMultiple)
{
    Gen gen;
    for (int i = 0; i < 500; ++i) {
        const auto p = gen.prime();
        const int e = 2 + static_cast<int>(gen.g() % (kMaxExponent - 1));
        const BigInt k = gen.big();
        const auto q = exact_div_by_p(make_residue(BigInt(k * static_cast<unsigned long>(p)), p, e), 1);
        ASSERT_TRUE(q);
        EXPECT_EQ(*q, make_residue(k, p, e - 1));
    }
}

TEST(Property, PadicQuotientRecomputes)
{
    Gen gen;
    for (int i = 0; i < 500; ++i) {
        const auto p = gen.prime();
        const int t = 1 + static_cast<int>(gen.g() % 2), e = 1 + static_cast<int>(gen.g() % 4);
        long u = gen.small(1, 1000);
        if (u % static_cast<long>(p) == 0) u += 1;
        const BigInt numer = gen.big() * prime_power(p, t);
        const auto q = padic_quotient(numer, u, p, t, e);
        ASSERT_TRUE(q);
        // q * u * p^t = numer (mod p^{e+t})
        const auto lifted = make_residue(BigInt(q->value() * u * prime_power(p, t)), p, e + t);
        EXPECT_EQ(lifted, make_residue(numer, p, e + t));
    }
}

TEST(Property, FermatLittleTheorem)
{
    for (auto p : primes_in_range({3, 500}))
        for (long x = 1; x < static_cast<long>(std::min<std::uint64_t>(p, 60)); ++x)
            EXPECT_EQ(pow_residue(make_residue(x, p, 1), p - 1).value(), 1);
}

TEST(Property, SeqModAgreesWithExact)
{
    Gen gen;
    for (int i = 0; i < 400; ++i) {
        const auto p = gen.prime();
        const int e = gen.exponent();
        const auto n = static_cast<std::uint64_t>(gen.small(0, 2000));
        for (auto k : {kFibonacci, kLucas, kPell, kPellLucas})
            EXPECT_EQ(seq_mod(k, n, p, e), make_residue(seq_exact(k, n), p, e));
    }
}

TEST(Property, RowSumsOfLacunaryBinomials)
{
    for (long n = 0; n <= 60; ++n)
        for (long m = 2; m <= 12; ++m) {
            BigInt t = 0, ts = 0;
            for (long r = 0; r < m; ++r) {
                t += binomial_lacunary(ClassSpec(r, m, n));
                ts += binomial_lacunary(ClassSpec(r, m, n), true);
            }
            EXPECT_EQ(t, oracle::ipow(2, static_cast<unsigned long>(n)));
            if (n >= 1) EXPECT_EQ(ts, 0);
        }
}

TEST(Property, TstarReflection)
{
    for (long n = 0; n <= 60; ++n)
        for (long m = 2; m <= 12; ++m)
            for (long r = 0; r < m; ++r) {
                const BigInt a = binomial_lacunary(ClassSpec(r, m, n), true);
                const BigInt b = binomial_lacunary(ClassSpec(n - r, m, n), true);
                EXPECT_EQ(a, n % 2 ? BigInt(-b) : b);
            }
}

TEST(Property, SignedUnsignedConversion)
{
    for (long n = 0; n <= 60; ++n)
        for (long m = 2; m <= 12; ++m)
            for (long r = 0; r < m; ++r) {
                const BigInt ts = binomial_lacunary(ClassSpec(r, m, n), true);
                BigInt want;
                if (m % 2 == 0)
                    want = binomial_lacunary(ClassSpec(r, m, n));
                else
                    want = binomial_lacunary(ClassSpec(r, 2 * m, n)) - binomial_lacunary(ClassSpec(m + r, 2 * m, n));
                if (r % 2) want = -want;
                EXPECT_EQ(ts, want) << n << " " << r << " " << m;
            }
}

TEST(Property, TstarPascalRecurrence)
{
    for (long n = 1; n <= 60; ++n)
        for (long m = 2; m <= 12; ++m)
            for (long r = 0; r < m; ++r)
                EXPECT_EQ(binomial_lacunary(ClassSpec(r, m, n), true),
                          binomial_lacunary(ClassSpec(r, m, n - 1), true) -
                              binomial_lacunary(ClassSpec(r - 1, m, n - 1), true));
}

TEST(Property, HarmonicMatchesExactOracle)
{
    for (auto p : primes_in_range({3, 97}))
        for (long m = 2; m <= 6; ++m)
            for (long r = 0; r < m; ++r)
                for (int e = 1; e <= 2; ++e) {
                    const ClassSpec spec(r, m, static_cast<long long>(p) - 1);
                    const Rational q = harmonic_exact(spec);
                    EXPECT_EQ(harmonic_lacunary(spec, p, e).value(), oracle::frac_mod(q, prime_power(p, e)));
                }
}

TEST(Property, HarmonicAntisymmetryModP)
{
    for (auto p : primes_in_range({3, 199}))
        for (long m = 2; m <= 12; ++m)
            for (long r = 0; r < m; ++r) {
                const long long P = static_cast<long long>(p);
                EXPECT_EQ(harmonic_lacunary(ClassSpec(P - r, m, P - 1), p, 1),
                          -harmonic_lacunary(ClassSpec(r, m, P - 1), p, 1));
            }
}

TEST(Property, WolstenholmeOverClasses)
{
    for (auto p : primes_in_range({5, 199}))
        for (long m = 2; m <= 12; ++m) {
            Residue acc = make_residue(0L, p, 2);
            for (long r = 0; r < m; ++r) acc += harmonic_lacunary(ClassSpec(r, m, static_cast<long long>(p) - 1), p, 2);
            EXPECT_TRUE(acc.is_zero()) << p << " " << m;
        }
}

TEST(Property, ResultStatusMatchesSides)
{
    // status = pass iff lhs = rhs, on every row of a mixed sweep
    SuiteOptions opts;
    opts.report_only_exceptions = true;
    opts.include_p_dividing_m = true;
    const auto rep = run_suite(PrimeRange(3, 40), {2, 3, 5, 8}, {}, opts);
    ASSERT_FALSE(rep.results.empty());
    for (const auto& r : rep.results) {
        if (r.status == Status::skipped || r.status == Status::divisibility_failure) continue;
        EXPECT_EQ(r.status == Status::pass, r.lhs == r.rhs) << r.check << " " << r.sub;
    }
}

TEST(Property, SuiteIsDeterministicAcrossJobs)
{
    SuiteOptions one, four;
    four.jobs = 4;
    const std::vector<std::string> ids = {"t1", "t2", "c1e1", "hp26", "williams", "closed_m8"};
    const auto a = run_suite(PrimeRange(5, 120), {2, 3, 4, 7, 12}, ids, one);
    const auto b = run_suite(PrimeRange(5, 120), {2, 3, 4, 7, 12}, ids, four);
    const auto c = run_suite(PrimeRange(5, 120), {2, 3, 4, 7, 12}, ids, four);
    EXPECT_EQ(a.results, b.results);
    EXPECT_EQ(b.results, c.results);
    EXPECT_EQ(a.summary, b.summary);
}

TEST(Property, FailFastIsDeterministicAcrossJobs)
{
    SuiteOptions one, four;
    one.fail_fast = four.fail_fast = true;
    four.jobs = 4;
    const auto a = run_suite(PrimeRange(5, 300), {2, 3, 4}, {"c1e1", "c2e2", "t1"}, one);
    const auto b = run_suite(PrimeRange(5, 300), {2, 3, 4}, {"c1e1", "c2e2", "t1"}, four);
    EXPECT_EQ(a.results, b.results);
}
