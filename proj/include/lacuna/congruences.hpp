#pragma once

/**
 * @file congruences.hpp
 * @brief Registry of executable congruence/identity verifiers and the sweep runner.
 *
 * Every check computes its two sides along separate code paths: the sum side
 * through the lacunary module, the closed side through padic_quotient,
 * sequences and closed_forms. A quotient whose claimed divisibility fails
 * is recorded as Status::divisibility_failure for that row only.
 *
 * Check scopes:
 *   per_prime    one cell per prime p
 *   per_modulus  one cell per (p, m); p | m is skipped unless requested
 *   global       exact identities with their own index bounds, one cell per run
 */

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "lacuna/closed_forms.hpp"
#include "lacuna/lacunary.hpp"
#include "lacuna/padic.hpp"
#include "lacuna/sequences.hpp"

namespace lacuna {

inline constexpr std::string_view kVersion = "0.1.0";

enum class Status { pass, fail, skipped, divisibility_failure };

inline std::string_view status_name(Status s)
{
    switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
    case Status::divisibility_failure: return "divisibility-failure";
    }
    return "?";
}

inline Status parse_status(std::string_view s)
{
    if (s == "pass") return Status::pass;
    if (s == "fail") return Status::fail;
    if (s == "skipped") return Status::skipped;
    if (s == "divisibility-failure") return Status::divisibility_failure;
    throw std::invalid_argument("unknown status '" + std::string(s) + "'");
}

enum class Scope { per_prime, per_modulus, global };

struct CheckResult {
    std::string check;
    std::optional<std::uint64_t> p;
    std::optional<long long> m;
    std::string sub;
    std::string modulus;  // decimal p^e, or "exact"
    std::string lhs;
    std::string rhs;
    Status status = Status::skipped;
    bool report_only = false;

    /// A failure that counts against the run.
    bool is_failure() const
    {
        return !report_only && (status == Status::fail || status == Status::divisibility_failure);
    }
    friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct CheckOptions {
    bool include_p_dividing_m = false;
    bool report_only_exceptions = false;
};

class CellEmitter;

struct CheckDef {
    std::string id;
    std::string description;
    std::string modulus;        // "p", "p^2", "p^3" or "exact"
    std::string applicability;  // human-readable predicate
    Scope scope = Scope::per_prime;
    bool report_only = false;   // evaluated and reported, never asserted
    bool gated = false;         // only runs with report_only_exceptions
    std::function<bool(std::uint64_t p, long long m)> applies;
    std::function<void(CellEmitter&)> evaluate;
};

/// Raised inside an evaluator when a claimed exact division by p fails.
struct DivisibilityFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Collects the result rows of one (check, p, m) cell.
class CellEmitter {
public:
    CellEmitter(const CheckDef& def, std::optional<std::uint64_t> p, std::optional<long long> m, bool report_only)
        : def_(def), p_(p), m_(m), report_only_(report_only || def.report_only)
    {}

    std::uint64_t p() const { return p_.value(); }
    long long pl() const { return static_cast<long long>(p_.value()); }
    long long m() const { return m_.value(); }

    /// lhs and rhs are evaluated separately; each returns a Residue mod p^e.
    template <class L, class R>
    void congruence(std::string sub, int e, L&& lhs, R&& rhs, bool report_only = false)
    {
        CheckResult r = base(std::move(sub), report_only);
        r.modulus = to_string(prime_power(p(), e));
        std::optional<Residue> a, b;
        try {
            a = lhs();
            r.lhs = to_string(a->value());
        } catch (const DivisibilityFailure& err) {
            r.lhs = err.what();
        }
        try {
            b = rhs();
            r.rhs = to_string(b->value());
        } catch (const DivisibilityFailure& err) {
            r.rhs = err.what();
        }
        if (!a || !b) r.status = Status::divisibility_failure;
        else r.status = (*a == *b) ? Status::pass : Status::fail;
        results_.push_back(std::move(r));
    }

    template <class L, class R>
    void exact(std::string sub, L&& lhs, R&& rhs, bool report_only = false)
    {
        CheckResult r = base(std::move(sub), report_only);
        r.modulus = "exact";
        const BigInt a = lhs();
        const BigInt b = rhs();
        r.lhs = to_string(a);
        r.rhs = to_string(b);
        r.status = a == b ? Status::pass : Status::fail;
        results_.push_back(std::move(r));
    }

    /// A closed form (lhs) against a direct summation (rhs).
    void closed(std::string sub, const ClosedValue& claimed, const BigInt& direct)
    {
        CheckResult r = base(std::move(sub), false);
        r.modulus = "exact";
        r.lhs = claimed.str();
        r.rhs = to_string(direct);
        if (!claimed.integral()) r.status = Status::divisibility_failure;
        else r.status = claimed.value() == direct ? Status::pass : Status::fail;
        results_.push_back(std::move(r));
    }

    void skipped(std::string sub)
    {
        CheckResult r = base(std::move(sub), false);
        r.status = Status::skipped;
        results_.push_back(std::move(r));
    }

    std::vector<CheckResult> take() { return std::move(results_); }

private:
    CheckResult base(std::string sub, bool report_only) const
    {
        CheckResult r;
        r.check = def_.id;
        r.p = p_;
        r.m = m_;
        r.sub = std::move(sub);
        r.report_only = report_only_ || report_only;
        return r;
    }

    const CheckDef& def_;
    std::optional<std::uint64_t> p_;
    std::optional<long long> m_;
    bool report_only_;
    std::vector<CheckResult> results_;
};

namespace detail {

/// Z/p^e with shorthand constructors for the closed sides of checks.
struct Ring {
    std::uint64_t p;
    int e;
    Residue zero;

    Ring(std::uint64_t p_, int e_) : p(p_), e(e_), zero(make_residue(0L, p_, e_)) {}

    Residue operator()(long v) const { return zero.with_value(v); }
    Residue of(const BigInt& v) const { return zero.with_value(v); }
    Residue pow(long base, long long exp) const { return pow_signed(zero.with_value(base), exp); }
    Residue seq(LucasKind kind, long long n) const { return seq_mod(kind, static_cast<std::uint64_t>(n), p, e); }
};

inline Residue need(std::optional<Residue> r, std::string_view what)
{
    if (!r) throw DivisibilityFailure("not divisible: " + std::string(what));
    return *std::move(r);
}

/// numer / (unit * p^t) where numer is known modulo p^(e+t).
inline Residue quot(const Residue& numer, long unit, std::string_view what, int t = 1)
{
    return need(padic_quotient(numer, unit, t), what);
}

inline Residue quot(const BigInt& numer, long unit, std::uint64_t p, int e, std::string_view what, int t = 1)
{
    return need(padic_quotient(numer, BigInt(unit), p, t, e), what);
}

inline Residue H(long long r, long long m, std::uint64_t p, int e)
{
    return harmonic_lacunary(ClassSpec(r, m, static_cast<long long>(p) - 1), p, e);
}

inline Residue S(long long r, long long m, std::uint64_t p, int e)
{
    return harmonic_double(ClassSpec(r, m, static_cast<long long>(p) - 1), p, e);
}

inline BigInt tstar(long long r, long long m, long long n) { return binomial_lacunary(ClassSpec(r, m, n), true); }

inline std::string kv(std::string_view k, long long v) { return std::string(k) + "=" + std::to_string(v); }

inline bool odd_prime(std::uint64_t p) { return p > 2; }

inline long long l5(const CellEmitter& c) { return legendre(5L, c.p()); }
inline long long l2(const CellEmitter& c) { return legendre(2L, c.p()); }

// ---------------------------------------------------------------------------
// Background congruences (Wolstenholme, Lehmer)

inline void eval_wolstenholme_sum(CellEmitter& c)
{
    const auto p = c.p();
    c.congruence(
        "", 2, [&] { return sum_terms(SumKind::reciprocal(), c.pl() - 1, std::nullopt, p, 2); },
        [&] { return make_residue(0L, p, 2); });
}

inline void eval_wolstenholme_binom(CellEmitter& c)
{
    const auto p = c.p();
    for (unsigned long M = 1; M <= 4; ++M)
        for (unsigned long N = 1; N <= M; ++N)
            c.congruence(
                "m=" + std::to_string(M) + ",n=" + std::to_string(N), 3,
                [&] { return make_residue(binomial(M * p, N * p), p, 3); },
                [&] { return make_residue(binomial(M, N), p, 3); });
}

inline void eval_lehmer_half(CellEmitter& c)
{
    const auto p = c.p();
    c.congruence(
        "", 2, [&] { return sum_terms(SumKind::reciprocal(), (c.pl() - 1) / 2, std::nullopt, p, 2); },
        [&] {
            Ring W(p, 3);
            const Residue x = W.pow(2, c.pl() - 1) - W(1);
            return -quot(W.pow(2, c.pl()) - W(2), 1, "2^p-2") + quot(x * x, 1, "(2^(p-1)-1)^2");
        });
}

inline void eval_lehmer2(CellEmitter& c)
{
    const auto p = c.p();
    c.congruence(
        "", 1, [&] { return H(c.pl(), 2, p, 1); },
        [&] {
            Ring W(p, 3);
            const Residue x = W.pow(2, c.pl() - 1) - W(1);
            // Fermat quotient extracted mod p^2 first, then reduced.
            const Residue fq = quot(x, 1, "2^(p-1)-1");
            return reduce_to(fq, 1) - reduce_to(quot(x * x, 2, "(2^(p-1)-1)^2"), 1);
        });
}

inline void eval_lehmer3(CellEmitter& c)
{
    const auto p = c.p();
    c.congruence(
        "", 2, [&] { return H(c.pl(), 3, p, 2); },
        [&] {
            Ring W(p, 3);
            const Residue x = W.pow(3, c.pl() - 1) - W(1);
            return quot(x, 2, "3^(p-1)-1") - quot(x * x, 4, "(3^(p-1)-1)^2");
        });
}

inline void eval_lehmer4(CellEmitter& c)
{
    const auto p = c.p();
    c.congruence(
        "", 2, [&] { return H(c.pl(), 4, p, 2); },
        [&] {
            Ring W(p, 3);
            const Residue x = W.pow(2, c.pl() - 1) - W(1);
            return quot(3 * x, 4, "3(2^(p-1)-1)") - quot(3 * (x * x), 8, "3(2^(p-1)-1)^2");
        });
}

inline void eval_lehmer6(CellEmitter& c)
{
    const auto p = c.p();
    c.congruence(
        "", 2, [&] { return H(c.pl(), 6, p, 2); },
        [&] {
            Ring W(p, 3);
            const Residue x = W.pow(2, c.pl() - 1) - W(1);
            const Residue y = W.pow(3, c.pl() - 1) - W(1);
            return quot(x, 3, "2^(p-1)-1") + quot(y, 4, "3^(p-1)-1") - quot(x * x, 6, "(2^(p-1)-1)^2") -
                   quot(y * y, 8, "(3^(p-1)-1)^2");
        });
}

// ---------------------------------------------------------------------------
// Lacunary harmonic and binomial congruences

inline void eval_firstorder(CellEmitter& c)
{
    const auto p = c.p();
    const long long m = c.m();
    std::vector<BigInt> ts;  // T*_{r,m}(p), closed side only
    for (long long r = 0; r < m; ++r)
        c.congruence(
            kv("r", r), 1, [&] { return H(r, m, p, 1); },
            [&] {
                if (ts.empty()) ts = binomial_lacunary_all(m, c.pl(), true);
                return quot(BigInt(-(ts[r] - delta(r, m, c.pl()))), 1, p, 1, "T*_{r,m}(p)-delta");
            });
}

inline void eval_t1(CellEmitter& c)
{
    const auto p = c.p();
    const long long m = c.m(), P = c.pl();
    c.congruence(
        "", 2, [&] { return H(P, m, p, 2); },
        [&] {
            const BigInt t1 = tstar(P, m, P), t2 = tstar(P, m, 2 * P);
            return quot(BigInt(-(2 * t1 + 2)), 1, p, 2, "2T*_{p,m}(p)+2") +
                   quot(BigInt(t2 + 2), 4, p, 2, "T*_{p,m}(2p)+2");
        });
}

inline void eval_t1_m2(CellEmitter& c)
{
    const auto p = c.p();
    c.congruence(
        "", 2, [&] { return H(c.pl(), 2, p, 2); },
        [&] {
            Ring W(p, 3);
            return quot(W.pow(2, c.pl()) - W(2), 1, "2^p-2") - quot(W.pow(2, 2 * c.pl() - 1) - W(2), 4, "2^(2p-1)-2");
        });
}

inline void eval_t2(CellEmitter& c)
{
    const auto p = c.p();
    const long long m = c.m(), P = c.pl();
    c.congruence(
        "", 2, [&] { return H(P, m, p, 2); },
        [&] {
            Residue sq = make_residue(0L, p, 1);
            for (long long r = 1; r <= m; ++r) {
                if (floor_mod(2 * r - P, m) == 0) continue;
                const Residue h = H(r, m, p, 1);
                sq += h * h;
            }
            const Residue half = inv_unit(make_residue(2L, p, 2));
            return quot(BigInt(-(tstar(P, m, 2 * P) + 2)), 4, p, 2, "T*_{p,m}(2p)+2") - scale_by_p(sq) * half;
        });
}

inline void eval_l1e1_general(CellEmitter& c)
{
    const auto p = c.p();
    const long long m = c.m(), P = c.pl();
    std::vector<BigInt> row;  // C(p,k) mod p^3, lhs side only
    for (long a = 1; a <= 6; ++a) {
        if (a % P == 0) {
            c.skipped("a=" + std::to_string(a) + ",p|a");
            continue;
        }
        for (long long r = 0; r < m; ++r) {
            const ClassSpec spec(r, m, P - 1);
            c.congruence(
                "a=" + std::to_string(a) + "," + kv("r", r), 2,
                [&] {
                    Ring W(p, 3);
                    if (row.empty())
                        for (const auto& v : binomial_row(P)) row.push_back(mod_floor(v, W.zero.modulus()));
                    Residue acc = W(0);
                    for (long long k = spec.cls.first_at_least(1); k <= P - 1; k += m)
                        acc += W.pow(-a, k) * W.of(row[k]);
                    return quot(acc, 1, "sum (-a)^k C(p,k)");
                },
                [&] {
                    Ring R2(p, 2), R1(p, 1);
                    return -weighted_harmonic(spec, R2(1), R2(a)) +
                           scale_by_p(weighted_harmonic_double(spec, R1(1), R1(a)));
                });
        }
    }
}

/// Sum over 1 <= k <= 2p-1, k != p, k = r (mod m) of (-a)^k C(2p,k), mod p^3.
inline Residue l1e2_lhs_numerator(std::uint64_t p, long long m, long long r, long a, const std::vector<BigInt>& row)
{
    Ring W(p, 3);
    const long long P = static_cast<long long>(p);
    const ResidueClass cls(r, m);
    Residue acc = W(0);
    for (long long k = cls.first_at_least(1); k <= 2 * P - 1; k += m)
        if (k != P) acc += W.pow(-a, k) * W.of(row[k]);
    return acc;
}

inline void eval_l1e2_a1(CellEmitter& c)
{
    const auto p = c.p();
    const long long m = c.m(), P = c.pl();
    std::vector<BigInt> row;
    for (long long r = 0; r < m; ++r)
        c.congruence(
            kv("r", r), 2,
            [&] {
                if (row.empty()) row = binomial_row(2 * P);
                return quot(l1e2_lhs_numerator(p, m, r, 1, row), 2, "sum (-1)^k C(2p,k)");
            },
            [&] {
                const Residue s = scale_by_p(S(r, m, p, 1) + S(2 * P - r, m, p, 1));
                return -H(r, m, p, 2) - H(2 * P - r, m, p, 2) + 2 * s;
            });
}

inline void eval_l1e2_general(CellEmitter& c)
{
    const auto p = c.p();
    const long long m = c.m(), P = c.pl();
    std::vector<BigInt> row;
    for (long a = 1; a <= 6; ++a) {
        if (a % P == 0) {
            c.skipped("a=" + std::to_string(a) + ",p|a");
            continue;
        }
        for (long long r = 0; r < m; ++r) {
            const ClassSpec spec(r, m, P - 1), mirror(2 * P - r, m, P - 1);
            for (const bool printed : {true, false}) {
                c.congruence(
                    "a=" + std::to_string(a) + "," + kv("r", r) + (printed ? ",reading=a^(2-k)" : ",reading=a^(2p-k)"),
                    2,
                    [&] {
                        if (row.empty()) row = binomial_row(2 * P);
                        return quot(l1e2_lhs_numerator(p, m, r, a, row), 2, "sum (-a)^k C(2p,k)");
                    },
                    [&] {
                        Ring R2(p, 2), R1(p, 1);
                        const Residue inv_a2 = inv_unit(R2(a)), inv_a1 = inv_unit(R1(a));
                        const Residue single = -weighted_harmonic(spec, R2(1), R2(a)) -
                                               weighted_harmonic(mirror, R2.pow(a, 2 * P), inv_a2);
                        const Residue mirror_scale = printed ? R1.pow(a, 2) : R1.pow(a, 2 * P);
                        const Residue dbl = weighted_harmonic_double(spec, R1(1), R1(a)) +
                                            weighted_harmonic_double(mirror, mirror_scale, inv_a1);
                        return single + 2 * scale_by_p(dbl);
                    },
                    true);
            }
        }
    }
}

inline void eval_c1e1(CellEmitter& c)
{
    const auto p = c.p();
    const long long m = c.m(), P = c.pl();
    std::vector<BigInt> ts;
    for (long long r = 0; r < m; ++r)
        c.congruence(
            kv("r", r), 2, [&] { return H(r, m, p, 2); },
            [&] {
                if (ts.empty()) ts = binomial_lacunary_all(m, P, true);
                return quot(BigInt(-(ts[r] - delta(r, m, P))), 1, p, 2, "T*_{r,m}(p)-delta") +
                       scale_by_p(S(r, m, p, 1));
            });
}

inline void eval_c1e2(CellEmitter& c)
{
    const auto p = c.p();
    const long long m = c.m(), P = c.pl();
    c.congruence(
        "", 2, [&] { return H(P, m, p, 2); },
        [&] { return quot(BigInt(-(tstar(P, m, P) + 1)), 1, p, 2, "T*_{p,m}(p)+1") + scale_by_p(S(P, m, p, 1)); });
}

inline void eval_c2e1(CellEmitter& c)
{
    const auto p = c.p();
    const long long m = c.m(), P = c.pl();
    c.congruence(
        "", 2, [&] { return H(P, m, p, 2); },
        [&] {
            return quot(BigInt(-(tstar(P, m, 2 * P) + 2)), 4, p, 2, "T*_{p,m}(2p)+2") + 2 * scale_by_p(S(P, m, p, 1));
        });
}

inline void eval_c2e2(CellEmitter& c)
{
    const auto p = c.p();
    const long long m = c.m(), P = c.pl();
    const long long r = P + m / 2;
    c.congruence(
        kv("r", floor_mod(r, m)), 2, [&] { return H(r, m, p, 2); },
        [&] {
            return quot(BigInt(-tstar(r, m, 2 * P)), 4, p, 2, "T*_{p+m/2,m}(2p)") + 2 * scale_by_p(S(r, m, p, 1));
        });
}

inline void eval_lemma2_identity(CellEmitter& c)
{
    for (long long n = 0; n <= 30; ++n)
        for (long long m = 2; m <= 10; ++m) {
            const auto all = binomial_lacunary_all(m, n, true);
            for (long long s = 0; s < m; ++s)
                c.exact(
                    kv("n", n) + "," + kv("m", m) + "," + kv("s", s),
                    [&] {
                        BigInt acc = 0;
                        for (long long r = 1; r <= m; ++r) acc += all[r % m] * all[(r + s) % m];
                        return acc;
                    },
                    [&] {
                        const BigInt t = tstar(n + s, m, 2 * n);
                        return (n % 2) ? BigInt(-t) : t;
                    });
        }
}

inline void eval_s_hsq(CellEmitter& c)
{
    const auto p = c.p();
    const long long m = c.m(), P = c.pl();
    for (const bool restricted : {false, true})
        c.congruence(
            restricted ? "restricted" : "full", 1, [&] { return S(P, m, p, 1); },
            [&] {
                Residue acc = make_residue(0L, p, 1);
                for (long long r = 1; r <= m; ++r) {
                    if (restricted && floor_mod(2 * r - P, m) == 0) continue;
                    const Residue h = H(r, m, p, 1);
                    acc += h * h;
                }
                return -(inv_unit(make_residue(4L, p, 1)) * acc);
            });
}

// ---------------------------------------------------------------------------
// Fibonacci quotient

inline void eval_t3(CellEmitter& c)
{
    const auto p = c.p();
    const long long P = c.pl();
    c.congruence(
        "", 2, [&] { return H(P, 5, p, 2); },
        [&] {
            Ring W(p, 3);
            const Residue x = W.pow(5, (P - 1) / 2) * W.seq(kFibonacci, P) - W(1);
            const Residue y = W.pow(5, P - 1) * W.seq(kFibonacci, 2 * P - l5(c)) - W(1);
            return quot(x, 1, "5^((p-1)/2)F_p-1") - quot(y, 4, "5^(p-1)F_{2p-(5/p)}-1");
        });
}

inline void eval_sunsun_F(CellEmitter& c)
{
    const auto p = c.p();
    const long long P = c.pl();
    auto A = [&] { return H(2 * P, 5, p, 1); };
    auto B = [&] { return -H(-P, 5, p, 1); };
    auto C = [&] {
        Ring W(p, 2);
        return quot(-W.seq(kFibonacci, P - l5(c)), 2, "F_{p-(5/p)}");
    };
    c.congruence("H_{2p,5}=-H_{-p,5}", 1, A, B);
    c.congruence("H_{2p,5}=-F/(2p)", 1, A, C);
    c.congruence("-H_{-p,5}=-F/(2p)", 1, B, C);
}

inline void eval_williams(CellEmitter& c)
{
    const auto p = c.p();
    const long long P = c.pl();
    // Literal bound k <= 4p/5 - 1.
    const long long bound = (4 * P - 5) / 5;
    c.congruence(
        kv("bound", bound), 1,
        [&] {
            const Residue s = sum_terms(SumKind::alternating(), bound, std::nullopt, p, 1);
            return s.with_value(2) * inv_unit(s.with_value(5)) * s;
        },
        [&] {
            Ring W(p, 2);
            return quot(W.seq(kFibonacci, P - l5(c)), 1, "F_{p-(5/p)}");
        });
}

inline void eval_remark5_alt(CellEmitter& c)
{
    const auto p = c.p();
    const long long P = c.pl(), eps = l5(c);
    c.congruence(
        "", 2, [&] { return harmonic_lacunary(ClassSpec(P, 5, P - 1), p, 2, true); },
        [&] {
            Ring W(p, 3);
            const Residue num = 5 * (W.pow(2, 4 * P - 1) - W.pow(2, 2 * P + 3)) + 12 * W.seq(kLucas, 4 * P) +
                                W.seq(kLucas, 4 * P - 4 * eps) - 112 * W.seq(kLucas, 2 * P) -
                                4 * W.seq(kLucas, 2 * P - 2 * eps) + W(378);
            return quot(num, 400, "alternate-form numerator");
        });
}

// ---------------------------------------------------------------------------
// Pell quotient

inline void eval_sun93_pell(CellEmitter& c)
{
    const auto p = c.p();
    const long long P = c.pl();
    auto A = [&] {
        const Residue s = sum_terms(SumKind::odd_alternating(), (P + 1) / 4, std::nullopt, p, 1);
        return ((P - 1) / 2) % 2 ? -s : s;
    };
    auto B = [&] {
        const Residue s = sum_terms(SumKind::power_of_two(), (P - 1) / 2, std::nullopt, p, 1);
        return -(inv_unit(s.with_value(4)) * s);
    };
    auto C = [&] {
        Ring W(p, 2);
        return quot(W.seq(kPell, P - l2(c)), 1, "P_{p-(2/p)}");
    };
    c.congruence("odd-alternating=-2^k/(4k)", 1, A, B);
    c.congruence("odd-alternating=P/p", 1, A, C);
    c.congruence("-2^k/(4k)=P/p", 1, B, C);
}

inline void eval_t4(CellEmitter& c)
{
    const auto p = c.p();
    const long long P = c.pl();
    c.congruence(
        "", 2, [&] { return H(P, 8, p, 2); },
        [&] {
            Ring W(p, 3);
            const Residue x = W.pow(2, 2 * P - 4) + W.pow(2, P - 3) + W.pow(2, (P - 3) / 2) * W.seq(kPell, P) - W(1);
            const Residue y = W.pow(2, 4 * P - 6) + W.pow(2, 2 * P - 4) +
                              W.pow(2, P - 2) * W.seq(kPell, 2 * P - l2(c)) - W(1);
            return quot(x, 1, "t4 first numerator") - quot(y, 4, "t4 second numerator");
        });
}

inline Residue hp26_lhs(std::uint64_t p)
{
    const long long P = static_cast<long long>(p);
    const Residue a = H(P + 2, 8, p, 1), b = H(P + 6, 8, p, 1);
    return a * a + b * b;
}

inline void eval_hp26(CellEmitter& c)
{
    const auto p = c.p();
    const long long P = c.pl(), eps = l2(c);
    c.congruence(
        "", 1, [&] { return hp26_lhs(p); },
        [&] {
            Ring W(p, 2);
            const Residue d = W.pow(2, (P - 1) / 2) - W(eps);
            const Residue pell = W.seq(kPell, P - eps);
            return quot(W.pow(2, P - 1) * d * d + pell * pell, 8, "hp26 merged numerator");
        });
}

/// Case-split form: sum over i of p^{-2} (2^{p-3} - (2/p) 2^{(p-5)/2} +- tail)^2.
inline void eval_hp26_cases(CellEmitter& c)
{
    const auto p = c.p();
    const long long P = c.pl(), eps = l2(c);
    c.congruence(
        P % 4 == 1 ? "p=1(4)" : "p=3(4)", 1, [&] { return hp26_lhs(p); },
        [&] {
            Ring W(p, 3);
            const long long h = (P - eps) / 2;
            const Residue head = W.pow(2, P - 3) - W(eps) * W.pow(2, (P - 5) / 2);
            const Residue tail = P % 4 == 1 ? W.pow(2, (P - 5) / 4) * W.seq(kPell, h)
                                            : W.pow(2, (P - 11) / 4) * W.seq(kPellLucas, h);
            Residue acc = make_residue(0L, p, 1);
            for (const Residue& x : {head + tail, head - tail}) acc += quot(x * x, 1, "hp26 case term", 2);
            return acc;
        });
}

/// Half-index table as stated, p mod 8 -> {P_(p-1)/2, P_(p+1)/2} or {Q_..., Q_...}.
inline std::pair<Residue, Residue> half_index_table(std::uint64_t p, bool lucas)
{
    Ring W(p, 1);
    const long long P = static_cast<long long>(p);
    auto sgn_pow = [&](long long sign_exp, long long two_exp) {
        const Residue v = W.pow(2, two_exp);
        return (sign_exp % 2 != 0) ? -v : v;
    };
    switch (P % 8) {
    case 1:
        if (!lucas) return {W(0), sgn_pow((P - 1) / 8, (P - 1) / 4)};
        return {sgn_pow((P - 1) / 8, (P + 3) / 4), sgn_pow((P - 1) / 8, (P + 3) / 4)};
    case 3:
        if (!lucas) return {sgn_pow((P - 3) / 8, (P - 3) / 4), sgn_pow((P + 5) / 8, (P - 3) / 4)};
        return {sgn_pow((P + 5) / 8, (P + 5) / 4), W(0)};
    case 5:
        if (!lucas) return {sgn_pow((P - 5) / 8, (P - 1) / 4), W(0)};
        return {sgn_pow((P + 3) / 8, (P + 3) / 4), sgn_pow((P - 5) / 8, (P + 3) / 4)};
    default:  // 7
        if (!lucas) return {sgn_pow((P + 1) / 8, (P - 3) / 4), sgn_pow((P + 1) / 8, (P - 3) / 4)};
        return {W(0), sgn_pow((P + 1) / 8, (P + 1) / 4)};
    }
}

inline void eval_half(CellEmitter& c, bool lucas)
{
    const auto p = c.p();
    const long long P = c.pl();
    const LucasKind kind = lucas ? kPellLucas : kPell;
    const std::string sym = lucas ? "Q" : "P";
    const std::string cls = ",p=" + std::to_string(P % 8) + "(8)";
    c.congruence(
        sym + "_{(p-1)/2}" + cls, 1, [&] { return seq_mod(kind, static_cast<std::uint64_t>((P - 1) / 2), p, 1); },
        [&] { return half_index_table(p, lucas).first; });
    c.congruence(
        sym + "_{(p+1)/2}" + cls, 1, [&] { return seq_mod(kind, static_cast<std::uint64_t>((P + 1) / 2), p, 1); },
        [&] { return half_index_table(p, lucas).second; });
}

inline void eval_fermat_split(CellEmitter& c)
{
    const auto p = c.p();
    const long long P = c.pl(), eps = l2(c);
    c.congruence(
        "", 1,
        [&] {
            Ring W(p, 2);
            return quot(W.pow(2, P - 1) - W(1), 1, "2^(p-1)-1");
        },
        [&] {
            Ring W(p, 2);
            return quot(2 * eps * (W.pow(2, (P - 1) / 2) - W(eps)), 1, "2^((p-1)/2)-(2/p)");
        });
}

inline void eval_binom2pp(CellEmitter& c)
{
    const auto p = c.p();
    c.congruence(
        "", 3, [&] { return make_residue(binomial(2 * p, p), p, 3); }, [&] { return make_residue(2L, p, 3); });
}

// ---------------------------------------------------------------------------
// Exact identities

inline void eval_closed(CellEmitter& c, bool mod10, int j_lo, int j_hi)
{
    for (long long n = 1; n <= 99; n += 2)
        for (int j = j_lo; j <= j_hi; ++j) {
            const auto id = static_cast<ClosedFormId>(
                (mod10 ? static_cast<int>(ClosedFormId::m10_class0) : static_cast<int>(ClosedFormId::m8_class0)) + j);
            const auto target = closed_target(id, n);
            c.closed(kv("n", n) + "," + kv("j", j) + "," + kv("class", target.spec.r()),
                     mod10 ? closed_T_m10(j, n) : closed_T_m8(j, n),
                     binomial_lacunary(target.spec, target.signed_terms));
        }
}

inline void eval_tstar_diag(CellEmitter& c)
{
    auto emit = [&](ClosedFormId id, long long n) {
        const auto target = closed_target(id, n);
        c.exact(
            std::string(closed_form_name(id)) + "," + kv("n", n), [&] { return closed_Tstar_diag(id, n); },
            [&] { return binomial_lacunary(target.spec, target.signed_terms); });
    };
    for (long long n = 1; n <= 99; n += 2) emit(ClosedFormId::diag_m5, n);
    for (long long n = 3; n <= 99; n += 2) emit(ClosedFormId::diag_m8, n);
    for (long long n = 3; n <= 99; n += 2) emit(ClosedFormId::diag_m8_shift4, n);
    for (auto q : primes_in_range({5, 499})) emit(ClosedFormId::diag_m3, static_cast<long long>(q));
    for (long long n = 1; n <= 60; ++n) emit(ClosedFormId::m2_class0, n);
    for (long long n = 1; n <= 60; ++n) emit(ClosedFormId::m2_class1, n);
}

inline void eval_seq_identities(CellEmitter& c)
{
    auto F = [](long long n) { return seq_exact(kFibonacci, static_cast<std::uint64_t>(n)); };
    auto P = [](long long n) { return seq_exact(kPell, static_cast<std::uint64_t>(n)); };
    auto Q = [](long long n) { return seq_exact(kPellLucas, static_cast<std::uint64_t>(n)); };
    for (long long n = 1; n <= 500; ++n)
        c.exact(
            "F_{2n-1}=F_n^2+F_{n-1}^2," + kv("n", n), [&] { return F(2 * n - 1); },
            [&] { return BigInt(F(n) * F(n) + F(n - 1) * F(n - 1)); });
    for (long long n = 0; n <= 500; ++n)
        c.exact(
            "Q_n=2P_{n+1}-2P_n," + kv("n", n), [&] { return Q(n); },
            [&] { return BigInt(2 * P(n + 1) - 2 * P(n)); });
    for (long long n = 0; n <= 500; ++n)
        c.exact(
            "Q_{n+1}=2P_{n+1}+2P_n," + kv("n", n), [&] { return Q(n + 1); },
            [&] { return BigInt(2 * P(n + 1) + 2 * P(n)); });
    for (auto q : primes_in_range({3, 500})) {
        const long long p = static_cast<long long>(q);
        const long long eps = legendre(2L, q);
        c.exact(
            "P_{p-(2/p)}^2+P_p^2=P_{2p-(2/p)}," + kv("p", p), [&] { return P(2 * p - eps); },
            [&] { return BigInt(P(p - eps) * P(p - eps) + P(p) * P(p)); });
        c.exact(
            "P_{h}Q_{h}=P_{p-(2/p)},h=(p-(2/p))/2," + kv("p", p), [&] { return P(p - eps); },
            [&] { return BigInt(P((p - eps) / 2) * Q((p - eps) / 2)); });
    }
}

// ---------------------------------------------------------------------------

inline std::vector<CheckDef> build_registry()
{
    auto always = [](std::uint64_t, long long) { return true; };
    auto p_ge = [](std::uint64_t lo) { return [lo](std::uint64_t p, long long) { return p >= lo; }; };
    auto not5 = [](std::uint64_t p, long long) { return p != 5; };

    using S = Scope;
    std::vector<CheckDef> r = {
        {"wolstenholme_sum", "sum_{k=1}^{p-1} 1/k = 0", "p^2", "p>=5", S::per_prime, false, false, p_ge(5),
         eval_wolstenholme_sum},
        {"wolstenholme_binom", "C(mp,np) = C(m,n), 1<=n<=m<=4", "p^3", "p>=5", S::per_prime, false, false, p_ge(5),
         eval_wolstenholme_binom},
        {"lehmer_half", "sum_{j<=(p-1)/2} 1/j = -(2^p-2)/p + (2^(p-1)-1)^2/p", "p^2", "p>=3", S::per_prime, false,
         false, always, eval_lehmer_half},
        {"lehmer2", "H_{p,2}(p-1) = (2^(p-1)-1)/p - (2^(p-1)-1)^2/(2p)", "p", "p>=5", S::per_prime, false, false,
         p_ge(5), eval_lehmer2},
        {"lehmer3", "H_{p,3}(p-1) = (3^(p-1)-1)/(2p) - (3^(p-1)-1)^2/(4p)", "p^2", "p>=5", S::per_prime, false, false,
         p_ge(5), eval_lehmer3},
        {"lehmer4", "H_{p,4}(p-1) = 3(2^(p-1)-1)/(4p) - 3(2^(p-1)-1)^2/(8p)", "p^2", "p>=5", S::per_prime, false,
         false, p_ge(5), eval_lehmer4},
        {"lehmer6",
         "H_{p,6}(p-1) = (2^(p-1)-1)/(3p) + (3^(p-1)-1)/(4p) - (2^(p-1)-1)^2/(6p) - (3^(p-1)-1)^2/(8p)", "p^2",
         "p>=5", S::per_prime, false, false, p_ge(5), eval_lehmer6},
        {"firstorder", "H_{r,m}(p-1) = -(T*_{r,m}(p) - delta_{r,m}(p))/p, all r", "p", "p!|m", S::per_modulus, false,
         false, always, eval_firstorder},
        {"t1", "H_{p,m}(p-1) = -(2T*_{p,m}(p)+2)/p + (T*_{p,m}(2p)+2)/(4p)", "p^2", "p>3, p!=m, p!|m",
         S::per_modulus, false, false, p_ge(5), eval_t1},
        {"t1_m2", "H_{p,2}(p-1) = (2^p-2)/p - (2^(2p-1)-2)/(4p)", "p^2", "p>=5", S::per_prime, false, false, p_ge(5),
         eval_t1_m2},
        {"t2", "H_{p,m}(p-1) = -(T*_{p,m}(2p)+2)/(4p) - (p/2) sum_{2r!=p} H_{r,m}(p-1)^2", "p^2", "p>3, p!|m",
         S::per_modulus, false, false, p_ge(5), eval_t2},
        {"l1e1_general", "(1/p) sum (-a)^k C(p,k) = -sum a^k/k + p sum a^k/(jk), a=1..6, all r", "p^2", "p!|a",
         S::per_modulus, false, false, always, eval_l1e1_general},
        {"l1e2_a1", "(1/2p) sum_{k!=p} (-1)^k C(2p,k) = -H_r - H_{2p-r} + 2p(S_r + S_{2p-r}), all r", "p^2", "p>3",
         S::per_modulus, false, false, p_ge(5), eval_l1e2_a1},
        {"l1e2_general", "l1e2 for a=1..6 under both readings a^(2-k), a^(2p-k) of the last term", "p^2",
         "p>3, p!|a; report-only", S::per_modulus, true, true, p_ge(5), eval_l1e2_general},
        {"c1e1", "H_{r,m}(p-1) = -(T*_{r,m}(p) - delta)/p + p S_{r,m}(p-1), all r", "p^2", "p>3, p!|m",
         S::per_modulus, false, false, p_ge(5), eval_c1e1},
        {"c1e2", "H_{p,m}(p-1) = -(T*_{p,m}(p)+1)/p + p S_{p,m}(p-1)", "p^2", "p>3, p!|m", S::per_modulus, false,
         false, p_ge(5), eval_c1e2},
        {"c2e1", "H_{p,m}(p-1) = -(T*_{p,m}(2p)+2)/(4p) + 2p S_{p,m}(p-1)", "p^2", "p>3, p!|m", S::per_modulus, false,
         false, p_ge(5), eval_c2e1},
        {"c2e2", "H_{p+m/2,m}(p-1) = -T*_{p+m/2,m}(2p)/(4p) + 2p S_{p+m/2,m}(p-1)", "p^2", "p>3, p!|m, m even",
         S::per_modulus, false, false, [](std::uint64_t p, long long m) { return p >= 5 && m % 2 == 0; }, eval_c2e2},
        {"lemma2_identity", "sum_{r=1}^m T*_{r,m}(n) T*_{r+s,m}(n) = (-1)^n T*_{n+s,m}(2n)", "exact",
         "n<=30, 2<=m<=10, 0<=s<m", S::global, false, false, always, eval_lemma2_identity},
        {"s_hsq", "S_{p,m}(p-1) = -1/4 sum_{r=1}^m H_{r,m}(p-1)^2 (full and 2r!=p restricted)", "p", "p>3, p!|m",
         S::per_modulus, false, false, p_ge(5), eval_s_hsq},
        {"t3", "H_{p,5}(p-1) = (5^((p-1)/2)F_p-1)/p - (5^(p-1)F_{2p-(5/p)}-1)/(4p)", "p^2", "p>5", S::per_prime, false,
         false, p_ge(7), eval_t3},
        {"sunsun_F", "H_{2p,5}(p-1) = -H_{-p,5}(p-1) = -F_{p-(5/p)}/(2p)", "p", "p!=2,5", S::per_prime, false, false,
         not5, eval_sunsun_F},
        {"williams", "(2/5) sum_{1<=k<=4p/5-1} (-1)^k/k = F_{p-(5/p)}/p", "p", "p!=2,5", S::per_prime, false, false,
         not5, eval_williams},
        {"remark5_alt",
         "sum_{k=p(5)} (-1)^k/k = [5(2^(4p-1)-2^(2p+3)) + 12L_{4p} + L_{4p-4(5/p)} - 112L_{2p} - 4L_{2p-2(5/p)} + "
         "378]/(400p)",
         "p^2", "p>5", S::per_prime, false, false, p_ge(7), eval_remark5_alt},
        {"sun93_pell",
         "(-1)^((p-1)/2) sum_{k<=(p+1)/4} (-1)^k/(2k-1) = -1/4 sum_{k<=(p-1)/2} 2^k/k = P_{p-(2/p)}/p", "p", "odd p",
         S::per_prime, false, false, always, eval_sun93_pell},
        {"closed_m10", "mod-10 closed forms for T_{r,10}(n), classes (n-1)/2..(n+11)/2, vs direct sum", "exact",
         "odd n<=99", S::global, false, false, always, [](CellEmitter& c) { eval_closed(c, true, 0, 3); }},
        {"closed_m10_fifth", "10 T_{(n+13)/2,10}(n) = 2^n - 2L_n vs direct sum", "exact", "odd n<=99; report-only",
         S::global, true, false, always, [](CellEmitter& c) { eval_closed(c, true, 4, 4); }},
        {"closed_m8", "mod-8 closed forms for T_{r,8}(n), classes (n-1)/2..(n+11)/2, vs direct sum", "exact",
         "odd n<=99", S::global, false, false, always, [](CellEmitter& c) { eval_closed(c, false, 0, 3); }},
        {"tstar_diag", "diagonal T* identities (diag-m5, diag-m8, diag-m8-shift4, diag-m3, m2) vs direct sum", "exact",
         "odd n<=99; primes 5..499; n<=60", S::global, false, false, always, eval_tstar_diag},
        {"t4",
         "H_{p,8}(p-1) = (2^(2p-4)+2^(p-3)+2^((p-3)/2)P_p-1)/p - (2^(4p-6)+2^(2p-4)+2^(p-2)P_{2p-(2/p)}-1)/(4p)",
         "p^2", "p>3", S::per_prime, false, false, p_ge(5), eval_t4},
        {"hp26", "H_{p+2,8}^2 + H_{p+6,8}^2 = [2^(p-1)(2^((p-1)/2)-(2/p))^2 + P_{p-(2/p)}^2]/(8p)", "p", "p>3",
         S::per_prime, false, false, p_ge(5), eval_hp26},
        {"hp26_cases", "H_{p+2,8}^2 + H_{p+6,8}^2 = sum_i p^-2 (2^(p-3) - (2/p)2^((p-5)/2) +- tail)^2, p mod 4 cases",
         "p", "p>3", S::per_prime, false, false, p_ge(5), eval_hp26_cases},
        {"pell_half", "P_{(p-1)/2}, P_{(p+1)/2} mod p by p mod 8", "p", "p>3", S::per_prime, false, false, p_ge(5),
         [](CellEmitter& c) { eval_half(c, false); }},
        {"pelllucas_half", "Q_{(p-1)/2}, Q_{(p+1)/2} mod p by p mod 8", "p", "p>3", S::per_prime, false, false,
         p_ge(5), [](CellEmitter& c) { eval_half(c, true); }},
        {"fermat_split", "(2^(p-1)-1)/p = 2(2/p)(2^((p-1)/2)-(2/p))/p", "p", "p>3", S::per_prime, false, false, p_ge(5),
         eval_fermat_split},
        {"binom2pp", "C(2p,p) = 2", "p^3", "p>=5", S::per_prime, false, false, p_ge(5), eval_binom2pp},
        {"seq_identities", "F_{2n-1}=F_n^2+F_{n-1}^2; Q_n=2P_{n+1}-2P_n; Q_{n+1}=2P_{n+1}+2P_n; "
                           "P_{p-(2/p)}^2+P_p^2=P_{2p-(2/p)}; P_hQ_h=P_{p-(2/p)}",
         "exact", "n<=500; odd primes p<=500", S::global, false, false, always, eval_seq_identities},
    };
    std::sort(r.begin(), r.end(), [](const CheckDef& a, const CheckDef& b) { return a.id < b.id; });
    return r;
}

} // namespace detail

/// All registered checks, ordered by id.
inline const std::vector<CheckDef>& list_checks()
{
    static const std::vector<CheckDef> registry = detail::build_registry();
    return registry;
}

inline const CheckDef& find_check(std::string_view id)
{
    for (const auto& def : list_checks())
        if (def.id == id) return def;
    throw std::invalid_argument("unknown check id '" + std::string(id) + "'");
}

/// Evaluate one cell. p is ignored for global checks; m is required for per-modulus checks.
inline std::vector<CheckResult> run_check(const CheckDef& def, std::optional<std::uint64_t> p,
                                          std::optional<long long> m = std::nullopt, const CheckOptions& opts = {})
{
    if (def.scope == Scope::global) {
        p.reset();
        m.reset();
    } else {
        if (!p) throw std::invalid_argument("check '" + def.id + "' needs a prime");
        if (def.scope == Scope::per_prime) m.reset();
        else if (!m) throw std::invalid_argument("check '" + def.id + "' needs a modulus m");
        if (m && *m < 2) throw std::invalid_argument("modulus m must be >= 2");
        if (!is_prime(*p)) throw std::invalid_argument(std::to_string(*p) + " is not prime");
    }

    bool report_only = false;
    CellEmitter emit(def, p, m, false);
    auto skip = [&](std::string why) {
        CellEmitter s(def, p, m, def.report_only);
        s.skipped(std::move(why));
        return s.take();
    };
    if (def.gated && !opts.report_only_exceptions) return skip("gated: needs report-only exceptions");
    if (p) {
        if (!detail::odd_prime(*p) || !def.applies(*p, m.value_or(0))) return skip("not applicable");
        if (m && *m % static_cast<long long>(*p) == 0) {
            if (!opts.include_p_dividing_m) return skip("p|m");
            report_only = true;
        }
    }
    CellEmitter cell(def, p, m, report_only);
    def.evaluate(cell);
    return cell.take();
}

inline std::vector<CheckResult> run_check(std::string_view id, std::optional<std::uint64_t> p,
                                          std::optional<long long> m = std::nullopt, const CheckOptions& opts = {})
{
    return run_check(find_check(id), p, m, opts);
}

struct Summary {
    std::size_t pass = 0;
    std::size_t fail = 0;
    std::size_t skip = 0;
    std::size_t divfail = 0;
    std::size_t report_only = 0;

    friend bool operator==(const Summary&, const Summary&) = default;
};

inline Summary summarize(const std::vector<CheckResult>& results)
{
    Summary s;
    for (const auto& r : results) {
        if (r.report_only) {
            ++s.report_only;
            continue;
        }
        switch (r.status) {
        case Status::pass: ++s.pass; break;
        case Status::fail: ++s.fail; break;
        case Status::skipped: ++s.skip; break;
        case Status::divisibility_failure: ++s.divfail; break;
        }
    }
    return s;
}

struct SuiteOptions : CheckOptions {
    bool fail_fast = false;
    unsigned jobs = 1;
};

struct Report {
    std::uint64_t pmin = 0;
    std::uint64_t pmax = 0;
    std::vector<long long> moduli;
    std::vector<std::string> checks;
    std::string version{kVersion};
    Summary summary;
    std::vector<CheckResult> results;

    bool failed() const { return summary.fail + summary.divfail > 0; }
};

/// Checks selected by id list; empty means every non-gated check (plus gated
/// ones when report-only exceptions are enabled).
inline std::vector<const CheckDef*> select_checks(const std::vector<std::string>& ids, const CheckOptions& opts)
{
    std::vector<const CheckDef*> out;
    if (ids.empty()) {
        for (const auto& def : list_checks())
            if (!def.gated || opts.report_only_exceptions) out.push_back(&def);
        return out;
    }
    for (const auto& id : ids) {
        const CheckDef* def = &find_check(id);
        if (std::find(out.begin(), out.end(), def) == out.end()) out.push_back(def);
    }
    std::sort(out.begin(), out.end(), [](const CheckDef* a, const CheckDef* b) { return a->id < b->id; });
    return out;
}

/// Sweep the selected checks over the prime range and moduli.
///
/// Results are assembled in (check id, p, m) cell order, sub-parameters in
/// evaluation order, so the report is identical for any number of jobs. An
/// empty prime list yields an empty report.
inline Report run_suite(const PrimeRange& range, std::vector<long long> moduli, const std::vector<std::string>& ids,
                        const SuiteOptions& opts = {})
{
    Report rep;
    rep.pmin = range.lo;
    rep.pmax = range.hi;
    std::sort(moduli.begin(), moduli.end());
    moduli.erase(std::unique(moduli.begin(), moduli.end()), moduli.end());
    for (long long m : moduli)
        if (m < 2) throw std::invalid_argument("modulus m must be >= 2, got " + std::to_string(m));
    rep.moduli = moduli;

    const auto selected = select_checks(ids, opts);
    for (const auto* def : selected) rep.checks.push_back(def->id);

    const auto primes = primes_in_range(range);
    if (primes.empty()) return rep;

    struct Cell {
        const CheckDef* def;
        std::optional<std::uint64_t> p;
        std::optional<long long> m;
    };
    std::vector<Cell> cells;
    for (const auto* def : selected) {
        switch (def->scope) {
        case Scope::global: cells.push_back({def, std::nullopt, std::nullopt}); break;
        case Scope::per_prime:
            for (auto p : primes) cells.push_back({def, p, std::nullopt});
            break;
        case Scope::per_modulus:
            for (auto p : primes)
                for (auto m : moduli) cells.push_back({def, p, m});
            break;
        }
    }

    std::vector<std::vector<CheckResult>> out(cells.size());
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> first_failure{cells.size()};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= cells.size()) return;
            if (opts.fail_fast && i > first_failure.load()) continue;
            out[i] = run_check(*cells[i].def, cells[i].p, cells[i].m, opts);
            if (opts.fail_fast && std::any_of(out[i].begin(), out[i].end(), [](const auto& r) { return r.is_failure(); })) {
                std::size_t cur = first_failure.load();
                while (i < cur && !first_failure.compare_exchange_weak(cur, i)) {}
            }
        }
    };
    const unsigned jobs = std::max(1U, opts.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    const std::size_t stop = opts.fail_fast ? std::min(first_failure.load() + 1, cells.size()) : cells.size();
    for (std::size_t i = 0; i < stop; ++i)
        for (auto& r : out[i]) rep.results.push_back(std::move(r));
    rep.summary = summarize(rep.results);
    return rep;
}

} // namespace lacuna
