#pragma once

/**
 * @file lacunary.hpp
 * @brief Sums restricted to a residue class k = r (mod m).
 *
 *   H_{r,m}(n)  = sum_{1<=k<=n, k=r} 1/k
 *   S_{r,m}(n)  = sum_{2<=k<=n, k=r} (1/k) sum_{j<k} 1/j
 *   T_{r,m}(n)  = sum_{0<=k<=n, k=r} C(n,k)
 *   T*_{r,m}(n) = sum_{0<=k<=n, k=r} (-1)^k C(n,k)
 *
 * H and S are evaluated directly in Z/p^e (every k <= p-1 is a unit);
 * T and T* are exact integers. harmonic_exact is a small-n rational oracle.
 */

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lacuna/padic.hpp"

namespace lacuna {

inline long long floor_mod(long long a, long long m)
{
    long long r = a % m;
    return r < 0 ? r + m : r;
}

/// The residue class r (mod m), with r reduced into [0, m).
struct ResidueClass {
    long long r = 0;
    long long m = 2;

    ResidueClass() = default;
    ResidueClass(long long r_, long long m_) : m(m_)
    {
        if (m_ < 2) throw std::invalid_argument("class modulus must be >= 2, got " + std::to_string(m_));
        r = floor_mod(r_, m_);
    }

    bool contains(long long k) const { return floor_mod(k, m) == r; }
    /// Smallest member of the class that is >= lo.
    long long first_at_least(long long lo) const { return lo + floor_mod(r - lo, m); }
};

struct ClassSpec {
    ResidueClass cls;
    long long n = 0;

    ClassSpec() = default;
    ClassSpec(long long r, long long m, long long n_) : cls(r, m), n(n_)
    {
        if (n_ < 0) throw std::invalid_argument("summation bound must be >= 0");
    }
    long long r() const { return cls.r; }
    long long m() const { return cls.m; }
};

inline constexpr long long kHarmonicExactCap = 200;
inline constexpr long long kBinomialCap = 20000;

/// +1 if r = 0 (mod m), -1 if r = p (mod m), 0 otherwise.
inline int delta(long long r, long long m, long long p)
{
    if (m < 2) throw std::invalid_argument("class modulus must be >= 2");
    if (floor_mod(r, m) == 0) return 1;
    if (floor_mod(r - p, m) == 0) return -1;
    return 0;
}

namespace detail {

inline void require_unit_bound(long long n, std::uint64_t p)
{
    if (n >= static_cast<long long>(p))
        throw std::domain_error("non-unit denominator: bound " + std::to_string(n) + " reaches p = " +
                                std::to_string(p));
}

inline BigInt inverse_mod(long long k, const BigInt& m)
{
    BigInt r(static_cast<long>(k));
    mpz_invert(r.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
    return r;
}

} // namespace detail

/// H_{r,m}(n) in Z/p^e, or sum (-1)^k/k over the class when signed_terms is set.
inline Residue harmonic_lacunary(const ClassSpec& spec, std::uint64_t p, int e, bool signed_terms = false)
{
    detail::require_unit_bound(spec.n, p);
    Residue zero = make_residue(0L, p, e);
    const BigInt& mod = zero.modulus();
    BigInt acc = 0;
    for (long long k = spec.cls.first_at_least(1); k <= spec.n; k += spec.m()) {
        BigInt inv = detail::inverse_mod(k, mod);
        if (signed_terms && (k & 1)) acc -= inv;
        else acc += inv;
    }
    return zero.with_value(acc);
}

/// S_{r,m}(n) in Z/p^e; the inner harmonic prefix is carried as a running sum.
inline Residue harmonic_double(const ClassSpec& spec, std::uint64_t p, int e)
{
    detail::require_unit_bound(spec.n, p);
    Residue zero = make_residue(0L, p, e);
    const BigInt& mod = zero.modulus();
    BigInt prefix = 0, acc = 0;
    for (long long k = 1; k <= spec.n; ++k) {
        BigInt inv = detail::inverse_mod(k, mod);
        if (k >= 2 && spec.cls.contains(k)) acc = mod_floor(acc + inv * prefix, mod);
        prefix += inv;
        if (prefix >= mod) prefix -= mod;
    }
    return zero.with_value(acc);
}

/// sum over the class of scale * ratio^k / k, 1 <= k <= n. Generalises a^k/k.
inline Residue weighted_harmonic(const ClassSpec& spec, const Residue& scale, const Residue& ratio)
{
    detail::require_unit_bound(spec.n, scale.prime());
    Residue acc = scale.with_value(0);
    for (long long k = spec.cls.first_at_least(1); k <= spec.n; k += spec.m())
        acc += pow_residue(ratio, static_cast<std::uint64_t>(k)) * inv_unit(scale.with_value(BigInt(static_cast<long>(k))));
    return scale * acc;
}

/// sum over the class of scale * ratio^k / k * H_{k-1}, 2 <= k <= n.
/// At scale = ratio = 1 this is S_{r,m}(n).
inline Residue weighted_harmonic_double(const ClassSpec& spec, const Residue& scale, const Residue& ratio)
{
    detail::require_unit_bound(spec.n, scale.prime());
    const BigInt& mod = scale.modulus();
    BigInt prefix = 0, acc = 0;
    Residue power = scale.with_value(1);
    for (long long k = 1; k <= spec.n; ++k) {
        power *= ratio;
        BigInt inv = detail::inverse_mod(k, mod);
        if (k >= 2 && spec.cls.contains(k)) acc = mod_floor(acc + power.value() * inv * prefix, mod);
        prefix = mod_floor(prefix + inv, mod);
    }
    return scale * scale.with_value(acc);
}

/// Exact H_{r,m}(n) as a reduced fraction, n <= 200.
inline Rational harmonic_exact(const ClassSpec& spec)
{
    if (spec.n > kHarmonicExactCap)
        throw std::out_of_range("harmonic_exact bound " + std::to_string(spec.n) + " exceeds cap " +
                                std::to_string(kHarmonicExactCap));
    Rational acc = 0;
    for (long long k = spec.cls.first_at_least(1); k <= spec.n; k += spec.m()) acc += Rational(BigInt(1L), BigInt(static_cast<long>(k)));
    acc.canonicalize();
    return acc;
}

/// Row C(n, 0..n), generated with C(n,k+1) = C(n,k) (n-k) / (k+1).
inline std::vector<BigInt> binomial_row(long long n)
{
    if (n < 0) throw std::invalid_argument("binomial row of negative n");
    if (n > kBinomialCap)
        throw std::out_of_range("binomial row " + std::to_string(n) + " exceeds cap " + std::to_string(kBinomialCap));
    std::vector<BigInt> row(static_cast<std::size_t>(n) + 1);
    row[0] = 1;
    for (long long k = 0; k < n; ++k) {
        BigInt next = row[k] * static_cast<long>(n - k);
        mpz_divexact_ui(next.get_mpz_t(), next.get_mpz_t(), static_cast<unsigned long>(k + 1));
        row[k + 1] = std::move(next);
    }
    return row;
}

inline BigInt binomial(unsigned long n, unsigned long k)
{
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

/// T_{r,m}(n) for every r in [0, m) from a single binomial row.
inline std::vector<BigInt> binomial_lacunary_all(long long m, long long n, bool signed_terms)
{
    if (m < 2) throw std::invalid_argument("class modulus must be >= 2");
    const auto row = binomial_row(n);
    std::vector<BigInt> out(static_cast<std::size_t>(m), BigInt(0));
    for (long long k = 0; k <= n; ++k) {
        auto& slot = out[static_cast<std::size_t>(k % m)];
        if (signed_terms && (k & 1)) slot -= row[k];
        else slot += row[k];
    }
    return out;
}

/// T_{r,m}(n), or T*_{r,m}(n) when signed_terms is set. Exact.
inline BigInt binomial_lacunary(const ClassSpec& spec, bool signed_terms = false)
{
    if (spec.n > kBinomialCap)
        throw std::out_of_range("binomial bound " + std::to_string(spec.n) + " exceeds cap " +
                                std::to_string(kBinomialCap));
    BigInt acc = 0;
    BigInt c = 1;
    const long long n = spec.n;
    for (long long k = 0; k <= n; ++k) {
        if (spec.cls.contains(k)) {
            if (signed_terms && (k & 1)) acc -= c;
            else acc += c;
        }
        c *= static_cast<long>(n - k);
        mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(k + 1));
    }
    return acc;
}

struct SumKind {
    enum class Term {
        reciprocal,       // 1/k
        alternating,      // (-1)^k/k
        geometric,        // a^k/k
        odd_alternating,  // (-1)^k/(2k-1)
        power_of_two,     // 2^k/k
    };
    Term term = Term::reciprocal;
    std::optional<long> a;

    static SumKind reciprocal() { return {Term::reciprocal, std::nullopt}; }
    static SumKind alternating() { return {Term::alternating, std::nullopt}; }
    static SumKind geometric(long base) { return {Term::geometric, base}; }
    static SumKind odd_alternating() { return {Term::odd_alternating, std::nullopt}; }
    static SumKind power_of_two() { return {Term::power_of_two, std::nullopt}; }
};

/// Partial sum over 1 <= k <= bound (optionally restricted to a class) in Z/p^e.
inline Residue sum_terms(const SumKind& kind, long long bound, const std::optional<ResidueClass>& filter,
                         std::uint64_t p, int e)
{
    if ((kind.term == SumKind::Term::geometric) != kind.a.has_value())
        throw std::invalid_argument("geometric sums need exactly one parameter a");
    Residue zero = make_residue(0L, p, e);
    const BigInt& mod = zero.modulus();
    const long long step = filter ? filter->m : 1;
    const long long start = filter ? filter->first_at_least(1) : 1;
    const long long pp = static_cast<long long>(p);
    BigInt acc = 0;
    for (long long k = start; k <= bound; k += step) {
        const long long denom = kind.term == SumKind::Term::odd_alternating ? 2 * k - 1 : k;
        if (denom % pp == 0)
            throw std::domain_error("non-unit denominator " + std::to_string(denom) + " mod " + std::to_string(p));
        BigInt term = detail::inverse_mod(denom, mod);
        switch (kind.term) {
        case SumKind::Term::reciprocal: break;
        case SumKind::Term::alternating:
        case SumKind::Term::odd_alternating:
            if (k & 1) term = -term;
            break;
        case SumKind::Term::geometric:
            term *= pow_residue(zero.with_value(*kind.a), static_cast<std::uint64_t>(k)).value();
            break;
        case SumKind::Term::power_of_two:
            term *= pow_residue(zero.with_value(2), static_cast<std::uint64_t>(k)).value();
            break;
        }
        acc = mod_floor(acc + term, mod);
    }
    return zero.with_value(acc);
}

} // namespace lacuna
