#pragma once

/**
 * @file padic.hpp
 * @brief Truncated p-adic arithmetic in Z/p^e, Legendre symbols and primes.
 *
 * Every "mod p^k" statement handled by lacuna is evaluated with Residue.
 * A Residue carries its own (p, e); arithmetic between residues of
 * different rings throws instead of coercing.
 *
 * Exact division by p is the one operation whose failure is meaningful
 * (it falsifies a divisibility claim), so exact_div_by_p and
 * padic_quotient return an empty optional rather than throwing.
 */

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace lacuna {

using BigInt = mpz_class;
using Rational = mpq_class;

inline constexpr int kMaxExponent = 6;

inline std::string to_string(const BigInt& v) { return v.get_str(10); }

/// Deterministic trial division; the primes used here are small.
inline bool is_prime(std::uint64_t n)
{
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (std::uint64_t d = 5; d * d <= n; d += 6)
        if (n % d == 0 || n % (d + 2) == 0) return false;
    return true;
}

inline BigInt prime_power(std::uint64_t p, int e)
{
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e));
    return r;
}

/// Canonical representative of v modulo m, in [0, m).
inline BigInt mod_floor(const BigInt& v, const BigInt& m)
{
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    return r;
}

class Residue;
Residue make_residue(const BigInt& v, std::uint64_t p, int e);

/// An element of Z/p^e for an odd prime p. Immutable.
class Residue {
public:
    std::uint64_t prime() const { return p_; }
    int exponent() const { return e_; }
    const BigInt& value() const { return v_; }
    const BigInt& modulus() const { return mod_; }

    bool is_zero() const { return v_ == 0; }
    bool is_unit() const { return mpz_divisible_ui_p(v_.get_mpz_t(), static_cast<unsigned long>(p_)) == 0; }

    /// Same ring, zero / one / arbitrary value.
    Residue with_value(const BigInt& v) const { return Residue(p_, e_, mod_, mod_floor(v, mod_)); }

    friend Residue operator+(const Residue& a, const Residue& b)
    {
        a.require_same_ring(b);
        BigInt s = a.v_ + b.v_;
        if (s >= a.mod_) s -= a.mod_;
        return Residue(a.p_, a.e_, a.mod_, std::move(s));
    }
    friend Residue operator-(const Residue& a, const Residue& b)
    {
        a.require_same_ring(b);
        BigInt s = a.v_ - b.v_;
        if (s < 0) s += a.mod_;
        return Residue(a.p_, a.e_, a.mod_, std::move(s));
    }
    friend Residue operator*(const Residue& a, const Residue& b)
    {
        a.require_same_ring(b);
        BigInt s = a.v_ * b.v_;
        mpz_mod(s.get_mpz_t(), s.get_mpz_t(), a.mod_.get_mpz_t());
        return Residue(a.p_, a.e_, a.mod_, std::move(s));
    }
    Residue operator-() const
    {
        if (v_ == 0) return *this;
        return Residue(p_, e_, mod_, mod_ - v_);
    }
    Residue& operator+=(const Residue& o) { return *this = *this + o; }
    Residue& operator-=(const Residue& o) { return *this = *this - o; }
    Residue& operator*=(const Residue& o) { return *this = *this * o; }

    /// Scalar multiplication by an ordinary integer.
    friend Residue operator*(long k, const Residue& a) { return a.with_value(a.v_ * k); }

    friend bool operator==(const Residue& a, const Residue& b)
    {
        return a.p_ == b.p_ && a.e_ == b.e_ && a.v_ == b.v_;
    }

    /// "value (mod p^e)"
    std::string str() const { return to_string(v_) + " (mod " + to_string(mod_) + ")"; }

private:
    Residue(std::uint64_t p, int e, BigInt mod, BigInt v)
        : p_(p), e_(e), mod_(std::move(mod)), v_(std::move(v))
    {}

    void require_same_ring(const Residue& o) const
    {
        if (p_ != o.p_ || e_ != o.e_)
            throw std::invalid_argument("residue ring mismatch: " + std::to_string(p_) + "^" + std::to_string(e_) +
                                        " vs " + std::to_string(o.p_) + "^" + std::to_string(o.e_));
    }

    std::uint64_t p_;
    int e_;
    BigInt mod_;
    BigInt v_;

    friend Residue make_residue(const BigInt& v, std::uint64_t p, int e);
};

inline void validate_ring(std::uint64_t p, int e)
{
    if (p == 2 || !is_prime(p))
        throw std::invalid_argument("modulus base " + std::to_string(p) + " is not an odd prime");
    if (e < 1 || e > kMaxExponent)
        throw std::out_of_range("exponent " + std::to_string(e) + " outside [1, " + std::to_string(kMaxExponent) + "]");
}

/// Reduce v into [0, p^e). Negative inputs wrap.
inline Residue make_residue(const BigInt& v, std::uint64_t p, int e)
{
    validate_ring(p, e);
    BigInt m = prime_power(p, e);
    BigInt r = mod_floor(v, m);
    return Residue(p, e, std::move(m), std::move(r));
}

inline Residue make_residue(long v, std::uint64_t p, int e) { return make_residue(BigInt(v), p, e); }

/// Multiplicative inverse of a unit; throws std::domain_error on non-units.
inline Residue inv_unit(const Residue& x)
{
    if (!x.is_unit())
        throw std::domain_error("non-unit: " + x.str() + " has no inverse");
    BigInt r;
    mpz_invert(r.get_mpz_t(), x.value().get_mpz_t(), x.modulus().get_mpz_t());
    return x.with_value(r);
}

/// Square-and-multiply; exp = 0 gives 1.
inline Residue pow_residue(const Residue& base, std::uint64_t exp)
{
    BigInt r;
    BigInt ex(static_cast<unsigned long>(exp));
    mpz_powm(r.get_mpz_t(), base.value().get_mpz_t(), ex.get_mpz_t(), base.modulus().get_mpz_t());
    return base.with_value(r);
}

/// base^exp for a possibly negative exponent; base must be a unit when exp < 0.
inline Residue pow_signed(const Residue& base, long long exp)
{
    if (exp >= 0) return pow_residue(base, static_cast<std::uint64_t>(exp));
    return pow_residue(inv_unit(base), static_cast<std::uint64_t>(-exp));
}

/// The same quantity viewed in Z/p^f for f <= e.
inline Residue reduce_to(const Residue& x, int f)
{
    if (f > x.exponent())
        throw std::invalid_argument("cannot raise precision from " + std::to_string(x.exponent()) + " to " +
                                    std::to_string(f));
    return make_residue(x.value(), x.prime(), f);
}

/// p^t * lift(x) as an element of Z/p^(e+t).
inline Residue scale_by_p(const Residue& x, int t = 1)
{
    return make_residue(x.value() * prime_power(x.prime(), t), x.prime(), x.exponent() + t);
}

/// lift(x) / p^t in Z/p^(e-t); empty when p^t does not divide lift(x).
inline std::optional<Residue> exact_div_by_p(const Residue& x, int t)
{
    if (t < 1 || t >= x.exponent())
        throw std::out_of_range("division order " + std::to_string(t) + " must satisfy 1 <= t < " +
                                std::to_string(x.exponent()));
    const BigInt pt = prime_power(x.prime(), t);
    if (mpz_divisible_p(x.value().get_mpz_t(), pt.get_mpz_t()) == 0) return std::nullopt;
    BigInt q;
    mpz_divexact(q.get_mpz_t(), x.value().get_mpz_t(), pt.get_mpz_t());
    return make_residue(q, x.prime(), x.exponent() - t);
}

/// (numer / p^t) * unit_divisor^{-1} in Z/p^e.
///
/// numer is reduced modulo p^(e+t) first, which loses nothing. An empty
/// result means p^t does not divide numer.
inline std::optional<Residue> padic_quotient(const BigInt& numer, const BigInt& unit_divisor, std::uint64_t p, int t,
                                             int e)
{
    validate_ring(p, e);
    if (t < 0) throw std::out_of_range("negative division order");
    if (mpz_divisible_ui_p(unit_divisor.get_mpz_t(), static_cast<unsigned long>(p)) != 0)
        throw std::invalid_argument("unit shares factor p: " + to_string(unit_divisor) + " divisible by " +
                                    std::to_string(p));
    const BigInt wide = prime_power(p, e + t);
    const BigInt reduced = mod_floor(numer, wide);
    const BigInt pt = prime_power(p, t);
    if (mpz_divisible_p(reduced.get_mpz_t(), pt.get_mpz_t()) == 0) return std::nullopt;
    BigInt q;
    mpz_divexact(q.get_mpz_t(), reduced.get_mpz_t(), pt.get_mpz_t());
    Residue r = make_residue(q, p, e);
    return r * inv_unit(r.with_value(unit_divisor));
}

inline std::optional<Residue> padic_quotient(const BigInt& numer, long unit_divisor, std::uint64_t p, int t, int e)
{
    return padic_quotient(numer, BigInt(unit_divisor), p, t, e);
}

/// Residue-valued numerator known modulo p^(e+t); result lives in Z/p^e.
inline std::optional<Residue> padic_quotient(const Residue& numer, long unit_divisor, int t)
{
    if (numer.exponent() <= t)
        throw std::out_of_range("numerator precision " + std::to_string(numer.exponent()) +
                                " too small for division order " + std::to_string(t));
    return padic_quotient(numer.value(), BigInt(unit_divisor), numer.prime(), t, numer.exponent() - t);
}

/// Legendre symbol (a/p) via Euler's criterion.
inline int legendre(const BigInt& a, std::uint64_t p)
{
    if (p == 2 || !is_prime(p)) throw std::invalid_argument("legendre symbol needs an odd prime, got " + std::to_string(p));
    const BigInt pp(static_cast<unsigned long>(p));
    BigInt r = mod_floor(a, pp);
    if (r == 0) return 0;
    mpz_powm_ui(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>((p - 1) / 2), pp.get_mpz_t());
    return r == 1 ? 1 : -1;
}

inline int legendre(long a, std::uint64_t p) { return legendre(BigInt(a), p); }

struct PrimeRange {
    std::uint64_t lo = 5;
    std::uint64_t hi = 100;
    std::set<std::uint64_t> excluded;

    PrimeRange() = default;
    PrimeRange(std::uint64_t lo_, std::uint64_t hi_, std::set<std::uint64_t> excluded_ = {})
        : lo(lo_), hi(hi_), excluded(std::move(excluded_))
    {
        if (lo > hi)
            throw std::invalid_argument("empty prime range: lo " + std::to_string(lo) + " > hi " + std::to_string(hi));
    }
};

/// Primes in [lo, hi] minus the excluded set, ascending (sieve of Eratosthenes).
inline std::vector<std::uint64_t> primes_in_range(const PrimeRange& r)
{
    std::vector<std::uint64_t> out;
    if (r.hi < 2) return out;
    std::vector<bool> composite(r.hi + 1, false);
    for (std::uint64_t i = 2; i * i <= r.hi; ++i)
        if (!composite[i])
            for (std::uint64_t j = i * i; j <= r.hi; j += i) composite[j] = true;
    for (std::uint64_t n = std::max<std::uint64_t>(r.lo, 2); n <= r.hi; ++n)
        if (!composite[n] && !r.excluded.contains(n)) out.push_back(n);
    return out;
}

} // namespace lacuna
