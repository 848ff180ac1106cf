#pragma once

// Fibonacci/Lucas and Pell/Pell-Lucas numbers, exact and modulo p^e.
//
// Both families are Lucas sequences with Q = -1:
//   U_0 = 0, U_1 = 1, U_n = P U_{n-1} + U_{n-2}
//   V_n = 2 U_{n+1} - P U_n   (so V_0 = 2, V_1 = P)
// with P = 1 for Fibonacci/Lucas and P = 2 for Pell/Pell-Lucas.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "lacuna/padic.hpp"

namespace lacuna {

enum class LucasFamily { fibonacci, pell };
enum class LucasBranch { U, V };

struct LucasKind {
    LucasFamily family;
    LucasBranch branch;

    constexpr long p_param() const { return family == LucasFamily::fibonacci ? 1 : 2; }
    friend constexpr bool operator==(LucasKind, LucasKind) = default;
};

inline constexpr LucasKind kFibonacci{LucasFamily::fibonacci, LucasBranch::U};
inline constexpr LucasKind kLucas{LucasFamily::fibonacci, LucasBranch::V};
inline constexpr LucasKind kPell{LucasFamily::pell, LucasBranch::U};
inline constexpr LucasKind kPellLucas{LucasFamily::pell, LucasBranch::V};

inline constexpr std::uint64_t kDefaultSequenceCap = 1'000'000;

inline std::string_view kind_name(LucasKind k)
{
    if (k == kFibonacci) return "fibonacci";
    if (k == kLucas) return "lucas";
    if (k == kPell) return "pell";
    return "pell-lucas";
}

inline LucasKind parse_kind(std::string_view name)
{
    if (name == "fibonacci" || name == "F") return kFibonacci;
    if (name == "lucas" || name == "L") return kLucas;
    if (name == "pell" || name == "P") return kPell;
    if (name == "pell-lucas" || name == "Q") return kPellLucas;
    throw std::invalid_argument("unknown sequence kind '" + std::string(name) + "'");
}

/// Exact term by direct iteration of the recurrence.
inline BigInt seq_exact(LucasKind kind, std::uint64_t n, std::uint64_t cap = kDefaultSequenceCap)
{
    if (n > cap) throw std::out_of_range("sequence index " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    const long P = kind.p_param();
    BigInt a = kind.branch == LucasBranch::U ? 0 : 2;
    BigInt b = kind.branch == LucasBranch::U ? 1 : P;
    for (std::uint64_t i = 0; i < n; ++i) {
        BigInt next = P * b + a;
        a = std::move(b);
        b = std::move(next);
    }
    return a;
}

namespace detail {

// (U_n, U_{n+1}) modulo m by fast doubling:
//   U_{2k}   = U_k (2 U_{k+1} - P U_k)
//   U_{2k+1} = U_{k+1}^2 + U_k^2
inline std::pair<BigInt, BigInt> lucas_u_pair(long P, std::uint64_t n, const BigInt& m)
{
    BigInt a = 0, b = 1;
    int top = 63;
    while (top >= 0 && ((n >> top) & 1U) == 0) --top;
    for (int bit = top; bit >= 0; --bit) {
        BigInt c = a * (2 * b - P * a);
        BigInt d = a * a + b * b;
        c = mod_floor(c, m);
        d = mod_floor(d, m);
        if ((n >> bit) & 1U) {
            a = d;
            b = mod_floor(P * d + c, m);
        } else {
            a = std::move(c);
            b = std::move(d);
        }
    }
    return {a, b};
}

} // namespace detail

/// Term n modulo p^e in O(log n) multiplications.
inline Residue seq_mod(LucasKind kind, std::uint64_t n, std::uint64_t p, int e)
{
    Residue zero = make_residue(0L, p, e);
    auto [un, un1] = detail::lucas_u_pair(kind.p_param(), n, zero.modulus());
    if (kind.branch == LucasBranch::U) return zero.with_value(un);
    return zero.with_value(2 * un1 - kind.p_param() * un);
}

} // namespace lacuna
