#pragma once

// Explicit evaluations of lacunary binomial sums: the mod-10 Fibonacci/Lucas
// forms, the mod-8 Pell/Pell-Lucas forms, and the diagonal T* identities.
// Each form reports its numerator and divisor so a failed divisibility
// surfaces as data instead of being truncated away.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "lacuna/lacunary.hpp"
#include "lacuna/sequences.hpp"

namespace lacuna {

enum class ClosedFormId {
    m10_class0,
    m10_class1,
    m10_class2,
    m10_class3,
    m10_class4,
    m8_class0,
    m8_class1,
    m8_class2,
    m8_class3,
    diag_m5,
    diag_m8,
    diag_m8_shift4,
    diag_m3,
    m2_class0,
    m2_class1,
};

inline constexpr std::array kDiagonalForms{ClosedFormId::diag_m5, ClosedFormId::diag_m8, ClosedFormId::diag_m8_shift4,
                                           ClosedFormId::diag_m3, ClosedFormId::m2_class0, ClosedFormId::m2_class1};

inline std::string_view closed_form_name(ClosedFormId id)
{
    switch (id) {
    case ClosedFormId::m10_class0: return "m10-class0";
    case ClosedFormId::m10_class1: return "m10-class1";
    case ClosedFormId::m10_class2: return "m10-class2";
    case ClosedFormId::m10_class3: return "m10-class3";
    case ClosedFormId::m10_class4: return "m10-class4";
    case ClosedFormId::m8_class0: return "m8-class0";
    case ClosedFormId::m8_class1: return "m8-class1";
    case ClosedFormId::m8_class2: return "m8-class2";
    case ClosedFormId::m8_class3: return "m8-class3";
    case ClosedFormId::diag_m5: return "diag-m5";
    case ClosedFormId::diag_m8: return "diag-m8";
    case ClosedFormId::diag_m8_shift4: return "diag-m8-shift4";
    case ClosedFormId::diag_m3: return "diag-m3";
    case ClosedFormId::m2_class0: return "m2-class0";
    case ClosedFormId::m2_class1: return "m2-class1";
    }
    return "?";
}

/// numerator / divisor, where the divisor is claimed to divide exactly.
struct ClosedValue {
    BigInt numerator;
    long divisor = 1;

    bool integral() const { return mpz_divisible_ui_p(numerator.get_mpz_t(), static_cast<unsigned long>(divisor)) != 0; }

    BigInt value() const
    {
        if (!integral())
            throw std::domain_error("closed form not an integer: " + to_string(numerator) + " / " +
                                    std::to_string(divisor));
        BigInt q;
        mpz_divexact_ui(q.get_mpz_t(), numerator.get_mpz_t(), static_cast<unsigned long>(divisor));
        return q;
    }

    std::string str() const
    {
        if (integral()) return to_string(value());
        return to_string(numerator) + "/" + std::to_string(divisor);
    }
};

namespace detail {

inline BigInt pow2(long long k)
{
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(k));
    return r;
}

inline BigInt pow5(long long k)
{
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 5, static_cast<unsigned long>(k));
    return r;
}

inline void require_odd_positive(long long n)
{
    if (n < 1 || n % 2 == 0) throw std::invalid_argument("closed form needs a positive odd n, got " + std::to_string(n));
}

} // namespace detail

/// 10 T_{c_j,10}(n) for odd n, classes c_j = (n-1)/2, (n+3)/2, (n+7)/2, (n+11)/2
/// and, for j = 4, the class (n+13)/2 with value 2^n - 2 L_n.
inline ClosedValue closed_T_m10(int j, long long n)
{
    detail::require_odd_positive(n);
    if (j < 0 || j > 4) throw std::invalid_argument("mod-10 class index must be in [0, 4]");
    const std::uint64_t un = static_cast<std::uint64_t>(n);
    const BigInt two_n = detail::pow2(n);
    if (j == 4) return {two_n - 2 * seq_exact(kLucas, un), 10};

    const std::uint64_t up = (un + 1) / 2, down = (un - 1) / 2;
    BigInt tail;
    if (n % 4 == 1) {
        const BigInt s = detail::pow5((n + 3) / 4);
        tail = s * seq_exact(kFibonacci, (j == 0 || j == 3) ? up : down);
    } else {
        const BigInt s = detail::pow5((n + 1) / 4);
        tail = s * seq_exact(kLucas, (j == 0 || j == 3) ? up : down);
    }
    const BigInt head = (j == 0 || j == 3) ? BigInt(two_n + seq_exact(kLucas, un + 1)) : BigInt(two_n - seq_exact(kLucas, un - 1));
    return {(j == 0 || j == 1) ? BigInt(head + tail) : BigInt(head - tail), 10};
}

/// 8 T_{c_j,8}(n) for odd n, classes c_j = (n-1)/2, (n+3)/2, (n+7)/2, (n+11)/2.
inline ClosedValue closed_T_m8(int j, long long n)
{
    detail::require_odd_positive(n);
    if (j < 0 || j > 3) throw std::invalid_argument("mod-8 class index must be in [0, 3]");
    const std::uint64_t un = static_cast<std::uint64_t>(n);
    const std::uint64_t up = (un + 1) / 2, down = (un - 1) / 2;
    const BigInt half = detail::pow2((n + 1) / 2);
    BigInt tail;
    if (n % 4 == 1)
        tail = detail::pow2((n + 7) / 4) * seq_exact(kPell, (j == 0 || j == 3) ? up : down);
    else
        tail = detail::pow2((n + 1) / 4) * seq_exact(kPellLucas, (j == 0 || j == 3) ? up : down);
    const BigInt head = (j == 0 || j == 3) ? BigInt(detail::pow2(n) + half) : BigInt(detail::pow2(n) - half);
    return {(j == 0 || j == 1) ? BigInt(head + tail) : BigInt(head - tail), 8};
}

/// Diagonal T* identities. n is the odd index for diag-m5/m8 forms, the
/// prime p for diag-m3, and any n >= 1 for the m2 classes.
inline BigInt closed_Tstar_diag(ClosedFormId id, long long n)
{
    switch (id) {
    case ClosedFormId::diag_m5:
        detail::require_odd_positive(n);
        return -2 * detail::pow5((n - 1) / 2) * seq_exact(kFibonacci, static_cast<std::uint64_t>(n));
    case ClosedFormId::diag_m8:
    case ClosedFormId::diag_m8_shift4: {
        detail::require_odd_positive(n);
        if (n < 3) throw std::invalid_argument("diag-m8 forms need n >= 3");
        const BigInt base = -detail::pow2(2 * n - 3) - detail::pow2(n - 2);
        const BigInt pell = detail::pow2((n - 1) / 2) * seq_exact(kPell, static_cast<std::uint64_t>(n));
        return id == ClosedFormId::diag_m8 ? BigInt(base - pell) : BigInt(base + pell);
    }
    case ClosedFormId::diag_m3: {
        if (n < 5 || !is_prime(static_cast<std::uint64_t>(n)))
            throw std::invalid_argument("diag-m3 needs a prime p >= 5, got " + std::to_string(n));
        BigInt r;
        mpz_ui_pow_ui(r.get_mpz_t(), 3, static_cast<unsigned long>(n - 1));
        return -2 * r;
    }
    case ClosedFormId::m2_class0:
    case ClosedFormId::m2_class1: {
        if (n < 1) throw std::invalid_argument("m2 forms need n >= 1");
        const BigInt v = detail::pow2(n - 1);
        return id == ClosedFormId::m2_class0 ? v : BigInt(-v);
    }
    default: throw std::invalid_argument("not a diagonal form: " + std::string(closed_form_name(id)));
    }
}

/// The lacunary sum a closed form claims to evaluate.
struct ClosedTarget {
    ClassSpec spec;
    bool signed_terms = false;
};

inline ClosedTarget closed_target(ClosedFormId id, long long n)
{
    const auto idx = static_cast<int>(id);
    if (id <= ClosedFormId::m10_class4) {
        const long long offset = idx == 4 ? 13 : 4 * idx - 1;
        return {ClassSpec((n + offset) / 2, 10, n), false};
    }
    if (id <= ClosedFormId::m8_class3) {
        const long long j = idx - static_cast<int>(ClosedFormId::m8_class0);
        return {ClassSpec((n + 4 * j - 1) / 2, 8, n), false};
    }
    switch (id) {
    case ClosedFormId::diag_m5: return {ClassSpec(n, 5, 2 * n), true};
    case ClosedFormId::diag_m8: return {ClassSpec(n, 8, 2 * n), true};
    case ClosedFormId::diag_m8_shift4: return {ClassSpec(n + 4, 8, 2 * n), true};
    case ClosedFormId::diag_m3: return {ClassSpec(n, 3, 2 * n), true};
    case ClosedFormId::m2_class0: return {ClassSpec(0, 2, n), true};
    case ClosedFormId::m2_class1: return {ClassSpec(1, 2, n), true};
    default: break;
    }
    throw std::invalid_argument("unknown closed form");
}

} // namespace lacuna
