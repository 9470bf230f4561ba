#pragma once

// Rigorous enclosures of the house (largest conjugate modulus) and P_A membership.

#include <algorithm>
#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyclo/cycnum.hpp"
#include "cyclo/interval.hpp"

namespace cyclo {

namespace detail {
inline std::atomic<long>& precision_cap_storage()
{
    static std::atomic<long> cap{4096};
    return cap;
}
} // namespace detail

/// Cap on working precision beyond the magnitude of the coordinates, in bits.
inline long default_precision_cap() { return detail::precision_cap_storage().load(); }
inline void set_default_precision_cap(long bits) { detail::precision_cap_storage().store(bits); }

struct HouseResult {
    BigFloat lower;
    BigFloat upper;
    long precision_bits = 0;

    /// Decimal rendering rounded outward.
    std::string lower_text(int digits) const { return lower.to_decimal(digits, MPFR_RNDD); }
    std::string upper_text(int digits) const { return upper.to_decimal(digits, MPFR_RNDU); }
};

namespace detail {

inline std::shared_ptr<const std::vector<ComplexInterval>> unit_roots(long n, long precision)
{
    static std::mutex mutex;
    static std::map<std::pair<long, long>, std::shared_ptr<const std::vector<ComplexInterval>>> cache;
    const auto key = std::pair{n, precision};
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) {
            return it->second;
        }
    }
    auto table = std::make_shared<std::vector<ComplexInterval>>();
    table->reserve(static_cast<std::size_t>(n));
    for (long k = 0; k < n; ++k) {
        table->push_back(unit_root_enclosure(k, n, precision));
    }
    std::lock_guard lock(mutex);
    if (cache.size() > 256) {
        cache.clear();
    }
    return cache.emplace(key, std::move(table)).first->second;
}

/// Bits needed to cover the largest coordinate numerator, the denominator and the
/// summation length.
inline long magnitude_bits(const CycNum& a)
{
    long bits = 0;
    for (const auto& c : a.numerators()) {
        bits = std::max<long>(bits, static_cast<long>(mpz_sizeinbase(c.get_mpz_t(), 2)));
    }
    bits += static_cast<long>(mpz_sizeinbase(BigInt(a.degree()).get_mpz_t(), 2));
    return bits;
}

} // namespace detail

/// sigma_t(a) evaluated at zeta_n = exp(2 pi i / n), enclosed at the given precision.
inline ComplexInterval enclose_embedding(const CycNum& a, long t, long precision)
{
    const long n = a.conductor();
    auto roots = detail::unit_roots(n, precision);
    ComplexInterval sum(precision);
    sum.re = Interval::point(BigInt(0), precision);
    sum.im = Interval::point(BigInt(0), precision);
    const auto& num = a.numerators();
    for (std::size_t j = 0; j < num.size(); ++j) {
        if (num[j] == 0) {
            continue;
        }
        const auto& w = (*roots)[static_cast<std::size_t>(nt::mod(static_cast<long>(j) * t, n))];
        sum = sum + w.scaled(num[j]);
    }
    if (a.denominator() != 1) {
        sum = sum.divided(a.denominator());
    }
    return sum;
}

/// |sigma_t(a)| for every t in (Z/nZ)^x, ascending in t.
inline std::vector<Interval> conjugate_moduli(const CycNum& a, long precision)
{
    std::vector<Interval> out;
    const long n = a.conductor();
    for (long t = 1; t <= std::max(1L, n - 1); ++t) {
        if (std::gcd(t, n) == 1) {
            out.push_back(enclose_embedding(a, t, precision).abs());
        }
    }
    return out;
}

/// Encloses the house of a with width at most 2^-accuracy_bits. Throws
/// UndecidedAtCap when the extra working precision would exceed cap_bits.
inline HouseResult house(const CycNum& a, long accuracy_bits, long cap_bits = default_precision_cap())
{
    if (accuracy_bits < 1) {
        throw DomainError("accuracy_bits must be at least 1");
    }
    if (a.is_rational()) {
        BigRational q = abs(a.to_rational());
        long prec = accuracy_bits + 8 + static_cast<long>(mpz_sizeinbase(q.get_num_mpz_t(), 2));
        auto iv = Interval::point(q, prec);
        return {iv.lo(), iv.hi(), prec};
    }
    const long n = a.conductor();
    const long base = detail::magnitude_bits(a);
    BigFloat target(64);
    mpfr_set_ui_2exp(target.get(), 1, -accuracy_bits, MPFR_RNDN);
    for (long extra = accuracy_bits + 32;; extra *= 2) {
        if (extra > cap_bits) {
            throw UndecidedAtCap(cap_bits);
        }
        const long prec = base + extra;
        std::optional<Interval> best;
        for (long t = 1; 2 * t <= n; ++t) {
            // sigma_{-t} is the complex conjugate of sigma_t.
            if (std::gcd(t, n) != 1) {
                continue;
            }
            Interval m = enclose_embedding(a, t, prec).abs();
            if (!best) {
                best = std::move(m);
            } else {
                if (mpfr_greater_p(m.lo().get(), best->lo().get())) {
                    best->lo() = m.lo();
                }
                if (mpfr_greater_p(m.hi().get(), best->hi().get())) {
                    best->hi() = m.hi();
                }
            }
        }
        if (mpfr_lessequal_p(best->width().get(), target.get())) {
            return {best->lo(), best->hi(), prec};
        }
    }
}

enum class PAVerdict { member, nonmember, undecided };

inline const char* to_string(PAVerdict v)
{
    switch (v) {
    case PAVerdict::member:
        return "member";
    case PAVerdict::nonmember:
        return "nonmember";
    default:
        return "undecided";
    }
}

/// Membership in P_A: nonzero algebraic integers with house at most A.
///
/// A = 1 is decided by the exact root-of-unity test. Otherwise the house is
/// enclosed with escalating accuracy until the enclosure separates from A. When
/// it straddles A, the exact test |sigma(a)|^2 == A^2 (via a * conj(a)) settles
/// the boundary case house(a) = A; anything else left at the cap is undecided.
inline PAVerdict in_PA(const CycNum& a, const BigRational& A, long accuracy_bits = 64,
                       long cap_bits = default_precision_cap())
{
    if (A < 1) {
        throw DomainError("P_A requires A >= 1");
    }
    if (a.is_zero() || !a.is_integral()) {
        return PAVerdict::nonmember;
    }
    if (A == 1) {
        return a.as_root_of_unity() ? PAVerdict::member : PAVerdict::nonmember;
    }
    try {
        for (long bits = std::max(accuracy_bits, 1L);; bits *= 2) {
            HouseResult h = house(a, bits, cap_bits);
            if (h.upper.compare(A) <= 0) {
                return PAVerdict::member;
            }
            if (h.lower.compare(A) > 0) {
                return PAVerdict::nonmember;
            }
            CycNum norm2 = a * a.complex_conjugate();
            if (norm2.is_rational() && norm2.to_rational() == A * A) {
                return PAVerdict::member;
            }
        }
    } catch (const UndecidedAtCap&) {
        return PAVerdict::undecided;
    }
}

} // namespace cyclo
