#pragma once

// Radicals that stay inside the cyclotomic closure of Q.

#include <optional>

#include "cyclo/cycnum.hpp"

namespace cyclo {

namespace detail {

/// Positive square root of a prime p as a cyclotomic integer.
inline CycNum sqrt_prime(long p)
{
    if (p == 2) {
        return CycNum::zeta(8, 1) + CycNum::zeta(8, 7);
    }
    // Quadratic Gauss sum g = sum (a/p) zeta_p^a, g^2 = (-1)^{(p-1)/2} p, and g = sqrt(p)
    // or i sqrt(p) for the principal root zeta_p = exp(2 pi i / p).
    std::vector<std::pair<long, BigRational>> terms;
    for (long a = 1; a < p; ++a) {
        BigInt x(a), mod(p);
        int legendre = mpz_legendre(x.get_mpz_t(), mod.get_mpz_t());
        terms.emplace_back(a, BigRational(legendre));
    }
    CycNum g = CycNum::from_exponents(p, terms);
    if (p % 4 == 1) {
        return g;
    }
    return -CycNum::zeta(4, 1) * g;
}

} // namespace detail

/// Positive square root of a nonnegative rational, always cyclotomic.
inline CycNum sqrt_rational(const BigRational& q)
{
    if (q < 0) {
        return CycNum::zeta(4, 1) * sqrt_rational(-q);
    }
    if (q == 0) {
        return {};
    }
    // sqrt(a/b) = sqrt(a*b)/b
    BigInt m = BigInt(q.get_num()) * BigInt(q.get_den());
    BigInt square_part = 1;
    CycNum radical(1);
    BigInt rest = m;
    for (unsigned long p = 2; rest > 1; ++p) {
        if (BigInt(p) * BigInt(p) > rest) {
            break;
        }
        int e = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
            ++e;
        }
        if (e / 2 > 0) {
            BigInt pp;
            mpz_ui_pow_ui(pp.get_mpz_t(), p, static_cast<unsigned long>(e / 2));
            square_part *= pp;
        }
        if (e % 2 == 1) {
            radical *= detail::sqrt_prime(static_cast<long>(p));
        }
    }
    if (rest > 1) {
        if (!rest.fits_slong_p() || rest.get_si() > max_conductor / 4) {
            throw ResourceError("square root of a large prime exceeds the supported conductor");
        }
        radical *= detail::sqrt_prime(rest.get_si());
    }
    return radical * CycNum(BigRational(square_part, BigInt(q.get_den())));
}

/// Some cyclotomic y with y^k = v, for v = s * xi where xi is a root of unity,
/// |s|^2 is rational and |s|^2 has a rational k-th root. Returns none outside
/// this class (a root may still exist in the closure).
inline std::optional<CycNum> kth_root(const CycNum& v, long k)
{
    if (k <= 0) {
        throw DomainError("root index must be positive");
    }
    if (k == 1) {
        return v;
    }
    if (v.is_zero()) {
        return CycNum();
    }
    CycNum norm2 = v * v.complex_conjugate();
    if (!norm2.is_rational()) {
        return std::nullopt;
    }
    BigRational b = norm2.to_rational();
    CycNum modulus = sqrt_rational(b);
    auto xi = (v / modulus).as_root_of_unity();
    if (!xi) {
        return std::nullopt;
    }
    BigRational r;
    if (!nt::exact_root(b, static_cast<unsigned long>(k), r)) {
        return std::nullopt;
    }
    // |v|^{1/k} = sqrt(b^{1/k}); xi^{1/k} = zeta_{order k}^{exponent}.
    CycNum root = sqrt_rational(r) * CycNum::zeta(xi->order() * k, xi->exponent());
    if (root.pow(k) != v) {
        return std::nullopt;
    }
    return root;
}

} // namespace cyclo
