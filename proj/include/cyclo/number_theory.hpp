#pragma once

// Small-integer helpers: factorization, totient, Moebius, cyclotomic polynomials.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "cyclo/errors.hpp"

namespace cyclo {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Largest conductor any exact value may live at.
inline constexpr long max_conductor = 1L << 16;

namespace nt {

inline std::vector<std::pair<long, int>> factorize(long n)
{
    std::vector<std::pair<long, int>> out;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p != 0) {
            continue;
        }
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) {
        out.emplace_back(n, 1);
    }
    return out;
}

inline std::vector<long> prime_divisors(long n)
{
    std::vector<long> out;
    for (auto [p, e] : factorize(n)) {
        out.push_back(p);
    }
    return out;
}

inline long totient(long n)
{
    long r = n;
    for (auto [p, e] : factorize(n)) {
        r = r / p * (p - 1);
    }
    return r;
}

inline int moebius(long n)
{
    int s = 1;
    for (auto [p, e] : factorize(n)) {
        if (e > 1) {
            return 0;
        }
        s = -s;
    }
    return s;
}

inline std::vector<long> divisors(long n)
{
    std::vector<long> small, large;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) {
                large.push_back(n / d);
            }
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

inline long mod(long a, long n)
{
    long r = a % n;
    return r < 0 ? r + n : r;
}

inline long lcm(long a, long b) { return std::lcm(a, b); }

/// Inverse of a modulo n; requires gcd(a, n) = 1.
inline long inverse_mod(long a, long n)
{
    long t = 0, new_t = 1, r = n, new_r = mod(a, n);
    while (new_r != 0) {
        long q = r / new_r;
        std::tie(t, new_t) = std::pair{new_t, t - q * new_t};
        std::tie(r, new_r) = std::pair{new_r, r - q * new_r};
    }
    return mod(t, n);
}

/// The n-th cyclotomic polynomial as low-to-high integer coefficients, plus its
/// sparse support below the leading term.
struct CyclotomicPoly {
    long n = 1;
    long phi = 1;
    std::vector<long long> coeffs;
    std::vector<std::pair<long, long long>> tail; // (index < phi, coefficient), nonzero only
};

namespace detail {

inline CyclotomicPoly build_cyclotomic(long n)
{
    // Phi_n = prod_{d | n} (x^d - 1)^{mu(n/d)}; multiply first, then divide.
    std::vector<long long> poly{1};
    std::vector<long> dividers;
    for (long d : divisors(n)) {
        int mu = moebius(n / d);
        if (mu == 1) {
            std::vector<long long> next(poly.size() + d, 0);
            for (std::size_t i = 0; i < poly.size(); ++i) {
                next[i + d] += poly[i];
                next[i] -= poly[i];
            }
            poly = std::move(next);
        } else if (mu == -1) {
            dividers.push_back(d);
        }
    }
    for (long d : dividers) {
        // exact division by (x^d - 1): q_i = q_{i-d} - p_i, processed from the bottom.
        std::size_t out_len = poly.size() - d;
        std::vector<long long> q(out_len, 0);
        for (std::size_t i = 0; i < out_len; ++i) {
            long long prev = i >= static_cast<std::size_t>(d) ? q[i - d] : 0;
            q[i] = prev - poly[i];
        }
        poly = std::move(q);
    }
    CyclotomicPoly out;
    out.n = n;
    out.phi = static_cast<long>(poly.size()) - 1;
    out.coeffs = poly;
    for (long i = 0; i < out.phi; ++i) {
        if (poly[i] != 0) {
            out.tail.emplace_back(i, poly[i]);
        }
    }
    return out;
}

} // namespace detail

/// Cached, thread-safe access to Phi_n.
inline std::shared_ptr<const CyclotomicPoly> cyclotomic_poly(long n)
{
    static std::mutex mutex;
    static std::map<long, std::shared_ptr<const CyclotomicPoly>> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(n); it != cache.end()) {
            return it->second;
        }
    }
    auto built = std::make_shared<const CyclotomicPoly>(detail::build_cyclotomic(n));
    std::lock_guard lock(mutex);
    return cache.emplace(n, std::move(built)).first->second;
}

/// Exact integer k-th root of a nonnegative value, if it exists.
inline bool exact_root(const BigInt& value, unsigned long k, BigInt& root)
{
    if (value < 0) {
        return false;
    }
    return mpz_root(root.get_mpz_t(), value.get_mpz_t(), k) != 0;
}

inline bool exact_root(const BigRational& value, unsigned long k, BigRational& root)
{
    BigInt num, den;
    if (!exact_root(BigInt(value.get_num()), k, num) || !exact_root(BigInt(value.get_den()), k, den)) {
        return false;
    }
    root = BigRational(num, den);
    root.canonicalize();
    return true;
}

} // namespace nt
} // namespace cyclo
