#pragma once

// Shared generators for property-style tests.

#include <random>
#include <string>
#include <vector>

#include "cyclo/ratfunc.hpp"

namespace cyclo::testing {

inline CycNum random_cycnum(std::mt19937_64& rng, long max_conductor = 24, long height = 10, bool integral = false)
{
    std::uniform_int_distribution<long> cond(1, max_conductor);
    std::uniform_int_distribution<long> coef(-height, height);
    std::uniform_int_distribution<long> den(1, integral ? 1 : 4);
    long n = cond(rng);
    long phi = nt::totient(n);
    std::vector<BigRational> coords;
    for (long j = 0; j < phi; ++j) {
        BigRational q(coef(rng), den(rng));
        q.canonicalize();
        coords.push_back(q);
    }
    return CycNum::from_coords(n, coords);
}

/// Random element of Q(zeta_n) with integer-over-den coordinates.
inline CycNum random_in_field(std::mt19937_64& rng, long n, long height = 3, long max_den = 1)
{
    std::uniform_int_distribution<long> coef(-height, height);
    std::uniform_int_distribution<long> den(1, max_den);
    std::vector<BigRational> coords;
    for (long j = 0; j < nt::totient(n); ++j) {
        BigRational q(coef(rng), den(rng));
        q.canonicalize();
        coords.push_back(q);
    }
    return CycNum::from_coords(n, coords);
}

/// Small conductors whose pairwise composita stay cheap.
inline long random_small_conductor(std::mt19937_64& rng)
{
    static const long choices[] = {1, 3, 4, 5, 8, 12};
    return choices[rng() % 6];
}

inline CycNum random_nonzero(std::mt19937_64& rng, long max_conductor = 24, long height = 10)
{
    while (true) {
        CycNum a = random_cycnum(rng, max_conductor, height);
        if (!a.is_zero()) {
            return a;
        }
    }
}

/// All roots of unity with order at most m, by (order, exponent).
inline std::vector<RootOfUnity> roots_up_to(long m)
{
    std::vector<RootOfUnity> out;
    for (long order = 1; order <= m; ++order) {
        for (long k = 0; k < order; ++k) {
            if (std::gcd(k, order) == 1) {
                out.emplace_back(order, k);
            }
        }
    }
    return out;
}

// Coefficients from one field Q(zeta_n) with n in a small fixed set.
inline Poly random_poly(std::mt19937_64& rng, long degree, long n = 0)
{
    if (n == 0) {
        n = random_small_conductor(rng);
    }
    std::vector<CycNum> v;
    for (long i = 0; i <= degree; ++i) {
        v.push_back(random_in_field(rng, n, 3, 2));
    }
    while (v.back().is_zero()) {
        v.back() = random_in_field(rng, n, 3, 2);
    }
    return Poly(std::move(v));
}

inline RatFunc random_ratfunc(std::mt19937_64& rng, long degree)
{
    std::uniform_int_distribution<long> pick(0, degree);
    while (true) {
        long n = random_small_conductor(rng);
        RatFunc h(random_poly(rng, pick(rng), n), random_poly(rng, pick(rng), n));
        if (h.degree() == degree) {
            return h;
        }
    }
}

/// Random string in the expression grammar over Q(zeta_n), with random spacing.
class ExpressionGenerator {
public:
    ExpressionGenerator(std::mt19937_64& rng, long n) : rng_(rng), n_(n) {}

    std::string expr(int depth)
    {
        std::string out = term(depth);
        for (long k = pick(0, 2); k > 0; --k) {
            out += space() + (pick(0, 1) ? "+" : "-") + space() + term(depth);
        }
        return out;
    }

private:
    std::mt19937_64& rng_;
    long n_;

    long pick(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
    std::string space() { return pick(0, 3) == 0 ? " " : ""; }

    std::string term(int depth)
    {
        std::string out = factor(depth);
        if (pick(0, 2) == 0) {
            out += space() + (pick(0, 1) ? "*" : "/") + space() + factor(depth);
        }
        return out;
    }

    std::string factor(int depth)
    {
        std::string out = pick(0, 4) == 0 ? "-" + space() : "";
        out += base(depth);
        if (pick(0, 3) == 0) {
            out += space() + "^" + space() + std::to_string(pick(-2, 3));
        }
        return out;
    }

    std::string base(int depth)
    {
        switch (pick(0, depth > 0 ? 3 : 2)) {
        case 0:
            return "x";
        case 1:
            return std::to_string(pick(0, 12));
        case 2:
            return "z" + std::to_string(n_);
        default:
            return "(" + space() + expr(depth - 1) + space() + ")";
        }
    }
};

} // namespace cyclo::testing
