#pragma once

// Witnesses h(S(x)) = sum beta_i e_i x^(n_i), bounded search for them, and term-count bounds.

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "cyclo/house.hpp"
#include "cyclo/loxton.hpp"
#include "cyclo/special.hpp"

namespace cyclo {

struct WitnessTerm {
    RootOfUnity beta;
    CycNum e;
    long n = 0;
};

struct Witness {
    std::vector<WitnessTerm> terms;
    RatFunc S;

    Witness(std::vector<WitnessTerm> t, RatFunc s) : terms(std::move(t)), S(std::move(s))
    {
        if (terms.empty()) {
            throw DomainError("witness needs at least one term");
        }
        if (S.is_constant()) {
            throw DomainError("witness inner map must be nonconstant");
        }
        if (laurent().is_constant()) {
            throw DomainError("witness Laurent polynomial is constant");
        }
    }

    /// Sum of beta_i e_i x^(n_i) with equal exponents collapsed.
    LaurentPoly laurent() const
    {
        LaurentPoly l;
        for (const auto& t : terms) {
            l.add(t.n, t.beta.value() * t.e);
        }
        return l;
    }

    long size() const { return static_cast<long>(terms.size()); }
};

inline LaurentPoly witness_laurent(const Witness& w) { return w.laurent(); }

inline bool witness_check(const RatFunc& h, const Witness& w)
{
    return compose(h, w.S) == RatFunc::from_laurent(w.laurent());
}

inline bool is_A_short(const Witness& w, const BigRational& A, const LoxtonProfile& profile)
{
    for (const auto& t : w.terms) {
        if (!profile.contains(t.e)) {
            return false;
        }
    }
    return w.size() <= profile.budget_for(A);
}

struct SearchGrid {
    long M = 12; // largest root-of-unity order
    long H = 8;  // largest height of a rational max(|p|, q)
};

/// 0, the roots of unity of order <= M by (order, exponent), then the remaining
/// rationals of height <= H by (height, denominator, numerator), positive first.
inline std::vector<CycNum> grid_values(const SearchGrid& grid)
{
    std::vector<CycNum> v{CycNum(0)};
    for (long order = 1; order <= grid.M; ++order) {
        for (long k = 0; k < order; ++k) {
            if (std::gcd(k, order) == 1) {
                v.push_back(CycNum::zeta(order, k));
            }
        }
    }
    for (long ht = 1; ht <= grid.H; ++ht) {
        for (long q = 1; q <= ht; ++q) {
            for (long p = 1; p <= ht; ++p) {
                if (std::max(p, q) != ht || std::gcd(p, q) != 1 || p == q) {
                    continue;
                }
                v.emplace_back(BigRational(p, q));
                v.emplace_back(BigRational(-p, q));
            }
        }
    }
    return v;
}

namespace detail {

inline bool unit_or_zero(const CycNum& v) { return v.is_zero() || v.as_root_of_unity().has_value(); }

/// Witness for h(S) = l when every coefficient of l is a root of unity (E = {1}).
inline std::optional<Witness> witness_from_laurent(const LaurentPoly& l, const RatFunc& S, long d_max)
{
    if (l.is_constant() || l.term_count() > d_max) {
        return std::nullopt;
    }
    std::vector<WitnessTerm> terms;
    for (auto it = l.terms().rbegin(); it != l.terms().rend(); ++it) {
        auto beta = it->second.as_root_of_unity();
        if (!beta) {
            return std::nullopt;
        }
        terms.push_back({*beta, CycNum(1), it->first});
    }
    return Witness(std::move(terms), S);
}

inline std::optional<Witness> try_inner(const RatFunc& h, const RatFunc& S, long d_max)
{
    RatFunc c;
    try {
        c = compose(h, S);
    } catch (const DomainError&) {
        return std::nullopt;
    }
    auto l = to_laurent(c);
    if (!l) {
        return std::nullopt;
    }
    auto w = witness_from_laurent(*l, S, d_max);
    if (w && witness_check(h, *w)) {
        return w;
    }
    return std::nullopt;
}

inline RatFunc laurent_map(const CycNum& a, const CycNum& b, const CycNum& c)
{
    return RatFunc::from_laurent(LaurentPoly::monomial(a, 1) + LaurentPoly(b) + LaurentPoly::monomial(c, -1));
}

/// Distinct poles on the projective line (none stands for infinity), when all are cyclotomic.
inline std::optional<std::vector<std::optional<CycNum>>> pole_list(const RatFunc& h)
{
    const Poly& q = h.den();
    Poly sqfree = q.divmod(gcd(q, q.derivative())).first.monic();
    auto roots = small_roots(sqfree);
    if (!roots) {
        return std::nullopt;
    }
    std::vector<std::optional<CycNum>> out(roots->begin(), roots->end());
    if (h.num().degree() > q.degree()) {
        out.push_back(std::nullopt);
    }
    return out;
}

inline std::optional<Witness> search_polynomial(const RatFunc& h, long d_max, const std::vector<CycNum>& V)
{
    const Poly& p = h.num();
    const long d = p.degree();
    const CycNum lead = p[d];
    const CycNum next = p[d - 1];
    const CycNum dlead = CycNum(d) * lead;
    std::vector<CycNum> outer; // admissible a (and c): 0 or lead * a^d a root of unity
    for (const auto& v : V) {
        if (v.is_zero() || unit_or_zero(lead * v.pow(d))) {
            outer.push_back(v);
        }
    }
    auto edge_ok = [&](const CycNum& a, const CycNum& b) {
        return a.is_zero() || unit_or_zero(a.pow(d - 1) * (dlead * b + next));
    };
    for (const auto& b : V) {
        for (const auto& a : outer) {
            if (!edge_ok(a, b)) {
                continue;
            }
            for (const auto& c : outer) {
                if ((a.is_zero() && c.is_zero()) || !edge_ok(c, b)) {
                    continue;
                }
                LaurentPoly S = LaurentPoly::monomial(a, 1) + LaurentPoly(b) + LaurentPoly::monomial(c, -1);
                LaurentPoly l = S.substitute_into(p);
                if (l.term_count() > d_max) {
                    continue;
                }
                if (auto w = witness_from_laurent(l, laurent_map(a, b, c), d_max); w && witness_check(h, *w)) {
                    return w;
                }
            }
        }
    }
    return std::nullopt;
}

} // namespace detail

/// Bounded search for a witness with deg S <= 2. Tries S = x, then
/// S = a x + b + c/x over the grid, then S = lambda(a x^k) for k = 1, 2 where the
/// Moebius map lambda sends 0 and infinity to the two poles of h. "None" means
/// none on the grid.
inline std::optional<Witness> witness_search_deg2(const RatFunc& h, long d_max, const SearchGrid& grid = {})
{
    if (d_max < 1) {
        throw DomainError("d_max must be at least 1");
    }
    if (h.is_constant()) {
        return std::nullopt;
    }
    if (auto w = detail::try_inner(h, RatFunc::x(), d_max)) {
        return w;
    }
    const auto V = grid_values(grid);
    if (h.is_polynomial()) {
        return detail::search_polynomial(h, d_max, V);
    }
    // Finitely many finite values of a x + b + c/x avoid a finite pole P only if b = P and a c = 0.
    const Poly& q = h.den();
    Poly sqfree = q.divmod(gcd(q, q.derivative())).first;
    if (sqfree.degree() == 1) {
        const CycNum P = -sqfree[0] / sqfree[1];
        for (const auto& a : V) {
            if (a.is_zero()) {
                continue;
            }
            for (const RatFunc& S : {detail::laurent_map(a, P, CycNum(0)), detail::laurent_map(CycNum(0), P, a)}) {
                if (auto w = detail::try_inner(h, S, d_max)) {
                    return w;
                }
            }
        }
    }
    auto poles = detail::pole_list(h);
    if (!poles || poles->size() != 2) {
        return std::nullopt;
    }
    for (int orient = 0; orient < 2; ++orient) {
        const auto& at_inf = (*poles)[orient];
        const auto& at_zero = (*poles)[1 - orient];
        Mobius lambda = !at_inf ? Mobius(CycNum(1), *at_zero, CycNum(0), CycNum(1))
                        : !at_zero ? Mobius(*at_inf, CycNum(1), CycNum(1), CycNum(0))
                                   : Mobius(*at_inf, *at_zero, CycNum(1), CycNum(1));
        for (long k = 1; k <= 2; ++k) {
            for (const auto& a : V) {
                if (a.is_zero()) {
                    continue;
                }
                RatFunc S = compose(lambda.as_ratfunc(), RatFunc(Poly::monomial(a, k)));
                if (auto w = detail::try_inner(h, S, d_max)) {
                    return w;
                }
            }
        }
    }
    return std::nullopt;
}

struct FzCaps {
    BigInt rational_cap; // 2016 * 5^l
    BigInt laurent_cap;  // 2 (2l - 1)(l - 1)
};

inline FzCaps fz_degree_cap(long l)
{
    if (l < 1) {
        throw DomainError("term count must be positive");
    }
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), 5, static_cast<unsigned long>(l));
    return {BigInt(2016) * p, BigInt(2 * (2 * l - 1) * (l - 1))};
}

/// log_5(d^(n-2) / 2016).
inline double iterate_term_lower_bound(long d, long n)
{
    if (d < 3 || n < 3) {
        throw DomainError("iterate term bound needs d >= 3 and n >= 3");
    }
    return (static_cast<double>(n - 2) * std::log(static_cast<double>(d)) - std::log(2016.0)) / std::log(5.0);
}

struct FzReport {
    RatFunc p;
    long degree_h = 0;
    long ell = 0;
    FzCaps caps;
    bool q_binomial = false;    // q = lambda(a x^n + b x^-n): first bound inapplicable
    bool rational_holds = true; // deg h <= 2016 * 5^ell
    bool laurent_case = false;  // h polynomial, p and q Laurent
    bool q_trinomial = false;   // q = a x^n + b + c x^-n: second bound inapplicable
    bool laurent_holds = true;  // deg h <= 2 (2 ell - 1)(ell - 1)

    bool violation() const { return (!q_binomial && !rational_holds) || (laurent_case && !q_trinomial && !laurent_holds); }
};

inline FzReport verify_fz(const RatFunc& h, const RatFunc& q)
{
    FzReport r;
    r.p = compose(h, q);
    r.degree_h = h.degree();
    r.ell = term_count(r.p);
    r.caps = fz_degree_cap(r.ell);
    r.q_binomial = is_binomial_shape(q).has_value();
    r.rational_holds = BigInt(r.degree_h) <= r.caps.rational_cap;
    auto lq = to_laurent(q);
    r.laurent_case = h.is_polynomial() && lq && to_laurent(r.p);
    if (r.laurent_case) {
        r.q_trinomial = is_trinomial_shape(*lq).has_value();
        r.laurent_holds = BigInt(r.degree_h) <= r.caps.laurent_cap;
    }
    return r;
}

struct SpecialTermsReport {
    long degree_h = 0;
    long n = 0;
    SpecialStatus special = SpecialStatus::exhausted;
    bool applicable = false; // h certified non-special by exhausted search
    long term_count = 0;
    double bound = 0;

    bool violation() const { return applicable && static_cast<double>(term_count) < bound; }
};

inline SpecialTermsReport verify_specialterms(const RatFunc& h, const RatFunc& q, long n,
                                              double ceiling = default_monomial_ceiling)
{
    SpecialTermsReport r;
    r.degree_h = h.degree();
    r.n = n;
    if (r.degree_h < 3) {
        throw DomainError("h must have degree at least 3");
    }
    if (q.is_constant()) {
        throw DomainError("q must be nonconstant");
    }
    r.bound = iterate_term_lower_bound(r.degree_h, n);
    auto s = is_special(h);
    r.special = s.status;
    if (s.status == SpecialStatus::certified) {
        throw DomainError("h is special");
    }
    r.applicable = s.status == SpecialStatus::exhausted;
    const double projected = (std::pow(static_cast<double>(r.degree_h), static_cast<double>(n)) * static_cast<double>(q.degree()) + 1) * 2;
    if (projected > ceiling) {
        throw ResourceError("iterate exceeds the monomial ceiling");
    }
    RatFunc p = q;
    for (long i = 0; i < n; ++i) {
        p = compose(h, p);
    }
    r.term_count = term_count(p);
    return r;
}

} // namespace cyclo
