#pragma once

// Detection of maps conjugate to +x^d, -x^d or the Chebyshev polynomial T_d.

#include <optional>
#include <string>
#include <vector>

#include "cyclo/ratfunc.hpp"
#include "cyclo/roots.hpp"

namespace cyclo {

enum class SpecialModel { plus_power, minus_power, chebyshev };
enum class SpecialStatus { certified, exhausted, unknown };

inline const char* to_string(SpecialModel m)
{
    switch (m) {
    case SpecialModel::plus_power:
        return "x^d";
    case SpecialModel::minus_power:
        return "-x^d";
    default:
        return "T_d";
    }
}

inline const char* to_string(SpecialStatus s)
{
    switch (s) {
    case SpecialStatus::certified:
        return "certified";
    case SpecialStatus::exhausted:
        return "exhausted";
    default:
        return "unknown";
    }
}

inline RatFunc model_function(SpecialModel m, long d)
{
    switch (m) {
    case SpecialModel::plus_power:
        return RatFunc(Poly::monomial(CycNum(1), d));
    case SpecialModel::minus_power:
        return RatFunc(Poly::monomial(CycNum(-1), d));
    default:
        return RatFunc(chebyshev(d));
    }
}

struct SpecialResult {
    SpecialStatus status = SpecialStatus::exhausted;
    std::optional<Mobius> conjugator; // mobius_conjugate(h, *conjugator) == model
    std::optional<SpecialModel> model;
    std::string note;

    bool is_special() const { return status == SpecialStatus::certified; }
};

namespace detail {

inline bool certify(const RatFunc& h, const Mobius& m, SpecialModel model, SpecialResult& out)
{
    if (mobius_conjugate(h, m) != model_function(model, h.degree())) {
        return false;
    }
    out.status = SpecialStatus::certified;
    out.conjugator = m;
    out.model = model;
    return true;
}

/// Affine conjugacy for a polynomial h of degree d >= 2.
inline SpecialResult special_polynomial(const RatFunc& h)
{
    const Poly& p = h.num();
    const long d = p.degree();
    SpecialResult out;
    // Translate so that the x^(d-1) coefficient vanishes.
    const CycNum beta = -p[d - 1] / (CycNum(d) * p[d]);
    const Mobius shift = Mobius::affine(CycNum(1), beta);
    const Poly g = mobius_conjugate(h, shift).num();
    auto scaled = [&](const CycNum& alpha) { return shift.after(Mobius::affine(alpha, CycNum(0))); };

    if (g.is_monomial()) {
        for (SpecialModel model : {SpecialModel::plus_power, SpecialModel::minus_power}) {
            CycNum sign(model == SpecialModel::plus_power ? 1L : -1L);
            if (auto alpha = kth_root(sign / g[d], d - 1)) {
                if (certify(h, scaled(*alpha), model, out)) {
                    return out;
                }
            }
        }
        out.status = SpecialStatus::unknown;
        out.note = "conjugate to a monomial, but the scaling root is not cyclotomic";
        return out;
    }

    // T_d has only exponents of the parity of d and a nonzero x^(d-2) coefficient.
    for (long i = 0; i <= d; ++i) {
        if ((d - i) % 2 != 0 && !g[i].is_zero()) {
            return out;
        }
    }
    if (g[d - 2].is_zero()) {
        return out;
    }
    const CycNum r = -g[d - 2] / (CycNum(d) * g[d]); // alpha^2
    if (d % 2 == 0) {
        const CycNum alpha = (g[d] * r.pow((d - 2) / 2)).inverse();
        certify(h, scaled(alpha), SpecialModel::chebyshev, out);
        return out;
    }
    if (auto alpha = kth_root(r, 2)) {
        certify(h, scaled(*alpha), SpecialModel::chebyshev, out);
        return out;
    }
    // alpha is irrational over the cyclotomic closure: compare g_i alpha^(i-1) symbolically.
    const Poly t = chebyshev(d);
    for (long i = 1; i <= d; i += 2) {
        if (g[i] * r.pow((i - 1) / 2) != t[i]) {
            return out;
        }
    }
    out.status = SpecialStatus::unknown;
    out.note = "conjugate to T_d by a scaling outside the cyclotomic closure";
    return out;
}

/// Roots of a polynomial of degree <= 2, when they are cyclotomic.
inline std::optional<std::vector<CycNum>> small_roots(const Poly& g)
{
    if (g.degree() <= 0) {
        return std::vector<CycNum>{};
    }
    if (g.degree() == 1) {
        return std::vector<CycNum>{-g[0] / g[1]};
    }
    if (g.degree() > 2) {
        return std::nullopt;
    }
    CycNum disc = g[1] * g[1] - CycNum(4) * g[2] * g[0];
    auto s = kth_root(disc, 2);
    if (!s) {
        return std::nullopt;
    }
    CycNum two_a = CycNum(2) * g[2];
    std::vector<CycNum> roots{(-g[1] + *s) / two_a};
    if (!s->is_zero()) {
        roots.push_back((-g[1] - *s) / two_a);
    }
    return roots;
}

} // namespace detail

/// Certificate search for h being Moebius-conjugate to one of the special models.
///
/// Polynomials are settled by affine conjugacy. Other maps must have a fixed,
/// totally ramified finite point P; such points are roots of W, W', ..., W^(d-2)
/// for the Wronskian W = p'q - pq'. Moving P to infinity yields a polynomial.
inline SpecialResult is_special(const RatFunc& h)
{
    const long d = h.degree();
    if (d < 2) {
        throw DomainError("special-map detection needs degree at least 2");
    }
    if (h.is_polynomial()) {
        return detail::special_polynomial(h);
    }
    const Poly& p = h.num();
    const Poly& q = h.den();
    Poly w = p.derivative() * q - p * q.derivative();
    Poly g = w;
    Poly dw = w;
    for (long k = 1; k <= d - 2; ++k) {
        dw = dw.derivative();
        g = gcd(g, dw);
    }
    SpecialResult out;
    auto roots = detail::small_roots(g.monic());
    if (!roots) {
        out.status = SpecialStatus::unknown;
        out.note = "totally ramified points are not cyclotomic";
        return out;
    }
    for (const CycNum& P : *roots) {
        auto v = h.evaluate(P);
        if (!v || *v != P) {
            continue;
        }
        const Mobius m1(P, CycNum(1), CycNum(1), CycNum(0)); // x -> P + 1/x
        RatFunc k = mobius_conjugate(h, m1);
        if (!k.is_polynomial()) {
            continue;
        }
        SpecialResult inner = detail::special_polynomial(k);
        if (inner.status == SpecialStatus::certified) {
            Mobius m = m1.after(*inner.conjugator);
            if (detail::certify(h, m, *inner.model, out)) {
                return out;
            }
        } else if (inner.status == SpecialStatus::unknown) {
            out = inner;
        }
    }
    return out;
}

} // namespace cyclo
