#pragma once

// Canonical text in the parser grammar: parse(format(v)) == v.

#include <string>
#include <vector>

#include "cyclo/laurent.hpp"
#include "cyclo/ratfunc.hpp"

namespace cyclo {

inline std::string format(const BigRational& q)
{
    BigRational r = q;
    r.canonicalize();
    return r.get_str();
}

namespace detail {

struct Term {
    bool negative = false;
    std::string body; // absolute value
};

inline std::string join(const std::vector<Term>& terms)
{
    if (terms.empty()) {
        return "0";
    }
    std::string out = terms[0].negative ? "-" : "";
    out += terms[0].body;
    for (std::size_t i = 1; i < terms.size(); ++i) {
        out += terms[i].negative ? " - " : " + ";
        out += terms[i].body;
    }
    return out;
}

inline std::vector<Term> cycnum_terms(const CycNum& a)
{
    std::vector<Term> out;
    const long n = a.conductor();
    const auto coords = a.coords();
    for (std::size_t j = 0; j < coords.size(); ++j) {
        const BigRational& q = coords[j];
        if (q == 0) {
            continue;
        }
        Term t{q < 0, ""};
        BigRational m = abs(q);
        if (j == 0) {
            t.body = format(m);
        } else {
            std::string mono = "z" + std::to_string(n) + (j == 1 ? "" : "^" + std::to_string(j));
            t.body = m == 1 ? mono : format(m) + "*" + mono;
        }
        out.push_back(std::move(t));
    }
    return out;
}

inline std::string power_of_x(long k) { return k == 1 ? "x" : "x^" + std::to_string(k); }

/// c*x^k as a signed term; multi-term coefficients are parenthesized.
inline Term monomial_term(const CycNum& c, long k)
{
    auto parts = cycnum_terms(c);
    if (parts.size() == 1) {
        Term t = parts[0];
        if (k != 0) {
            t.body = t.body == "1" ? power_of_x(k) : t.body + "*" + power_of_x(k);
        }
        return t;
    }
    std::string body = "(" + join(parts) + ")";
    if (k != 0) {
        body += "*" + power_of_x(k);
    }
    return {false, body};
}

/// Terms ordered by descending exponent.
template <typename Pairs>
std::string format_terms(const Pairs& pairs)
{
    if (pairs.size() == 1 && pairs[0].first == 0) {
        return join(cycnum_terms(pairs[0].second));
    }
    std::vector<Term> terms;
    for (const auto& [k, c] : pairs) {
        terms.push_back(monomial_term(c, k));
    }
    return join(terms);
}

inline std::vector<std::pair<long, CycNum>> poly_pairs(const Poly& p)
{
    std::vector<std::pair<long, CycNum>> out;
    for (long k = p.degree(); k >= 0; --k) {
        if (!p[k].is_zero()) {
            out.emplace_back(k, p[k]);
        }
    }
    return out;
}

} // namespace detail

inline std::string format(const CycNum& a) { return detail::join(detail::cycnum_terms(a)); }

inline std::string format(const Poly& p) { return detail::format_terms(detail::poly_pairs(p)); }

inline std::string format(const LaurentPoly& l)
{
    std::vector<std::pair<long, CycNum>> pairs(l.terms().rbegin(), l.terms().rend());
    return detail::format_terms(pairs);
}

inline std::string format(const RatFunc& h)
{
    if (h.is_polynomial()) {
        return format(h.num());
    }
    const Poly& p = h.num();
    const Poly& q = h.den();
    std::string num = format(p);
    const bool wrap_num = p.term_count() > 1 || (p.is_constant() && detail::cycnum_terms(p[0]).size() > 1);
    if (wrap_num) {
        num = "(" + num + ")";
    }
    std::string den = format(q);
    if (q.term_count() > 1) {
        den = "(" + den + ")";
    }
    return num + "/" + den;
}

inline std::string format(const RootOfUnity& r)
{
    return r.order() == 1 ? "1" : format(r.value());
}

inline std::string format(const Mobius& m) { return format(m.as_ratfunc()); }

} // namespace cyclo
