#pragma once

// Laurent polynomials: finite sums of c_k x^k with k of either sign.

#include <map>

#include "cyclo/poly.hpp"

namespace cyclo {

class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(const CycNum& c) { add(0, c); }

    static LaurentPoly monomial(const CycNum& c, long k)
    {
        LaurentPoly r;
        r.add(k, c);
        return r;
    }

    /// p(x) * x^shift.
    static LaurentPoly from_poly(const Poly& p, long shift = 0)
    {
        LaurentPoly r;
        for (long i = 0; i <= p.degree(); ++i) {
            r.add(i + shift, p[i]);
        }
        return r;
    }

    const std::map<long, CycNum>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first == 0); }
    long term_count() const { return static_cast<long>(t_.size()); }
    long min_exponent() const { return t_.empty() ? 0 : t_.begin()->first; }
    long max_exponent() const { return t_.empty() ? 0 : t_.rbegin()->first; }

    CycNum coeff(long k) const
    {
        auto it = t_.find(k);
        return it == t_.end() ? CycNum() : it->second;
    }

    void add(long k, const CycNum& c)
    {
        if (c.is_zero()) {
            return;
        }
        auto [it, inserted] = t_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) {
                t_.erase(it);
            }
        }
    }

    /// Writes the value as x^shift * p(x) with p a polynomial not divisible by x.
    std::pair<Poly, long> as_shifted_poly() const
    {
        if (t_.empty()) {
            return {Poly(), 0};
        }
        const long lo = min_exponent();
        std::vector<CycNum> v(static_cast<std::size_t>(max_exponent() - lo + 1));
        for (const auto& [k, c] : t_) {
            v[static_cast<std::size_t>(k - lo)] = c;
        }
        return {Poly(std::move(v)), lo};
    }

    LaurentPoly pow(long e) const
    {
        if (e < 0) {
            throw DomainError("negative Laurent power");
        }
        LaurentPoly result(CycNum(1)), base = *this;
        while (e > 0) {
            if (e & 1) {
                result = result * base;
            }
            e >>= 1;
            if (e > 0) {
                base = base * base;
            }
        }
        return result;
    }

    /// p evaluated at this Laurent polynomial.
    LaurentPoly substitute_into(const Poly& p) const
    {
        LaurentPoly s;
        for (long i = p.degree(); i >= 0; --i) {
            s = s * *this + LaurentPoly(p[i]);
        }
        return s;
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b)
    {
        for (const auto& [k, c] : b.t_) {
            a.add(k, c);
        }
        return a;
    }

    friend LaurentPoly operator-(const LaurentPoly& a)
    {
        LaurentPoly r;
        for (const auto& [k, c] : a.t_) {
            r.t_.emplace(k, -c);
        }
        return r;
    }

    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
    {
        LaurentPoly r;
        for (const auto& [i, x] : a.t_) {
            for (const auto& [j, y] : b.t_) {
                r.add(i + j, x * y);
            }
        }
        return r;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

private:
    std::map<long, CycNum> t_;
};

} // namespace cyclo
