#pragma once

// Dense univariate polynomials over the cyclotomic closure.

#include <utility>
#include <vector>

#include "cyclo/cycnum.hpp"

namespace cyclo {

class Poly {
public:
    Poly() = default;
    Poly(const CycNum& c)
    {
        if (!c.is_zero()) {
            c_.push_back(c);
        }
    }
    Poly(long c) : Poly(CycNum(c)) {}
    explicit Poly(std::vector<CycNum> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly x() { return monomial(CycNum(1), 1); }

    static Poly monomial(const CycNum& c, long k)
    {
        if (c.is_zero()) {
            return {};
        }
        std::vector<CycNum> v(static_cast<std::size_t>(k) + 1);
        v.back() = c;
        return Poly(std::move(v));
    }

    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const std::vector<CycNum>& coeffs() const { return c_; }

    CycNum operator[](long i) const
    {
        if (i < 0 || i > degree()) {
            return {};
        }
        return c_[static_cast<std::size_t>(i)];
    }

    const CycNum& lead() const
    {
        if (c_.empty()) {
            throw DomainError("zero polynomial has no leading coefficient");
        }
        return c_.back();
    }

    long term_count() const
    {
        long n = 0;
        for (const auto& c : c_) {
            n += c.is_zero() ? 0 : 1;
        }
        return n;
    }

    /// Lowest exponent with a nonzero coefficient (0 for the zero polynomial).
    long valuation() const
    {
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (!c_[i].is_zero()) {
                return static_cast<long>(i);
            }
        }
        return 0;
    }

    bool is_monomial() const { return term_count() == 1; }

    Poly monic() const
    {
        if (is_zero() || lead().is_one()) {
            return *this;
        }
        return scaled(lead().inverse());
    }

    Poly scaled(const CycNum& s) const
    {
        if (s.is_zero()) {
            return {};
        }
        Poly r = *this;
        for (auto& c : r.c_) {
            c *= s;
        }
        return r;
    }

    Poly derivative() const
    {
        std::vector<CycNum> v;
        for (std::size_t i = 1; i < c_.size(); ++i) {
            v.push_back(c_[i] * CycNum(static_cast<long>(i)));
        }
        return Poly(std::move(v));
    }

    CycNum evaluate(const CycNum& a) const
    {
        CycNum s;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            s = s * a + *it;
        }
        return s;
    }

    /// p(q(x)) by Horner's scheme.
    Poly compose(const Poly& q) const
    {
        Poly s;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            s = s * q + Poly(*it);
        }
        return s;
    }

    Poly pow(long e) const
    {
        if (e < 0) {
            throw DomainError("negative polynomial power");
        }
        Poly result(1), base = *this;
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

    /// Quotient and remainder; throws DivisionByZero for a zero divisor.
    std::pair<Poly, Poly> divmod(const Poly& b) const
    {
        if (b.is_zero()) {
            throw DivisionByZero("polynomial division by zero");
        }
        if (degree() < b.degree()) {
            return {Poly(), *this};
        }
        const CycNum inv = b.lead().inverse();
        std::vector<CycNum> r = c_;
        std::vector<CycNum> q(static_cast<std::size_t>(degree() - b.degree() + 1));
        const long bd = b.degree();
        for (long i = degree(); i >= bd; --i) {
            const CycNum& top = r[static_cast<std::size_t>(i)];
            if (top.is_zero()) {
                continue;
            }
            CycNum f = top * inv;
            q[static_cast<std::size_t>(i - bd)] = f;
            for (long j = 0; j <= bd; ++j) {
                const CycNum& bj = b.c_[static_cast<std::size_t>(j)];
                if (!bj.is_zero()) {
                    r[static_cast<std::size_t>(i - bd + j)] -= f * bj;
                }
            }
        }
        r.resize(static_cast<std::size_t>(bd));
        return {Poly(std::move(q)), Poly(std::move(r))};
    }

    friend Poly operator+(const Poly& a, const Poly& b)
    {
        std::vector<CycNum> v(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i < a.c_.size()) {
                v[i] += a.c_[i];
            }
            if (i < b.c_.size()) {
                v[i] += b.c_[i];
            }
        }
        return Poly(std::move(v));
    }

    friend Poly operator-(const Poly& a) { return a.scaled(CycNum(-1)); }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    friend Poly operator*(const Poly& a, const Poly& b)
    {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        std::vector<CycNum> v(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) {
                continue;
            }
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                if (!b.c_[j].is_zero()) {
                    v[i + j] += a.c_[i] * b.c_[j];
                }
            }
        }
        return Poly(std::move(v));
    }

    friend bool operator==(const Poly& a, const Poly& b) = default;

private:
    void trim()
    {
        while (!c_.empty() && c_.back().is_zero()) {
            c_.pop_back();
        }
    }

    std::vector<CycNum> c_;
};

/// Monic gcd (zero when both inputs are zero).
inline Poly gcd(Poly a, Poly b)
{
    while (!b.is_zero()) {
        Poly r = a.divmod(b).second;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

} // namespace cyclo
