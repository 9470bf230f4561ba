#pragma once

// Rational functions in lowest terms, Moebius maps, composition and shape tests.

#include <algorithm>
#include <cmath>
#include <optional>
#include <utility>

#include "cyclo/laurent.hpp"

namespace cyclo {

class RatFunc {
public:
    RatFunc() : den_(1) {}
    RatFunc(const CycNum& c) : num_(c), den_(1) {}
    RatFunc(long c) : RatFunc(CycNum(c)) {}
    RatFunc(const Poly& p) : num_(p), den_(1) {}

    /// p/q reduced to coprime form with monic denominator.
    RatFunc(const Poly& p, const Poly& q)
    {
        if (q.is_zero()) {
            throw DivisionByZero("zero denominator");
        }
        if (p.is_zero()) {
            num_ = Poly();
            den_ = Poly(1);
            return;
        }
        Poly g = gcd(p, q);
        if (g.degree() > 0) {
            num_ = p.divmod(g).first;
            den_ = q.divmod(g).first;
        } else {
            num_ = p;
            den_ = q;
        }
        normalize_lead();
    }

    /// Accepts p/q already known to be coprime; only fixes the leading coefficient.
    static RatFunc coprime(Poly p, Poly q)
    {
        if (q.is_zero()) {
            throw DivisionByZero("zero denominator");
        }
        RatFunc r;
        r.num_ = std::move(p);
        r.den_ = std::move(q);
        if (r.num_.is_zero()) {
            r.den_ = Poly(1);
        }
        r.normalize_lead();
        return r;
    }

    static RatFunc x() { return RatFunc(Poly::x()); }

    static RatFunc from_laurent(const LaurentPoly& l)
    {
        auto [p, shift] = l.as_shifted_poly();
        if (shift >= 0) {
            return RatFunc(p * Poly::monomial(CycNum(1), shift));
        }
        return coprime(p, Poly::monomial(CycNum(1), -shift));
    }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    long degree() const { return std::max({num_.degree(), den_.degree(), 0L}); }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
    bool is_polynomial() const { return den_.degree() == 0; }

    std::optional<CycNum> constant_value() const
    {
        if (!is_constant()) {
            return std::nullopt;
        }
        return num_[0];
    }

    /// h(a), or none at a pole.
    std::optional<CycNum> evaluate(const CycNum& a) const
    {
        CycNum d = den_.evaluate(a);
        if (d.is_zero()) {
            return std::nullopt;
        }
        return num_.evaluate(a) / d;
    }

    RatFunc pow(long e) const
    {
        if (e >= 0) {
            return coprime(num_.pow(e), den_.pow(e));
        }
        if (num_.is_zero()) {
            throw DivisionByZero("zero raised to a negative power");
        }
        return coprime(den_.pow(-e), num_.pow(-e));
    }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b)
    {
        if (a.den_ == b.den_) {
            return RatFunc(a.num_ + b.num_, a.den_);
        }
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }

    friend RatFunc operator-(const RatFunc& a) { return coprime(-a.num_, a.den_); }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

    friend RatFunc operator*(const RatFunc& a, const RatFunc& b)
    {
        if (a.is_polynomial() && b.is_polynomial()) {
            return RatFunc(a.num_ * b.num_);
        }
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }

    friend RatFunc operator/(const RatFunc& a, const RatFunc& b)
    {
        if (b.num_.is_zero()) {
            throw DivisionByZero("division by the zero function");
        }
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }

    friend bool operator==(const RatFunc& a, const RatFunc& b) = default;

private:
    void normalize_lead()
    {
        if (!den_.lead().is_one()) {
            CycNum inv = den_.lead().inverse();
            num_ = num_.scaled(inv);
            den_ = den_.scaled(inv);
        }
    }

    Poly num_;
    Poly den_;
};

/// h1(h2(x)). Throws DomainError when a constant h2 lands on a pole of h1.
inline RatFunc compose(const RatFunc& h1, const RatFunc& h2)
{
    const long d = h1.degree();
    const Poly& p1 = h1.num();
    const Poly& q1 = h1.den();
    const Poly& p2 = h2.num();
    const Poly& q2 = h2.den();
    if (h1.is_polynomial() && h2.is_polynomial()) {
        return RatFunc(p1.compose(p2));
    }
    // Homogeneous substitution: P(p2, q2) / Q(p2, q2), coprime when h2 is nonconstant.
    std::vector<Poly> p2pow{Poly(1)}, q2pow{Poly(1)};
    for (long i = 1; i <= d; ++i) {
        p2pow.push_back(p2pow.back() * p2);
        q2pow.push_back(q2pow.back() * q2);
    }
    Poly N, D;
    for (long i = 0; i <= d; ++i) {
        Poly mono = p2pow[static_cast<std::size_t>(i)] * q2pow[static_cast<std::size_t>(d - i)];
        if (!p1[i].is_zero()) {
            N = N + mono.scaled(p1[i]);
        }
        if (!q1[i].is_zero()) {
            D = D + mono.scaled(q1[i]);
        }
    }
    if (D.is_zero()) {
        throw DomainError("composition evaluates at a pole");
    }
    if (h2.is_constant()) {
        return RatFunc(N, D);
    }
    return RatFunc::coprime(N, D);
}

/// Default ceiling on the projected monomial count of an iterate.
inline constexpr double default_monomial_ceiling = 1e6;

/// h composed with itself n times; iterate(h, 0) = x.
inline RatFunc iterate(const RatFunc& h, long n, double ceiling = default_monomial_ceiling)
{
    if (n < 0) {
        throw DomainError("iteration count must be nonnegative");
    }
    const double projected = (std::pow(static_cast<double>(h.degree()), static_cast<double>(n)) + 1) * 2;
    if (projected > ceiling) {
        throw ResourceError("iterate exceeds the monomial ceiling");
    }
    RatFunc r = RatFunc::x();
    for (long i = 0; i < n; ++i) {
        r = compose(h, r);
    }
    return r;
}

inline long term_count(const RatFunc& h) { return h.num().term_count() + h.den().term_count(); }

/// Distinct poles on the projective line, counted without locating them.
inline long distinct_pole_count(const RatFunc& h)
{
    const Poly& q = h.den();
    long finite = q.degree() - gcd(q, q.derivative()).degree();
    return finite + (h.num().degree() > q.degree() ? 1 : 0);
}

inline Poly chebyshev(long d)
{
    if (d < 1) {
        throw DomainError("Chebyshev degree must be positive");
    }
    Poly prev(2), cur = Poly::x(); // T_0 = 2 in this normalization
    for (long k = 1; k < d; ++k) {
        Poly next = Poly::x() * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// Succeeds exactly when the denominator is a monomial.
inline std::optional<LaurentPoly> to_laurent(const RatFunc& h)
{
    if (!h.den().is_monomial()) {
        return std::nullopt;
    }
    return LaurentPoly::from_poly(h.num(), -h.den().degree());
}

class Mobius {
public:
    Mobius(CycNum a, CycNum b, CycNum c, CycNum d) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d))
    {
        if ((a_ * d_ - b_ * c_).is_zero()) {
            throw DomainError("Moebius determinant vanishes");
        }
    }

    static Mobius identity() { return {CycNum(1), CycNum(0), CycNum(0), CycNum(1)}; }
    /// x -> s*x + t
    static Mobius affine(const CycNum& s, const CycNum& t) { return {s, t, CycNum(0), CycNum(1)}; }

    const CycNum& a() const { return a_; }
    const CycNum& b() const { return b_; }
    const CycNum& c() const { return c_; }
    const CycNum& d() const { return d_; }

    bool is_affine() const { return c_.is_zero(); }

    Mobius inverse() const { return {d_, -b_, -c_, a_}; }

    /// this(o(x)).
    Mobius after(const Mobius& o) const
    {
        return {a_ * o.a_ + b_ * o.c_, a_ * o.b_ + b_ * o.d_, c_ * o.a_ + d_ * o.c_, c_ * o.b_ + d_ * o.d_};
    }

    RatFunc as_ratfunc() const { return RatFunc(Poly(std::vector<CycNum>{b_, a_}), Poly(std::vector<CycNum>{d_, c_})); }

    /// Same projective map, up to scaling of the matrix.
    friend bool operator==(const Mobius& m, const Mobius& n)
    {
        return (m.a_ * n.b_ - m.b_ * n.a_).is_zero() && (m.a_ * n.c_ - m.c_ * n.a_).is_zero() &&
               (m.a_ * n.d_ - m.d_ * n.a_).is_zero() && (m.b_ * n.c_ - m.c_ * n.b_).is_zero() &&
               (m.b_ * n.d_ - m.d_ * n.b_).is_zero() && (m.c_ * n.d_ - m.d_ * n.c_).is_zero();
    }

private:
    CycNum a_, b_, c_, d_;
};

/// m^-1 o h o m.
inline RatFunc mobius_conjugate(const RatFunc& h, const Mobius& m)
{
    return compose(m.inverse().as_ratfunc(), compose(h, m.as_ratfunc()));
}

struct BinomialShape {
    Mobius lambda;
    CycNum a;
    CycNum b;
    long n = 1;
};

struct TrinomialShape {
    CycNum a;
    CycNum b;
    CycNum c;
    long n = 1;
};

/// Decides whether q = lambda(a x^n + b x^-n) for a Moebius lambda.
inline std::optional<BinomialShape> is_binomial_shape(const RatFunc& q)
{
    if (q.is_constant()) {
        return std::nullopt;
    }
    long g = 0;
    for (const Poly* p : {&q.num(), &q.den()}) {
        for (long i = 1; i <= p->degree(); ++i) {
            if (!(*p)[i].is_zero()) {
                g = std::gcd(g, i);
            }
        }
    }
    const long k = q.degree() / g;
    const Poly& N = q.num();
    const Poly& D = q.den();
    if (k == 1) {
        Mobius lambda(N[g], N[0], D[g], D[0]);
        return BinomialShape{lambda, CycNum(1), CycNum(0), g};
    }
    if (k != 2) {
        return std::nullopt;
    }
    // lambda(u) = (alpha u + beta)/(gamma u + delta) with u = (a y^2 + b)/y, y = x^g.
    CycNum a = N[2 * g], b = N[0];
    if (a.is_zero() && b.is_zero()) {
        a = D[2 * g];
        b = D[0];
    }
    if (a.is_zero() || b.is_zero()) {
        return std::nullopt;
    }
    if (!(N[2 * g] * b - N[0] * a).is_zero() || !(D[2 * g] * b - D[0] * a).is_zero()) {
        return std::nullopt;
    }
    CycNum alpha = N[2 * g] / a, gamma = D[2 * g] / a;
    if ((alpha * D[g] - N[g] * gamma).is_zero()) {
        return std::nullopt;
    }
    Mobius lambda(alpha, N[g], gamma, D[g]);
    LaurentPoly u = LaurentPoly::monomial(a, g) + LaurentPoly::monomial(b, -g);
    if (compose(lambda.as_ratfunc(), RatFunc::from_laurent(u)) != q) {
        return std::nullopt;
    }
    return BinomialShape{lambda, a, b, g};
}

/// Matches a x^n + b + c x^-n with n > 0.
inline std::optional<TrinomialShape> is_trinomial_shape(const LaurentPoly& q)
{
    if (q.is_constant()) {
        return std::nullopt;
    }
    const long n = std::max(q.max_exponent(), -q.min_exponent());
    for (const auto& [k, c] : q.terms()) {
        if (k != n && k != 0 && k != -n) {
            return std::nullopt;
        }
    }
    return TrinomialShape{q.coeff(n), q.coeff(0), q.coeff(-n), n};
}

} // namespace cyclo
