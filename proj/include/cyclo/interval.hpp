#pragma once

// Outward-rounded real and complex intervals over MPFR.

#include <algorithm>
#include <cstdio>
#include <string>
#include <utility>

#include <gmpxx.h>
#include <mpfr.h>

#include "cyclo/number_theory.hpp"

namespace cyclo {

/// Owning MPFR value with value semantics.
class BigFloat {
public:
    explicit BigFloat(long precision = 64)
    {
        mpfr_init2(v_, precision);
        mpfr_set_zero(v_, 1);
    }

    BigFloat(const BigFloat& other)
    {
        mpfr_init2(v_, mpfr_get_prec(other.v_));
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }

    BigFloat(BigFloat&& other) noexcept
    {
        mpfr_init2(v_, MPFR_PREC_MIN);
        mpfr_swap(v_, other.v_);
    }

    BigFloat& operator=(const BigFloat& other)
    {
        if (this != &other) {
            mpfr_set_prec(v_, mpfr_get_prec(other.v_));
            mpfr_set(v_, other.v_, MPFR_RNDN);
        }
        return *this;
    }

    BigFloat& operator=(BigFloat&& other) noexcept
    {
        mpfr_swap(v_, other.v_);
        return *this;
    }

    ~BigFloat() { mpfr_clear(v_); }

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }
    long precision() const { return mpfr_get_prec(v_); }

    double to_double(mpfr_rnd_t rnd = MPFR_RNDN) const { return mpfr_get_d(v_, rnd); }

    /// Exact dyadic value.
    BigRational to_rational() const
    {
        BigRational q;
        mpfr_get_q(q.get_mpq_t(), v_);
        return q;
    }

    /// Fixed-point decimal text rounded in the given direction.
    std::string to_decimal(int digits, mpfr_rnd_t rnd) const
    {
        char* buf = nullptr;
        const char* fmt = rnd == MPFR_RNDD ? "%.*RDf" : rnd == MPFR_RNDU ? "%.*RUf" : "%.*RNf";
        mpfr_asprintf(&buf, fmt, digits, v_);
        std::string out(buf);
        mpfr_free_str(buf);
        return out;
    }

    int compare(const BigRational& q) const { return mpfr_cmp_q(v_, q.get_mpq_t()); }
    int compare(const BigFloat& o) const { return mpfr_cmp(v_, o.v_); }

private:
    mpfr_t v_;
};

/// Closed real interval [lo, hi] with outward rounding on every operation.
class Interval {
public:
    explicit Interval(long precision = 64) : lo_(precision), hi_(precision) {}

    static Interval point(const BigRational& q, long precision)
    {
        Interval r(precision);
        mpfr_set_q(r.lo_.get(), q.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(r.hi_.get(), q.get_mpq_t(), MPFR_RNDU);
        return r;
    }

    static Interval point(const BigInt& z, long precision)
    {
        Interval r(precision);
        mpfr_set_z(r.lo_.get(), z.get_mpz_t(), MPFR_RNDD);
        mpfr_set_z(r.hi_.get(), z.get_mpz_t(), MPFR_RNDU);
        return r;
    }

    static Interval of(BigFloat lo, BigFloat hi)
    {
        Interval r(lo.precision());
        r.lo_ = std::move(lo);
        r.hi_ = std::move(hi);
        return r;
    }

    const BigFloat& lo() const { return lo_; }
    const BigFloat& hi() const { return hi_; }
    BigFloat& lo() { return lo_; }
    BigFloat& hi() { return hi_; }
    long precision() const { return lo_.precision(); }

    bool contains_zero() const { return mpfr_sgn(lo_.get()) <= 0 && mpfr_sgn(hi_.get()) >= 0; }

    BigFloat width() const
    {
        BigFloat w(precision());
        mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
        return w;
    }

    friend Interval operator+(const Interval& a, const Interval& b)
    {
        Interval r(std::max(a.precision(), b.precision()));
        mpfr_add(r.lo_.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
        mpfr_add(r.hi_.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
        return r;
    }

    friend Interval operator-(const Interval& a, const Interval& b)
    {
        Interval r(std::max(a.precision(), b.precision()));
        mpfr_sub(r.lo_.get(), a.lo_.get(), b.hi_.get(), MPFR_RNDD);
        mpfr_sub(r.hi_.get(), a.hi_.get(), b.lo_.get(), MPFR_RNDU);
        return r;
    }

    friend Interval operator-(const Interval& a)
    {
        Interval r(a.precision());
        mpfr_neg(r.lo_.get(), a.hi_.get(), MPFR_RNDD);
        mpfr_neg(r.hi_.get(), a.lo_.get(), MPFR_RNDU);
        return r;
    }

    friend Interval operator*(const Interval& a, const Interval& b)
    {
        long prec = std::max(a.precision(), b.precision());
        Interval r(prec);
        BigFloat t(prec);
        const BigFloat* xs[2] = {&a.lo_, &a.hi_};
        const BigFloat* ys[2] = {&b.lo_, &b.hi_};
        bool first = true;
        for (auto* x : xs) {
            for (auto* y : ys) {
                mpfr_mul(t.get(), x->get(), y->get(), MPFR_RNDD);
                if (first || mpfr_less_p(t.get(), r.lo_.get())) {
                    mpfr_set(r.lo_.get(), t.get(), MPFR_RNDD);
                }
                mpfr_mul(t.get(), x->get(), y->get(), MPFR_RNDU);
                if (first || mpfr_greater_p(t.get(), r.hi_.get())) {
                    mpfr_set(r.hi_.get(), t.get(), MPFR_RNDU);
                }
                first = false;
            }
        }
        return r;
    }

    Interval scaled(const BigInt& z) const
    {
        Interval r(precision());
        if (z >= 0) {
            mpfr_mul_z(r.lo_.get(), lo_.get(), z.get_mpz_t(), MPFR_RNDD);
            mpfr_mul_z(r.hi_.get(), hi_.get(), z.get_mpz_t(), MPFR_RNDU);
        } else {
            mpfr_mul_z(r.lo_.get(), hi_.get(), z.get_mpz_t(), MPFR_RNDD);
            mpfr_mul_z(r.hi_.get(), lo_.get(), z.get_mpz_t(), MPFR_RNDU);
        }
        return r;
    }

    /// Division by a positive integer.
    Interval divided(const BigInt& positive) const
    {
        Interval r(precision());
        mpfr_div_z(r.lo_.get(), lo_.get(), positive.get_mpz_t(), MPFR_RNDD);
        mpfr_div_z(r.hi_.get(), hi_.get(), positive.get_mpz_t(), MPFR_RNDU);
        return r;
    }

    Interval square() const
    {
        Interval r(precision());
        if (mpfr_sgn(lo_.get()) >= 0) {
            mpfr_sqr(r.lo_.get(), lo_.get(), MPFR_RNDD);
            mpfr_sqr(r.hi_.get(), hi_.get(), MPFR_RNDU);
        } else if (mpfr_sgn(hi_.get()) <= 0) {
            mpfr_sqr(r.lo_.get(), hi_.get(), MPFR_RNDD);
            mpfr_sqr(r.hi_.get(), lo_.get(), MPFR_RNDU);
        } else {
            mpfr_set_zero(r.lo_.get(), 1);
            BigFloat t(precision());
            mpfr_sqr(r.hi_.get(), lo_.get(), MPFR_RNDU);
            mpfr_sqr(t.get(), hi_.get(), MPFR_RNDU);
            mpfr_max(r.hi_.get(), r.hi_.get(), t.get(), MPFR_RNDU);
        }
        return r;
    }

    /// Square root of an interval clipped to [0, inf).
    Interval sqrt() const
    {
        Interval r(precision());
        if (mpfr_sgn(lo_.get()) <= 0) {
            mpfr_set_zero(r.lo_.get(), 1);
        } else {
            mpfr_sqrt(r.lo_.get(), lo_.get(), MPFR_RNDD);
        }
        if (mpfr_sgn(hi_.get()) <= 0) {
            mpfr_set_zero(r.hi_.get(), 1);
        } else {
            mpfr_sqrt(r.hi_.get(), hi_.get(), MPFR_RNDU);
        }
        return r;
    }

    /// Division by an interval not containing zero.
    friend Interval operator/(const Interval& a, const Interval& b)
    {
        long prec = std::max(a.precision(), b.precision());
        Interval inv(prec);
        mpfr_ui_div(inv.lo_.get(), 1, b.hi_.get(), MPFR_RNDD);
        mpfr_ui_div(inv.hi_.get(), 1, b.lo_.get(), MPFR_RNDU);
        return a * inv;
    }

private:
    BigFloat lo_;
    BigFloat hi_;
};

struct ComplexInterval {
    Interval re;
    Interval im;

    explicit ComplexInterval(long precision = 64) : re(precision), im(precision) {}
    ComplexInterval(Interval r, Interval i) : re(std::move(r)), im(std::move(i)) {}

    friend ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b)
    {
        return {a.re + b.re, a.im + b.im};
    }

    friend ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b)
    {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }

    ComplexInterval scaled(const BigInt& z) const { return {re.scaled(z), im.scaled(z)}; }
    ComplexInterval divided(const BigInt& positive) const { return {re.divided(positive), im.divided(positive)}; }

    Interval abs() const { return (re.square() + im.square()).sqrt(); }
};

namespace detail {

/// Encloses cos and sin of the exact angle 2*pi*k/n.
inline ComplexInterval unit_root_enclosure(long k, long n, long precision)
{
    ComplexInterval out(precision);
    k %= n;
    if (k < 0) {
        k += n;
    }
    // Exact special angles.
    if (k == 0 || 2 * k == n || 4 * k == n || 4 * k == 3 * n) {
        long c = 0, s = 0;
        if (k == 0) {
            c = 1;
        } else if (2 * k == n) {
            c = -1;
        } else if (4 * k == n) {
            s = 1;
        } else {
            s = -1;
        }
        out.re = Interval::point(BigInt(c), precision);
        out.im = Interval::point(BigInt(s), precision);
        return out;
    }
    long work = precision + 8;
    BigFloat pi_lo(work), pi_hi(work), th_lo(work), th_hi(work), width(work);
    mpfr_const_pi(pi_lo.get(), MPFR_RNDD);
    mpfr_const_pi(pi_hi.get(), MPFR_RNDU);
    mpfr_mul_ui(th_lo.get(), pi_lo.get(), static_cast<unsigned long>(2 * k), MPFR_RNDD);
    mpfr_div_ui(th_lo.get(), th_lo.get(), static_cast<unsigned long>(n), MPFR_RNDD);
    mpfr_mul_ui(th_hi.get(), pi_hi.get(), static_cast<unsigned long>(2 * k), MPFR_RNDU);
    mpfr_div_ui(th_hi.get(), th_hi.get(), static_cast<unsigned long>(n), MPFR_RNDU);
    mpfr_sub(width.get(), th_hi.get(), th_lo.get(), MPFR_RNDU);

    // cos and sin are 1-Lipschitz: widen the enclosure at th_lo by the angle width.
    auto enclose = [&](auto fn, Interval& dst) {
        BigFloat lo(precision), hi(precision);
        fn(lo.get(), th_lo.get(), MPFR_RNDD);
        fn(hi.get(), th_lo.get(), MPFR_RNDU);
        mpfr_sub(lo.get(), lo.get(), width.get(), MPFR_RNDD);
        mpfr_add(hi.get(), hi.get(), width.get(), MPFR_RNDU);
        if (mpfr_cmp_si(lo.get(), -1) < 0) {
            mpfr_set_si(lo.get(), -1, MPFR_RNDD);
        }
        if (mpfr_cmp_si(hi.get(), 1) > 0) {
            mpfr_set_si(hi.get(), 1, MPFR_RNDU);
        }
        dst = Interval::of(std::move(lo), std::move(hi));
    };
    enclose(mpfr_cos, out.re);
    enclose(mpfr_sin, out.im);
    return out;
}

} // namespace detail
} // namespace cyclo
