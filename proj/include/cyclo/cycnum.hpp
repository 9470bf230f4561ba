#pragma once

// Exact elements of cyclotomic fields Q(zeta_n) in canonical form.
//
// A CycNum stores the minimal conductor n (never 2 mod 4) and the power-basis
// coordinates 1, zeta_n, ..., zeta_n^{phi(n)-1} as integer numerators over a
// common positive denominator with trivial content. Because Z[zeta_n] is the
// ring of integers and the power basis is an integral basis, integrality is
// "denominator == 1".

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cyclo/errors.hpp"
#include "cyclo/number_theory.hpp"

namespace cyclo {

class CycNum;

/// zeta_order^exponent with the order made minimal (gcd(exponent, order) = 1).
class RootOfUnity {
public:
    RootOfUnity() = default;

    RootOfUnity(long order, long exponent)
    {
        if (order <= 0) {
            throw DomainError("root of unity order must be positive");
        }
        long e = nt::mod(exponent, order);
        long g = std::gcd(e, order);
        order_ = order / g;
        exponent_ = e / g;
    }

    long order() const { return order_; }
    long exponent() const { return exponent_; }

    CycNum value() const;

    RootOfUnity operator*(const RootOfUnity& o) const
    {
        long m = nt::lcm(order_, o.order_);
        return {m, exponent_ * (m / order_) + o.exponent_ * (m / o.order_)};
    }

    RootOfUnity inverse() const { return {order_, -exponent_}; }

    auto operator<=>(const RootOfUnity&) const = default;

private:
    long order_ = 1;
    long exponent_ = 0;
};

namespace detail {

inline void reduce_mod_cyclotomic(std::vector<BigInt>& v, long n)
{
    auto cp = nt::cyclotomic_poly(n);
    const auto un = static_cast<std::size_t>(n);
    if (v.size() > un) {
        for (std::size_t i = un; i < v.size(); ++i) {
            if (v[i] != 0) {
                v[i % un] += v[i];
            }
        }
        v.resize(un);
    }
    const long phi = cp->phi;
    for (long k = static_cast<long>(v.size()) - 1; k >= phi; --k) {
        if (v[k] == 0) {
            continue;
        }
        // x^k = x^{k-phi} * x^phi and x^phi = -sum(tail).
        BigInt c = v[k];
        for (auto [i, coef] : cp->tail) {
            BigInt& dst = v[k - phi + i];
            if (coef > 0) {
                mpz_submul_ui(dst.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(coef));
            } else {
                mpz_addmul_ui(dst.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(-coef));
            }
        }
        v[k] = 0;
    }
    v.resize(static_cast<std::size_t>(phi));
}

inline void remove_content(std::vector<BigInt>& num, BigInt& den)
{
    if (den < 0) {
        den = -den;
        for (auto& c : num) {
            c = -c;
        }
    }
    BigInt g = den;
    for (const auto& c : num) {
        if (g == 1) {
            break;
        }
        if (c != 0) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        }
    }
    if (g != 1) {
        den /= g;
        for (auto& c : num) {
            mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        }
    }
}

inline bool all_zero(const std::vector<BigInt>& v)
{
    return std::all_of(v.begin(), v.end(), [](const BigInt& c) { return c == 0; });
}

/// Integer coordinates of sum_j v[j] zeta_n^j, re-expressed at conductor N (n | N).
inline std::vector<BigInt> embed_numerators(const std::vector<BigInt>& v, long n, long N)
{
    if (n == N) {
        return v;
    }
    const long step = N / n;
    std::vector<BigInt> out(static_cast<std::size_t>(N));
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (v[j] != 0) {
            out[j * step] = v[j];
        }
    }
    reduce_mod_cyclotomic(out, N);
    return out;
}

struct TorsionTable {
    long n = 1;
    long order = 2; // lcm(2, n)
    std::vector<std::vector<long long>> coords; // coords[j] = zeta_order^j at conductor n
    std::unordered_map<std::string, long> index;
};

inline std::string torsion_key(std::span<const long long> v)
{
    return {reinterpret_cast<const char*>(v.data()), v.size() * sizeof(long long)};
}

inline std::shared_ptr<const TorsionTable> torsion_table(long n)
{
    static std::mutex mutex;
    static std::map<long, std::shared_ptr<const TorsionTable>> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(n); it != cache.end()) {
            return it->second;
        }
    }
    auto cp = nt::cyclotomic_poly(n);
    const long phi = cp->phi;
    std::vector<std::vector<long long>> powers; // zeta_n^i, i < n
    std::vector<long long> cur(static_cast<std::size_t>(phi), 0);
    cur[0] = 1;
    for (long i = 0; i < n; ++i) {
        powers.push_back(cur);
        long long top = cur[phi - 1];
        for (long j = phi - 1; j > 0; --j) {
            cur[j] = cur[j - 1];
        }
        cur[0] = 0;
        if (phi == 1) {
            // n = 1 or 2 never reach here with a meaningful shift; Q is 1-dimensional.
            cur[0] = top * (n == 1 ? 1 : -1);
            continue;
        }
        if (top != 0) {
            for (auto [k, coef] : cp->tail) {
                cur[k] -= top * coef;
            }
        }
    }
    auto table = std::make_shared<TorsionTable>();
    table->n = n;
    table->order = nt::lcm(2, n);
    for (long j = 0; j < table->order; ++j) {
        std::vector<long long> v;
        if (table->order == n) {
            v = powers[j];
        } else {
            // zeta_{2n}^j = (-1)^j zeta_n^{j (n+1)/2}
            v = powers[nt::mod(j * ((n + 1) / 2), n)];
            if (j % 2 == 1) {
                for (auto& c : v) {
                    c = -c;
                }
            }
        }
        table->index.emplace(torsion_key(v), j);
        table->coords.push_back(std::move(v));
    }
    std::lock_guard lock(mutex);
    return cache.emplace(n, std::move(table)).first->second;
}

} // namespace detail

class CycNum {
public:
    CycNum() : num_(1) {}
    CycNum(long v) : num_{BigInt(v)} {}
    CycNum(int v) : num_{BigInt(v)} {}
    CycNum(const BigInt& v) : num_{v} {}

    CycNum(const BigRational& q) : num_{BigInt(q.get_num())}, den_(q.get_den()) {}

    /// zeta_order^exponent.
    static CycNum zeta(long order, long exponent = 1)
    {
        if (order <= 0) {
            throw DomainError("root of unity order must be positive");
        }
        return from_exponents(order, {{exponent, BigRational(1)}});
    }

    /// sum of coefficient * zeta_n^exponent over the given terms.
    static CycNum from_exponents(long n, const std::vector<std::pair<long, BigRational>>& terms)
    {
        check_conductor(n);
        BigInt den = 1;
        for (const auto& [e, c] : terms) {
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
        }
        std::vector<BigInt> v(static_cast<std::size_t>(n));
        for (const auto& [e, c] : terms) {
            v[static_cast<std::size_t>(nt::mod(e, n))] += BigInt(c.get_num()) * (den / BigInt(c.get_den()));
        }
        detail::reduce_mod_cyclotomic(v, n);
        return make(n, std::move(v), std::move(den));
    }

    /// Power-basis coordinates at an arbitrary conductor n.
    static CycNum from_coords(long n, std::span<const BigRational> coords)
    {
        check_conductor(n);
        std::vector<std::pair<long, BigRational>> terms;
        for (std::size_t j = 0; j < coords.size(); ++j) {
            if (coords[j] != 0) {
                terms.emplace_back(static_cast<long>(j), coords[j]);
            }
        }
        return from_exponents(n, terms);
    }

    long conductor() const { return n_; }
    long degree() const { return static_cast<long>(num_.size()); }
    const std::vector<BigInt>& numerators() const { return num_; }
    const BigInt& denominator() const { return den_; }

    std::vector<BigRational> coords() const
    {
        std::vector<BigRational> out;
        out.reserve(num_.size());
        for (const auto& c : num_) {
            BigRational q(c, den_);
            q.canonicalize();
            out.push_back(q);
        }
        return out;
    }

    bool is_zero() const { return n_ == 1 && num_[0] == 0; }
    bool is_one() const { return n_ == 1 && num_[0] == 1 && den_ == 1; }
    bool is_rational() const { return n_ == 1; }
    bool is_integral() const { return den_ == 1; }

    BigRational to_rational() const
    {
        if (!is_rational()) {
            throw DomainError("value is not rational");
        }
        BigRational q(num_[0], den_);
        q.canonicalize();
        return q;
    }

    /// Power-basis coordinates of this value inside Q(zeta_m).
    std::vector<BigRational> embed(long m) const
    {
        if (m <= 0 || m % n_ != 0) {
            throw DomainError("conductor " + std::to_string(m) + " is not a multiple of the minimal conductor " +
                              std::to_string(n_));
        }
        check_conductor(m);
        auto v = detail::embed_numerators(num_, n_, m);
        std::vector<BigRational> out;
        for (auto& c : v) {
            BigRational q(c, den_);
            q.canonicalize();
            out.push_back(q);
        }
        return out;
    }

    /// The automorphism zeta_n -> zeta_n^t, gcd(t, n) = 1.
    CycNum galois(long t) const
    {
        if (std::gcd(nt::mod(t, n_), n_) != 1 && n_ > 1) {
            throw DomainError("galois exponent must be a unit modulo the conductor");
        }
        if (n_ == 1) {
            return *this;
        }
        std::vector<BigInt> v(static_cast<std::size_t>(n_));
        for (std::size_t j = 0; j < num_.size(); ++j) {
            if (num_[j] != 0) {
                v[static_cast<std::size_t>(nt::mod(static_cast<long>(j) * t, n_))] = num_[j];
            }
        }
        detail::reduce_mod_cyclotomic(v, n_);
        CycNum r;
        r.n_ = n_;
        r.num_ = std::move(v);
        r.den_ = den_;
        detail::remove_content(r.num_, r.den_);
        return r;
    }

    CycNum complex_conjugate() const { return galois(-1); }

    /// sigma_t(a) for t in (Z/nZ)^x ascending; length phi(n).
    std::vector<CycNum> conjugates() const
    {
        std::vector<CycNum> out;
        for (long t = 1; t <= std::max(1L, n_ - 1); ++t) {
            if (std::gcd(t, n_) == 1) {
                out.push_back(galois(t));
            }
        }
        return out;
    }

    std::optional<RootOfUnity> as_root_of_unity() const
    {
        if (is_zero() || !is_integral()) {
            return std::nullopt;
        }
        auto table = detail::torsion_table(n_);
        std::vector<long long> key;
        key.reserve(num_.size());
        for (const auto& c : num_) {
            if (!c.fits_slong_p()) {
                return std::nullopt;
            }
            key.push_back(c.get_si());
        }
        auto it = table->index.find(detail::torsion_key(key));
        if (it == table->index.end()) {
            return std::nullopt;
        }
        return RootOfUnity(table->order, it->second);
    }

    CycNum inverse() const;

    CycNum pow(long e) const
    {
        if (e < 0) {
            return inverse().pow(-e);
        }
        CycNum result(1), base = *this;
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

    friend CycNum operator+(const CycNum& a, const CycNum& b) { return combine(a, b, false); }
    friend CycNum operator-(const CycNum& a, const CycNum& b) { return combine(a, b, true); }

    friend CycNum operator-(const CycNum& a)
    {
        CycNum r = a;
        for (auto& c : r.num_) {
            c = -c;
        }
        return r;
    }

    friend CycNum operator*(const CycNum& a, const CycNum& b)
    {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        if (a.n_ == 1 || b.n_ == 1) {
            const CycNum& scalar = a.n_ == 1 ? a : b;
            const CycNum& other = a.n_ == 1 ? b : a;
            CycNum r;
            r.n_ = other.n_;
            r.num_ = other.num_;
            for (auto& c : r.num_) {
                c *= scalar.num_[0];
            }
            r.den_ = other.den_ * scalar.den_;
            detail::remove_content(r.num_, r.den_);
            return r;
        }
        const long N = nt::lcm(a.n_, b.n_);
        check_conductor(N);
        auto x = detail::embed_numerators(a.num_, a.n_, N);
        auto y = detail::embed_numerators(b.num_, b.n_, N);
        std::vector<BigInt> prod(x.size() + y.size() - 1);
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (x[i] == 0) {
                continue;
            }
            for (std::size_t j = 0; j < y.size(); ++j) {
                if (y[j] != 0) {
                    mpz_addmul(prod[i + j].get_mpz_t(), x[i].get_mpz_t(), y[j].get_mpz_t());
                }
            }
        }
        detail::reduce_mod_cyclotomic(prod, N);
        return make(N, std::move(prod), a.den_ * b.den_);
    }

    friend CycNum operator/(const CycNum& a, const CycNum& b) { return a * b.inverse(); }

    CycNum& operator+=(const CycNum& o) { return *this = *this + o; }
    CycNum& operator-=(const CycNum& o) { return *this = *this - o; }
    CycNum& operator*=(const CycNum& o) { return *this = *this * o; }
    CycNum& operator/=(const CycNum& o) { return *this = *this / o; }

    friend bool operator==(const CycNum& a, const CycNum& b)
    {
        return a.n_ == b.n_ && a.den_ == b.den_ && a.num_ == b.num_;
    }

    std::size_t hash() const
    {
        std::size_t h = std::hash<long>{}(n_);
        auto mix = [&h](const BigInt& z) {
            h ^= std::hash<long>{}(mpz_get_si(z.get_mpz_t())) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        };
        mix(den_);
        for (const auto& c : num_) {
            mix(c);
        }
        return h;
    }

private:
    static void check_conductor(long n)
    {
        if (n <= 0) {
            throw DomainError("conductor must be positive");
        }
        if (n > max_conductor) {
            throw ResourceError("conductor " + std::to_string(n) + " exceeds the supported maximum");
        }
    }

    static CycNum combine(const CycNum& a, const CycNum& b, bool subtract)
    {
        const long N = nt::lcm(a.n_, b.n_);
        check_conductor(N);
        auto x = detail::embed_numerators(a.num_, a.n_, N);
        auto y = detail::embed_numerators(b.num_, b.n_, N);
        BigInt den;
        if (a.den_ == b.den_) {
            den = a.den_;
            for (std::size_t i = 0; i < x.size(); ++i) {
                subtract ? x[i] -= y[i] : x[i] += y[i];
            }
        } else {
            den = a.den_ * b.den_;
            for (std::size_t i = 0; i < x.size(); ++i) {
                x[i] *= b.den_;
                subtract ? mpz_submul(x[i].get_mpz_t(), y[i].get_mpz_t(), a.den_.get_mpz_t())
                         : mpz_addmul(x[i].get_mpz_t(), y[i].get_mpz_t(), a.den_.get_mpz_t());
            }
        }
        return make(N, std::move(x), std::move(den));
    }

    /// Builds a canonical value from reduced numerators at conductor n.
    static CycNum make(long n, std::vector<BigInt> num, BigInt den)
    {
        CycNum r;
        if (detail::all_zero(num)) {
            return r;
        }
        detail::remove_content(num, den);
        while (true) {
            bool dropped = false;
            for (long p : nt::prime_divisors(n)) {
                if (auto lower = descend(n, num, p)) {
                    num = std::move(*lower);
                    n /= p;
                    dropped = true;
                    break;
                }
            }
            if (!dropped) {
                break;
            }
        }
        // Descent through p-1 may introduce a content factor.
        detail::remove_content(num, den);
        r.n_ = n;
        r.num_ = std::move(num);
        r.den_ = std::move(den);
        return r;
    }

    /// Coordinates over Q(zeta_{n/p}) times a common integer scale, when the
    /// element lies in that subfield. The returned vector is exact: the scale is
    /// folded back so the denominator is unchanged.
    static std::optional<std::vector<BigInt>> descend(long n, const std::vector<BigInt>& num, long p)
    {
        const long m = n / p;
        const long phi_m = nt::totient(m);
        if (m % p == 0) {
            // Phi_n(x) = Phi_m(x^p): coordinates split by residue mod p.
            for (std::size_t j = 0; j < num.size(); ++j) {
                if (j % p != 0 && num[j] != 0) {
                    return std::nullopt;
                }
            }
            std::vector<BigInt> out(static_cast<std::size_t>(phi_m));
            for (long j = 0; j < phi_m; ++j) {
                out[j] = num[j * p];
            }
            return out;
        }
        // p exactly divides n: candidate = Tr_{n/m}(a) / (p - 1), then confirm by embedding.
        // zeta_n^k = zeta_p^{k u} zeta_m^{k v} with u m + v p = 1.
        const long u = nt::inverse_mod(m % p, p);
        const long v = (1 - u * m) / p;
        std::vector<BigInt> tr(static_cast<std::size_t>(m));
        for (std::size_t k = 0; k < num.size(); ++k) {
            if (num[k] == 0) {
                continue;
            }
            const auto slot = static_cast<std::size_t>(nt::mod(static_cast<long>(k) * v, m));
            if (static_cast<long>(k) % p == 0) {
                mpz_addmul_ui(tr[slot].get_mpz_t(), num[k].get_mpz_t(), static_cast<unsigned long>(p - 1));
            } else {
                tr[slot] -= num[k];
            }
        }
        detail::reduce_mod_cyclotomic(tr, m);
        if (p == 2) {
            return tr;
        }
        // tr = (p - 1) * candidate; compare (p - 1) * a with the embedding of tr.
        for (const auto& c : tr) {
            if (!mpz_divisible_ui_p(c.get_mpz_t(), static_cast<unsigned long>(p - 1))) {
                return std::nullopt;
            }
        }
        for (auto& c : tr) {
            mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(p - 1));
        }
        auto back = detail::embed_numerators(tr, m, n);
        if (back != num) {
            return std::nullopt;
        }
        return tr;
    }

    long n_ = 1;
    std::vector<BigInt> num_;
    BigInt den_ = 1;
};

namespace detail {

using QPoly = std::vector<BigRational>;

inline void trim(QPoly& p)
{
    while (!p.empty() && p.back() == 0) {
        p.pop_back();
    }
}

inline QPoly sub_mul(const QPoly& a, const QPoly& q, const QPoly& b)
{
    // a - q*b
    QPoly out = a;
    if (out.size() < q.size() + b.size()) {
        out.resize(q.size() + b.size());
    }
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (q[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] -= q[i] * b[j];
        }
    }
    trim(out);
    return out;
}

inline std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b)
{
    QPoly q;
    if (a.size() >= b.size()) {
        q.assign(a.size() - b.size() + 1, BigRational(0));
    }
    const BigRational& lead = b.back();
    while (a.size() >= b.size() && !a.empty()) {
        std::size_t shift = a.size() - b.size();
        BigRational c = a.back() / lead;
        q[shift] = c;
        for (std::size_t j = 0; j < b.size(); ++j) {
            a[shift + j] -= c * b[j];
        }
        a.back() = 0;
        trim(a);
    }
    trim(q);
    return {q, a};
}

} // namespace detail

inline CycNum CycNum::inverse() const
{
    if (is_zero()) {
        throw DivisionByZero();
    }
    if (n_ == 1) {
        return CycNum(BigRational(den_, num_[0]));
    }
    // Extended Euclid of the numerator polynomial against Phi_n over Q.
    auto cp = nt::cyclotomic_poly(n_);
    detail::QPoly r0, r1, s0, s1{BigRational(1)};
    for (auto c : cp->coeffs) {
        r0.emplace_back(BigInt(static_cast<long>(c)));
    }
    for (const auto& c : num_) {
        r1.emplace_back(c);
    }
    detail::trim(r1);
    while (r1.size() > 1) {
        auto [q, r] = detail::divmod(r0, r1);
        auto s = detail::sub_mul(s0, q, s1);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    // s1 * num == r1[0] (mod Phi_n), so a^{-1} = den * s1 / r1[0].
    BigRational scale = BigRational(den_) / r1[0];
    for (auto& c : s1) {
        c *= scale;
    }
    return from_coords(n_, s1);
}

inline CycNum RootOfUnity::value() const { return CycNum::zeta(order_, exponent_); }

inline std::optional<RootOfUnity> is_root_of_unity(const CycNum& a) { return a.as_root_of_unity(); }

inline bool is_algebraic_integer(const CycNum& a) { return a.is_integral(); }

inline std::vector<BigRational> embed_at_conductor(const CycNum& a, long m) { return a.embed(m); }

inline std::vector<CycNum> conjugates(const CycNum& a) { return a.conjugates(); }

/// Least positive integer D with D * a integral.
inline BigInt integrality_denominator(const CycNum& a) { return a.denominator(); }

} // namespace cyclo

template <>
struct std::hash<cyclo::CycNum> {
    std::size_t operator()(const cyclo::CycNum& a) const { return a.hash(); }
};
