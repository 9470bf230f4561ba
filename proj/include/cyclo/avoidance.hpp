#pragma once

// Monic normalization, escape radii, orbits, root-of-unity scans and avoidance verdicts.

#include <optional>
#include <string>
#include <vector>

#include "cyclo/witness.hpp"

namespace cyclo {

namespace detail {

/// Smallest multiple of 2^-grid_bits that is >= x.
inline BigRational round_up(const BigFloat& x, long grid_bits = 16)
{
    BigFloat t(x.precision() + grid_bits + 2);
    mpfr_mul_2si(t.get(), x.get(), grid_bits, MPFR_RNDU);
    mpfr_ceil(t.get(), t.get());
    BigInt n;
    mpfr_get_z(n.get_mpz_t(), t.get(), MPFR_RNDU);
    BigInt den;
    mpz_ui_pow_ui(den.get_mpz_t(), 2, static_cast<unsigned long>(grid_bits));
    BigRational q(n, den);
    q.canonicalize();
    return q;
}

/// Rational upper bound on house(a): exact for rationals.
inline BigRational house_upper_bound(const CycNum& a, long accuracy_bits)
{
    if (a.is_rational()) {
        return abs(a.to_rational());
    }
    return round_up(house(a, accuracy_bits).upper);
}

} // namespace detail

struct MonicNormalization {
    CycNum c;        // h(x) = c^-1 h_tilde(c x)
    RatFunc h_tilde; // numerator and denominator monic
    BigInt D;        // least positive integer making D c^-1 and D c^-1 u integral
    BigRational R;   // verified escape radius of h_tilde
};

struct EscapeCheck {
    BigRational R;
    BigRational numerator_factor;   // 1 - sum |p_i| R^(i-d)
    BigRational denominator_factor; // 1 + sum |q_i| R^(i-e)
};

/// Escape radius for a monic p/q with deg p >= deg q + 2.
///
/// Starts from R = 1 + 2 max(1, H), H bounding every coefficient house. For
/// |z| = r >= R at any embedding, |p(z)| >= r^d (1 - sum H_i R^(i-d)) and
/// |q(z)| <= r^e (1 + sum H_i R^(i-e)), so |h(z)| > |z| follows from
/// R^(d-e-1) * alpha > beta with alpha > 0; R doubles until that holds.
inline EscapeCheck escape_radius(const RatFunc& h_tilde, long accuracy_bits = 64)
{
    const Poly& p = h_tilde.num();
    const Poly& q = h_tilde.den();
    const long d = p.degree(), e = q.degree();
    if (d < e + 2) {
        throw DomainError("escape radius needs deg p > deg q + 1");
    }
    std::vector<BigRational> hp, hq;
    BigRational H = 1;
    for (long i = 0; i < d; ++i) {
        hp.push_back(detail::house_upper_bound(p[i], accuracy_bits));
        H = std::max(H, hp.back());
    }
    for (long i = 0; i < e; ++i) {
        hq.push_back(detail::house_upper_bound(q[i], accuracy_bits));
        H = std::max(H, hq.back());
    }
    BigRational R = 1 + 2 * H;
    while (true) {
        BigRational alpha = 1, beta = 1, Rinv = 1 / R;
        BigRational pw = 1;
        for (long i = d - 1; i >= 0; --i) {
            pw *= Rinv;
            alpha -= hp[static_cast<std::size_t>(i)] * pw;
        }
        pw = 1;
        for (long i = e - 1; i >= 0; --i) {
            pw *= Rinv;
            beta += hq[static_cast<std::size_t>(i)] * pw;
        }
        BigRational lhs = alpha;
        for (long k = 0; k < d - e - 1; ++k) {
            lhs *= R;
        }
        if (alpha > 0 && lhs > beta) {
            return {R, alpha, beta};
        }
        R *= 2;
    }
}

inline BigRational escape_radius(const MonicNormalization& norm, long accuracy_bits = 64)
{
    return escape_radius(norm.h_tilde, accuracy_bits).R;
}

inline MonicNormalization monic_normalize(const RatFunc& h, long accuracy_bits = 64)
{
    const Poly& p = h.num();
    const Poly& q = h.den();
    const long d = p.degree(), e = q.degree();
    if (d <= e + 1) {
        throw DomainError("monic normalization needs deg p > deg q + 1");
    }
    auto c = kth_root(p[d], d - e - 1);
    if (!c) {
        throw UnsupportedScaling("scaling constant has no supported cyclotomic root");
    }
    const CycNum cinv = c->inverse();
    const CycNum ainv = p[d].inverse();
    std::vector<CycNum> pt(static_cast<std::size_t>(d + 1)), qt(static_cast<std::size_t>(e + 1));
    CycNum cpow(1);
    for (long i = d; i >= 0; --i) { // p_i c^(d-i) / a_d
        pt[static_cast<std::size_t>(i)] = p[i] * cpow * ainv;
        cpow *= *c;
    }
    cpow = CycNum(1);
    for (long i = e; i >= 0; --i) { // q_i c^(e-i)
        qt[static_cast<std::size_t>(i)] = q[i] * cpow;
        cpow *= *c;
    }
    MonicNormalization out{*c, RatFunc::coprime(Poly(pt), Poly(qt)), BigInt(1), BigRational(0)};
    auto absorb = [&](const CycNum& v) { out.D = lcm(out.D, v.denominator()); };
    absorb(cinv);
    for (const auto& u : pt) {
        absorb(cinv * u);
    }
    for (const auto& u : qt) {
        absorb(cinv * u);
    }
    out.R = escape_radius(out.h_tilde, accuracy_bits).R;
    return out;
}

struct OrbitRecord {
    std::vector<CycNum> points;
    std::vector<HouseResult> houses;
    std::optional<BigInt> D;             // present when the degree gap holds
    std::vector<bool> integral_after_D;  // D h^j(a) integral; empty without D
    std::vector<PAVerdict> verdicts;
    std::vector<long> hit_indices;
    std::vector<long> undecided_indices;
    std::optional<long> pole_index; // h is undefined at points[pole_index]
};

inline OrbitRecord orbit(const RatFunc& h, const CycNum& a, long N, const BigRational& A, long accuracy_bits = 64)
{
    if (N < 0) {
        throw DomainError("orbit length must be nonnegative");
    }
    OrbitRecord r;
    if (h.num().degree() > h.den().degree() + 1) {
        try {
            r.D = monic_normalize(h, accuracy_bits).D;
        } catch (const UnsupportedScaling&) {
        }
    }
    CycNum cur = a;
    for (long j = 0;; ++j) {
        r.points.push_back(cur);
        r.houses.push_back(house(cur, accuracy_bits));
        if (r.D) {
            r.integral_after_D.push_back((CycNum(*r.D) * cur).is_integral());
        }
        PAVerdict v = in_PA(cur, A, accuracy_bits);
        r.verdicts.push_back(v);
        if (v == PAVerdict::member) {
            r.hit_indices.push_back(j);
        } else if (v == PAVerdict::undecided) {
            r.undecided_indices.push_back(j);
        }
        if (j == N) {
            break;
        }
        auto next = h.evaluate(cur);
        if (!next) {
            r.pole_index = j;
            break;
        }
        cur = *next;
    }
    return r;
}

/// house(a) <= bound, decided exactly on the boundary; none when undecided at the cap.
inline std::optional<bool> house_at_most(const CycNum& a, const BigRational& bound, long accuracy_bits = 64)
{
    if (a.is_rational()) {
        return abs(a.to_rational()) <= bound;
    }
    try {
        for (long bits = accuracy_bits;; bits *= 2) {
            HouseResult h = house(a, bits);
            if (h.upper.compare(bound) <= 0) {
                return true;
            }
            if (h.lower.compare(bound) > 0) {
                return false;
            }
            CycNum norm2 = a * a.complex_conjugate();
            if (norm2.is_rational() && norm2.to_rational() == bound * bound) {
                return true;
            }
        }
    } catch (const UndecidedAtCap&) {
        return std::nullopt;
    }
}

struct OrbitLemmaReport {
    MonicNormalization norm;
    BigRational house_c_inverse_upper; // rational upper bound on house(c^-1)
    BigRational T;                     // R * house(c^-1), replaces the unreproduced constant
    BigRational bound;                 // max(T, A)
    std::vector<CycNum> points;        // h^0(a) .. h^n(a)
    bool reached_n = true;             // false when the orbit hits a pole first
    std::optional<bool> premise_house; // house(h^n(a)) <= A
    bool premise_integral = false;     // h^n(a) integral
    bool house_check = true;           // house(h^j(a)) <= bound for j < n
    bool integral_check = true;        // D h^j(a) integral for j < n
    std::vector<long> house_undecided;
    std::vector<long> counterexamples; // indices j violating a bullet whose premise holds
};

/// Checks both bullets of the orbit lemma along the orbit of a. For the monic
/// model, a conjugate of c h^j(a) beyond R keeps growing, so every conjugate of
/// h^j(a) is at most max(R house(c^-1), A) when house(h^n(a)) <= A.
inline OrbitLemmaReport verify_orbit_lemma(const RatFunc& h, const CycNum& a, long n, const BigRational& A,
                                           long accuracy_bits = 64)
{
    if (n < 0) {
        throw DomainError("orbit length must be nonnegative");
    }
    OrbitLemmaReport r;
    r.norm = monic_normalize(h, accuracy_bits);
    r.house_c_inverse_upper = detail::house_upper_bound(r.norm.c.inverse(), accuracy_bits);
    r.T = r.norm.R * r.house_c_inverse_upper;
    r.bound = std::max(r.T, A);
    CycNum cur = a;
    r.points.push_back(cur);
    for (long j = 0; j < n; ++j) {
        auto next = h.evaluate(cur);
        if (!next) {
            r.reached_n = false;
            return r;
        }
        cur = *next;
        r.points.push_back(cur);
    }
    const CycNum& last = r.points.back();
    r.premise_house = house_at_most(last, A, accuracy_bits);
    r.premise_integral = last.is_integral();
    for (long j = 0; j < n; ++j) {
        const CycNum& v = r.points[static_cast<std::size_t>(j)];
        auto ok = house_at_most(v, r.bound, accuracy_bits);
        bool bad = false;
        if (!ok) {
            r.house_undecided.push_back(j);
        } else if (!*ok) {
            r.house_check = false;
            bad = r.premise_house.value_or(false);
        }
        if (!(CycNum(r.norm.D) * v).is_integral()) {
            r.integral_check = false;
            bad = bad || r.premise_integral;
        }
        if (bad) {
            r.counterexamples.push_back(j);
        }
    }
    return r;
}

struct ScanEntry {
    RootOfUnity xi;
    CycNum value;
    HouseResult house;
    PAVerdict verdict = PAVerdict::member;
};

struct ScanResult {
    std::vector<ScanEntry> hits;      // by (order, exponent)
    std::vector<ScanEntry> undecided; // membership unresolved at the cap
};

inline ScanResult scan_roots_of_unity(const RatFunc& h, long M, const BigRational& A, long accuracy_bits = 64)
{
    if (M < 1) {
        throw DomainError("M must be at least 1");
    }
    ScanResult out;
    for (long order = 1; order <= M; ++order) {
        for (long k = 0; k < order; ++k) {
            if (std::gcd(k, order) != 1) {
                continue;
            }
            RootOfUnity xi(order, k);
            auto v = h.evaluate(xi.value());
            if (!v || v->is_zero() || !v->is_integral()) {
                continue;
            }
            PAVerdict verdict = in_PA(*v, A, accuracy_bits);
            if (verdict == PAVerdict::nonmember) {
                continue;
            }
            ScanEntry e{xi, *v, house(*v, accuracy_bits), verdict};
            (verdict == PAVerdict::member ? out.hits : out.undecided).push_back(std::move(e));
        }
    }
    return out;
}

enum class VerdictKind { certified_avoiding, witness_found, unknown };

inline const char* to_string(VerdictKind k)
{
    switch (k) {
    case VerdictKind::certified_avoiding:
        return "certified_avoiding";
    case VerdictKind::witness_found:
        return "witness_found";
    default:
        return "unknown";
    }
}

struct Verdict {
    VerdictKind kind = VerdictKind::unknown;
    std::string reason;
    std::optional<Witness> witness;
    std::vector<std::string> diagnostics;
    long pole_count = 0;
    long budget = 0;
};

/// Poles first, then a bounded witness search within the budget, then the degree filter.
inline Verdict avoidance_verdict(const RatFunc& h, const BigRational& A, const LoxtonProfile& profile,
                                 const SearchGrid& grid = {})
{
    if (h.is_constant()) {
        throw DomainError("verdict needs a nonconstant h");
    }
    Verdict v;
    v.pole_count = distinct_pole_count(h);
    v.budget = profile.budget_for(A);
    if (v.pole_count > 2) {
        v.kind = VerdictKind::certified_avoiding;
        v.reason = "pole_count=" + std::to_string(v.pole_count);
        return v;
    }
    v.diagnostics.push_back("pole_count=" + std::to_string(v.pole_count));
    if (v.budget >= 1) {
        if (auto w = witness_search_deg2(h, v.budget, grid); w && is_A_short(*w, A, profile)) {
            v.kind = VerdictKind::witness_found;
            v.reason = "witness";
            v.witness = std::move(w);
            return v;
        }
    }
    v.diagnostics.push_back("no witness with deg S <= 2 and at most " + std::to_string(v.budget) +
                            " terms on grid M=" + std::to_string(grid.M) + " H=" + std::to_string(grid.H));
    BigInt threshold;
    std::string rule;
    if (h.is_polynomial()) {
        threshold = BigInt((2 * v.budget + 1) * (2 * v.budget + 1));
        rule = "(2*budget+1)^2";
    } else {
        mpz_ui_pow_ui(threshold.get_mpz_t(), 5, static_cast<unsigned long>(v.budget + 1));
        threshold *= 2016;
        rule = "2016*5^(budget+1)";
    }
    if (BigInt(h.degree()) > threshold) {
        v.diagnostics.push_back("degree " + std::to_string(h.degree()) + " exceeds " + rule + "=" + threshold.get_str() +
                                ": any short witness has deg S <= 2, so the search was shape-complete");
    } else {
        v.diagnostics.push_back("degree " + std::to_string(h.degree()) + " does not exceed " + rule + "=" +
                                threshold.get_str());
    }
    v.reason = "no_certificate";
    return v;
}

} // namespace cyclo
