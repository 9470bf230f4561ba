#include <cmath>
#include <complex>
#include <random>

#include <gtest/gtest.h>

#include "cyclo/house.hpp"
#include "cyclo/loxton.hpp"
#include "cyclo/roots.hpp"
#include "support.hpp"

namespace cyclo {
namespace {

CycNum z(long n, long k = 1) { return CycNum::zeta(n, k); }

std::vector<BigRational> q_vec(std::initializer_list<long> xs)
{
    std::vector<BigRational> out;
    for (long x : xs) {
        out.emplace_back(x);
    }
    return out;
}

// Principal-embedding value via floating point, used as an independent oracle.
std::complex<double> approx(const CycNum& a, long t = 1)
{
    std::complex<double> s = 0;
    const long n = a.conductor();
    auto c = a.coords();
    for (std::size_t j = 0; j < c.size(); ++j) {
        double ang = 2 * M_PI * static_cast<double>((static_cast<long>(j) * t) % n) / static_cast<double>(n);
        s += c[j].get_d() * std::polar(1.0, ang);
    }
    return s;
}

TEST(CycNum, AddAndMulExamples)
{
    EXPECT_EQ(z(3) + z(3, 2), CycNum(-1));
    EXPECT_EQ(z(4) * z(4), CycNum(-1));
    EXPECT_EQ(CycNum(2).inverse(), CycNum(BigRational(1, 2)));
    EXPECT_EQ((z(3) + z(3, 2)).conductor(), 1);
}

TEST(CycNum, DivisionByZeroIsDistinct)
{
    EXPECT_THROW(CycNum(0).inverse(), DivisionByZero);
    EXPECT_THROW(z(5) / (z(5) - z(5)), DivisionByZero);
}

TEST(CycNum, CanonicalConductor)
{
    // zeta_6 = -zeta_3^2 lives in Q(zeta_3).
    EXPECT_EQ(z(6).conductor(), 3);
    EXPECT_EQ(z(6), -z(3, 2));
    EXPECT_EQ(z(2), CycNum(-1));
    EXPECT_EQ(z(10, 2), z(5));
    // sqrt(-3) = zeta_3 - zeta_3^2 has conductor 3; i*sqrt(3) built at 12 descends.
    EXPECT_EQ((z(12, 1) + z(12, 11)).conductor(), 12); // sqrt(3)
    EXPECT_EQ((z(12, 4) - z(12, 8)).conductor(), 3);
    // zeta_15 + zeta_15^4 is not in a proper subfield.
    EXPECT_EQ((z(15) + z(15, 4)).conductor(), 15);
    // zeta_5 * zeta_3 = zeta_15^8.
    EXPECT_EQ(z(5) * z(3), z(15, 8));
    EXPECT_EQ((z(5) * z(3) * z(5, 4) * z(3, 2)), CycNum(1));
}

TEST(CycNum, EqualityIndependentOfConstructionConductor)
{
    std::mt19937_64 rng(7);
    for (int i = 0; i < 100; ++i) {
        CycNum a = testing::random_cycnum(rng, 12, 6);
        for (long k : {2L, 3L, 5L}) {
            long m = a.conductor() * k;
            auto coords = a.embed(m);
            EXPECT_EQ(CycNum::from_coords(m, coords), a);
        }
        // Idempotent canonical form.
        EXPECT_EQ(CycNum::from_coords(a.conductor(), a.coords()), a);
    }
}

TEST(CycNum, EmbedAtConductor)
{
    auto m1 = CycNum(-1).embed(5);
    EXPECT_EQ(m1, q_vec({-1, 0, 0, 0}));
    // zeta_3 = zeta_12^4 and x^4 = x^2 - 1 mod Phi_12 = x^4 - x^2 + 1.
    EXPECT_EQ(z(3).embed(12), q_vec({-1, 0, 1, 0}));
    EXPECT_THROW(z(5).embed(3), DomainError);
}

TEST(CycNum, Conjugates)
{
    auto c = CycNum(BigRational(3, 2)).conjugates();
    ASSERT_EQ(c.size(), 1u);
    EXPECT_EQ(c[0], CycNum(BigRational(3, 2)));

    auto ci = z(4).conjugates();
    ASSERT_EQ(ci.size(), 2u);
    EXPECT_EQ(ci[0], z(4));
    EXPECT_EQ(ci[1], -z(4));

    auto c5 = (z(5) + z(5, 4)).conjugates();
    ASSERT_EQ(c5.size(), 4u);
    EXPECT_EQ(c5[0], z(5) + z(5, 4));
    EXPECT_EQ(c5[1], z(5, 2) + z(5, 3));
    EXPECT_EQ(c5[2], z(5, 2) + z(5, 3));
    EXPECT_EQ(c5[3], z(5) + z(5, 4));
}

TEST(CycNum, Integrality)
{
    EXPECT_TRUE(is_algebraic_integer(CycNum(1) + z(8)));
    EXPECT_FALSE(is_algebraic_integer(CycNum(BigRational(1, 2))));
    EXPECT_TRUE(is_algebraic_integer((CycNum(1) + z(3)) / CycNum(1)));
    // (1 + zeta_4)/2 has norm 1/2.
    EXPECT_FALSE(is_algebraic_integer((CycNum(1) + z(4)) / CycNum(2)));
}

TEST(CycNum, RootOfUnityDetection)
{
    auto r = is_root_of_unity(-z(9, 2));
    ASSERT_TRUE(r);
    EXPECT_EQ(r->order(), 18);
    // Oracle: smallest k with x^k = 1 by repeated multiplication.
    CycNum x = -z(9, 2), p = x;
    long k = 1;
    while (p != CycNum(1)) {
        p *= x;
        ++k;
    }
    EXPECT_EQ(k, 18);
    EXPECT_EQ(r->value(), -z(9, 2));

    auto s = is_root_of_unity(CycNum(1) + z(3));
    ASSERT_TRUE(s);
    EXPECT_EQ(s->order(), 6);
    EXPECT_EQ(s->value(), CycNum(1) + z(3));

    EXPECT_FALSE(is_root_of_unity(CycNum(1) + z(5)));
    EXPECT_FALSE(is_root_of_unity(CycNum(0)));
    EXPECT_FALSE(is_root_of_unity(CycNum(2)));
    auto m1 = is_root_of_unity(CycNum(-1));
    ASSERT_TRUE(m1);
    EXPECT_EQ(m1->order(), 2);
}

TEST(CycNum, EveryRootOfUnityRecognised)
{
    for (const auto& xi : testing::roots_up_to(60)) {
        auto r = is_root_of_unity(xi.value());
        ASSERT_TRUE(r) << xi.order() << " " << xi.exponent();
        EXPECT_EQ(*r, xi);
    }
}

TEST(CycNum, FieldAxiomsOnRandomSamples)
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 60; ++i) {
        CycNum a = testing::random_cycnum(rng), b = testing::random_cycnum(rng), c = testing::random_cycnum(rng);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a - a, CycNum(0));
        if (!a.is_zero()) {
            EXPECT_EQ(a * a.inverse(), CycNum(1));
        }
    }
}

TEST(CycNum, GaloisClosureIsRational)
{
    std::mt19937_64 rng(5);
    for (int i = 0; i < 30; ++i) {
        CycNum a = testing::random_cycnum(rng, 20, 5);
        CycNum sum(0), prod(1);
        for (const auto& c : a.conjugates()) {
            sum += c;
            prod *= c;
        }
        EXPECT_TRUE(sum.is_rational());
        EXPECT_TRUE(prod.is_rational());
        // The conjugate set is stable under every automorphism.
        if (a.conductor() > 2) {
            auto base = a.conjugates();
            auto moved = a.galois(a.conductor() - 1).conjugates();
            std::sort(base.begin(), base.end(), [](auto& x, auto& y) { return x.hash() < y.hash(); });
            std::sort(moved.begin(), moved.end(), [](auto& x, auto& y) { return x.hash() < y.hash(); });
            EXPECT_EQ(base, moved);
        }
    }
}

TEST(House, Examples)
{
    auto h1 = house(z(7, 3), 64);
    EXPECT_LE(h1.lower.compare(BigRational(1)), 0);
    EXPECT_GE(h1.upper.compare(BigRational(1)), 0);

    // Oracle: max over the four embeddings, and the golden ratio at 256 bits.
    double best = 0;
    for (long a = 1; a <= 4; ++a) {
        best = std::max(best, std::abs(1.0 + std::polar(1.0, 2 * M_PI * a / 5)));
    }
    BigFloat phi(256);
    mpfr_sqrt_ui(phi.get(), 5, MPFR_RNDN);
    mpfr_add_ui(phi.get(), phi.get(), 1, MPFR_RNDN);
    mpfr_div_ui(phi.get(), phi.get(), 2, MPFR_RNDN);
    auto h2 = house(CycNum(1) + z(5), 128);
    EXPECT_LE(h2.lower.compare(phi), 0);
    EXPECT_GE(h2.upper.compare(phi), 0);
    EXPECT_NEAR(h2.lower.to_double(), best, 1e-12);
    EXPECT_NEAR(h2.lower.to_double(), 1.6180339887, 1e-10);

    auto h3 = house(CycNum(-3), 32);
    EXPECT_EQ(h3.lower.compare(BigRational(3)), 0);
    EXPECT_EQ(h3.upper.compare(BigRational(3)), 0);
    EXPECT_THROW(house(CycNum(1), 0), DomainError);
}

TEST(House, WidthMeetsRequestedAccuracy)
{
    std::mt19937_64 rng(3);
    for (int i = 0; i < 20; ++i) {
        CycNum a = testing::random_cycnum(rng, 30, 50);
        for (long bits : {16L, 64L, 200L}) {
            auto h = house(a, bits);
            BigFloat w(64);
            mpfr_sub(w.get(), h.upper.get(), h.lower.get(), MPFR_RNDU);
            EXPECT_LE(mpfr_get_d(w.get(), MPFR_RNDU), std::ldexp(1.0, -bits));
            // Floating-point oracle over all embeddings.
            double best = 0;
            for (long t = 1; t <= std::max(1L, a.conductor() - 1); ++t) {
                if (std::gcd(t, a.conductor()) == 1) {
                    best = std::max(best, std::abs(approx(a, t)));
                }
            }
            EXPECT_NEAR(h.lower.to_double(), best, 1e-9 * std::max(1.0, best));
        }
    }
}

TEST(House, CapSignalsUndecided)
{
    EXPECT_THROW(house(CycNum(1) + z(5), 200, 40), UndecidedAtCap);
}

TEST(House, SubmultiplicativeAndSubadditive)
{
    std::mt19937_64 rng(9);
    for (int i = 0; i < 30; ++i) {
        CycNum a = testing::random_cycnum(rng, 12, 5), b = testing::random_cycnum(rng, 12, 5);
        auto ha = house(a, 64), hb = house(b, 64);
        auto hab = house(a * b, 64), hsum = house(a + b, 64);
        BigFloat bound(128);
        mpfr_mul(bound.get(), ha.upper.get(), hb.upper.get(), MPFR_RNDU);
        EXPECT_LE(mpfr_cmp(hab.lower.get(), bound.get()), 0);
        mpfr_add(bound.get(), ha.upper.get(), hb.upper.get(), MPFR_RNDU);
        EXPECT_LE(mpfr_cmp(hsum.lower.get(), bound.get()), 0);
    }
}

TEST(House, ConjugatesShareEnclosures)
{
    std::mt19937_64 rng(21);
    for (int i = 0; i < 20; ++i) {
        CycNum a = testing::random_cycnum(rng, 20, 8);
        auto h = house(a, 48);
        for (const auto& c : a.conjugates()) {
            auto hc = house(c, 48);
            EXPECT_LE(mpfr_cmp(hc.lower.get(), h.upper.get()), 0);
            EXPECT_LE(mpfr_cmp(h.lower.get(), hc.upper.get()), 0);
        }
    }
}

TEST(PA, Examples)
{
    EXPECT_EQ(in_PA(z(12), BigRational(1)), PAVerdict::member);
    EXPECT_EQ(in_PA(CycNum(1) + z(5), BigRational(3, 2)), PAVerdict::nonmember);
    EXPECT_EQ(in_PA(CycNum(1) + z(5), BigRational(2)), PAVerdict::member);
    EXPECT_EQ(in_PA(CycNum(BigRational(1, 2)), BigRational(2)), PAVerdict::nonmember);
    EXPECT_THROW(in_PA(CycNum(1), BigRational(1, 2)), DomainError);
}

TEST(PA, ExactBoundary)
{
    // house(-2) = 2 and house(1 + i) = sqrt(2) sit exactly on the threshold.
    EXPECT_EQ(in_PA(CycNum(-2), BigRational(2)), PAVerdict::member);
    EXPECT_EQ(in_PA((CycNum(1) + z(4)) * (CycNum(1) + z(4)), BigRational(2)), PAVerdict::member);
    EXPECT_EQ(in_PA(z(8) + z(8, 7) + CycNum(1), BigRational(2)), PAVerdict::nonmember); // 1 + sqrt 2
}

TEST(PA, KroneckerEquivalenceOnSmallSums)
{
    auto roots = testing::roots_up_to(8);
    for (std::size_t i = 0; i < roots.size(); ++i) {
        for (std::size_t j = i; j < roots.size(); ++j) {
            CycNum a = roots[i].value() + roots[j].value();
            if (a.is_zero()) {
                continue;
            }
            bool exact = is_root_of_unity(a).has_value();
            auto h = house(a, 64);
            BigFloat limit(128);
            mpfr_set_ui_2exp(limit.get(), 1, -30, MPFR_RNDN);
            mpfr_add_ui(limit.get(), limit.get(), 1, MPFR_RNDN);
            EXPECT_EQ(exact, mpfr_lessequal_p(h.upper.get(), limit.get()));
        }
    }
}

TEST(Roots, SqrtRational)
{
    for (long q : {2L, 3L, 5L, 7L, 12L, 30L, 49L}) {
        CycNum s = sqrt_rational(BigRational(q));
        EXPECT_EQ(s * s, CycNum(q));
        EXPECT_GT(approx(s).real(), 0) << q;
        EXPECT_NEAR(approx(s).imag(), 0, 1e-9);
    }
    CycNum half = sqrt_rational(BigRational(1, 2));
    EXPECT_EQ(half * half, CycNum(BigRational(1, 2)));
}

TEST(Roots, KthRoot)
{
    auto r = kth_root(CycNum(8), 3);
    ASSERT_TRUE(r);
    EXPECT_EQ(r->pow(3), CycNum(8));
    auto s = kth_root(-z(5) * CycNum(BigRational(1, 4)), 2);
    ASSERT_TRUE(s);
    EXPECT_EQ(s->pow(2), -z(5) * CycNum(BigRational(1, 4)));
    EXPECT_FALSE(kth_root(CycNum(2), 3));
    EXPECT_FALSE(kth_root(CycNum(1) + z(5), 2));
}

TEST(Loxton, Examples)
{
    auto two = loxton_decompose(CycNum(2), 4);
    ASSERT_TRUE(two);
    ASSERT_EQ(two->terms.size(), 2u);
    EXPECT_EQ(two->terms[0].xi, RootOfUnity(1, 0));
    EXPECT_EQ(two->terms[1].xi, RootOfUnity(1, 0));

    auto a = CycNum(1) + z(5) + z(5, 2);
    auto d = loxton_decompose(a, 4);
    ASSERT_TRUE(d);
    ASSERT_EQ(d->terms.size(), 2u);
    EXPECT_EQ(d->search_order, 10);
    std::vector<CycNum> got{d->terms[0].xi.value(), d->terms[1].xi.value()};
    std::vector<CycNum> want{-z(5, 3), -z(5, 4)};
    EXPECT_TRUE((got == want) || (got == std::vector<CycNum>{want[1], want[0]}));

    EXPECT_THROW(loxton_decompose(CycNum(BigRational(1, 3)), 4), DomainError);
    EXPECT_FALSE(loxton_decompose(CycNum(5), 3));
    auto zero = loxton_decompose(CycNum(0), 2);
    ASSERT_TRUE(zero);
    EXPECT_TRUE(zero->terms.empty());
}

// Exhaustive oracle: minimal length over all multisets of size <= 3 by direct CycNum sums.
TEST(Loxton, MinimalityAgainstExhaustiveSearch)
{
    std::mt19937_64 rng(17);
    for (long n : {1L, 3L, 4L, 5L, 8L, 12L}) {
        const long M = nt::lcm(2, n);
        std::vector<CycNum> roots;
        for (long k = 0; k < M; ++k) {
            roots.push_back(CycNum::zeta(M, k));
        }
        std::map<std::vector<BigRational>, long> shortest; // keyed by coords at conductor n
        auto key = [&](const CycNum& v) { return v.embed(n); };
        shortest[key(CycNum(0))] = 0;
        for (long i = 0; i < M; ++i) {
            shortest.try_emplace(key(roots[i]), 1);
        }
        for (long i = 0; i < M; ++i) {
            for (long j = i; j < M; ++j) {
                shortest.try_emplace(key(roots[i] + roots[j]), 2);
            }
        }
        for (long i = 0; i < M; ++i) {
            for (long j = i; j < M; ++j) {
                for (long k = j; k < M; ++k) {
                    shortest.try_emplace(key(roots[i] + roots[j] + roots[k]), 3);
                }
            }
        }
        for (const auto& [coords, len] : shortest) {
            CycNum a = CycNum::from_coords(n, coords);
            auto d = loxton_decompose(a, 3);
            ASSERT_TRUE(d);
            EXPECT_EQ(static_cast<long>(d->terms.size()), len);
            CycNum sum(0);
            for (const auto& t : d->terms) {
                sum += t.e * t.xi.value();
            }
            EXPECT_EQ(sum, a);
        }
        // Elements outside the enumerated set have no decomposition of length <= 3.
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<BigRational> coords;
            std::uniform_int_distribution<long> coef(-4, 4);
            for (long j = 0; j < nt::totient(n); ++j) {
                coords.emplace_back(coef(rng));
            }
            CycNum a = CycNum::from_coords(n, coords);
            bool known = shortest.count(key(a)) > 0;
            EXPECT_EQ(loxton_decompose(a, 3).has_value(), known);
        }
    }
}

TEST(Loxton, ProfileBudget)
{
    LoxtonProfile p(BigRational(2), {CycNum(1)}, {{BigRational(0), 1}, {BigRational(4), 3}});
    EXPECT_EQ(p.budget(BigRational(1)), 1);
    EXPECT_EQ(p.budget_for(BigRational(2)), 3);
    EXPECT_EQ(LoxtonProfile::empty().budget(BigRational(100)), 0);
    EXPECT_THROW(LoxtonProfile(BigRational(1), {}, {}), DomainError);
    EXPECT_THROW(LoxtonProfile(BigRational(1), {CycNum(1)}, {{BigRational(0), 3}, {BigRational(1), 2}}), DomainError);
}

} // namespace
} // namespace cyclo
