#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "cyclo/format.hpp"
#include "cyclo/parser.hpp"
#include "cyclo/serialize.hpp"
#include "support.hpp"

namespace cyclo {
namespace {

const RatFunc X = RatFunc::x();
CycNum z(long n, long k = 1) { return CycNum::zeta(n, k); }

TEST(Parser, Examples)
{
    RatFunc h = parse_ratfunc("(x^3 + z5*x)/(x - 1)");
    EXPECT_EQ(h.num(), (X.pow(3) + RatFunc(z(5)) * X).num());
    EXPECT_EQ(h.den(), (X - RatFunc(1)).num());
    EXPECT_EQ(parse_cycnum("z3 + z3^2"), CycNum(-1));
    EXPECT_EQ(parse_ratfunc("x^-2 + 2"), (RatFunc(2) * X.pow(2) + RatFunc(1)) / X.pow(2));
    EXPECT_EQ(parse_cycnum("3/2"), CycNum(BigRational(3, 2)));
    EXPECT_EQ(parse_cycnum("2^-1"), CycNum(BigRational(1, 2)));
    EXPECT_EQ(parse_cycnum("-2^2"), CycNum(-4));
    EXPECT_EQ(parse_cycnum("z4^2"), CycNum(-1));
    EXPECT_EQ(parse_ratfunc(" ( x + 1 ) ^ 2 "), (X + RatFunc(1)).pow(2));
    EXPECT_EQ(parse_ratfunc("x - -1"), X + RatFunc(1));
    EXPECT_EQ(parse_ratfunc("3*-x"), RatFunc(-3) * X);
    EXPECT_EQ(parse_cycnum("123456789012345678901234567890 - 123456789012345678901234567889"), CycNum(1));
    EXPECT_EQ(parse_ratfunc("1/2*x"), RatFunc(CycNum(BigRational(1, 2))) * X);
}

TEST(Parser, Tree)
{
    auto t = parse_expr("-x^2 + z5");
    EXPECT_EQ(t->kind, ExprKind::add);
    EXPECT_EQ(t->children[0]->kind, ExprKind::neg);
    EXPECT_EQ(t->children[0]->children[0]->kind, ExprKind::pow);
    EXPECT_EQ(t->children[0]->children[0]->exponent, 2);
    EXPECT_EQ(t->children[1]->kind, ExprKind::root);
    EXPECT_EQ(t->children[1]->order, 5);
    EXPECT_TRUE(t->depends_on_x());
    EXPECT_FALSE(parse_expr("z3 * 4")->depends_on_x());
}

void expect_syntax(const std::string& s, std::size_t position)
{
    try {
        parse_ratfunc(s);
        ADD_FAILURE() << "accepted " << s;
    } catch (const SyntaxError& e) {
        EXPECT_EQ(e.position(), position) << s;
        EXPECT_FALSE(e.expected().empty()) << s;
    }
}

TEST(Parser, SyntaxErrors)
{
    expect_syntax("2x", 1);
    expect_syntax("z0", 1);
    expect_syntax("z", 1);
    expect_syntax("", 0);
    expect_syntax("(x + 1", 6);
    expect_syntax("x +", 3);
    expect_syntax("--x", 1);
    expect_syntax("x^2^3", 3);
    expect_syntax("x^", 2);
    expect_syntax("x^y", 2);
    expect_syntax("y", 0);
    expect_syntax("x)", 1);
    expect_syntax("1.5", 1);
}

TEST(Parser, DomainErrors)
{
    EXPECT_THROW(parse_ratfunc("1/0"), DivisionByZero);
    EXPECT_THROW(parse_ratfunc("x/(x - x)"), DivisionByZero);
    EXPECT_THROW(parse_ratfunc("0^-1"), DivisionByZero);
    EXPECT_THROW(parse_ratfunc("1/(z3 + z3^2 + 1)"), DivisionByZero);
    EXPECT_THROW(parse_cycnum("x + 1"), DomainError);
    EXPECT_THROW(parse_ratfunc("x^999999999"), ResourceError);
    EXPECT_THROW(parse_ratfunc("z99999999"), ResourceError);
}

TEST(Parser, Rationals)
{
    EXPECT_EQ(parse_rational("7"), BigRational(7));
    EXPECT_EQ(parse_rational("3/2"), BigRational(3, 2));
    EXPECT_EQ(parse_rational("-6/4"), BigRational(-3, 2));
    EXPECT_EQ(parse_rational("1.25"), BigRational(5, 4));
    EXPECT_EQ(parse_rational(".5"), BigRational(1, 2));
    EXPECT_EQ(parse_rational("2."), BigRational(2));
    EXPECT_EQ(parse_rational("1.5e2"), BigRational(150));
    EXPECT_EQ(parse_rational("25e-2"), BigRational(1, 4));
    EXPECT_EQ(parse_rational("0.1"), BigRational(1, 10));
    EXPECT_THROW(parse_rational("1/0"), DivisionByZero);
    EXPECT_THROW(parse_rational("abc"), SyntaxError);
    EXPECT_THROW(parse_rational("1/2/3"), SyntaxError);
    EXPECT_THROW(parse_rational(""), SyntaxError);
    EXPECT_THROW(parse_rational("1.2.3"), SyntaxError);
}

TEST(Format, Examples)
{
    EXPECT_EQ(format(z(5, 2)), "z5^2");
    EXPECT_EQ(format(CycNum(0)), "0");
    EXPECT_EQ(format(CycNum(BigRational(3, 2)) + CycNum(2) * z(5) - z(5, 2)), "3/2 + 2*z5 - z5^2");
    EXPECT_EQ(format(-z(5)), "-z5");
    EXPECT_EQ(format(chebyshev(3)), "x^3 - 3*x");
    EXPECT_EQ(format(RatFunc(2) * X.pow(3) / (X + RatFunc(1))), "2*x^3/(x + 1)");
    EXPECT_EQ(format(RatFunc(1) / X.pow(2)), "1/x^2");
    EXPECT_EQ(format(RatFunc(CycNum(1) + z(5)) * X.pow(2) - X), "(1 + z5)*x^2 - x");
    EXPECT_EQ(format(RatFunc(CycNum(1) + z(5)) / (X - RatFunc(1))), "(1 + z5)/(x - 1)");
    EXPECT_EQ(format(-X / (X + RatFunc(1))), "-x/(x + 1)");
    EXPECT_EQ(format(LaurentPoly::monomial(CycNum(1), 2) + LaurentPoly(CycNum(1)) + LaurentPoly::monomial(CycNum(-1), -2)),
              "x^2 + 1 - x^-2");
    EXPECT_EQ(format(BigRational(-7, 3)), "-7/3");
}

TEST(Format, RoundTripExamples)
{
    RatFunc h = parse_ratfunc("2*x^3/(x+1)");
    EXPECT_EQ(format(h), "2*x^3/(x + 1)");
    EXPECT_EQ(parse_ratfunc(format(h)), h);
    EXPECT_THROW(parse_ratfunc("2x^3/(x+1)"), SyntaxError);
    LaurentPoly l = LaurentPoly::monomial(z(8), 3) + LaurentPoly::monomial(CycNum(1) + z(3), -1);
    EXPECT_EQ(parse_ratfunc(format(l)), RatFunc::from_laurent(l));
}

// Random grammar strings: value -> text -> value, and the text is a fixed point.
TEST(Format, FuzzRoundTrip)
{
    std::mt19937_64 rng(20261015);
    static const long fields[] = {1, 3, 4, 5, 6, 8, 12};
    int passed = 0;
    int attempts = 0;
    while (passed < 500 && attempts < 5000) {
        ++attempts;
        testing::ExpressionGenerator gen(rng, fields[rng() % 7]);
        std::string s = gen.expr(2);
        RatFunc v;
        try {
            v = parse_ratfunc(s);
        } catch (const DivisionByZero&) {
            continue;
        }
        std::string text = format(v);
        RatFunc back = parse_ratfunc(text);
        ASSERT_EQ(back, v) << s << " -> " << text;
        ASSERT_EQ(format(back), text) << s;
        ++passed;
    }
    EXPECT_EQ(passed, 500);
}

TEST(Format, FuzzCycNumRoundTrip)
{
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        CycNum a = testing::random_cycnum(rng, 30, 6);
        ASSERT_EQ(parse_cycnum(format(a)), a) << format(a);
    }
}

TEST(Serialize, Json)
{
    Json j = to_json(CycNum(BigRational(1, 2)) + z(5));
    EXPECT_EQ(j.dump(), R"({"conductor":5,"coords":["1/2","1","0","0"]})");
    EXPECT_EQ(to_json(RootOfUnity(12, 5)).dump(), R"({"order":12,"exp":5})");

    Json terms = Json::parse(R"([{"beta": {"order": 3, "exp": 1}, "e": "1", "n": 2}, {"beta": {"order": 1}, "n": -2}])");
    auto t = witness_terms_from_json(terms);
    ASSERT_EQ(t.size(), 2u);
    EXPECT_EQ(t[0].beta, RootOfUnity(3, 1));
    EXPECT_EQ(t[1].n, -2);
    EXPECT_EQ(t[1].e, CycNum(1));
    EXPECT_THROW(witness_terms_from_json(Json::parse(R"({"n": 1})")), SyntaxError);
    EXPECT_THROW(witness_terms_from_json(Json::parse(R"([{"beta": 3, "n": 1}])")), SyntaxError);

    Witness w(t, RatFunc::x());
    Json wj = to_json(w);
    EXPECT_EQ(wj["S"], "x");
    EXPECT_EQ(witness_terms_from_json(wj["terms"]).size(), 2u);
}

TEST(Serialize, ScanCsv)
{
    ScanResult s = scan_roots_of_unity(parse_ratfunc("x^2 + x + 1"), 4, BigRational(1));
    ASSERT_EQ(s.hits.size(), 3u);
    std::string csv = to_csv(s, 64);
    std::istringstream in(csv);
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line)) {
        lines.push_back(line);
    }
    ASSERT_EQ(lines.size(), 4u);
    EXPECT_EQ(lines[0], "order,exponent,value,house_lower,house_upper,in_PA");
    EXPECT_EQ(lines[1].substr(0, 8), "2,1,\"1\",");
    EXPECT_EQ(lines[2].substr(0, 9), "4,1,\"z4\",");
    EXPECT_EQ(lines[3].substr(0, 10), "4,3,\"-z4\",");
}

} // namespace
} // namespace cyclo
