#pragma once

// Recursive-descent parser for rational functions in x over the cyclotomic numbers.
//
//   expr   := term (("+" | "-") term)*
//   term   := factor (("*" | "/") factor)*
//   factor := ("-")? base ("^" signed_int)?
//   base   := "x" | unsigned_int | "z" unsigned_int | "(" expr ")"

#include <cctype>
#include <cstdlib>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "cyclo/ratfunc.hpp"

namespace cyclo {

enum class ExprKind { integer, variable, root, add, sub, mul, div, neg, pow };

struct Expr {
    ExprKind kind = ExprKind::integer;
    std::vector<std::shared_ptr<const Expr>> children;
    BigInt value;      // integer literal
    long order = 0;    // root literal z<order>
    long exponent = 0; // pow
    std::size_t position = 0;

    bool depends_on_x() const
    {
        if (kind == ExprKind::variable) {
            return true;
        }
        for (const auto& c : children) {
            if (c->depends_on_x()) {
                return true;
            }
        }
        return false;
    }
};

using ExprPtr = std::shared_ptr<const Expr>;

/// Largest exponent times degree accepted while evaluating a power.
inline constexpr long max_power_size = 1000000;

namespace detail {

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    ExprPtr parse()
    {
        auto e = expr();
        skip();
        if (i_ < s_.size()) {
            fail("unexpected character", {"+", "-", "*", "/", "^", "end of input"});
        }
        return e;
    }

private:
    std::string_view s_;
    std::size_t i_ = 0;

    [[noreturn]] void fail(const std::string& message, std::vector<std::string> expected) const
    {
        throw SyntaxError(message, i_, std::move(expected));
    }

    void skip()
    {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) {
            ++i_;
        }
    }

    bool peek(char c)
    {
        skip();
        return i_ < s_.size() && s_[i_] == c;
    }

    static ExprPtr node(ExprKind k, std::size_t pos, std::vector<ExprPtr> children = {})
    {
        auto e = std::make_shared<Expr>();
        e->kind = k;
        e->position = pos;
        e->children = std::move(children);
        return e;
    }

    std::string digits()
    {
        skip();
        std::size_t start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
            ++i_;
        }
        return std::string(s_.substr(start, i_ - start));
    }

    ExprPtr expr()
    {
        auto lhs = term();
        while (peek('+') || peek('-')) {
            std::size_t pos = i_;
            ExprKind k = s_[i_++] == '+' ? ExprKind::add : ExprKind::sub;
            lhs = node(k, pos, {lhs, term()});
        }
        return lhs;
    }

    ExprPtr term()
    {
        auto lhs = factor();
        while (peek('*') || peek('/')) {
            std::size_t pos = i_;
            ExprKind k = s_[i_++] == '*' ? ExprKind::mul : ExprKind::div;
            lhs = node(k, pos, {lhs, factor()});
        }
        return lhs;
    }

    ExprPtr factor()
    {
        bool negate = false;
        std::size_t pos = 0;
        if (peek('-')) {
            pos = i_++;
            negate = true;
        }
        auto b = base();
        if (peek('^')) {
            std::size_t hat = i_++;
            auto p = node(ExprKind::pow, hat, {b});
            std::const_pointer_cast<Expr>(p)->exponent = signed_int();
            b = p;
        }
        return negate ? node(ExprKind::neg, pos, {b}) : b;
    }

    long signed_int()
    {
        bool negative = false;
        if (peek('-')) {
            ++i_;
            negative = true;
        }
        std::size_t pos = i_;
        std::string d = digits();
        if (d.empty()) {
            fail("expected an integer exponent", {"integer"});
        }
        if (d.size() > 12) {
            i_ = pos;
            throw ResourceError("exponent " + d + " is too large");
        }
        long v = std::stol(d);
        return negative ? -v : v;
    }

    ExprPtr base()
    {
        skip();
        if (i_ >= s_.size()) {
            fail("unexpected end of input", {"x", "integer", "z<N>", "("});
        }
        std::size_t pos = i_;
        char c = s_[i_];
        if (c == 'x') {
            ++i_;
            return node(ExprKind::variable, pos);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            auto e = node(ExprKind::integer, pos);
            std::const_pointer_cast<Expr>(e)->value = BigInt(digits());
            return e;
        }
        if (c == 'z') {
            ++i_;
            skip();
            std::size_t at = i_;
            std::string d = digits();
            if (d.empty()) {
                fail("expected the order of a root of unity", {"positive integer"});
            }
            if (d.find_first_not_of('0') == std::string::npos) {
                i_ = at;
                fail("root of unity order must be positive", {"positive integer"});
            }
            if (d.size() > 12) {
                throw ResourceError("root of unity order " + d + " is too large");
            }
            auto e = node(ExprKind::root, pos);
            std::const_pointer_cast<Expr>(e)->order = std::stol(d);
            return e;
        }
        if (c == '(') {
            ++i_;
            auto e = expr();
            if (!peek(')')) {
                fail("unbalanced parenthesis", {")"});
            }
            ++i_;
            return e;
        }
        fail("unexpected character", {"x", "integer", "z<N>", "("});
    }
};

inline RatFunc power(const RatFunc& b, long e)
{
    const long size = std::max(b.degree(), 1L);
    if (e != 0 && std::abs(e) > max_power_size / size) {
        throw ResourceError("power exceeds the size ceiling");
    }
    if (e < 0 && b.num().is_zero()) {
        throw DivisionByZero("zero raised to a negative power");
    }
    return b.pow(e);
}

} // namespace detail

inline ExprPtr parse_expr(std::string_view input) { return detail::Parser(input).parse(); }

/// Exact value of the tree.
inline RatFunc evaluate(const Expr& e)
{
    switch (e.kind) {
    case ExprKind::integer:
        return RatFunc(CycNum(e.value));
    case ExprKind::variable:
        return RatFunc::x();
    case ExprKind::root:
        return RatFunc(CycNum::zeta(e.order));
    case ExprKind::neg:
        return RatFunc(0) - evaluate(*e.children[0]);
    case ExprKind::pow:
        return detail::power(evaluate(*e.children[0]), e.exponent);
    default:
        break;
    }
    RatFunc a = evaluate(*e.children[0]);
    RatFunc b = evaluate(*e.children[1]);
    switch (e.kind) {
    case ExprKind::add:
        return a + b;
    case ExprKind::sub:
        return a - b;
    case ExprKind::mul:
        return a * b;
    default:
        if (b.num().is_zero()) {
            throw DivisionByZero("zero denominator at position " + std::to_string(e.position));
        }
        return a / b;
    }
}

inline RatFunc parse_ratfunc(std::string_view input) { return evaluate(*parse_expr(input)); }

/// Parses an x-free expression.
inline CycNum parse_cycnum(std::string_view input)
{
    auto tree = parse_expr(input);
    if (tree->depends_on_x()) {
        throw DomainError("expected a constant, found an expression in x");
    }
    return *evaluate(*tree).constant_value();
}

/// Exact rational from "p", "p/q" or a decimal "d.ddd" (optional sign, optional exponent).
inline BigRational parse_rational(std::string_view input)
{
    std::string s;
    for (char c : input) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            s.push_back(c);
        }
    }
    auto bad = [&](std::size_t pos) -> BigRational {
        throw SyntaxError("malformed rational number", pos, {"p", "p/q", "decimal"});
    };
    std::size_t i = 0;
    bool negative = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        negative = s[i++] == '-';
    }
    auto read_digits = [&]() {
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            ++i;
        }
        return s.substr(start, i - start);
    };
    std::string whole = read_digits();
    BigRational out;
    if (i < s.size() && s[i] == '/') {
        ++i;
        std::string den = read_digits();
        if (whole.empty() || den.empty() || i != s.size()) {
            return bad(i);
        }
        if (BigInt(den) == 0) {
            throw DivisionByZero("zero denominator in rational number");
        }
        out = BigRational(BigInt(whole), BigInt(den));
        out.canonicalize();
    } else {
        std::string frac;
        if (i < s.size() && s[i] == '.') {
            ++i;
            frac = read_digits();
        }
        if (whole.empty() && frac.empty()) {
            return bad(i);
        }
        long exp10 = -static_cast<long>(frac.size());
        if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
            ++i;
            bool eneg = false;
            if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
                eneg = s[i++] == '-';
            }
            std::string e = read_digits();
            if (e.empty() || e.size() > 6) {
                return bad(i);
            }
            exp10 += eneg ? -std::stol(e) : std::stol(e);
        }
        if (i != s.size()) {
            return bad(i);
        }
        BigInt mant((whole.empty() ? std::string("0") : whole) + frac);
        BigInt scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::abs(exp10)));
        out = exp10 >= 0 ? BigRational(mant * scale) : BigRational(mant, scale);
        out.canonicalize();
    }
    return negative ? BigRational(-out) : out;
}

} // namespace cyclo
