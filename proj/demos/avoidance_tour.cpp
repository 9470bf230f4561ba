// Rational functions: normalization, orbits, witnesses and verdicts.

#include <iostream>

#include "cyclo/cyclo.hpp"

int main()
{
    using namespace cyclo;
    const RatFunc h = parse_ratfunc("2*x^3/(x + 1)");
    const MonicNormalization n = monic_normalize(h);
    std::cout << "h = " << format(h) << ": c = " << format(n.c) << ", h~ = " << format(n.h_tilde)
              << ", D = " << n.D.get_str() << ", R = " << format(n.R) << '\n';

    const RatFunc t = RatFunc(chebyshev(4));
    std::cout << "T_4 = " << format(t) << ", special: " << to_string(is_special(t).status) << '\n';
    if (auto w = witness_search_deg2(t, 2)) {
        std::cout << "T_4(" << format(w->S) << ") = " << format(w->laurent()) << '\n';
    }

    const OrbitRecord o = orbit(parse_ratfunc("x^2 - 2"), parse_cycnum("z8 - z8^3"), 3, BigRational(2));
    std::cout << "orbit of sqrt(2) under x^2 - 2:";
    for (const auto& p : o.points) {
        std::cout << ' ' << format(p);
    }
    std::cout << '\n';

    const Verdict v = avoidance_verdict(parse_ratfunc("1/(x^3 - x)"), BigRational(7), LoxtonProfile::constant(5));
    std::cout << "1/(x^3 - x): " << to_string(v.kind) << " (" << v.reason << ")\n";
}
