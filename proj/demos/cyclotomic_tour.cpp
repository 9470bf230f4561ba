// Exact cyclotomic arithmetic, houses and membership in P_A.

#include <iostream>

#include "cyclo/cyclo.hpp"

int main()
{
    using namespace cyclo;
    const CycNum a = parse_cycnum("1 + z5");
    const CycNum b = parse_cycnum("z3 + z3^2");
    std::cout << "a = " << format(a) << ", conductor " << a.conductor() << '\n';
    std::cout << "z3 + z3^2 = " << format(b) << '\n';
    std::cout << "1/a = " << format(a.inverse()) << '\n';

    const HouseResult h = house(a, 64);
    std::cout << "house(a) in [" << h.lower_text(20) << ", " << h.upper_text(20) << "]\n";
    std::cout << "a in P_2: " << to_string(in_PA(a, BigRational(2))) << '\n';
    std::cout << "a in P_3/2: " << to_string(in_PA(a, BigRational(3, 2))) << '\n';

    if (auto r = is_root_of_unity(parse_cycnum("-z3"))) {
        std::cout << "-z3 = z" << r->order() << "^" << r->exponent() << '\n';
    }
    if (auto d = loxton_decompose(a * a, 4)) {
        std::cout << "a^2 = " << format(a * a) << " is a sum of " << d->terms.size() << " roots of unity\n";
    }
}
