// Command-line front end: every command prints one JSON document (or CSV) to stdout.

#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <new>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cyclo/cyclo.hpp"
#include "cyclo/serialize.hpp"

namespace {

using namespace cyclo;

enum Exit { ok = 0, domain = 1, syntax = 2, resource = 3, undecided = 4 };

/// Name of the argument currently being parsed, reported with syntax errors.
std::string current_argument;

RatFunc ratfunc_arg(const std::string& name, const std::string& text)
{
    current_argument = name;
    RatFunc r = parse_ratfunc(text);
    current_argument.clear();
    return r;
}

CycNum cycnum_arg(const std::string& name, const std::string& text)
{
    current_argument = name;
    CycNum a = parse_cycnum(text);
    current_argument.clear();
    return a;
}

BigRational real_arg(const std::string& name, const std::string& text)
{
    current_argument = name;
    BigRational q = parse_rational(text);
    current_argument.clear();
    return q;
}

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

int fail(Exit code, const std::string& kind, const std::string& message, Json extra = Json::object())
{
    Json e{{"kind", kind}, {"message", message}};
    for (auto& [k, v] : extra.items()) {
        e[k] = v;
    }
    print(Json{{"error", e}});
    return code;
}

std::string fixed(double v, int digits)
{
    std::ostringstream out;
    out << std::fixed << std::setprecision(digits) << v;
    return out.str();
}

struct Options {
    std::string h, g, expr, alpha, A, S, terms;
    long bits = 64;
    long d = 0, n = 0, dmax = 0, M = 0, budget = 0, l = 0;
    long gridM = SearchGrid{}.M;
    long gridH = SearchGrid{}.H;
    long bound_d = 0, bound_n = 0;
    bool csv = false;
};

void require_positive_bits(long bits)
{
    if (bits < 1) {
        throw DomainError("--bits must be positive");
    }
}

int run(int argc, char** argv)
{
    CLI::App app{"Exact cyclotomic arithmetic and avoidance tools for rational functions"};
    app.require_subcommand(1);
    Options o;
    std::function<void()> action;

    auto expr_command = [&](const char* name, const char* help) {
        auto* c = app.add_subcommand(name, help);
        c->add_option("expr", o.expr, "x-free expression")->required();
        return c;
    };
    auto h_command = [&](const char* name, const char* help) {
        auto* c = app.add_subcommand(name, help);
        c->add_option("function", o.h, "rational function h in x")->required();
        return c;
    };

    auto* house_cmd = expr_command("house", "Enclosure of the house");
    house_cmd->add_option("--bits", o.bits, "accuracy in bits");
    house_cmd->callback([&] {
        action = [&] {
            require_positive_bits(o.bits);
            CycNum a = cycnum_arg("expr", o.expr);
            Json j{{"value", format(a)}, {"conductor", a.conductor()}};
            j.update(to_json(house(a, o.bits), o.bits));
            print(j);
        };
    });

    expr_command("integer", "Algebraic integrality")->callback([&] {
        action = [&] {
            CycNum a = cycnum_arg("expr", o.expr);
            print({{"value", format(a)}, {"integral", a.is_integral()}, {"denominator", a.denominator().get_str()}});
        };
    });

    expr_command("rootofunity", "Root-of-unity test")->callback([&] {
        action = [&] {
            CycNum a = cycnum_arg("expr", o.expr);
            auto r = a.as_root_of_unity();
            print({{"value", format(a)}, {"root_of_unity", r ? to_json(*r) : Json(nullptr)}});
        };
    });

    auto* pa_cmd = expr_command("pa", "Membership in P_A");
    pa_cmd->add_option("--A", o.A, "bound A >= 1 (decimal or p/q)")->required();
    pa_cmd->add_option("--bits", o.bits, "initial accuracy in bits");
    pa_cmd->callback([&] {
        action = [&] {
            require_positive_bits(o.bits);
            CycNum a = cycnum_arg("expr", o.expr);
            BigRational A = real_arg("A", o.A);
            PAVerdict v = in_PA(a, A, o.bits);
            Json j{{"verdict", to_string(v)}, {"value", format(a)}, {"A", format(A)}};
            j["house"] = a.is_zero() ? Json(nullptr) : to_json(house(a, o.bits), o.bits);
            print(j);
        };
    });

    auto* dec_cmd = expr_command("decompose", "Shortest sum of roots of unity");
    dec_cmd->add_option("--dmax", o.dmax, "largest term count")->required();
    dec_cmd->callback([&] {
        action = [&] {
            CycNum a = cycnum_arg("expr", o.expr);
            auto d = loxton_decompose(a, o.dmax);
            Json j{{"value", format(a)}, {"found", d.has_value()}};
            if (d) {
                j.update(to_json(*d));
            }
            print(j);
        };
    });

    auto* cheb_cmd = app.add_subcommand("cheb", "Chebyshev polynomial T_d with T_d(x + 1/x) = x^d + x^-d");
    cheb_cmd->add_option("d", o.d, "degree")->required();
    cheb_cmd->callback([&] { action = [&] { print({{"poly", format(chebyshev(o.d))}}); }; });

    auto* compose_cmd = h_command("compose", "h(g(x))");
    compose_cmd->add_option("g", o.g, "inner rational function")->required();
    compose_cmd->callback([&] {
        action = [&] {
            RatFunc r = compose(ratfunc_arg("h", o.h), ratfunc_arg("g", o.g));
            print({{"result", format(r)}, {"degree", r.degree()}});
        };
    });

    auto* iterate_cmd = h_command("iterate", "n-th iterate of h");
    iterate_cmd->add_option("n", o.n, "iteration count")->required();
    iterate_cmd->callback([&] {
        action = [&] {
            RatFunc r = iterate(ratfunc_arg("h", o.h), o.n);
            print({{"result", format(r)}, {"degree", r.degree()}});
        };
    });

    h_command("degree", "Degree of h")->callback([&] {
        action = [&] {
            RatFunc h = ratfunc_arg("h", o.h);
            print({{"h", format(h)},
                   {"degree", h.degree()},
                   {"num_degree", std::max(h.num().degree(), 0L)},
                   {"den_degree", h.den().degree()}});
        };
    });

    h_command("poles", "Distinct poles of h on the projective line")->callback([&] {
        action = [&] {
            RatFunc h = ratfunc_arg("h", o.h);
            if (h.is_constant()) {
                throw DomainError("a constant has no poles to count");
            }
            print({{"h", format(h)},
                   {"distinct_poles", distinct_pole_count(h)},
                   {"pole_at_infinity", h.num().degree() > h.den().degree()}});
        };
    });

    h_command("special", "Conjugacy to +x^d, -x^d or T_d")->callback([&] {
        action = [&] {
            RatFunc h = ratfunc_arg("h", o.h);
            SpecialResult s = is_special(h);
            Json j = to_json(s);
            j["conjugate"] = s.conjugator ? Json(format(mobius_conjugate(h, *s.conjugator))) : Json(nullptr);
            print(j);
        };
    });

    auto* norm_cmd = h_command("normalize", "Monic model h(x) = c^-1 h~(cx) and escape radius");
    norm_cmd->add_option("--bits", o.bits, "accuracy for coefficient houses");
    norm_cmd->callback([&] {
        action = [&] {
            require_positive_bits(o.bits);
            MonicNormalization n = monic_normalize(ratfunc_arg("h", o.h), o.bits);
            EscapeCheck e = escape_radius(n.h_tilde, o.bits);
            Json j = to_json(n);
            j["escape"] = {{"R", format(e.R)},
                           {"numerator_factor", format(e.numerator_factor)},
                           {"denominator_factor", format(e.denominator_factor)}};
            print(j);
        };
    });

    auto* orbit_cmd = h_command("orbit", "Forward orbit with P_A membership");
    orbit_cmd->add_option("alpha", o.alpha, "starting point")->required();
    orbit_cmd->add_option("--n", o.n, "orbit length")->required();
    orbit_cmd->add_option("--A", o.A, "bound A >= 1")->required();
    orbit_cmd->add_option("--bits", o.bits, "accuracy in bits");
    orbit_cmd->callback([&] {
        action = [&] {
            require_positive_bits(o.bits);
            RatFunc h = ratfunc_arg("h", o.h);
            CycNum a = cycnum_arg("alpha", o.alpha);
            BigRational A = real_arg("A", o.A);
            print(to_json(orbit(h, a, o.n, A, o.bits), o.bits));
        };
    });

    auto* scan_cmd = h_command("scan", "Values at roots of unity of order <= M lying in P_A");
    scan_cmd->add_option("--M", o.M, "largest order")->required();
    scan_cmd->add_option("--A", o.A, "bound A >= 1")->required();
    scan_cmd->add_option("--bits", o.bits, "accuracy in bits");
    scan_cmd->add_flag("--csv", o.csv, "CSV output");
    scan_cmd->callback([&] {
        action = [&] {
            require_positive_bits(o.bits);
            RatFunc h = ratfunc_arg("h", o.h);
            BigRational A = real_arg("A", o.A);
            ScanResult s = scan_roots_of_unity(h, o.M, A, o.bits);
            if (o.csv) {
                std::cout << to_csv(s, o.bits);
            } else {
                print(to_json(s, o.bits));
            }
        };
    });

    auto* wc_cmd = h_command("witness-check", "Verify h(S) against a term list");
    wc_cmd->add_option("--S", o.S, "inner map S")->required();
    wc_cmd->add_option("--terms", o.terms, "JSON array of terms")->required();
    wc_cmd->callback([&] {
        action = [&] {
            RatFunc h = ratfunc_arg("h", o.h);
            RatFunc S = ratfunc_arg("S", o.S);
            Json parsed;
            try {
                parsed = Json::parse(o.terms);
            } catch (const Json::parse_error& e) {
                current_argument = "terms";
                throw SyntaxError("invalid JSON", e.byte > 0 ? e.byte - 1 : 0, {"JSON array"});
            }
            current_argument = "terms";
            Witness w(witness_terms_from_json(parsed), S);
            current_argument.clear();
            print({{"valid", witness_check(h, w)},
                   {"laurent", format(w.laurent())},
                   {"composition", format(compose(h, S))}});
        };
    });

    auto* ws_cmd = h_command("witness-search", "Witness search with deg S <= 2");
    ws_cmd->add_option("--dmax", o.dmax, "largest term count")->required();
    ws_cmd->add_option("--gridM", o.gridM, "largest root-of-unity order on the grid");
    ws_cmd->add_option("--gridH", o.gridH, "largest rational height on the grid");
    ws_cmd->callback([&] {
        action = [&] {
            RatFunc h = ratfunc_arg("h", o.h);
            auto w = witness_search_deg2(h, o.dmax, {o.gridM, o.gridH});
            print({{"witness", w ? to_json(*w) : Json(nullptr)}});
        };
    });

    auto* verdict_cmd = h_command("verdict", "Avoidance verdict");
    verdict_cmd->add_option("--A", o.A, "bound A >= 1")->required();
    verdict_cmd->add_option("--budget", o.budget, "Loxton term budget")->required();
    verdict_cmd->add_option("--gridM", o.gridM, "largest root-of-unity order on the grid");
    verdict_cmd->add_option("--gridH", o.gridH, "largest rational height on the grid");
    verdict_cmd->callback([&] {
        action = [&] {
            RatFunc h = ratfunc_arg("h", o.h);
            BigRational A = real_arg("A", o.A);
            if (A < 1) {
                throw DomainError("A must be at least 1");
            }
            if (o.budget < 0) {
                throw DomainError("budget must be nonnegative");
            }
            Verdict v = avoidance_verdict(h, A, LoxtonProfile::constant(o.budget), {o.gridM, o.gridH});
            Json j = to_json(v);
            Json hits = Json::array();
            for (const auto& e : scan_roots_of_unity(h, o.gridM, A).hits) {
                hits.push_back({{"xi", to_json(e.xi)}, {"value", format(e.value)}});
            }
            j["hits"] = hits;
            print(j);
        };
    });

    auto* bounds_cmd = app.add_subcommand("bounds", "Degree caps for l-term compositions");
    bounds_cmd->add_option("--l", o.l, "term count")->required();
    bounds_cmd->add_option("--d", o.bound_d, "degree of h for the iterate bound");
    bounds_cmd->add_option("--n", o.bound_n, "iterate count for the iterate bound");
    bounds_cmd->callback([&] {
        action = [&] {
            FzCaps c = fz_degree_cap(o.l);
            Json j{{"l", o.l}};
            j.update(to_json(c));
            if (o.bound_d != 0 || o.bound_n != 0) {
                j["iterate_term_lower_bound"] = fixed(iterate_term_lower_bound(o.bound_d, o.bound_n), 6);
            }
            print(j);
        };
    });

    auto* fz_cmd = h_command("fz-verify", "Degree caps for h(q)");
    fz_cmd->add_option("q", o.g, "inner rational function")->required();
    fz_cmd->callback([&] {
        action = [&] { print(to_json(verify_fz(ratfunc_arg("h", o.h), ratfunc_arg("q", o.g)))); };
    });

    auto* st_cmd = h_command("specialterms", "Term count of h^n(q) against the iterate bound");
    st_cmd->add_option("q", o.g, "inner rational function")->required();
    st_cmd->add_option("--n", o.n, "iterate count")->required();
    st_cmd->callback([&] {
        action = [&] { print(to_json(verify_specialterms(ratfunc_arg("h", o.h), ratfunc_arg("q", o.g), o.n))); };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return fail(syntax, "usage", e.what());
    }

    try {
        if (const char* cap = std::getenv("CYCLO_PRECISION_CAP")) {
            current_argument = "CYCLO_PRECISION_CAP";
            BigRational q = parse_rational(cap);
            if (q.get_den() != 1 || q < 64 || q > (1L << 30)) {
                throw DomainError("CYCLO_PRECISION_CAP must be an integer in [64, 2^30]");
            }
            set_default_precision_cap(q.get_num().get_si());
            current_argument.clear();
        }
        action();
        return ok;
    } catch (const SyntaxError& e) {
        Json extra{{"position", e.position()}, {"expected", e.expected()}};
        if (!current_argument.empty()) {
            extra["argument"] = current_argument;
        }
        return fail(syntax, "syntax", e.detail(), extra);
    } catch (const UndecidedAtCap& e) {
        return fail(undecided, "undecided", e.what(), {{"cap_bits", e.cap_bits()}});
    } catch (const ResourceError& e) {
        return fail(resource, "resource", e.what());
    } catch (const std::bad_alloc&) {
        return fail(resource, "resource", "out of memory");
    } catch (const DomainError& e) {
        return fail(domain, "domain", e.what());
    }
}

} // namespace

int main(int argc, char** argv) { return run(argc, argv); }
