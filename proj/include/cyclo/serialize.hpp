#pragma once

// JSON and CSV renderings of library results.

#include <algorithm>
#include <sstream>
#include <string>

#include <json.hpp>

#include "cyclo/avoidance.hpp"
#include "cyclo/format.hpp"
#include "cyclo/loxton.hpp"
#include "cyclo/parser.hpp"
#include "cyclo/special.hpp"
#include "cyclo/witness.hpp"

namespace cyclo {

using Json = nlohmann::ordered_json;

/// Decimal digits that match an accuracy in bits.
inline int decimal_digits(long accuracy_bits) { return static_cast<int>(accuracy_bits * 30103 / 100000) + 2; }

inline Json to_json(const CycNum& a)
{
    Json coords = Json::array();
    for (const auto& q : a.coords()) {
        coords.push_back(format(q));
    }
    return {{"conductor", a.conductor()}, {"coords", coords}};
}

inline Json to_json(const RootOfUnity& r) { return {{"order", r.order()}, {"exp", r.exponent()}}; }

inline Json to_json(const HouseResult& h, long accuracy_bits)
{
    const int digits = decimal_digits(accuracy_bits);
    return {{"lower", h.lower_text(digits)}, {"upper", h.upper_text(digits)}, {"precision_bits", h.precision_bits}};
}

inline Json to_json(const Witness& w)
{
    Json terms = Json::array();
    for (const auto& t : w.terms) {
        terms.push_back({{"beta", to_json(t.beta)}, {"e", format(t.e)}, {"n", t.n}});
    }
    return {{"S", format(w.S)}, {"terms", terms}};
}

/// Reads [{"beta": {"order": m, "exp": k}, "e": "<expr>", "n": n}, ...].
inline std::vector<WitnessTerm> witness_terms_from_json(const Json& j)
{
    if (!j.is_array()) {
        throw SyntaxError("witness terms must be a JSON array", 0, {"["});
    }
    std::vector<WitnessTerm> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const Json& t = j[i];
        if (!t.is_object() || !t.contains("beta") || !t.contains("n") || !t["n"].is_number_integer() ||
            !t["beta"].is_object() || !t["beta"].contains("order") || !t["beta"]["order"].is_number_integer()) {
            throw SyntaxError("malformed witness term", i, {"{\"beta\": {\"order\", \"exp\"}, \"e\", \"n\"}"});
        }
        const Json& b = t["beta"];
        long exp = b.contains("exp") && b["exp"].is_number_integer() ? b["exp"].get<long>() : 0;
        CycNum e(1);
        if (t.contains("e")) {
            if (!t["e"].is_string()) {
                throw SyntaxError("witness coefficient must be an expression string", i, {"string"});
            }
            e = parse_cycnum(t["e"].get<std::string>());
        }
        out.push_back({RootOfUnity(b["order"].get<long>(), exp), e, t["n"].get<long>()});
    }
    return out;
}

inline Json to_json(const Mobius& m)
{
    return {{"map", format(m)}, {"a", format(m.a())}, {"b", format(m.b())}, {"c", format(m.c())}, {"d", format(m.d())}};
}

inline Json to_json(const SpecialResult& s)
{
    Json j{{"status", to_string(s.status)}};
    j["model"] = s.model ? Json(to_string(*s.model)) : Json(nullptr);
    j["conjugator"] = s.conjugator ? to_json(*s.conjugator) : Json(nullptr);
    j["note"] = s.note;
    return j;
}

inline Json to_json(const LoxtonDecomposition& d)
{
    Json terms = Json::array();
    for (const auto& t : d.terms) {
        terms.push_back({{"e", format(t.e)}, {"xi", to_json(t.xi)}});
    }
    return {{"terms", terms}, {"length", d.terms.size()}, {"search_order", d.search_order}};
}

inline Json to_json(const MonicNormalization& n)
{
    return {{"c", format(n.c)},
            {"c_json", to_json(n.c)},
            {"h_tilde", format(n.h_tilde)},
            {"D", n.D.get_str()},
            {"R", format(n.R)}};
}

inline Json to_json(const OrbitRecord& o, long accuracy_bits)
{
    Json points = Json::array();
    Json houses = Json::array();
    Json verdicts = Json::array();
    for (std::size_t i = 0; i < o.points.size(); ++i) {
        points.push_back(format(o.points[i]));
    }
    for (const auto& h : o.houses) {
        houses.push_back(to_json(h, accuracy_bits));
    }
    for (auto v : o.verdicts) {
        verdicts.push_back(to_string(v));
    }
    Json j{{"points", points}, {"houses", houses}, {"in_PA", verdicts}};
    j["D"] = o.D ? Json(o.D->get_str()) : Json(nullptr);
    if (o.D) {
        j["integral_after_D"] = o.integral_after_D;
    } else {
        j["integral_after_D"] = nullptr;
    }
    j["hits"] = o.hit_indices;
    j["undecided"] = o.undecided_indices;
    j["pole_index"] = o.pole_index ? Json(*o.pole_index) : Json(nullptr);
    return j;
}

namespace detail {

inline std::vector<const ScanEntry*> scan_rows(const ScanResult& s)
{
    std::vector<const ScanEntry*> rows;
    for (const auto& e : s.hits) {
        rows.push_back(&e);
    }
    for (const auto& e : s.undecided) {
        rows.push_back(&e);
    }
    std::sort(rows.begin(), rows.end(), [](const ScanEntry* a, const ScanEntry* b) {
        return std::pair(a->xi.order(), a->xi.exponent()) < std::pair(b->xi.order(), b->xi.exponent());
    });
    return rows;
}

} // namespace detail

inline Json to_json(const ScanEntry& e, long accuracy_bits)
{
    return {{"xi", to_json(e.xi)}, {"value", format(e.value)}, {"house", to_json(e.house, accuracy_bits)},
            {"in_PA", to_string(e.verdict)}};
}

inline Json to_json(const ScanResult& s, long accuracy_bits)
{
    Json hits = Json::array();
    Json undecided = Json::array();
    for (const auto& e : s.hits) {
        hits.push_back(to_json(e, accuracy_bits));
    }
    for (const auto& e : s.undecided) {
        undecided.push_back(to_json(e, accuracy_bits));
    }
    return {{"hits", hits}, {"undecided", undecided}};
}

/// One row per hit or undecided point, ordered by (order, exponent).
inline std::string to_csv(const ScanResult& s, long accuracy_bits)
{
    const int digits = decimal_digits(accuracy_bits);
    std::ostringstream out;
    out << "order,exponent,value,house_lower,house_upper,in_PA\n";
    for (const ScanEntry* e : detail::scan_rows(s)) {
        out << e->xi.order() << ',' << e->xi.exponent() << ",\"" << format(e->value) << "\","
            << e->house.lower_text(digits) << ',' << e->house.upper_text(digits) << ',' << to_string(e->verdict)
            << '\n';
    }
    return out.str();
}

inline Json to_json(const Verdict& v)
{
    Json j{{"verdict", to_string(v.kind)}, {"reason", v.reason}};
    j["witness"] = v.witness ? to_json(*v.witness) : Json(nullptr);
    j["pole_count"] = v.pole_count;
    j["budget"] = v.budget;
    j["diagnostics"] = v.diagnostics;
    return j;
}

inline Json to_json(const FzCaps& c) { return {{"rational_cap", c.rational_cap.get_str()}, {"laurent_cap", c.laurent_cap.get_str()}}; }

inline Json to_json(const FzReport& r)
{
    return {{"p", format(r.p)},
            {"degree_h", r.degree_h},
            {"ell", r.ell},
            {"caps", to_json(r.caps)},
            {"q_binomial", r.q_binomial},
            {"rational_holds", r.rational_holds},
            {"laurent_case", r.laurent_case},
            {"q_trinomial", r.q_trinomial},
            {"laurent_holds", r.laurent_holds},
            {"violation", r.violation()}};
}

inline Json to_json(const SpecialTermsReport& r)
{
    std::ostringstream bound;
    bound.precision(6);
    bound << std::fixed << r.bound;
    return {{"degree_h", r.degree_h},   {"n", r.n},
            {"special", to_string(r.special)}, {"applicable", r.applicable},
            {"term_count", r.term_count}, {"bound", bound.str()},
            {"violation", r.violation()}};
}

} // namespace cyclo
