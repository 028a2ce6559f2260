#pragma once

// JSON views of engine values. Documents use insertion-ordered objects so the
// emitted byte stream is deterministic; see docs/result-schema.md for the
// published schema. Integers that do not fit in 64 bits serialize as decimal
// strings (the schema allows either).

#include <string>
#include <vector>

#include <json.hpp>

#include "ansatz.hpp"
#include "linear.hpp"
#include "torus.hpp"
#include "zeta.hpp"

namespace bsideal {

using Json = nlohmann::ordered_json;

inline Json integer_json(const Integer& z) {
    if (z.fits_slong_p()) return Json(static_cast<long long>(z.get_si()));
    return Json(z.get_str());
}

// [numerator, denominator]
inline Json rational_json(const Rational& q) {
    return Json::array({integer_json(q.num()), integer_json(q.den())});
}

// Roots of a univariate s-polynomial as [numerator, denominator,
// multiplicity] triples, sorted ascending.
inline Json roots_json(const MultiPoly& b) {
    auto roots = univariate_rational_roots(b);
    std::sort(roots.begin(), roots.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    Json out = Json::array();
    for (auto& [root, mult] : roots) {
        Json triple = rational_json(root);
        triple.push_back(static_cast<long long>(mult));
        out.push_back(std::move(triple));
    }
    return out;
}

// {"a": [...], "b": int} per hyperplane a.s + b = 0.
inline Json components_json(const std::vector<HyperplaneComponent>& cs) {
    Json out = Json::array();
    for (auto& c : cs) {
        Json a = Json::array();
        for (auto& ai : c.a()) a.push_back(integer_json(ai));
        out.push_back(Json{{"a", std::move(a)}, {"b", integer_json(c.b())}});
    }
    return out;
}

// {"dir": [...], "theta": [num, den]} per torsion-translated subtorus.
inline Json locus_json(const SupportLocus& locus) {
    Json out = Json::array();
    for (auto& c : locus.components()) {
        Json dir = Json::array();
        for (auto& d : c.direction()) dir.push_back(integer_json(d));
        out.push_back(Json{{"dir", std::move(dir)}, {"theta", rational_json(c.theta())}});
    }
    return out;
}

inline Json budget_json(const Budget& budget, const AnsatzBounds& bounds) {
    return Json{{"max_pairs", budget.max_pairs},
                {"max_op_degree", budget.max_op_degree},
                {"max_s_degree", budget.max_s_degree},
                {"max_order", bounds.order},
                {"max_xdeg", bounds.xdeg},
                {"max_sdeg", bounds.sdeg}};
}

inline Json structure_json(const StructureReport& rep) {
    Json unresolved = Json::array();
    for (auto& g : rep.locus.unresolved) unresolved.push_back(g.str());
    return Json{{"components_ok", rep.components_ok},
                {"translations_ok", rep.translations_ok},
                {"passed", rep.passed},
                {"unresolved", std::move(unresolved)},
                {"notes", rep.notes}};
}

inline Json conjecture_json(const ConjectureReport& rep) {
    Json candidates = Json::array();
    for (std::size_t i = 0; i < rep.candidates.size(); ++i) {
        Json a = Json::array();
        for (auto& ai : rep.candidates[i].a()) a.push_back(integer_json(ai));
        candidates.push_back(Json{{"a", std::move(a)},
                                  {"b", integer_json(rep.candidates[i].b())},
                                  {"contained", static_cast<bool>(rep.contained[i])}});
    }
    return Json{{"candidates", std::move(candidates)},
                {"all_contained", rep.all_contained},
                {"notes", rep.notes}};
}

namespace detail {

inline Integer json_integer(const Json& v, const char* what) {
    if (v.is_number_integer()) return Integer(static_cast<long>(v.template get<long long>()));
    if (v.is_string()) {
        try {
            return Integer(v.template get<std::string>());
        } catch (const std::invalid_argument&) {
        }
    }
    throw InputError(std::string("resolution data: expected an integer for ") + what);
}

}  // namespace detail

// Parses {"r": int, "divisors": [{"N": [int...], "nu": int, "label"?: str}],
// "label"?: str}. Validation beyond shape (N >= 0, nu >= 1, |N| = r) lives in
// the ResolutionData constructor.
inline ResolutionData resolution_from_json(const Json& doc) {
    if (!doc.is_object() || !doc.contains("r") || !doc.contains("divisors"))
        throw InputError("resolution data must be an object with 'r' and 'divisors'");
    int r = static_cast<int>(detail::json_integer(doc.at("r"), "'r'").get_si());
    if (!doc.at("divisors").is_array())
        throw InputError("resolution data: 'divisors' must be an array");
    std::vector<ResolutionDivisor> divisors;
    for (auto& dv : doc.at("divisors")) {
        if (!dv.is_object() || !dv.contains("N") || !dv.contains("nu") ||
            !dv.at("N").is_array())
            throw InputError("resolution data: each divisor needs 'N' (array) and 'nu'");
        ResolutionDivisor d;
        for (auto& nij : dv.at("N")) d.N.push_back(detail::json_integer(nij, "'N'"));
        d.nu = detail::json_integer(dv.at("nu"), "'nu'");
        if (dv.contains("label")) d.label = dv.at("label").template get<std::string>();
        divisors.push_back(std::move(d));
    }
    std::string label;
    if (doc.contains("label")) label = doc.at("label").template get<std::string>();
    return ResolutionData(r, std::move(divisors), std::move(label));
}

inline ResolutionData resolution_from_text(const std::string& text) {
    Json doc = Json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (doc.is_discarded()) throw InputError("resolution data is not valid JSON");
    return resolution_from_json(doc);
}

}  // namespace bsideal
