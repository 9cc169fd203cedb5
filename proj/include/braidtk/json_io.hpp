#pragma once

#include <json.hpp>

#include <string>

#include "bounds.hpp"
#include "braid.hpp"
#include "diagram.hpp"
#include "foliation.hpp"
#include "invariants.hpp"
#include "laurent.hpp"
#include "rational.hpp"
#include "search.hpp"
#include "table.hpp"

namespace braidtk {

using nlohmann::json;

/// {"<var>": {"<exponent>": coefficient, ...}}
inline json poly_to_json(const LaurentPoly& p, const std::string& var) {
    json terms = json::object();
    for (auto [e, c] : p.coeffs()) terms[std::to_string(e)] = c;
    return json{{var, terms}};
}

inline LaurentPoly poly_from_json(const json& j, const std::string& var) {
    LaurentPoly p;
    const json& terms = j.at(var);
    for (auto it = terms.begin(); it != terms.end(); ++it)
        p.add_term(it.value().get<long long>(), std::stoi(it.key()));
    return p;
}

/// {"vz": [[v_exponent, z_exponent, coefficient], ...]}
inline json poly2_to_json(const LaurentPoly2& p) {
    json terms = json::array();
    for (auto& [k, c] : p.coeffs()) terms.push_back(json::array({k.first, k.second, c}));
    return json{{"vz", terms}};
}

inline json rational_to_json(const Rational& r) {
    return json{{"num", numerator(r).str()}, {"den", denominator(r).str()}};
}

inline json braid_word_to_json(const BraidWord& w) { return json(format_braid_word(w)); }

inline json diagram_to_json(const ClosedBraidDiagram& d) {
    json crossings = json::array();
    for (auto [i, s] : d.crossings) crossings.push_back(json::array({i, s}));
    return json{{"strands", d.strands}, {"crossings", crossings}, {"components", d.components}};
}

inline json fingerprint_to_json(const Fingerprint& fp) {
    json j;
    j["jones"] = poly_to_json(fp.jones, "A");
    j["alexander"] = fp.alexander ? poly_to_json(*fp.alexander, "t") : json(nullptr);
    j["components"] = fp.components;
    return j;
}

inline Fingerprint fingerprint_from_json(const json& j) {
    Fingerprint fp;
    fp.jones = poly_from_json(j.at("jones"), "A");
    if (!j.at("alexander").is_null()) fp.alexander = poly_from_json(j.at("alexander"), "t");
    fp.components = j.at("components").get<int>();
    return fp;
}

inline json certificate_to_json(const FoliationCertificate& c) {
    json vp = json::array(), vm = json::array();
    for (auto& [t, count] : c.v_plus) vp.push_back(json::array({t.first, t.second, count}));
    for (auto& [beta, count] : c.v_minus) vm.push_back(json::array({beta, count}));
    return json{{"b", c.braid_index},
                {"chi", c.chi},
                {"v_plus", vp},
                {"v_minus", vm},
                {"r", json::array({c.r_aa, c.r_ab, c.r_bb})}};
}

inline FoliationCertificate certificate_from_json(const json& j) {
    FoliationCertificate c;
    c.braid_index = j.at("b").get<int>();
    c.chi = j.at("chi").get<int>();
    for (const auto& entry : j.at("v_plus")) {
        if (!entry.is_array() || entry.size() != 3)
            throw std::invalid_argument("certificate: v_plus entries are [alpha, beta, count]");
        c.v_plus[{entry[0].get<int>(), entry[1].get<int>()}] += entry[2].get<long long>();
    }
    for (const auto& entry : j.at("v_minus")) {
        if (!entry.is_array() || entry.size() != 2)
            throw std::invalid_argument("certificate: v_minus entries are [beta, count]");
        c.v_minus[entry[0].get<int>()] += entry[1].get<long long>();
    }
    const auto& r = j.at("r");
    if (!r.is_array() || r.size() != 3)
        throw std::invalid_argument("certificate: r is [aa, ab, bb]");
    c.r_aa = r[0].get<long long>();
    c.r_ab = r[1].get<long long>();
    c.r_bb = r[2].get<long long>();
    c.validate();
    return c;
}

inline json check_report_to_json(const CheckReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks) {
        checks.push_back(json{{"name", c.name},
                              {"lhs", c.lhs},
                              {"rhs", c.rhs},
                              {"relation", c.relation == CheckRelation::equal ? "==" : "<="},
                              {"pass", c.pass},
                              {"delta", c.delta()}});
    }
    return json{{"checks", checks}, {"pass", r.all_pass()}};
}

inline json bound_report_to_json(const BoundReport& r) {
    return json{{"chi", r.chi},
                {"braid_index", r.braid_index},
                {"lower", r.lower},
                {"upper", rational_to_json(r.upper)},
                {"formula", r.formula}};
}

inline json decision_to_json(const DecisionResult& r) {
    json levels = json::array();
    for (const auto& l : r.levels)
        levels.push_back(json{{"strands", l.strands},
                              {"budget", l.budget},
                              {"visited", l.visited},
                              {"emitted", l.emitted}});
    const char* kind = r.kind == DecisionKind::certified_no    ? "certified_no"
                       : r.kind == DecisionKind::candidate_found ? "candidate_found"
                                                                 : "unknot_special";
    json j{{"result", kind}, {"levels", levels}};
    j["witness"] = r.witness ? braid_word_to_json(*r.witness) : json(nullptr);
    return j;
}

inline json census_entry_to_json(const CensusEntry& e) {
    json j;
    j["fingerprint"] = fingerprint_to_json(e.fp);
    j["witness"] = braid_word_to_json(e.witness);
    j["genus_lower"] = e.genus_lower;
    j["genus_upper"] = e.genus_upper;
    j["mfw_lower_bound"] = e.mfw;
    j["certified_genus"] = e.certified_genus ? json(*e.certified_genus) : json(nullptr);
    j["certified_braid_index"] =
        e.certified_braid_index ? json(*e.certified_braid_index) : json(nullptr);
    return j;
}

inline json table_row_to_json(const KnotTableRow& row) {
    return json{{"name", row.name},
                {"word", format_braid_word(row.word)},
                {"chi", row.chi},
                {"braid_index", row.braid_index},
                {"crossing_number", row.crossing_number}};
}

}  // namespace braidtk
