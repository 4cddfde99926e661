#pragma once

#include "blowup.hpp"
#include "enumerate.hpp"
#include "errors.hpp"
#include "invariant.hpp"
#include "markings.hpp"
#include "multipoly.hpp"
#include "polygon.hpp"
#include "qpoly.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace refloor {

using json = nlohmann::json;

/// Accepts {"vertices": [[x,y], ...]} or a bare list of pairs.
inline LatticePolygon polygon_from_json(const json& j) {
    const json& list = j.is_object() ? j.at("vertices") : j;
    if (!list.is_array()) fail(ErrorCode::InvalidArgument, "vertices must be a list");
    std::vector<Point> pts;
    for (const auto& v : list) {
        if (!v.is_array() || v.size() != 2) fail(ErrorCode::InvalidArgument, "each vertex must be a pair");
        for (const auto& c : v)
            if (!c.is_number_integer()) fail(ErrorCode::NotLattice, "non-integer coordinate " + c.dump());
        pts.push_back({v[0].get<long>(), v[1].get<long>()});
    }
    return parse_polygon(pts);
}

inline LatticePolygon polygon_from_string(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(ErrorCode::InvalidArgument, std::string("bad polygon JSON: ") + e.what());
    }
    return polygon_from_json(j);
}

inline json to_json(const LatticePolygon& p) {
    json v = json::array();
    for (const auto& q : p.vertices()) v.push_back({q.x, q.y});
    return json{{"vertices", v}};
}

inline json to_json(const HTransverseData& d) {
    json nk = json::object();
    for (const auto& [k, c] : d.n_k) nk[std::to_string(k)] = c;
    return json{{"a", d.a},         {"e_top", d.e_top}, {"e_bot", d.e_bot}, {"L", d.L},
                {"R", d.R},         {"y", d.y},         {"chi", d.chi},     {"interior", d.interior},
                {"n_k", nk},        {"d_F", d.d_F},     {"s_max", d.s_max}};
}

inline json to_json(const SymLaurent& p) {
    json out = json::array();
    for (const auto& [e, c] : p.terms()) out.push_back({e, to_decimal(c)});
    return out;
}

inline json to_json(const TPoly& p) {
    json out = json::array();
    for (const auto& c : p.coeffs()) out.push_back(to_decimal(c));
    return out;
}

inline json to_json(const MultiPoly& p) {
    json out = json::array();
    for (const auto& [m, c] : p.ordered_terms()) {
        json ex = json::object();
        for (const auto& [v, e] : m) ex[v] = e;
        out.push_back({{"exponents", ex}, {"coeff", to_decimal(c)}});
    }
    return out;
}

inline json to_json(const FloorDiagram& D) {
    json floors = json::array();
    for (const auto& f : D.floors) floors.push_back({{"ell", f.ell}, {"r", f.r}, {"sources", f.sources}, {"sinks", f.sinks}});
    json edges = json::array();
    for (const auto& e : D.edges) edges.push_back({e.tail, e.head, e.weight});
    return json{{"floors", floors}, {"edges", edges}};
}

inline json to_json(const DiagramClass& c) {
    json j = to_json(c.diagram);
    j["degree"] = c.degree;
    j["codegree"] = c.codegree;
    j["aut"] = to_decimal(c.aut);
    return j;
}

inline json to_json(const Pairing& S) {
    json out = json::array();
    for (const auto& [i, k] : S.pairs()) out.push_back({i, k});
    return out;
}

inline Pairing pairing_from_json(const json& j) {
    std::vector<std::pair<long, long>> pairs;
    if (!j.is_array()) fail(ErrorCode::InvalidPairing, "pairing must be a list of pairs");
    for (const auto& p : j) {
        if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer())
            fail(ErrorCode::InvalidPairing, "pairing entries must be integer pairs");
        pairs.emplace_back(p[0].get<long>(), p[1].get<long>());
    }
    return Pairing(std::move(pairs));
}

inline json to_json(const HypothesisReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"holds", c.holds}});
    return json{{"theorem", to_string(r.theorem)}, {"i", r.i}, {"s", r.s}, {"satisfied", r.satisfied()},
                {"failures", r.failures()}, {"checks", checks}};
}

inline json to_json(const VerificationReport& r) {
    return json{{"s", r.s},
                {"i", r.i},
                {"polynomial", r.polynomial},
                {"formula", r.formula},
                {"enumerated", to_decimal(r.enumerated)},
                {"universal", to_decimal(r.universal)},
                {"equal", r.equal},
                {"hypotheses", to_json(r.hypotheses)},
                {"hypotheses_satisfied", r.hypotheses_hold()}};
}

inline json invariant_result_json(const LatticePolygon& p, long s, const Pairing& S, const SymLaurent& G) {
    json coeffs = json::array();
    for (const auto& c : coefficients_by_codegree(G)) coeffs.push_back(to_decimal(c));
    return json{{"polygon", to_json(p)},
                {"s", s},
                {"pairing", to_json(S)},
                {"G", to_json(G)},
                {"degree", G.is_zero() ? json(nullptr) : json(G.max_u() / 2)},
                {"coefficients_by_codegree", coeffs}};
}

inline json to_json(const BlowupReport& r) {
    return json{{"b", r.b},
                {"m", r.m},
                {"i", r.i},
                {"blown_up", to_json(r.blown_up)},
                {"left", to_decimal(r.left)},
                {"right", to_decimal(r.right)},
                {"original_counts", r.original_counts},
                {"equal", r.equal},
                {"in_hypothesis", r.in_hypothesis()},
                {"original_hypotheses", to_json(r.original_star)},
                {"blown_up_hypotheses", to_json(r.blown_star)}};
}

} // namespace refloor
