#pragma once

#include <json.hpp>

#include "lmow/canonical.hpp"
#include "lmow/closure.hpp"
#include "lmow/knots.hpp"
#include "lmow/lmo.hpp"
#include "lmow/wheels.hpp"

namespace lmow {

using json = nlohmann::json;

inline json to_json(const Rational& r) { return r.str(); }

inline Rational rational_from_json(const json& j) {
    if (j.is_number_integer())
        return Rational((long)j.get<long long>());
    if (j.is_string())
        return Rational(j.get<std::string>());
    throw structure_error("expected a rational as \"p/q\" string");
}

inline json to_json(const SymmetricLaurent& p) {
    json coeffs = json::array();
    for (int k = -p.span(); k <= p.span(); ++k)
        coeffs.push_back(p.at(k).str());
    return json{{"span", p.span()}, {"coeffs", coeffs}};
}

inline SymmetricLaurent laurent_from_json(const json& j) {
    if (!j.is_object() || !j.contains("span") || !j.contains("coeffs"))
        throw structure_error("expected {\"span\": d, \"coeffs\": [...]}");
    int span = j.at("span").get<int>();
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs"))
        coeffs.push_back(rational_from_json(c));
    return SymmetricLaurent(span, std::move(coeffs));
}

// Diagram format: {"circles": k, "vertices": [[d],[a,b,c],...],
// "edges": [[x,y],...]}; trivalent cells list their cyclic order.
inline json to_json(const UniTrivalentDiagram& d) {
    json vertices = json::array();
    for (int x : d.univalent)
        vertices.push_back(json::array({x}));
    for (const auto& t : d.trivalent)
        vertices.push_back(json::array({t[0], t[1], t[2]}));
    json edges = json::array();
    for (int x = 0; x < d.dart_count(); ++x)
        if (x < d.pairing[x])
            edges.push_back(json::array({x, d.pairing[x]}));
    return json{{"circles", d.circles}, {"vertices", vertices}, {"edges", edges}};
}

inline UniTrivalentDiagram diagram_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw structure_error("expected {\"circles\", \"vertices\", \"edges\"}");
    UniTrivalentDiagram d;
    d.circles = j.value("circles", 0);
    int maxdart = -1;
    for (const auto& cell : j.at("vertices")) {
        if (cell.size() == 1) {
            d.univalent.push_back(cell[0].get<int>());
        } else if (cell.size() == 3) {
            d.trivalent.push_back(
                {cell[0].get<int>(), cell[1].get<int>(), cell[2].get<int>()});
        } else {
            throw structure_error("vertex cells must have 1 or 3 darts");
        }
        for (const auto& x : cell)
            maxdart = std::max(maxdart, x.get<int>());
    }
    for (const auto& e : j.at("edges"))
        for (const auto& x : e)
            maxdart = std::max(maxdart, x.get<int>());
    d.pairing.assign(maxdart + 1, -1);
    for (const auto& e : j.at("edges")) {
        if (e.size() != 2)
            throw structure_error("edges must be dart pairs");
        int a = e[0].get<int>(), b = e[1].get<int>();
        if (a < 0 || b < 0 || a > maxdart || b > maxdart || a == b ||
            d.pairing[a] != -1 || d.pairing[b] != -1)
            throw structure_error("edges must pair each dart exactly once");
        d.pairing[a] = b;
        d.pairing[b] = a;
    }
    try {
        d.validate();
    } catch (const structure_error&) {
        throw;
    }
    return d;
}

inline json to_json(const DiagramCombination& x) {
    json out = json::array();
    for (const auto& [k, c] : x.terms())
        out.push_back(json{{"coeff", c.str()}, {"diagram", to_json(k.repr)}});
    return out;
}

inline DiagramCombination combination_from_json(const json& j) {
    if (!j.is_array())
        throw structure_error("expected an array of {coeff, diagram} terms");
    DiagramCombination out;
    for (const auto& term : j)
        out.add(diagram_from_json(term.at("diagram")),
                rational_from_json(term.at("coeff")));
    return out;
}

inline json to_json(const AlphaSeries& a) {
    json out = json::object();
    for (const auto& [w, v] : a.coeffs)
        out[std::to_string(w)] = v.str();
    return out;
}

inline AlphaSeries alpha_from_json(const json& j) {
    AlphaSeries out;
    for (auto it = j.begin(); it != j.end(); ++it)
        out.set(std::stoi(it.key()), rational_from_json(it.value()));
    return out;
}

inline json to_json(const WheelSeries& w) {
    json out = json::array();
    for (const auto& [mono, c] : w.terms())
        out.push_back(json{{"wheels", mono}, {"coeff", c.str()}});
    return out;
}

inline json to_json(const LMOElement& z) {
    json parts = json::object();
    for (int m = 0; m <= z.max_degree; ++m)
        parts[std::to_string(m)] = to_json(z.parts[m]);
    return json{{"max_degree", z.max_degree}, {"parts", parts}};
}

inline LMOElement lmo_from_json(const json& j) {
    LMOElement z;
    z.max_degree = j.at("max_degree").get<int>();
    if (z.max_degree < 0)
        throw structure_error("max_degree must be nonnegative");
    z.parts.assign(z.max_degree + 1, DiagramCombination::zero());
    for (auto it = j.at("parts").begin(); it != j.at("parts").end(); ++it) {
        int m = std::stoi(it.key());
        if (m < 0 || m > z.max_degree)
            throw structure_error("part degree out of range");
        z.parts[m] = combination_from_json(it.value());
    }
    return z;
}

inline PDCode pd_from_json(const json& j) {
    if (!j.is_object() || !j.contains("crossings"))
        throw structure_error("expected {\"crossings\": [[a,b,c,d],...]}");
    PDCode pd;
    for (const auto& x : j.at("crossings")) {
        if (x.size() != 4)
            throw structure_error("crossings must be 4-tuples");
        pd.crossings.push_back(
            {x[0].get<int>(), x[1].get<int>(), x[2].get<int>(), x[3].get<int>()});
    }
    return pd;
}

inline SeifertMatrix seifert_from_json(const json& j) {
    if (!j.is_object() || !j.contains("matrix"))
        throw structure_error("expected {\"matrix\": [[...],...]}");
    SeifertMatrix m;
    for (const auto& row : j.at("matrix")) {
        std::vector<long> r;
        for (const auto& x : row)
            r.push_back(x.get<long>());
        m.v.push_back(std::move(r));
    }
    return m;
}

} // namespace lmow
