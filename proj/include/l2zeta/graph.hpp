#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "laurent.hpp"
#include "matrix.hpp"

namespace l2zeta {

/// Finite quotient graph with integer edge shifts. Edges are undirected
/// with a canonical orientation; traversing an edge backwards negates
/// its shift, which makes the adjacency matrix satisfy d(t) = d(1/t)^T
/// by construction. Loops and multi-edges are allowed and meaningful.
struct VoltageGraph {
    struct Edge {
        int from = 0;
        int to = 0;
        long long shift = 0;
    };

    std::vector<std::string> vertices;
    std::vector<Edge> edges;

    int vertex_count() const { return static_cast<int>(vertices.size()); }
    int edge_count() const { return static_cast<int>(edges.size()); }
    int euler_char() const { return vertex_count() - edge_count(); }

    /// A loop contributes 2 to the degree of its vertex.
    std::vector<int> degrees() const {
        std::vector<int> deg(vertices.size(), 0);
        for (const auto& e : edges) {
            deg[e.from] += 1;
            deg[e.to] += 1;
        }
        return deg;
    }

    /// q with all degrees equal to q+1, or nullopt when not regular.
    std::optional<int> regular_q() const {
        auto deg = degrees();
        if (deg.empty()) return std::nullopt;
        for (int d : deg)
            if (d != deg[0]) return std::nullopt;
        return deg[0] - 1;
    }

    /// delta(t): edge i->j with shift s adds t^s to (i,j) and t^-s to
    /// (j,i); a loop with shift s adds t^s + t^-s to its diagonal entry.
    Matrix<LaurentPoly> adjacency() const {
        Matrix<LaurentPoly> d(vertex_count());
        for (const auto& e : edges) {
            int s = static_cast<int>(e.shift);
            if (e.from == e.to) {
                d.at(e.from, e.from) += LaurentPoly::term(s, UPoly(1));
                d.at(e.from, e.from) += LaurentPoly::term(-s, UPoly(1));
            } else {
                d.at(e.from, e.to) += LaurentPoly::term(s, UPoly(1));
                d.at(e.to, e.from) += LaurentPoly::term(-s, UPoly(1));
            }
        }
        return d;
    }

    /// I - delta u + Q u^2 with Q = diag(degree - 1).
    Matrix<LaurentPoly> delta_u() const {
        Matrix<LaurentPoly> m = adjacency();
        auto deg = degrees();
        UPoly u = UPoly::monomial(1);
        UPoly u2 = UPoly::monomial(2);
        for (int i = 0; i < m.n; ++i)
            for (int j = 0; j < m.n; ++j) {
                LaurentPoly entry;
                for (const auto& [k, p] : m.at(i, j).c) entry.c[k] = -(p * u);
                if (i == j) {
                    entry += LaurentPoly(UPoly(1) + u2 * Int(deg[i] - 1));
                }
                entry.trim();
                m.at(i, j) = std::move(entry);
            }
        return m;
    }

    /// Re-lift vertices by integer potentials: edge shift s becomes
    /// s + k[from] - k[to]. Leaves every lift-independent quantity fixed.
    VoltageGraph with_potentials(const std::vector<long long>& k) const {
        VoltageGraph g = *this;
        for (auto& e : g.edges) e.shift += k[e.from] - k[e.to];
        return g;
    }
};

inline VoltageGraph parse_graph(const nlohmann::json& j) {
    if (!j.is_object()) throw validation_error("graph: top level must be an object");
    if (!j.contains("vertices") || !j["vertices"].is_array())
        throw validation_error("graph: missing \"vertices\" array");
    VoltageGraph g;
    std::unordered_map<std::string, int> index;
    for (size_t i = 0; i < j["vertices"].size(); ++i) {
        const auto& v = j["vertices"][i];
        if (!v.is_string())
            throw validation_error("graph: vertices[" + std::to_string(i) + "] is not a string");
        std::string name = v.get<std::string>();
        if (index.count(name))
            throw validation_error("graph: duplicate vertex \"" + name + "\"");
        index[name] = static_cast<int>(g.vertices.size());
        g.vertices.push_back(std::move(name));
    }
    if (g.vertices.empty()) throw validation_error("graph: empty vertex set");
    if (!j.contains("edges") || !j["edges"].is_array())
        throw validation_error("graph: missing \"edges\" array");
    for (size_t i = 0; i < j["edges"].size(); ++i) {
        const auto& e = j["edges"][i];
        std::string where = "graph: edges[" + std::to_string(i) + "]";
        if (!e.is_object()) throw validation_error(where + " is not an object");
        for (const char* key : {"from", "to"}) {
            if (!e.contains(key) || !e[key].is_string())
                throw validation_error(where + ": missing string \"" + key + "\"");
            if (!index.count(e[key].get<std::string>()))
                throw validation_error(where + ": unknown vertex \"" + e[key].get<std::string>() + "\"");
        }
        if (!e.contains("shift") || !e["shift"].is_number_integer())
            throw validation_error(where + ": \"shift\" must be an integer");
        g.edges.push_back({index[e["from"].get<std::string>()], index[e["to"].get<std::string>()],
                           e["shift"].get<long long>()});
    }
    return g;
}

inline VoltageGraph parse_graph(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw validation_error(std::string("graph: invalid JSON: ") + e.what());
    }
    return parse_graph(j);
}

}  // namespace l2zeta
