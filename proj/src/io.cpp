#include "agperfect/io.hpp"

namespace agperfect {

namespace {

std::string graph_name(const AGGraph& g) {
    if (g.n) return "AG_" + std::to_string(*g.n);
    std::string name = "AG_sig";  // n too large for 64 bits, name by signature
    for (std::uint32_t e : g.signature.exponents) name += '_' + std::to_string(e);
    return name;
}

}  // namespace

nlohmann::json graph_json(const AGGraph& g) {
    nlohmann::json j;
    j["signature"] = g.signature.exponents;
    if (g.n) j["n"] = *g.n;
    nlohmann::json vertices = nlohmann::json::array();
    for (const ExponentVector& v : g.vertices) vertices.push_back(v);
    j["vertices"] = std::move(vertices);
    nlohmann::json edges = nlohmann::json::array();
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
        for (std::size_t k = i + 1; k < g.vertex_count(); ++k)
            if (g.adj.test(i, k)) edges.push_back({i, k});
    j["edges"] = std::move(edges);
    return j;
}

std::string graph_dot(const AGGraph& g) {
    std::string out = "graph " + graph_name(g) + " {\n";
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
        out += "  \"" + g.vertex_label(i) + "\";\n";
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
        for (std::size_t k = i + 1; k < g.vertex_count(); ++k)
            if (g.adj.test(i, k))
                out += "  \"" + g.vertex_label(i) + "\" -- \"" + g.vertex_label(k) + "\";\n";
    out += "}\n";
    return out;
}

nlohmann::json witness_json(const AGGraph& g, const HoleWitness& w) {
    nlohmann::json j;
    j["in_complement"] = w.in_complement;
    nlohmann::json cycle = nlohmann::json::array();
    for (const ExponentVector& v : w.cycle) {
        if (auto idx = g.index_of(v); idx && g.n) {
            cycle.push_back(g.divisor(*idx));
        } else {
            cycle.push_back(v);
        }
    }
    j["cycle"] = std::move(cycle);
    return j;
}

nlohmann::json invariants_json(const AGGraph& g, const InvariantReport& r) {
    nlohmann::json j;
    j["omega"] = r.omega;
    j["chi"] = r.chi;
    j["weakly_perfect"] = r.weakly_perfect;
    nlohmann::json clique = nlohmann::json::array();
    for (std::size_t v : r.max_clique) {
        if (g.n) {
            clique.push_back(g.divisor(v));
        } else {
            clique.push_back(g.vertex_label(v));
        }
    }
    j["max_clique"] = std::move(clique);
    nlohmann::json coloring = nlohmann::json::object();
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        coloring[g.vertex_label(v)] = r.coloring[v];
    j["coloring"] = std::move(coloring);
    return j;
}

}  // namespace agperfect
