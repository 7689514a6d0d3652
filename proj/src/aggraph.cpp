#include "agperfect/aggraph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace agperfect {

bool adjacent(const ExponentVector& u, const ExponentVector& v,
              const std::vector<std::uint32_t>& alpha) {
    if (u.size() != alpha.size() || v.size() != alpha.size())
        throw std::invalid_argument("adjacent: exponent vector length mismatch");
    for (std::size_t i = 0; i < alpha.size(); ++i)
        if (u[i] + v[i] < alpha[i]) return false;
    return true;
}

bool complement_adjacent(const ExponentVector& u, const ExponentVector& v,
                         const std::vector<std::uint32_t>& alpha) {
    return !adjacent(u, v, alpha);
}

AGGraph build_graph(const Factorization& f) {
    // canonical axis order: exponent non-increasing, ties by prime ascending
    // (parts are prime-ascending, so a stable sort keeps ties in prime order)
    std::vector<std::size_t> axis(f.parts.size());
    std::iota(axis.begin(), axis.end(), 0);
    std::stable_sort(axis.begin(), axis.end(), [&](std::size_t a, std::size_t b) {
        return f.parts[a].exponent > f.parts[b].exponent;
    });

    AGGraph g;
    std::vector<std::uint32_t> alphas;
    alphas.reserve(axis.size());
    for (std::size_t i : axis) {
        alphas.push_back(f.parts[i].exponent);
        g.axis_primes.push_back(f.parts[i].prime);
    }
    g.signature = Signature(alphas);
    g.n = f.checked_value();
    g.vertices = proper_divisor_vectors(alphas);

    const std::size_t nv = g.vertices.size();
    g.adj = BitMatrix(nv);
    for (std::size_t i = 0; i < nv; ++i)
        for (std::size_t j = i + 1; j < nv; ++j)
            if (adjacent(g.vertices[i], g.vertices[j], alphas)) g.adj.set_edge(i, j);
    return g;
}

AGGraph build_graph(const Signature& s) {
    return build_graph(synthetic_factorization(s));
}

std::optional<std::size_t> AGGraph::index_of(const ExponentVector& v) const {
    if (v.size() != signature.exponents.size()) return std::nullopt;
    auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
    if (it == vertices.end() || *it != v) return std::nullopt;
    return static_cast<std::size_t>(it - vertices.begin());
}

std::uint64_t AGGraph::divisor(std::size_t idx) const {
    if (!n) throw std::logic_error("AGGraph::divisor: n does not fit in 64 bits");
    unsigned __int128 v = 1;
    const ExponentVector& e = vertices[idx];
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::uint32_t j = 0; j < e[i]; ++j) v *= axis_primes[i];
    return static_cast<std::uint64_t>(v);
}

std::string AGGraph::vertex_label(std::size_t idx) const {
    if (n) return std::to_string(divisor(idx));
    std::string out;
    const ExponentVector& e = vertices[idx];
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) out += '.';
        out += std::to_string(e[i]);
    }
    return out;
}

std::vector<std::size_t> degree_profile(const AGGraph& g) {
    std::vector<std::size_t> degs(g.vertex_count());
    for (std::size_t i = 0; i < degs.size(); ++i) degs[i] = g.adj.degree(i);
    std::sort(degs.begin(), degs.end());
    return degs;
}

}  // namespace agperfect
