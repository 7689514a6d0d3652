// Exhaustive induced odd-hole search and witness verification.

#include "agperfect/holes.hpp"

#include <algorithm>
#include <stdexcept>

namespace agperfect {

namespace {

// DFS over induced paths [anchor, ..., tip] confined to vertices above the
// anchor. A candidate w must be adjacent to the tip and non-adjacent to all
// internal path vertices; if it is also adjacent to the anchor it can only
// close the cycle (valid when the total length is odd and >= 5), otherwise
// it extends the path. Every hole contains its own smallest vertex, so
// scanning anchors in increasing order covers all of them.
struct HoleSearch {
    const GraphView& g;
    std::size_t cap;  // max cycle length, inclusive
    DeadlineTicker ticker;
    std::vector<std::size_t> path;
    std::vector<char> in_path;

    HoleSearch(const GraphView& view, std::size_t max_len, const Deadline* dl)
        : g(view), cap(max_len), ticker(dl), in_path(view.size(), 0) {}

    bool extend(std::size_t w) {
        if (path.size() + 1 > cap - 1) return false;  // no room left to close
        path.push_back(w);
        in_path[w] = 1;
        if (dfs()) return true;
        in_path[w] = 0;
        path.pop_back();
        return false;
    }

    bool dfs() {
        ticker.tick();
        const std::size_t n = g.size();
        const std::size_t anchor = path.front();
        const std::size_t tip = path.back();
        for (std::size_t w = anchor + 1; w < n; ++w) {
            if (in_path[w] || !g.adj(tip, w)) continue;
            if (path.size() == 1) {
                // w becomes the second cycle vertex, the one neighbor of the
                // anchor the cycle is allowed besides its closing vertex
                if (extend(w)) return true;
                continue;
            }
            bool chord = false;
            for (std::size_t i = 1; i + 1 < path.size(); ++i) {
                if (g.adj(path[i], w)) {
                    chord = true;
                    break;
                }
            }
            if (chord) continue;
            if (g.adj(anchor, w)) {
                const std::size_t len = path.size() + 1;
                if (len >= 5 && len % 2 == 1) {
                    path.push_back(w);
                    return true;
                }
                continue;  // closes at the wrong parity; w is unusable here
            }
            if (extend(w)) return true;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<std::size_t>> find_odd_hole_indices(
    const GraphView& g, std::optional<std::size_t> max_length, const Deadline* deadline) {
    const std::size_t n = g.size();
    const std::size_t cap = std::min(max_length.value_or(n), n);
    if (n < 5 || cap < 5) return std::nullopt;

    HoleSearch search(g, cap, deadline);
    for (std::size_t a = 0; a + 4 < n; ++a) {
        search.path.assign(1, a);
        std::fill(search.in_path.begin(), search.in_path.end(), 0);
        search.in_path[a] = 1;
        if (search.dfs()) return search.path;
    }
    return std::nullopt;
}

std::optional<HoleWitness> find_induced_odd_hole(const AGGraph& g, bool use_complement,
                                                 std::optional<std::size_t> max_length,
                                                 const Deadline* deadline) {
    auto idx = find_odd_hole_indices(g.view(use_complement), max_length, deadline);
    if (!idx) return std::nullopt;
    HoleWitness w;
    w.in_complement = use_complement;
    w.cycle.reserve(idx->size());
    for (std::size_t i : *idx) w.cycle.push_back(g.vertices[i]);
    return w;
}

bool verify_witness(const AGGraph& g, const HoleWitness& w) {
    const std::size_t t = w.cycle.size();
    if (t < 5 || t % 2 == 0) return false;

    std::vector<std::size_t> idx(t);
    for (std::size_t i = 0; i < t; ++i) {
        auto pos = g.index_of(w.cycle[i]);
        if (!pos) return false;
        idx[i] = *pos;
    }
    std::vector<std::size_t> sorted = idx;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;

    const GraphView view = g.view(w.in_complement);
    for (std::size_t i = 0; i < t; ++i) {
        for (std::size_t j = i + 1; j < t; ++j) {
            const bool consecutive = (j == i + 1) || (i == 0 && j == t - 1);
            if (view.adj(idx[i], idx[j]) != consecutive) return false;
        }
    }
    return true;
}

BergeVerdict is_berge(const AGGraph& g, const Deadline* deadline) {
    for (bool side : {false, true}) {
        if (auto w = find_induced_odd_hole(g, side, std::nullopt, deadline)) {
            if (!verify_witness(g, *w))
                throw std::logic_error("is_berge: found hole failed verification");
            BergeVerdict v;
            v.is_berge = false;
            v.witness = std::move(w);
            v.search_exhaustive = false;  // stopped at the first witness
            return v;
        }
    }
    return {true, std::nullopt, true};
}

}  // namespace agperfect
