// Exact clique and chromatic number on the dense bitset representation.

#include "agperfect/invariants.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace agperfect {

namespace {

using Words = std::vector<std::uint64_t>;

bool words_empty(const Words& w) {
    for (auto x : w)
        if (x) return false;
    return true;
}

std::size_t first_bit(const Words& w) {
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(w[i]));
    return static_cast<std::size_t>(-1);
}

void clear_bit(Words& w, std::size_t v) { w[v / 64] &= ~(std::uint64_t{1} << (v % 64)); }

struct MaxCliqueSearch {
    const BitMatrix& g;
    std::size_t words;
    DeadlineTicker ticker;
    std::vector<std::size_t> best;
    std::vector<std::size_t> current;

    MaxCliqueSearch(const BitMatrix& graph, const Deadline* dl)
        : g(graph), words(graph.words_per_row()), ticker(dl) {}

    // Greedy clique in canonical order: the initial lower bound and fallback
    // certificate.
    void seed() {
        Words cand(words, 0);
        for (std::size_t v = 0; v < g.size(); ++v) cand[v / 64] |= std::uint64_t{1} << (v % 64);
        while (!words_empty(cand)) {
            const std::size_t v = first_bit(cand);
            best.push_back(v);
            for (std::size_t w = 0; w < words; ++w) cand[w] &= g.row(v)[w];
        }
    }

    // Greedy coloring of the candidate set; class numbers bound the clique
    // size reachable from here. order/colors come out color-ascending.
    void color(const Words& cand, std::vector<std::size_t>& order,
               std::vector<std::size_t>& colors) const {
        Words uncolored = cand;
        std::size_t c = 0;
        while (!words_empty(uncolored)) {
            ++c;
            Words avail = uncolored;
            while (!words_empty(avail)) {
                const std::size_t v = first_bit(avail);
                order.push_back(v);
                colors.push_back(c);
                clear_bit(uncolored, v);
                clear_bit(avail, v);
                for (std::size_t w = 0; w < words; ++w) avail[w] &= ~g.row(v)[w];
            }
        }
    }

    void expand(Words& cand) {
        ticker.tick();
        if (words_empty(cand)) {
            if (current.size() > best.size()) best = current;
            return;
        }
        std::vector<std::size_t> order, colors;
        color(cand, order, colors);
        for (std::size_t i = order.size(); i-- > 0;) {
            if (current.size() + colors[i] <= best.size()) return;
            const std::size_t v = order[i];
            current.push_back(v);
            Words next(words);
            for (std::size_t w = 0; w < words; ++w) next[w] = cand[w] & g.row(v)[w];
            expand(next);
            current.pop_back();
            clear_bit(cand, v);
        }
    }

    std::vector<std::size_t> run() {
        if (g.size() == 0) return {};
        seed();
        Words all(words, 0);
        for (std::size_t v = 0; v < g.size(); ++v) all[v / 64] |= std::uint64_t{1} << (v % 64);
        expand(all);
        std::sort(best.begin(), best.end());
        return best;
    }
};

// Exact t-colorability by backtracking in canonical vertex order; a new
// vertex may open at most one fresh color, so color classes end up indexed
// by their canonically smallest member.
bool try_color(const BitMatrix& g, std::size_t num_colors, std::vector<std::size_t>& out,
               DeadlineTicker& ticker) {
    const std::size_t n = g.size();
    std::vector<std::size_t> color(n, static_cast<std::size_t>(-1));

    auto dfs = [&](auto&& self, std::size_t v, std::size_t used) -> bool {
        ticker.tick();
        if (v == n) return true;
        // colors of earlier vertices are fixed for the whole loop below
        std::vector<char> forbidden(num_colors, 0);
        for (std::size_t u = 0; u < v; ++u)
            if (g.test(u, v)) forbidden[color[u]] = 1;
        const std::size_t limit = std::min(num_colors, used + 1);
        for (std::size_t c = 0; c < limit; ++c) {
            if (forbidden[c]) continue;
            color[v] = c;
            if (self(self, v + 1, std::max(used, c + 1))) return true;
        }
        color[v] = static_cast<std::size_t>(-1);
        return false;
    };

    if (dfs(dfs, 0, 0)) {
        out = color;
        return true;
    }
    return false;
}

void validate_clique(const AGGraph& g, const std::vector<std::size_t>& clique) {
    for (std::size_t i = 0; i < clique.size(); ++i)
        for (std::size_t j = i + 1; j < clique.size(); ++j)
            if (!g.adj.test(clique[i], clique[j]))
                throw std::logic_error("invariants: clique certificate not pairwise adjacent");
}

void validate_coloring(const AGGraph& g, const std::vector<std::size_t>& coloring,
                       std::size_t chi) {
    std::size_t used = 0;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) used = std::max(used, coloring[v] + 1);
    if (g.vertex_count() > 0 && used != chi)
        throw std::logic_error("invariants: coloring does not use exactly chi colors");
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
        for (std::size_t j = i + 1; j < g.vertex_count(); ++j)
            if (g.adj.test(i, j) && coloring[i] == coloring[j])
                throw std::logic_error("invariants: coloring certificate not proper");
}

}  // namespace

std::pair<std::size_t, std::vector<std::size_t>> clique_number(const AGGraph& g,
                                                               const Deadline* deadline) {
    MaxCliqueSearch search(g.adj, deadline);
    auto clique = search.run();
    return {clique.size(), clique};
}

std::pair<std::size_t, std::vector<std::size_t>> chromatic_number(const AGGraph& g,
                                                                  const Deadline* deadline) {
    const std::size_t n = g.vertex_count();
    if (n == 0) return {0, {}};
    const std::size_t lower = std::max<std::size_t>(clique_number(g, deadline).first, 1);
    DeadlineTicker ticker(deadline);
    std::vector<std::size_t> coloring;
    for (std::size_t t = lower; t <= n; ++t)
        if (try_color(g.adj, t, coloring, ticker)) return {t, coloring};
    throw std::logic_error("chromatic_number: no coloring found");  // unreachable
}

InvariantReport compute_invariants(const AGGraph& g, const Deadline* deadline) {
    InvariantReport r;
    auto [omega, clique] = clique_number(g, deadline);
    auto [chi, coloring] = chromatic_number(g, deadline);
    r.omega = omega;
    r.chi = chi;
    r.weakly_perfect = (omega == chi);
    r.max_clique = std::move(clique);
    r.coloring = std::move(coloring);
    validate_clique(g, r.max_clique);
    validate_coloring(g, r.coloring, r.chi);
    if (r.omega > r.chi) throw std::logic_error("invariants: omega exceeds chi");
    return r;
}

}  // namespace agperfect
