#include <doctest.h>

#include <stdexcept>

#include "agperfect/harness.hpp"
#include "agperfect/invariants.hpp"
#include "oracles.hpp"

using namespace agperfect;

TEST_SUITE("invariants") {

TEST_CASE("path graph of n=12") {
    const AGGraph g = build_graph(factor(12));
    const auto [omega, clique] = clique_number(g);
    CHECK(omega == 2);
    CHECK(clique.size() == 2);
    const auto [chi, coloring] = chromatic_number(g);
    CHECK(chi == 2);  // a path is bipartite
    CHECK(coloring.size() == 4);
}

TEST_CASE("empty graph has omega = chi = 0") {
    const AGGraph g = build_graph(factor(7));
    CHECK(clique_number(g).first == 0);
    CHECK(chromatic_number(g).first == 0);
    const InvariantReport r = compute_invariants(g);
    CHECK(r.omega == 0);
    CHECK(r.chi == 0);
    CHECK(r.max_clique.empty());
    CHECK(r.coloring.empty());
}

TEST_CASE("prime powers: omega = chi = floor((alpha+1)/2)") {
    for (std::uint32_t alpha = 2; alpha <= 12; ++alpha) {
        const AGGraph g = build_graph(Signature({alpha}));
        const std::size_t expected = (alpha + 1) / 2;
        const InvariantReport r = compute_invariants(g);
        CHECK(r.omega == expected);
        CHECK(r.chi == expected);
        CHECK(r.weakly_perfect);
        // and both match the brute-force subset oracles
        CHECK(oracle::omega(g.adj) == expected);
        CHECK(oracle::chi(g.adj) == expected);
    }
}

TEST_CASE("four squarefree primes: omega = chi = 4") {
    const AGGraph g = build_graph(factor(210));
    CHECK(oracle::omega(g.adj) == 4);
    const InvariantReport r = compute_invariants(g);
    CHECK(r.omega == 4);
    CHECK(r.chi == 4);
    CHECK(r.weakly_perfect);
}

TEST_CASE("exact numbers match the subset oracles on small graphs") {
    SweepConfig c;
    c.max_primes = 4;
    c.max_exponent = 13;
    c.max_vertices = 12;
    for (const Signature& s : enumerate_signatures(c)) {
        const AGGraph g = build_graph(s);
        const InvariantReport r = compute_invariants(g);
        CHECK(r.omega == oracle::omega(g.adj));
        CHECK(r.chi == oracle::chi(g.adj));
    }
}

TEST_CASE("certificates validate and omega = chi across a scan set") {
    SweepConfig c;
    c.max_primes = 4;
    c.max_exponent = 3;
    c.max_vertices = 22;
    for (const Signature& s : enumerate_signatures(c)) {
        const AGGraph g = build_graph(s);
        const InvariantReport r = compute_invariants(g);  // throws if a certificate is invalid
        CHECK(r.max_clique.size() == r.omega);
        for (std::size_t i = 0; i < r.max_clique.size(); ++i)
            for (std::size_t j = i + 1; j < r.max_clique.size(); ++j)
                CHECK(g.adj.test(r.max_clique[i], r.max_clique[j]));
        std::size_t used = 0;
        for (std::size_t v = 0; v < g.vertex_count(); ++v) {
            used = std::max(used, r.coloring[v] + 1);
            for (std::size_t u = v + 1; u < g.vertex_count(); ++u)
                if (g.adj.test(u, v)) CHECK(r.coloring[u] != r.coloring[v]);
        }
        if (g.vertex_count() > 0) CHECK(used == r.chi);
        CHECK(r.omega <= r.chi);
        CHECK(r.weakly_perfect);  // omega = chi on every AG(Z_n) instance
    }
}

TEST_CASE("certificates are deterministic") {
    const AGGraph g = build_graph(factor(360));
    const InvariantReport a = compute_invariants(g);
    const InvariantReport b = compute_invariants(g);
    CHECK(a.max_clique == b.max_clique);
    CHECK(a.coloring == b.coloring);
}

TEST_CASE("an expired deadline aborts the computation") {
    const AGGraph g = build_graph(factor(2310));
    const Deadline deadline(std::chrono::milliseconds(0));
    CHECK_THROWS_AS(compute_invariants(g, &deadline), BudgetExceeded);
}

}  // TEST_SUITE
