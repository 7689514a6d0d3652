#include <doctest.h>

#include <stdexcept>

#include <map>
#include <numeric>
#include <random>
#include <set>

#include "agperfect/aggraph.hpp"
#include "oracles.hpp"

using namespace agperfect;

namespace {

// edge set as divisor pairs, smaller first
std::set<std::pair<std::uint64_t, std::uint64_t>> divisor_edges(const AGGraph& g) {
    std::set<std::pair<std::uint64_t, std::uint64_t>> out;
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
        for (std::size_t j = i + 1; j < g.vertex_count(); ++j)
            if (g.adj.test(i, j))
                out.insert(std::minmax(g.divisor(i), g.divisor(j)));
    return out;
}

}  // namespace

TEST_SUITE("aggraph") {

TEST_CASE("adjacency predicate on exponent vectors") {
    const std::vector<std::uint32_t> alpha{2, 1};  // n = 12, axes (2^2, 3)
    CHECK(adjacent({1, 0}, {1, 1}, alpha));        // <2> ~ <6>, 12 | 12
    CHECK(!adjacent({1, 0}, {0, 1}, alpha));       // <2> !~ <3>, 12 does not divide 6
    CHECK(complement_adjacent({1, 0}, {0, 1}, alpha));
    CHECK(!complement_adjacent({1, 0}, {1, 1}, alpha));
    CHECK_THROWS_AS(adjacent({1, 0, 0}, {0, 1}, alpha), std::invalid_argument);
    CHECK_THROWS_AS(complement_adjacent({1}, {0, 1}, alpha), std::invalid_argument);
}

TEST_CASE("AG(Z_12) is the path 3-4-6-2") {
    const AGGraph g = build_graph(factor(12));
    REQUIRE(g.vertex_count() == 4);
    CHECK(divisor_edges(g) ==
          std::set<std::pair<std::uint64_t, std::uint64_t>>{{2, 6}, {3, 4}, {4, 6}});
    CHECK(degree_profile(g) == std::vector<std::size_t>{1, 1, 2, 2});
}

TEST_CASE("AG(Z_210) degree census") {
    const AGGraph g = build_graph(factor(210));
    REQUIRE(g.vertex_count() == 14);
    CHECK(g.adj.edge_count() == 25);
    CHECK(degree_profile(g) ==
          std::vector<std::size_t>{1, 1, 1, 1, 3, 3, 3, 3, 3, 3, 7, 7, 7, 7});
}

TEST_CASE("a two-prime divisor of four squarefree primes has exactly three neighbors") {
    const AGGraph g = build_graph(factor(210));
    const auto idx = g.index_of({1, 1, 0, 0});  // <6> = <p1 p2>
    REQUIRE(idx.has_value());
    std::set<std::uint64_t> neighbors;
    for (std::size_t j = 0; j < g.vertex_count(); ++j)
        if (g.adj.test(*idx, j)) neighbors.insert(g.divisor(j));
    CHECK(neighbors == std::set<std::uint64_t>{35, 70, 105});  // <p3p4>, <p1p3p4>, <p2p3p4>
}

TEST_CASE("prime powers form the threshold graph k+l >= alpha") {
    for (std::uint32_t alpha : {2u, 3u, 4u, 7u}) {
        const AGGraph g = build_graph(Signature({alpha}));
        REQUIRE(g.vertex_count() == alpha - 1);
        for (std::size_t i = 0; i < g.vertex_count(); ++i) {
            for (std::size_t j = i + 1; j < g.vertex_count(); ++j) {
                const std::uint32_t k = g.vertices[i][0], l = g.vertices[j][0];
                CHECK(g.adj.test(i, j) == (k + l >= alpha));
            }
        }
    }
    CHECK(degree_profile(build_graph(factor(49))) == std::vector<std::size_t>{0});
    CHECK(degree_profile(build_graph(factor(7))).empty());
}

TEST_CASE("adjacency is symmetric and irreflexive") {
    for (std::uint64_t n : {12ull, 210ull, 720ull, 128ull}) {
        const AGGraph g = build_graph(factor(n));
        for (std::size_t i = 0; i < g.vertex_count(); ++i) {
            CHECK(!g.adj.test(i, i));
            for (std::size_t j = 0; j < g.vertex_count(); ++j)
                CHECK(g.adj.test(i, j) == g.adj.test(j, i));
        }
    }
}

TEST_CASE("adjacency agrees with the divisibility oracle for all n <= 50000") {
    std::size_t degree_sum_parity_checks = 0;
    for (std::uint64_t n = 2; n <= 50000; ++n) {
        const AGGraph g = build_graph(factor(n));
        const auto divisors = oracle::proper_divisors(n);
        REQUIRE(g.vertex_count() == divisors.size());
        std::vector<std::uint64_t> vals(g.vertex_count());
        for (std::size_t i = 0; i < g.vertex_count(); ++i) vals[i] = g.divisor(i);
        for (std::size_t i = 0; i < g.vertex_count(); ++i)
            for (std::size_t j = i + 1; j < g.vertex_count(); ++j)
                if (g.adj.test(i, j) != oracle::divides_product(n, vals[i], vals[j]))
                    FAIL("oracle mismatch at n=", n, " pair ", vals[i], ",", vals[j]);
        const auto profile = degree_profile(g);
        if (std::accumulate(profile.begin(), profile.end(), std::size_t{0}) % 2 == 0)
            ++degree_sum_parity_checks;
    }
    CHECK(degree_sum_parity_checks == 49999);  // handshake holds everywhere
}

TEST_CASE("equal signatures build bit-identical adjacency matrices") {
    // same signature through different primes, including exponent reordering
    CHECK(build_graph(factor(12)).adj == build_graph(factor(18)).adj);  // 2^2*3 vs 2*3^2
    for (std::uint32_t a : {1u, 2u, 3u}) {
        for (std::uint32_t b : {1u, 2u, 3u}) {
            Factorization small, large;
            small.parts = {{2, a}, {3, b}};
            large.parts = {{101, a}, {103, b}};
            CHECK(build_graph(small).adj == build_graph(large).adj);
        }
    }

    std::mt19937_64 rng(424242);
    std::vector<std::uint64_t> pool;
    for (std::uint64_t p = 2; pool.size() < 60; ++p)
        if (is_prime(p)) pool.push_back(p);
    const Signature sig({3, 2, 1});
    const AGGraph reference = build_graph(sig);
    for (int trial = 0; trial < 30; ++trial) {
        std::shuffle(pool.begin(), pool.end(), rng);
        Factorization f;
        for (std::size_t i = 0; i < sig.exponents.size(); ++i)
            f.parts.push_back({pool[i], sig.exponents[i]});
        std::sort(f.parts.begin(), f.parts.end(),
                  [](const PrimePower& x, const PrimePower& y) { return x.prime < y.prime; });
        const AGGraph g = build_graph(f);
        CHECK(g.adj == reference.adj);
        CHECK(g.vertices == reference.vertices);
    }
}

TEST_CASE("vertex labels fall back to exponent form when n overflows") {
    const AGGraph g = build_graph(Signature(std::vector<std::uint32_t>{70}));
    CHECK(!g.n.has_value());
    CHECK(g.vertex_count() == 69);
    CHECK(g.vertex_label(0) == "1");
    const AGGraph h = build_graph(factor(12));
    CHECK(h.vertex_label(0) == "3");
}

TEST_CASE("index_of rejects foreign vectors") {
    const AGGraph g = build_graph(factor(12));
    CHECK(g.index_of({1, 1}).has_value());
    CHECK(!g.index_of({0, 0}).has_value());  // excluded corner
    CHECK(!g.index_of({2, 1}).has_value());  // excluded corner
    CHECK(!g.index_of({5, 0}).has_value());
    CHECK(!g.index_of({1, 1, 0}).has_value());
}

}  // TEST_SUITE
