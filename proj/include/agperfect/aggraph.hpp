#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "agperfect/bitmatrix.hpp"
#include "agperfect/numbers.hpp"

namespace agperfect {

// The annihilating-ideal graph of Z_n. Vertices are the proper divisors
// 1 < m < n encoded as exponent vectors over the prime axes, and
// <m1> ~ <m2> iff n | m1*m2, i.e. e1[i] + e2[i] >= alpha[i] on every axis.
//
// Axes are ordered by exponent (non-increasing, ties by prime ascending) and
// vertices lexicographically, so factorizations with equal signatures build
// bit-identical adjacency matrices.
struct AGGraph {
    Signature signature;                     // alpha per axis
    std::vector<std::uint64_t> axis_primes;  // concrete prime per axis
    std::optional<std::uint64_t> n;          // set when the product fits 64 bits
    std::vector<ExponentVector> vertices;    // lex-sorted, axis-aligned
    BitMatrix adj;

    std::size_t vertex_count() const { return vertices.size(); }
    GraphView view(bool complemented = false) const { return {&adj, complemented}; }

    // Index in the canonical vertex order, or nullopt for foreign vectors.
    std::optional<std::size_t> index_of(const ExponentVector& v) const;

    // Divisor value of a vertex; requires n to be known.
    std::uint64_t divisor(std::size_t idx) const;

    // Divisor value as text when n is known, else "e1.e2...." exponent form.
    std::string vertex_label(std::size_t idx) const;
};

bool adjacent(const ExponentVector& u, const ExponentVector& v,
              const std::vector<std::uint32_t>& alpha);
bool complement_adjacent(const ExponentVector& u, const ExponentVector& v,
                         const std::vector<std::uint32_t>& alpha);

AGGraph build_graph(const Factorization& f);
AGGraph build_graph(const Signature& s);  // synthetic primes

// Multiset of vertex degrees, sorted ascending.
std::vector<std::size_t> degree_profile(const AGGraph& g);

}  // namespace agperfect
