#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "agperfect/aggraph.hpp"
#include "agperfect/deadline.hpp"

namespace agperfect {

struct InvariantReport {
    std::size_t omega = 0;
    std::size_t chi = 0;
    bool weakly_perfect = false;         // omega == chi
    std::vector<std::size_t> max_clique; // vertex indices, ascending
    std::vector<std::size_t> coloring;   // color per vertex, colors 0..chi-1
};

// Exact maximum clique: branch and bound seeded with a greedy clique, greedy
// coloring bound per node. Deterministic certificate.
std::pair<std::size_t, std::vector<std::size_t>> clique_number(
    const AGGraph& g, const Deadline* deadline = nullptr);

// Exact chromatic number: iterative deepening from the clique lower bound,
// backtracking in canonical vertex order so certificates are reproducible.
std::pair<std::size_t, std::vector<std::size_t>> chromatic_number(
    const AGGraph& g, const Deadline* deadline = nullptr);

// Both numbers plus validated certificates.
InvariantReport compute_invariants(const AGGraph& g, const Deadline* deadline = nullptr);

}  // namespace agperfect
