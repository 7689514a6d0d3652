#pragma once

#include <optional>
#include <vector>

#include "agperfect/aggraph.hpp"
#include "agperfect/deadline.hpp"

namespace agperfect {

// An induced odd cycle of length >= 5, in the graph or (when flagged) in its
// complement. Consecutive vertices are adjacent, all other pairs are not.
struct HoleWitness {
    std::vector<ExponentVector> cycle;
    bool in_complement = false;
};

struct BergeVerdict {
    bool is_berge = false;
    std::optional<HoleWitness> witness;
    // True when every odd length up to the vertex count was ruled out; a
    // Berge claim is only ever made with this set.
    bool search_exhaustive = false;
};

// First induced odd cycle (length >= 5) under the canonical search order:
// depth-first extension of induced paths anchored at their smallest vertex,
// candidates scanned in increasing index order. Without max_length the
// search is exhaustive over all odd lengths, so nullopt proves absence.
// With max_length only cycles up to that length are considered and nullopt
// proves nothing.
std::optional<std::vector<std::size_t>> find_odd_hole_indices(
    const GraphView& g, std::optional<std::size_t> max_length = std::nullopt,
    const Deadline* deadline = nullptr);

std::optional<HoleWitness> find_induced_odd_hole(
    const AGGraph& g, bool use_complement,
    std::optional<std::size_t> max_length = std::nullopt,
    const Deadline* deadline = nullptr);

// Re-checks every HoleWitness invariant against g; false (never a crash)
// for foreign vertices, even length, chords, or missing cycle edges.
bool verify_witness(const AGGraph& g, const HoleWitness& w);

// Strong-perfect-graph-theorem test: perfect iff neither the graph nor its
// complement has an induced odd hole. Graph side is searched first and both
// searches are exhaustive; any returned witness has passed verify_witness.
BergeVerdict is_berge(const AGGraph& g, const Deadline* deadline = nullptr);

}  // namespace agperfect
