#pragma once

#include <string>

#include <json.hpp>

#include "agperfect/aggraph.hpp"
#include "agperfect/holes.hpp"
#include "agperfect/invariants.hpp"
#include "agperfect/theorem.hpp"

namespace agperfect {

// {signature, vertices (exponent vectors), edges (index pairs), n when known}
nlohmann::json graph_json(const AGGraph& g);

// Undirected DOT graph named "AG_<n>" (or "AG_<e1>_<e2>_..." when n does not
// fit in 64 bits); vertex labels are divisor values when n is known, else
// dotted exponent vectors.
std::string graph_dot(const AGGraph& g);

// {in_complement, cycle: [divisor or exponent-vector per vertex]}
nlohmann::json witness_json(const AGGraph& g, const HoleWitness& w);

// {omega, chi, weakly_perfect, max_clique, coloring}
nlohmann::json invariants_json(const AGGraph& g, const InvariantReport& r);

}  // namespace agperfect
