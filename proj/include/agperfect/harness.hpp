#pragma once

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "agperfect/holes.hpp"
#include "agperfect/numbers.hpp"

namespace agperfect {

struct SweepConfig {
    std::size_t max_primes = 1;
    std::uint32_t max_exponent = 1;
    std::uint64_t max_vertices = 1;
    bool check_invariants = false;
    std::chrono::milliseconds budget{60'000};  // per instance
    std::size_t threads = 0;                   // 0 = hardware concurrency
};

// One signature of the sweep: the closed-form classification against the
// exhaustive Berge search, plus optional omega/chi.
struct SweepRow {
    Signature signature;
    std::uint64_t vertex_count = 0;
    bool theorem_perfect = false;
    bool spgt_perfect = false;
    bool agree = false;
    bool skipped = false;  // budget ran out; never counts as agreeing
    std::optional<HoleWitness> witness;
    std::optional<std::size_t> omega;
    std::optional<std::size_t> chi;
    std::int64_t elapsed_ms = 0;
};

// All non-increasing exponent tuples with length <= max_primes, entries <=
// max_exponent and vertex count <= max_vertices; length-major, then
// lexicographic ascending.
std::vector<Signature> enumerate_signatures(const SweepConfig& c);

// One row per signature, computed in parallel, gathered in enumeration
// order. Deterministic apart from elapsed_ms.
std::vector<SweepRow> run_sweep(const SweepConfig& c);

// Fixed column order: signature, vertex_count, theorem_perfect,
// spgt_perfect, agree, witness, omega, chi, elapsed_ms. With
// include_timing=false the last column is left empty and the output is
// byte-identical across runs.
void write_csv(std::ostream& out, const std::vector<SweepRow>& rows,
               bool include_timing = true);

// 0 = all rows agree, 2 = disagreement (counterexample), 3 = budget
// exhausted on some row; disagreement wins.
int sweep_exit_code(const std::vector<SweepRow>& rows);

}  // namespace agperfect
