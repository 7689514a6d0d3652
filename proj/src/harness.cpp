// Signature sweep: the closed-form classification cross-validated against
// the exhaustive odd-hole search, row by row.

#include "agperfect/harness.hpp"

#include <atomic>
#include <ostream>
#include <thread>

#include "agperfect/aggraph.hpp"
#include "agperfect/invariants.hpp"
#include "agperfect/theorem.hpp"

namespace agperfect {

namespace {

void emit_tuples(std::size_t len, std::uint32_t max_exponent, std::uint64_t max_product,
                 std::vector<std::uint32_t>& prefix, unsigned __int128 product,
                 std::vector<Signature>& out) {
    if (prefix.size() == len) {
        out.emplace_back(prefix);
        return;
    }
    const std::uint32_t upper = prefix.empty() ? max_exponent : prefix.back();
    for (std::uint32_t a = 1; a <= upper; ++a) {
        const unsigned __int128 next = product * (a + 1);
        if (next > max_product) continue;  // grows monotonically with depth
        prefix.push_back(a);
        emit_tuples(len, max_exponent, max_product, prefix, next, out);
        prefix.pop_back();
    }
}

SweepRow sweep_one(const Signature& s, const SweepConfig& c) {
    SweepRow row;
    row.signature = s;
    row.vertex_count = s.vertex_count();
    row.theorem_perfect = is_perfect_theorem(s);

    const auto t0 = std::chrono::steady_clock::now();
    const Deadline deadline(c.budget);
    try {
        const AGGraph g = build_graph(s);
        BergeVerdict verdict = is_berge(g, &deadline);
        row.spgt_perfect = verdict.is_berge;
        row.witness = std::move(verdict.witness);
        if (c.check_invariants) {
            const InvariantReport rep = compute_invariants(g, &deadline);
            row.omega = rep.omega;
            row.chi = rep.chi;
        }
        row.agree = (row.theorem_perfect == row.spgt_perfect);
    } catch (const BudgetExceeded&) {
        row.skipped = true;
        row.agree = false;
        row.witness.reset();
        row.omega.reset();
        row.chi.reset();
    }
    row.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return row;
}

std::string witness_field(const SweepRow& row) {
    if (!row.witness) return "";
    const Factorization f = synthetic_factorization(row.signature);
    const bool fits = f.checked_value().has_value();
    std::string out = row.witness->in_complement ? "c:" : "";
    for (std::size_t i = 0; i < row.witness->cycle.size(); ++i) {
        if (i) out += '-';
        const ExponentVector& e = row.witness->cycle[i];
        if (fits) {
            out += std::to_string(divisor_value(f, e));
        } else {
            for (std::size_t j = 0; j < e.size(); ++j) {
                if (j) out += '.';
                out += std::to_string(e[j]);
            }
        }
    }
    return out;
}

}  // namespace

std::vector<Signature> enumerate_signatures(const SweepConfig& c) {
    std::vector<Signature> out;
    // vertex count prod(a_i + 1) - 2 <= max_vertices
    const unsigned __int128 max_product = static_cast<unsigned __int128>(c.max_vertices) + 2;
    std::vector<std::uint32_t> prefix;
    for (std::size_t len = 1; len <= c.max_primes; ++len)
        emit_tuples(len, c.max_exponent, max_product, prefix, 1, out);
    return out;
}

std::vector<SweepRow> run_sweep(const SweepConfig& c) {
    const std::vector<Signature> sigs = enumerate_signatures(c);
    std::vector<SweepRow> rows(sigs.size());

    std::size_t nthreads = c.threads ? c.threads : std::thread::hardware_concurrency();
    nthreads = std::max<std::size_t>(1, std::min(nthreads, sigs.size()));

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= sigs.size()) break;
            rows[i] = sweep_one(sigs[i], c);
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < nthreads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return rows;
}

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows, bool include_timing) {
    out << "signature,vertex_count,theorem_perfect,spgt_perfect,agree,witness,omega,chi,"
           "elapsed_ms\n";
    for (const SweepRow& row : rows) {
        out << '"';
        for (std::size_t i = 0; i < row.signature.exponents.size(); ++i) {
            if (i) out << ',';
            out << row.signature.exponents[i];
        }
        out << "\"," << row.vertex_count << ',';
        out << (row.theorem_perfect ? "true" : "false") << ',';
        if (row.skipped) {
            out << "skipped,skipped,";
        } else {
            out << (row.spgt_perfect ? "true" : "false") << ','
                << (row.agree ? "true" : "false") << ',';
        }
        out << witness_field(row) << ',';
        if (row.omega) out << *row.omega;
        out << ',';
        if (row.chi) out << *row.chi;
        out << ',';
        if (include_timing) out << row.elapsed_ms;
        out << '\n';
    }
}

int sweep_exit_code(const std::vector<SweepRow>& rows) {
    bool any_skipped = false;
    for (const SweepRow& row : rows) {
        if (row.skipped) {
            any_skipped = true;
        } else if (!row.agree) {
            return 2;
        }
    }
    return any_skipped ? 3 : 0;
}

}  // namespace agperfect
