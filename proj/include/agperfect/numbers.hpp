#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace agperfect {

// Exponents of a divisor, one entry per prime axis of the owning factorization.
using ExponentVector = std::vector<std::uint32_t>;

struct PrimePower {
    std::uint64_t prime = 0;
    std::uint32_t exponent = 0;
    bool operator==(const PrimePower&) const = default;
};

// Prime-power decomposition of n. Primes are strictly increasing; every
// exponent is at least 1.
struct Factorization {
    std::vector<PrimePower> parts;

    std::size_t prime_count() const { return parts.size(); }
    std::vector<std::uint32_t> exponents() const;

    // Product of all prime powers, or nullopt if it does not fit in 64 bits
    // (possible for synthetic factorizations of large signatures).
    std::optional<std::uint64_t> checked_value() const;
    std::uint64_t value() const;  // throws std::overflow_error instead

    bool operator==(const Factorization&) const = default;
};

// Multiset of prime exponents, sorted non-increasing. Determines AG(Z_n) up
// to isomorphism, so it is the unit the scan harness enumerates.
struct Signature {
    std::vector<std::uint32_t> exponents;

    Signature() = default;
    explicit Signature(std::vector<std::uint32_t> exps);  // sorts, validates

    std::size_t prime_count() const { return exponents.size(); }

    // Number of graph vertices: prod(alpha_i + 1) - 2, saturating.
    std::uint64_t vertex_count() const;

    bool operator==(const Signature&) const = default;
    bool operator<(const Signature& other) const;  // length-major, then lex
};

bool is_prime(std::uint64_t n);

// Trial division up to 10^6, then Brent's rho with a deterministic constant
// sequence. Throws std::invalid_argument for n < 2.
Factorization factor(std::uint64_t n);

Signature signature(const Factorization& f);

// The first k primes carry the signature's exponents in order, so the
// largest exponent sits on 2. Lets everything downstream run from a bare
// signature without factoring anything.
Factorization synthetic_factorization(const Signature& s);

// All vectors 0 <= e_i <= alpha_i except the all-zero and the all-alpha
// corner, in lexicographic order (first axis most significant).
std::vector<ExponentVector> proper_divisor_vectors(const std::vector<std::uint32_t>& alphas);

// Vertices of AG(Z_n) as exponent vectors aligned with f.parts.
std::vector<ExponentVector> proper_divisor_vectors(const Factorization& f);

// prod parts[i].prime ^ e[i]; e must be aligned with f.parts and the result
// must fit in 64 bits (it always does when e is a divisor vector of a real n).
std::uint64_t divisor_value(const Factorization& f, const ExponentVector& e);

}  // namespace agperfect
