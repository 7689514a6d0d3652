#pragma once

#include <string>

#include "agperfect/holes.hpp"
#include "agperfect/numbers.hpp"

namespace agperfect {

// Closed-form perfectness classification of AG(Z_n) by signature:
// perfect exactly for p^a, p^a q^b, p^a q r and p q r s.
enum class Form {
    PrimePower,
    TwoPrimePowers,
    PrimePowerTimesTwoPrimes,
    FourDistinctPrimes,
    Imperfect,
};

enum class ImperfectReason {
    None,
    FiveOrMorePrimes,
    FourPrimesWithSquare,
    ThreePrimesTwoSquares,
};

struct Classification {
    Form form = Form::Imperfect;
    ImperfectReason reason = ImperfectReason::None;

    bool perfect() const { return form != Form::Imperfect; }
    bool operator==(const Classification&) const = default;
};

Classification classify(const Signature& s);
bool is_perfect_theorem(const Signature& s);

const char* form_name(Form f);
const char* reason_name(ImperfectReason r);

// Constructs the explicit induced 5-cycle certifying imperfection, chosen by
// the number of prime axes. Axes already sit in exponent-descending order,
// which is exactly the "squared primes first" layout the constructions need.
// The witness is verified against the built graph before it is returned;
// throws std::domain_error for perfect signatures.
HoleWitness lemma_witness(const Factorization& f);

}  // namespace agperfect
