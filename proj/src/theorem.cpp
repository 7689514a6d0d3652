#include "agperfect/theorem.hpp"

#include <algorithm>
#include <stdexcept>

namespace agperfect {

Classification classify(const Signature& s) {
    const std::size_t k = s.prime_count();
    const std::size_t squared =
        static_cast<std::size_t>(std::count_if(s.exponents.begin(), s.exponents.end(),
                                               [](std::uint32_t e) { return e > 1; }));
    if (k == 1) return {Form::PrimePower, ImperfectReason::None};
    if (k == 2) return {Form::TwoPrimePowers, ImperfectReason::None};
    if (k == 3) {
        if (squared <= 1) return {Form::PrimePowerTimesTwoPrimes, ImperfectReason::None};
        return {Form::Imperfect, ImperfectReason::ThreePrimesTwoSquares};
    }
    if (k == 4) {
        if (squared == 0) return {Form::FourDistinctPrimes, ImperfectReason::None};
        return {Form::Imperfect, ImperfectReason::FourPrimesWithSquare};
    }
    return {Form::Imperfect, ImperfectReason::FiveOrMorePrimes};
}

bool is_perfect_theorem(const Signature& s) {
    return classify(s).perfect();
}

const char* form_name(Form f) {
    switch (f) {
        case Form::PrimePower: return "prime_power";
        case Form::TwoPrimePowers: return "two_prime_powers";
        case Form::PrimePowerTimesTwoPrimes: return "prime_power_times_two_primes";
        case Form::FourDistinctPrimes: return "four_distinct_primes";
        case Form::Imperfect: return "imperfect";
    }
    return "unknown";
}

const char* reason_name(ImperfectReason r) {
    switch (r) {
        case ImperfectReason::None: return "none";
        case ImperfectReason::FiveOrMorePrimes: return "five_or_more_primes";
        case ImperfectReason::FourPrimesWithSquare: return "four_primes_with_square";
        case ImperfectReason::ThreePrimesTwoSquares: return "three_primes_two_squares";
    }
    return "unknown";
}

HoleWitness lemma_witness(const Factorization& f) {
    AGGraph g = build_graph(f);
    const Classification cls = classify(g.signature);
    if (cls.perfect())
        throw std::domain_error("lemma_witness: signature is perfect, no hole exists");

    const std::vector<std::uint32_t>& a = g.signature.exponents;
    const std::size_t k = a.size();
    std::vector<ExponentVector> cyc(5, ExponentVector(k, 0));
    // puts the full exponent on the chosen axes of one cycle vertex
    auto fill = [&](std::size_t vi, std::initializer_list<std::size_t> axes) {
        for (std::size_t ax : axes) cyc[vi][ax] = a[ax];
    };

    switch (cls.reason) {
        case ImperfectReason::FiveOrMorePrimes:
            // every vertex carries m = the full tail of axes 5..k-1
            for (auto& v : cyc)
                for (std::size_t i = 5; i < k; ++i) v[i] = a[i];
            fill(0, {0, 1, 3});
            fill(1, {2, 3, 4});
            fill(2, {0, 1, 2});
            fill(3, {1, 3, 4});
            fill(4, {0, 2, 4});
            break;
        case ImperfectReason::FourPrimesWithSquare:
            // axis 0 carries the squared prime (exponents are sorted)
            fill(0, {0, 3});
            fill(1, {1, 2, 3});
            fill(2, {0, 1});
            fill(3, {2, 3});
            cyc[3][0] = 1;
            fill(4, {1, 2});
            cyc[4][0] = a[0] - 1;
            break;
        case ImperfectReason::ThreePrimesTwoSquares:
            // axes 0 and 1 carry the two squared primes
            fill(0, {1, 2});
            fill(1, {0});
            cyc[1][1] = 1;
            fill(2, {2});
            cyc[2][0] = 1;
            cyc[2][1] = a[1] - 1;
            fill(3, {1});
            cyc[3][0] = a[0] - 1;
            fill(4, {0, 2});
            break;
        case ImperfectReason::None:
            throw std::logic_error("lemma_witness: imperfect form without reason");
    }

    HoleWitness w{std::move(cyc), false};
    // the five chord checks are not spelled out by the construction itself,
    // so fail loudly if any of them ever breaks
    if (!verify_witness(g, w))
        throw std::logic_error("lemma_witness: constructed cycle failed verification");
    return w;
}

}  // namespace agperfect
