#include <doctest.h>

#include <stdexcept>

#include <numeric>
#include <random>

#include "agperfect/numbers.hpp"

using namespace agperfect;

namespace {

Factorization make(std::vector<std::pair<std::uint64_t, std::uint32_t>> parts) {
    Factorization f;
    for (auto [p, e] : parts) f.parts.push_back({p, e});
    return f;
}

}  // namespace

TEST_SUITE("numbers") {

TEST_CASE("factor on small composites") {
    CHECK(factor(12) == make({{2, 2}, {3, 1}}));
    CHECK(factor(2310) == make({{2, 1}, {3, 1}, {5, 1}, {7, 1}, {11, 1}}));
    CHECK(factor(180) == make({{2, 2}, {3, 2}, {5, 1}}));
    CHECK(factor(2) == make({{2, 1}}));
    CHECK(factor(1024) == make({{2, 10}}));
}

TEST_CASE("factor rejects n < 2") {
    CHECK_THROWS_AS(factor(0), std::invalid_argument);
    CHECK_THROWS_AS(factor(1), std::invalid_argument);
}

TEST_CASE("factor beyond the trial-division range") {
    // 2^64 - 1 = 3 * 5 * 17 * 257 * 641 * 65537 * 6700417
    CHECK(factor(18446744073709551615ull) ==
          make({{3, 1}, {5, 1}, {17, 1}, {257, 1}, {641, 1}, {65537, 1}, {6700417, 1}}));
    // product of two primes just above 10^9
    CHECK(factor(1000000007ull * 1000000009ull) ==
          make({{1000000007, 1}, {1000000009, 1}}));
    // square of a large prime
    CHECK(factor(1000000007ull * 1000000007ull) == make({{1000000007, 2}}));
    // large prime stays in one piece
    CHECK(factor(9223372036854775783ull) == make({{9223372036854775783ull, 1}}));
}

TEST_CASE("factor reconstructs n and yields primes") {
    auto check_one = [](std::uint64_t n) {
        const Factorization f = factor(n);
        REQUIRE(!f.parts.empty());
        CHECK(f.value() == n);
        for (std::size_t i = 0; i < f.parts.size(); ++i) {
            CHECK(is_prime(f.parts[i].prime));
            CHECK(f.parts[i].exponent >= 1);
            if (i) CHECK(f.parts[i - 1].prime < f.parts[i].prime);
        }
    };
    for (std::uint64_t n = 2; n <= 20000; ++n) check_one(n);
    std::mt19937_64 rng(20240601);
    for (int i = 0; i < 200; ++i) check_one((rng() % (~0ull - 2)) + 2);
}

TEST_CASE("factor is deterministic") {
    for (std::uint64_t n : {18446744073709551615ull, 1000000007ull * 1000000009ull, 963761198400ull})
        CHECK(factor(n) == factor(n));
}

TEST_CASE("signature sorts exponents non-increasing") {
    CHECK(signature(make({{2, 2}, {3, 1}})).exponents == std::vector<std::uint32_t>{2, 1});
    CHECK(signature(make({{2, 1}, {3, 2}, {5, 1}})).exponents ==
          std::vector<std::uint32_t>{2, 1, 1});
    CHECK(signature(make({{2, 1}, {3, 1}, {5, 1}, {7, 1}})).exponents ==
          std::vector<std::uint32_t>{1, 1, 1, 1});
}

TEST_CASE("signature ignores which primes carry the exponents") {
    CHECK(signature(make({{2, 1}, {3, 2}})) == signature(make({{2, 2}, {3, 1}})));
    CHECK(signature(make({{5, 3}, {11, 1}, {101, 2}})) ==
          signature(make({{2, 2}, {3, 1}, {7, 3}})));
}

TEST_CASE("signature validation") {
    CHECK_THROWS_AS(Signature(std::vector<std::uint32_t>{}), std::invalid_argument);
    CHECK_THROWS_AS(Signature({2, 0, 1}), std::invalid_argument);
    CHECK(Signature({1, 2, 1}).exponents == std::vector<std::uint32_t>{2, 1, 1});
}

TEST_CASE("proper divisor vectors for small n") {
    const auto v12 = proper_divisor_vectors(factor(12));
    REQUIRE(v12.size() == 4);  // divisors 2, 3, 4, 6
    CHECK(v12 == std::vector<ExponentVector>{{0, 1}, {1, 0}, {1, 1}, {2, 0}});

    CHECK(proper_divisor_vectors(factor(210)).size() == 14);
    CHECK(proper_divisor_vectors(factor(7)).empty());
}

TEST_CASE("divisor vector count matches a divisor-count sieve up to 10^6") {
    constexpr std::uint32_t kLimit = 1'000'000;
    std::vector<std::uint16_t> divisor_count(kLimit + 1, 0);
    for (std::uint32_t d = 1; d <= kLimit; ++d)
        for (std::uint32_t m = d; m <= kLimit; m += d) ++divisor_count[m];

    // prod(alpha_i + 1) - 2 == d(n) - 2 for every n; spot the full range with
    // factor() on a dense prefix plus random samples
    auto check_one = [&](std::uint32_t n) {
        const Factorization f = factor(n);
        std::uint64_t prod = 1;
        for (const auto& p : f.parts) prod *= p.exponent + 1;
        CHECK(prod - 2 == static_cast<std::uint64_t>(divisor_count[n]) - 2);
        CHECK(signature(f).vertex_count() == static_cast<std::uint64_t>(divisor_count[n]) - 2);
    };
    for (std::uint32_t n = 2; n <= 50000; ++n) check_one(n);
    std::mt19937 rng(7);
    for (int i = 0; i < 5000; ++i) check_one(rng() % (kLimit - 1) + 2);
}

TEST_CASE("synthetic factorization puts the largest exponent on 2") {
    const Factorization f = synthetic_factorization(Signature({1, 2, 1}));
    CHECK(f == make({{2, 2}, {3, 1}, {5, 1}}));
    CHECK(f.value() == 60);
    CHECK(signature(f) == Signature({2, 1, 1}));
}

TEST_CASE("value overflow is detected") {
    Factorization f;
    f.parts.push_back({2, 64});
    CHECK(!f.checked_value().has_value());
    CHECK_THROWS_AS(f.value(), std::overflow_error);
    f.parts[0].exponent = 63;
    CHECK(f.checked_value() == 1ull << 63);
}

TEST_CASE("vertex counts") {
    CHECK(Signature({1}).vertex_count() == 0);
    CHECK(Signature({2}).vertex_count() == 1);
    CHECK(Signature({1, 1, 1, 1}).vertex_count() == 14);
    CHECK(Signature({1, 1, 1, 1, 1}).vertex_count() == 30);
    CHECK(Signature({2, 2, 1}).vertex_count() == 16);
}

TEST_CASE("divisor_value maps vectors back to divisors") {
    const Factorization f = factor(12);
    CHECK(divisor_value(f, {0, 1}) == 3);
    CHECK(divisor_value(f, {2, 1}) == 12);
    CHECK_THROWS_AS(divisor_value(f, {1}), std::invalid_argument);
}

}  // TEST_SUITE
