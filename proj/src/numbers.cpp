// Integer factorization and divisor-lattice enumeration.

#include "agperfect/numbers.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace agperfect {

namespace {

using u128 = unsigned __int128;

constexpr std::uint64_t kTrialLimit = 1'000'000;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(u128{a} * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    a %= m;
    for (; e; e >>= 1) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
    }
    return r;
}

// n odd, n > 37, a not a multiple of n.
bool strong_probable_prime(std::uint64_t n, std::uint64_t a) {
    const int s = std::countr_zero(n - 1);
    const std::uint64_t d = (n - 1) >> s;
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

// Brent's cycle-finding variant of Pollard rho. Deterministic: x0 = 2 and
// the polynomial constant walks 1, 2, 3, ... until a split succeeds.
std::uint64_t pollard_brent(std::uint64_t n) {
    constexpr std::uint64_t kBatch = 128;
    for (std::uint64_t c = 1;; ++c) {
        auto f = [&](std::uint64_t v) {
            return static_cast<std::uint64_t>((u128{v} * v + c) % n);
        };
        std::uint64_t x = 2, y = 2, ys = 2, d = 1, q = 1;
        for (std::uint64_t r = 1; d == 1; r <<= 1) {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i) y = f(y);
            for (std::uint64_t k = 0; k < r && d == 1; k += kBatch) {
                ys = y;
                const std::uint64_t lim = std::min(kBatch, r - k);
                for (std::uint64_t i = 0; i < lim; ++i) {
                    y = f(y);
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                d = std::gcd(q, n);
            }
        }
        if (d == n) {
            // batched gcd overshot; redo the last block one step at a time
            do {
                ys = f(ys);
                d = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (d == 1);
        }
        if (d != n) return d;
    }
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                            23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    if (n < 41 * 41) return true;
    // deterministic Miller-Rabin base set for the full 64-bit range
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                            23ull, 29ull, 31ull, 37ull}) {
        if (!strong_probable_prime(n, a)) return false;
    }
    return true;
}

Factorization factor(std::uint64_t n) {
    if (n < 2) throw std::invalid_argument("factor: n must be >= 2");

    Factorization f;
    std::uint64_t m = n;
    auto strip = [&](std::uint64_t p) {
        std::uint32_t e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        if (e) f.parts.push_back({p, e});
    };

    strip(2);
    strip(3);
    for (std::uint64_t d = 5; d <= kTrialLimit && u128{d} * d <= m; d += 6) {
        strip(d);
        strip(d + 2);
    }

    if (m > 1) {
        // what is left has no prime factor <= 10^6: at most three primes
        std::vector<std::uint64_t> todo{m};
        std::vector<std::uint64_t> primes;
        while (!todo.empty()) {
            const std::uint64_t v = todo.back();
            todo.pop_back();
            if (is_prime(v)) {
                primes.push_back(v);
                continue;
            }
            const std::uint64_t d = pollard_brent(v);
            todo.push_back(d);
            todo.push_back(v / d);
        }
        std::sort(primes.begin(), primes.end());
        for (std::size_t i = 0; i < primes.size();) {
            std::size_t j = i;
            while (j < primes.size() && primes[j] == primes[i]) ++j;
            f.parts.push_back({primes[i], static_cast<std::uint32_t>(j - i)});
            i = j;
        }
    }
    return f;
}

std::vector<std::uint32_t> Factorization::exponents() const {
    std::vector<std::uint32_t> out;
    out.reserve(parts.size());
    for (const auto& p : parts) out.push_back(p.exponent);
    return out;
}

std::optional<std::uint64_t> Factorization::checked_value() const {
    u128 v = 1;
    for (const auto& part : parts) {
        for (std::uint32_t i = 0; i < part.exponent; ++i) {
            v *= part.prime;
            if (v > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
        }
    }
    return static_cast<std::uint64_t>(v);
}

std::uint64_t Factorization::value() const {
    if (auto v = checked_value()) return *v;
    throw std::overflow_error("Factorization::value: product exceeds 64 bits");
}

Signature::Signature(std::vector<std::uint32_t> exps) : exponents(std::move(exps)) {
    if (exponents.empty())
        throw std::invalid_argument("Signature: at least one exponent required");
    for (auto e : exponents)
        if (e == 0) throw std::invalid_argument("Signature: exponents must be >= 1");
    std::sort(exponents.begin(), exponents.end(), std::greater<>());
}

std::uint64_t Signature::vertex_count() const {
    u128 prod = 1;
    for (auto a : exponents) {
        prod *= u128{a} + 1;
        if (prod > std::numeric_limits<std::uint64_t>::max())
            return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(prod) - 2;
}

bool Signature::operator<(const Signature& other) const {
    if (exponents.size() != other.exponents.size())
        return exponents.size() < other.exponents.size();
    return exponents < other.exponents;
}

Signature signature(const Factorization& f) {
    return Signature(f.exponents());
}

Factorization synthetic_factorization(const Signature& s) {
    Factorization f;
    std::uint64_t p = 2;
    for (auto e : s.exponents) {
        f.parts.push_back({p, e});
        do {
            ++p;
        } while (!is_prime(p));
    }
    return f;
}

std::vector<ExponentVector> proper_divisor_vectors(const std::vector<std::uint32_t>& alphas) {
    std::vector<ExponentVector> out;
    if (alphas.empty()) return out;
    ExponentVector e(alphas.size(), 0);
    for (;;) {
        const bool all_zero = std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
        const bool all_full = std::equal(e.begin(), e.end(), alphas.begin());
        if (!all_zero && !all_full) out.push_back(e);
        // odometer increment, last axis fastest
        std::size_t i = e.size();
        while (i > 0 && e[i - 1] == alphas[i - 1]) {
            e[i - 1] = 0;
            --i;
        }
        if (i == 0) break;
        ++e[i - 1];
    }
    return out;
}

std::vector<ExponentVector> proper_divisor_vectors(const Factorization& f) {
    return proper_divisor_vectors(f.exponents());
}

std::uint64_t divisor_value(const Factorization& f, const ExponentVector& e) {
    if (e.size() != f.parts.size())
        throw std::invalid_argument("divisor_value: exponent vector length mismatch");
    u128 v = 1;
    for (std::size_t i = 0; i < e.size(); ++i) {
        for (std::uint32_t j = 0; j < e[i]; ++j) {
            v *= f.parts[i].prime;
            if (v > std::numeric_limits<std::uint64_t>::max())
                throw std::overflow_error("divisor_value: product exceeds 64 bits");
        }
    }
    return static_cast<std::uint64_t>(v);
}

}  // namespace agperfect
