#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace agperfect {

// Dense symmetric 0/1 matrix with an all-false diagonal; one bitset row per
// vertex so neighborhood intersections are word operations.
class BitMatrix {
public:
    BitMatrix() = default;
    explicit BitMatrix(std::size_t n)
        : n_(n), words_((n + 63) / 64), bits_(n * ((n + 63) / 64), 0) {}

    std::size_t size() const { return n_; }
    std::size_t words_per_row() const { return words_; }

    bool test(std::size_t i, std::size_t j) const {
        return (bits_[i * words_ + j / 64] >> (j % 64)) & 1u;
    }

    void set_edge(std::size_t i, std::size_t j) {
        bits_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
        bits_[j * words_ + i / 64] |= std::uint64_t{1} << (i % 64);
    }

    const std::uint64_t* row(std::size_t i) const { return bits_.data() + i * words_; }

    std::size_t degree(std::size_t i) const {
        std::size_t d = 0;
        for (std::size_t w = 0; w < words_; ++w) d += std::popcount(bits_[i * words_ + w]);
        return d;
    }

    std::size_t edge_count() const {
        std::size_t total = 0;
        for (std::size_t i = 0; i < n_; ++i) total += degree(i);
        return total / 2;
    }

    // Off-diagonal complement.
    BitMatrix complement() const {
        BitMatrix c(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i + 1; j < n_; ++j)
                if (!test(i, j)) c.set_edge(i, j);
        return c;
    }

    bool operator==(const BitMatrix&) const = default;

private:
    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
};

// A graph or its complement behind a single adjacency predicate; the
// complement is never materialized on the main path.
struct GraphView {
    const BitMatrix* m = nullptr;
    bool complemented = false;

    std::size_t size() const { return m->size(); }
    bool adj(std::size_t i, std::size_t j) const {
        return i != j && (m->test(i, j) != complemented);
    }
};

}  // namespace agperfect
