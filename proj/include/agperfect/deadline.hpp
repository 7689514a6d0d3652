#pragma once

#include <chrono>
#include <cstdint>
#include <stdexcept>

namespace agperfect {

struct BudgetExceeded : std::runtime_error {
    BudgetExceeded() : std::runtime_error("per-instance time budget exceeded") {}
};

// Cooperative wall-clock cutoff for the exponential searches.
class Deadline {
public:
    explicit Deadline(std::chrono::milliseconds budget)
        : at_(std::chrono::steady_clock::now() + budget) {}

    bool expired() const { return std::chrono::steady_clock::now() >= at_; }
    void check() const {
        if (expired()) throw BudgetExceeded();
    }

private:
    std::chrono::steady_clock::time_point at_;
};

// Polls an optional deadline on the first tick and then once every 1024
// ticks to keep the clock off the hot path.
class DeadlineTicker {
public:
    explicit DeadlineTicker(const Deadline* d) : d_(d) {}
    void tick() {
        if (d_ && (count_++ & 1023u) == 0) d_->check();
    }

private:
    const Deadline* d_;
    std::uint64_t count_ = 0;
};

}  // namespace agperfect
