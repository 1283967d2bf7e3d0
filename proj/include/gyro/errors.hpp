#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gyro {

/// Raised when an operation receives malformed or out-of-contract input.
struct input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Raised when a search or enumeration exceeds its node/column budget.
/// `partial_count` carries whatever was counted before the budget tripped
/// (e.g. the number of maximal independent sets already emitted).
struct budget_error : std::runtime_error {
    std::uint64_t partial_count;

    explicit budget_error(const std::string& what, std::uint64_t partial = 0)
        : std::runtime_error(what), partial_count(partial) {}
};

/// Node-count budget shared by backtracking searches.  Counts are node
/// visits, not wall time, so runs are reproducible across machines.
class Budget {
  public:
    explicit Budget(std::uint64_t limit) : limit_(limit) {}

    void charge(std::uint64_t amount = 1) {
        used_ += amount;
        if (used_ > limit_)
            throw budget_error("search budget exhausted after " + std::to_string(limit_) + " nodes", used_);
    }

    std::uint64_t used() const { return used_; }
    std::uint64_t limit() const { return limit_; }
    std::uint64_t remaining() const { return used_ >= limit_ ? 0 : limit_ - used_; }

  private:
    std::uint64_t limit_;
    std::uint64_t used_ = 0;
};

/// Charge a possibly-absent budget.
inline void charge(Budget* budget, std::uint64_t amount = 1) {
    if (budget) budget->charge(amount);
}

} // namespace gyro
