#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cgt/outcome.hpp"

namespace cgt {

/// Tower Nim: a stack of positive heaps listed bottom first, top LAST. Only
/// the top heap may be lowered or removed.
class TowerNimPosition {
public:
    TowerNimPosition() = default;
    /// Throws std::invalid_argument on a zero heap.
    explicit TowerNimPosition(std::vector<std::uint32_t> stack);

    const std::vector<std::uint32_t>& stack() const noexcept { return stack_; }

    /// Top removed first, then the top lowered to 1, 2, ..., top-1.
    std::vector<TowerNimPosition> options() const;
    std::string key() const;

    friend bool operator==(const TowerNimPosition&, const TowerNimPosition&) = default;

private:
    std::vector<std::uint32_t> stack_;
};

/// Count the 1-heaps above the topmost heap bigger than one. An all-ones
/// stack is P iff its length is even; otherwise the position is N iff that
/// count is even.
Outcome tower_outcome_closed(const TowerNimPosition& p);

/// Grundy value where it is characterized:
///  - all ones: length mod 2;
///  - k >= 1 ones above a heap bigger than one: 0 if k is odd, 1 if k is even;
///  - top x >= 2 alone or directly above a 1-heap: x.
/// Empty for a top x >= 2 resting on another heap >= 2 (known N, value open).
std::optional<Nimber> tower_nimber_closed(const TowerNimPosition& p);

/// Number of 1-heaps above the topmost non-one heap, or empty for an all-ones stack.
std::optional<std::size_t> tower_ones_on_top(const TowerNimPosition& p);

} // namespace cgt
