#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cgt/outcome.hpp"

namespace cgt {

/// Greedy Nim: a multiset of positive heaps; only a largest heap may be
/// lowered or removed.
class GreedyNimPosition {
public:
    GreedyNimPosition() = default;
    /// Throws std::invalid_argument on a zero heap. Order is irrelevant.
    explicit GreedyNimPosition(std::vector<std::uint32_t> heaps);

    /// Descending.
    const std::vector<std::uint32_t>& heaps() const noexcept { return heaps_; }

    /// A maximum heap removed first, then lowered to 1, 2, ..., max-1.
    std::vector<GreedyNimPosition> options() const;
    std::string key() const;

    friend bool operator==(const GreedyNimPosition&, const GreedyNimPosition&) = default;

private:
    std::vector<std::uint32_t> heaps_;
};

/// P iff the number of heaps of the greatest size is even (the empty multiset has zero).
Outcome greedy_outcome_closed(const GreedyNimPosition& p);

} // namespace cgt
