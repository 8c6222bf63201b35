#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "cgt/outcome.hpp"

namespace cgt {

/// Antonim: a set of distinct positive heap sizes.
///
/// A move picks heap x and either deletes it or lowers it to y with 0 < y < x.
/// When y is already in the set the lowered heap is forgotten, which is the
/// same as deleting x; so the options are S\{x} and (S\{x}) u {y} for y not in S.
class AntonimPosition {
public:
    AntonimPosition() = default;
    /// Throws std::invalid_argument on zeros or duplicates. Order is irrelevant.
    explicit AntonimPosition(std::vector<std::uint32_t> heaps);
    AntonimPosition(std::initializer_list<std::uint32_t> heaps)
        : AntonimPosition(std::vector<std::uint32_t>(heaps))
    {
    }

    /// Ascending.
    const std::vector<std::uint32_t>& heaps() const noexcept { return heaps_; }

    /// Deduplicated; ordered by heap chosen, deletion first, then y ascending.
    std::vector<AntonimPosition> options() const;
    std::string key() const;

    friend bool operator==(const AntonimPosition&, const AntonimPosition&) = default;

private:
    struct Trusted {};
    AntonimPosition(Trusted, std::vector<std::uint32_t> sorted) : heaps_(std::move(sorted)) {}

    std::vector<std::uint32_t> heaps_;
};

/// Known outcomes for up to three piles: {} is P, one pile is N, {a,b} is P
/// iff it equals {2k+1, 2k+2}, {a,b,c} is P iff (a+1)^(b+1)^(c+1) == 0.
/// Throws OutOfTheoryError for four or more piles.
Outcome antonim_outcome_closed(const AntonimPosition& p);

} // namespace cgt
