#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cgt/outcome.hpp"

namespace cgt {

/// Rotisserie Nim: a queue of positive heaps listed front FIRST. The mover
/// takes from the front heap; whatever is left goes to the back of the queue.
class RotisseriePosition {
public:
    RotisseriePosition() = default;
    /// Throws std::invalid_argument on a zero heap.
    explicit RotisseriePosition(std::vector<std::uint32_t> queue);

    const std::vector<std::uint32_t>& queue() const noexcept { return queue_; }

    /// Front removed first, then front lowered to 1, 2, ... and requeued.
    std::vector<RotisseriePosition> options() const;
    std::string key() const;

    friend bool operator==(const RotisseriePosition&, const RotisseriePosition&) = default;

private:
    std::vector<std::uint32_t> queue_;
};

/// How the "smallest index of a minimum heap" theorem for queues of heaps
/// >= 2 is read. One-based: with m heaps h_1..h_m, N iff m is odd or the
/// first minimum sits at an even position. Zero-based: the queue is
/// (a_0..a_n), N iff n is odd or the first minimum has an even 0-based index.
/// Only the one-based reading agrees with exhaustive search.
enum class AdjNimIndexing { OneBased, ZeroBased };

/// Two heaps: N iff a_0 > a_1. Empty unless the queue has exactly two heaps.
std::optional<Outcome> rotisserie_two_heap_rule(const RotisseriePosition& p);

/// Three heaps. Front 1: P iff a_1 > a_2 (the only move goes to (a_1, a_2)).
/// Front > 1: P iff a_1 > 1 and a_2 == 1. Empty unless there are three heaps.
std::optional<Outcome> rotisserie_three_heap_rule(const RotisseriePosition& p);

/// Queues whose heaps are all >= 2. Empty if the queue is empty or has a 1-heap.
std::optional<Outcome> rotisserie_min_index_rule(const RotisseriePosition& p,
                                                 AdjNimIndexing indexing = AdjNimIndexing::OneBased);

/// Combined classifier: empty queue P, one heap N, all heaps >= 2 by the
/// minimum-index rule, otherwise the two- and three-heap rules. Empty for
/// four or more heaps including a 1-heap.
std::optional<Outcome> rotisserie_outcome_closed(const RotisseriePosition& p,
                                                 AdjNimIndexing indexing = AdjNimIndexing::OneBased);

} // namespace cgt
