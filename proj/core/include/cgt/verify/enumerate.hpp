#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cgt/rulesets/antonim.hpp"
#include "cgt/rulesets/greedy_nim.hpp"
#include "cgt/rulesets/myopic_col.hpp"
#include "cgt/rulesets/nim.hpp"
#include "cgt/rulesets/rotisserie.hpp"
#include "cgt/rulesets/tower_nim.hpp"

namespace cgt::verify {

// Exhaustive generators. Each yields every position inside its bounds exactly
// once, ordered first by size (heap count, length, vertex count) and then
// lexicographically.

/// Multisets of at most max_heaps heaps in 1..max_heap_size, each as a
/// nondecreasing list: (), (1), (2), (1,1), (1,2), (2,2) for bounds 2, 2.
std::vector<NimPosition> enumerate_nim(std::uint32_t max_heaps, std::uint32_t max_heap_size);

/// Every ordered list of exactly `heaps` heaps in 0..max_heap_size
/// (this covers all shorter lists, padded with empty heaps).
std::vector<NimPosition> enumerate_nim_tuples(std::uint32_t heaps, std::uint32_t max_heap_size);

/// Sets of at most max_piles distinct sizes in 1..max_heap_size.
std::vector<AntonimPosition> enumerate_antonim(std::uint32_t max_piles, std::uint32_t max_heap_size);

/// Stacks of length 0..max_length, heaps 1..max_heap_size.
std::vector<TowerNimPosition> enumerate_tower(std::uint32_t max_length, std::uint32_t max_heap_size);

/// Queues of length min_length..max_length with heaps min_heap..max_heap_size.
std::vector<RotisseriePosition> enumerate_rotisserie(std::uint32_t max_length, std::uint32_t max_heap_size,
                                                     std::uint32_t min_heap = 1, std::uint32_t min_length = 0);

/// Multisets of at most max_heaps heaps in 1..max_heap_size.
std::vector<GreedyNimPosition> enumerate_greedy(std::uint32_t max_heaps, std::uint32_t max_heap_size);

/// Paths of 0..max_vertices vertices under every coloring, colors ordered U < B < R.
std::vector<ColPosition> enumerate_col_paths(std::uint32_t max_vertices);

/// Shape-distinct rooted trees (children unordered, at most two per vertex)
/// of 1..max_vertices vertices, as uncolored tree shorthand ("U(U,U)").
/// With root_has_two_children only trees whose root has exactly two children.
std::vector<std::string> enumerate_tree_shapes(std::uint32_t max_vertices, bool root_has_two_children = false);

/// Every coloring of the given shape, colors ordered U < B < R with the
/// last preorder vertex varying fastest.
std::vector<ColPosition> enumerate_colorings(const ColPosition& shape);

enum class Ruleset { Nim, Antonim, Tower, Rotisserie, Greedy, ColPath, ColTree };

/// Type-erased form of the generators above, as position text. For Nim and
/// Greedy `max_count` is the heap count, for Tower / Rotisserie the length,
/// for Antonim the pile count and for Col the vertex count (`max_size` unused).
std::vector<std::string> enumerate_positions(Ruleset ruleset, std::uint32_t max_count, std::uint32_t max_size);

} // namespace cgt::verify
