#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "cgt/engine.hpp"
#include "cgt/game.hpp"
#include "cgt/outcome.hpp"

namespace cgt {

enum class Color : std::uint8_t { Uncolored, Blue, Red };

/// Blue plays Left, Red plays Right.
constexpr Color color_of(Player p) noexcept { return p == Player::Left ? Color::Blue : Color::Red; }

/// 'U', 'B' or 'R'.
char color_letter(Color c) noexcept;

/// Myopic Col: a digraph whose vertices are uncolored, blue or red. A player
/// may paint an uncolored vertex their color unless one of its out-neighbours
/// already has that color. Arcs into the vertex do not matter.
///
/// The graph is shared between a position and all of its options; only the
/// coloring is copied.
class ColPosition {
public:
    using Arc = std::pair<std::uint32_t, std::uint32_t>;

    ColPosition();
    /// Vertices are 0..colors.size()-1. Throws std::invalid_argument on
    /// out-of-range endpoints, self-loops or duplicate arcs.
    ColPosition(std::vector<Color> colors, std::vector<Arc> arcs);

    /// Directed path 0 -> 1 -> ... -> n-1.
    static ColPosition path(std::vector<Color> colors);

    std::size_t size() const noexcept { return colors_.size(); }
    Color color(std::uint32_t v) const { return colors_.at(v); }
    const std::vector<Color>& colors() const noexcept { return colors_; }
    /// Sorted.
    const std::vector<Arc>& arcs() const noexcept;
    const std::vector<std::uint32_t>& out_neighbors(std::uint32_t v) const;
    std::size_t uncolored_count() const noexcept;

    /// Vertices `mover` may legally paint, ascending.
    std::vector<std::uint32_t> moves(Player mover) const;
    /// Throws IllegalMoveError if v is not in moves(mover).
    ColPosition apply(std::uint32_t v, Player mover) const;
    /// One option per legal vertex, in vertex order.
    std::vector<ColPosition> options(Player mover) const;
    /// Arcs and coloring, verbatim.
    std::string key() const;

    friend bool operator==(const ColPosition& a, const ColPosition& b);

private:
    struct Graph;
    ColPosition(std::shared_ptr<const Graph> graph, std::vector<Color> colors);

    bool legal(std::uint32_t v, Player mover) const;

    std::shared_ptr<const Graph> graph_;
    std::vector<Color> colors_;
};

/// What follows a run of uncolored vertices on a path.
enum class PathEnd { None, Blue, Red };

/// Value of a path of n uncolored vertices, optionally followed by one
/// colored vertex: none -> n x *, blue -> (n-1) x * - 1, red -> (n-1) x * + 1.
/// n == 0 is the bare colored vertex (or nothing), value 0.
Game col_path_value(std::uint32_t n, PathEnd end);

/// Counts over the uncolored vertices of a path collection:
/// a: no out-arc or out-arc to an uncolored vertex; b: out-arc to red;
/// c: out-arc to blue.
struct PathColSummary {
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    std::uint64_t c = 0;

    friend bool operator==(const PathColSummary&, const PathColSummary&) = default;
};

struct PathDecomposition {
    PathColSummary summary;
    /// a x * + b - c
    Game value;
};

/// True if every vertex has in- and out-degree <= 1 and there is no cycle.
bool is_path_collection(const ColPosition& p);

/// Closed-form value of a disjoint union of directed paths. Throws ShapeError otherwise.
PathDecomposition col_decompose_paths(const ColPosition& p);

/// Root of a rooted out-tree (arcs parent -> child, each vertex at most two
/// children, everything reachable from the root). Throws ShapeError otherwise.
std::uint32_t col_tree_root(const ColPosition& tree);

/// The subtree hanging from `child`, relabelled in preorder.
ColPosition col_subtree(const ColPosition& tree, std::uint32_t child);

struct TreeConjectureResult {
    bool holds = false;
    /// Value of the whole tree.
    Game lhs;
    /// * + value(T1) + value(T2)
    Game rhs;
};

/// Compares a tree whose uncolored root has two nonempty uncolored subtrees
/// T1, T2 with * + G(T1) + G(T2). Throws ShapeError unless the input is an
/// all-uncolored rooted binary tree whose root has exactly two children.
TreeConjectureResult col_tree_conjecture_check(const ColPosition& tree, PartizanSolver<ColPosition>& solver);
TreeConjectureResult col_tree_conjecture_check(const ColPosition& tree);

} // namespace cgt
