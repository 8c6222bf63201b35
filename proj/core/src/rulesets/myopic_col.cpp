#include "cgt/rulesets/myopic_col.hpp"

#include <algorithm>
#include <stdexcept>

#include "cgt/errors.hpp"

namespace cgt {

char color_letter(Color c) noexcept
{
    switch (c) {
    case Color::Uncolored: return 'U';
    case Color::Blue: return 'B';
    case Color::Red: return 'R';
    }
    return '?';
}

struct ColPosition::Graph {
    std::vector<Arc> arcs;
    std::vector<std::vector<std::uint32_t>> out;
    std::string key;
};

ColPosition::ColPosition()
{
    static const auto empty = std::make_shared<const Graph>();
    graph_ = empty;
}

ColPosition::ColPosition(std::shared_ptr<const Graph> graph, std::vector<Color> colors)
    : graph_(std::move(graph)), colors_(std::move(colors))
{
}

ColPosition::ColPosition(std::vector<Color> colors, std::vector<Arc> arcs) : colors_(std::move(colors))
{
    auto n = colors_.size();
    std::sort(arcs.begin(), arcs.end());
    if (std::adjacent_find(arcs.begin(), arcs.end()) != arcs.end()) {
        throw std::invalid_argument("duplicate arc");
    }
    auto graph = std::make_shared<Graph>();
    graph->out.resize(n);
    for (auto [from, to] : arcs) {
        if (from >= n || to >= n) {
            throw std::invalid_argument("arc endpoint out of range");
        }
        if (from == to) {
            throw std::invalid_argument("self-loop at vertex " + std::to_string(from));
        }
        graph->out[from].push_back(to);
    }
    graph->key.push_back(static_cast<char>('c'));
    auto put = [&graph](std::uint32_t v) {
        for (int shift = 0; shift < 32; shift += 8) {
            graph->key.push_back(static_cast<char>((v >> shift) & 0xff));
        }
    };
    put(static_cast<std::uint32_t>(n));
    put(static_cast<std::uint32_t>(arcs.size()));
    for (auto [from, to] : arcs) {
        put(from);
        put(to);
    }
    graph->arcs = std::move(arcs);
    graph_ = std::move(graph);
}

ColPosition ColPosition::path(std::vector<Color> colors)
{
    std::vector<Arc> arcs;
    for (std::uint32_t i = 0; i + 1 < colors.size(); ++i) {
        arcs.emplace_back(i, i + 1);
    }
    return ColPosition(std::move(colors), std::move(arcs));
}

const std::vector<ColPosition::Arc>& ColPosition::arcs() const noexcept
{
    return graph_->arcs;
}

const std::vector<std::uint32_t>& ColPosition::out_neighbors(std::uint32_t v) const
{
    return graph_->out.at(v);
}

std::size_t ColPosition::uncolored_count() const noexcept
{
    return static_cast<std::size_t>(std::count(colors_.begin(), colors_.end(), Color::Uncolored));
}

bool ColPosition::legal(std::uint32_t v, Player mover) const
{
    if (colors_[v] != Color::Uncolored) {
        return false;
    }
    Color mine = color_of(mover);
    const auto& out = graph_->out[v];
    return std::none_of(out.begin(), out.end(), [&](std::uint32_t b) { return colors_[b] == mine; });
}

std::vector<std::uint32_t> ColPosition::moves(Player mover) const
{
    std::vector<std::uint32_t> out;
    for (std::uint32_t v = 0; v < colors_.size(); ++v) {
        if (legal(v, mover)) {
            out.push_back(v);
        }
    }
    return out;
}

ColPosition ColPosition::apply(std::uint32_t v, Player mover) const
{
    if (v >= colors_.size() || !legal(v, mover)) {
        throw IllegalMoveError(std::string(to_string(mover)) + " cannot color vertex " + std::to_string(v));
    }
    std::vector<Color> next = colors_;
    next[v] = color_of(mover);
    return ColPosition(graph_, std::move(next));
}

std::vector<ColPosition> ColPosition::options(Player mover) const
{
    std::vector<ColPosition> out;
    for (std::uint32_t v = 0; v < colors_.size(); ++v) {
        if (legal(v, mover)) {
            std::vector<Color> next = colors_;
            next[v] = color_of(mover);
            out.push_back(ColPosition(graph_, std::move(next)));
        }
    }
    return out;
}

std::string ColPosition::key() const
{
    std::string k = graph_->key;
    for (Color c : colors_) {
        k.push_back(color_letter(c));
    }
    return k;
}

bool operator==(const ColPosition& a, const ColPosition& b)
{
    return a.colors_ == b.colors_ && a.graph_->arcs == b.graph_->arcs;
}

Game col_path_value(std::uint32_t n, PathEnd end)
{
    if (n == 0) {
        return zero();
    }
    switch (end) {
    case PathEnd::None: return star_multiple(n, Dyadic{});
    case PathEnd::Blue: return star_multiple(n - 1, Dyadic{-1});
    case PathEnd::Red: return star_multiple(n - 1, Dyadic{1});
    }
    return zero();
}

namespace {

std::vector<std::size_t> in_degrees(const ColPosition& p)
{
    std::vector<std::size_t> in(p.size(), 0);
    for (auto [from, to] : p.arcs()) {
        ++in[to];
    }
    return in;
}

} // namespace

bool is_path_collection(const ColPosition& p)
{
    auto in = in_degrees(p);
    for (std::uint32_t v = 0; v < p.size(); ++v) {
        if (in[v] > 1 || p.out_neighbors(v).size() > 1) {
            return false;
        }
    }
    // With all degrees <= 1, every vertex is on a path from a source or on a cycle.
    std::vector<bool> seen(p.size(), false);
    for (std::uint32_t v = 0; v < p.size(); ++v) {
        if (in[v] != 0) {
            continue;
        }
        for (std::uint32_t u = v;;) {
            seen[u] = true;
            const auto& out = p.out_neighbors(u);
            if (out.empty()) {
                break;
            }
            u = out.front();
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

PathDecomposition col_decompose_paths(const ColPosition& p)
{
    if (!is_path_collection(p)) {
        throw ShapeError("graph is not a disjoint union of directed paths");
    }
    PathColSummary s;
    for (std::uint32_t v = 0; v < p.size(); ++v) {
        if (p.color(v) != Color::Uncolored) {
            continue;
        }
        const auto& out = p.out_neighbors(v);
        Color next = out.empty() ? Color::Uncolored : p.color(out.front());
        switch (next) {
        case Color::Uncolored: ++s.a; break;
        case Color::Red: ++s.b; break;
        case Color::Blue: ++s.c; break;
        }
    }
    Dyadic offset = Dyadic(static_cast<std::int64_t>(s.b)) - Dyadic(static_cast<std::int64_t>(s.c));
    return PathDecomposition{s, star_multiple(s.a, offset)};
}

std::uint32_t col_tree_root(const ColPosition& tree)
{
    if (tree.size() == 0) {
        throw ShapeError("empty graph is not a rooted tree");
    }
    auto in = in_degrees(tree);
    std::optional<std::uint32_t> root;
    for (std::uint32_t v = 0; v < tree.size(); ++v) {
        if (in[v] > 1) {
            throw ShapeError("vertex " + std::to_string(v) + " has more than one parent");
        }
        if (tree.out_neighbors(v).size() > 2) {
            throw ShapeError("vertex " + std::to_string(v) + " has more than two children");
        }
        if (in[v] == 0) {
            if (root) {
                throw ShapeError("graph has more than one root");
            }
            root = v;
        }
    }
    if (!root) {
        throw ShapeError("graph has no root");
    }
    // n-1 arcs, one parent each, and everything reachable means a tree.
    std::vector<bool> seen(tree.size(), false);
    std::vector<std::uint32_t> todo{*root};
    std::size_t reached = 0;
    while (!todo.empty()) {
        auto v = todo.back();
        todo.pop_back();
        if (seen[v]) {
            throw ShapeError("graph contains a cycle");
        }
        seen[v] = true;
        ++reached;
        for (auto c : tree.out_neighbors(v)) {
            todo.push_back(c);
        }
    }
    if (reached != tree.size()) {
        throw ShapeError("graph is not connected from its root");
    }
    return *root;
}

ColPosition col_subtree(const ColPosition& tree, std::uint32_t child)
{
    std::vector<std::uint32_t> order;
    std::vector<std::int64_t> label(tree.size(), -1);
    std::vector<std::uint32_t> todo{child};
    while (!todo.empty()) {
        auto v = todo.back();
        todo.pop_back();
        label[v] = static_cast<std::int64_t>(order.size());
        order.push_back(v);
        const auto& out = tree.out_neighbors(v);
        for (auto it = out.rbegin(); it != out.rend(); ++it) {
            todo.push_back(*it);
        }
    }
    std::vector<Color> colors;
    std::vector<ColPosition::Arc> arcs;
    for (auto v : order) {
        colors.push_back(tree.color(v));
        for (auto c : tree.out_neighbors(v)) {
            arcs.emplace_back(static_cast<std::uint32_t>(label[v]), static_cast<std::uint32_t>(label[c]));
        }
    }
    return ColPosition(std::move(colors), std::move(arcs));
}

TreeConjectureResult col_tree_conjecture_check(const ColPosition& tree, PartizanSolver<ColPosition>& solver)
{
    std::uint32_t root = col_tree_root(tree);
    if (tree.uncolored_count() != tree.size()) {
        throw ShapeError("conjecture trees must be entirely uncolored");
    }
    const auto& children = tree.out_neighbors(root);
    if (children.size() != 2) {
        throw ShapeError("root must have exactly two nonempty child subtrees");
    }
    TreeConjectureResult r;
    r.lhs = solver.value(tree);
    r.rhs = star() + solver.value(col_subtree(tree, children[0])) + solver.value(col_subtree(tree, children[1]));
    r.holds = r.lhs == r.rhs;
    return r;
}

TreeConjectureResult col_tree_conjecture_check(const ColPosition& tree)
{
    PartizanSolver<ColPosition> solver;
    return col_tree_conjecture_check(tree, solver);
}

} // namespace cgt
