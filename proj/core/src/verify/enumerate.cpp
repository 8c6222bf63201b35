#include "cgt/verify/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <utility>

#include "cgt/position_text.hpp"

namespace cgt::verify {
namespace {

using Heaps = std::vector<std::uint32_t>;

// Nondecreasing lists of length `count` over lo..hi, in lexicographic order.
void nondecreasing(std::uint32_t count, std::uint32_t lo, std::uint32_t hi, const std::function<void(const Heaps&)>& emit)
{
    Heaps cur;
    std::function<void(std::uint32_t)> rec = [&](std::uint32_t from) {
        if (cur.size() == count) {
            emit(cur);
            return;
        }
        for (std::uint32_t v = from; v <= hi; ++v) {
            cur.push_back(v);
            rec(v);
            cur.pop_back();
        }
    };
    rec(lo);
}

// Every list of length `count` over lo..hi, in lexicographic order.
void all_lists(std::uint32_t count, std::uint32_t lo, std::uint32_t hi, const std::function<void(const Heaps&)>& emit)
{
    if (lo > hi && count > 0) {
        return;
    }
    Heaps cur(count, lo);
    while (true) {
        emit(cur);
        std::size_t i = count;
        while (i > 0 && cur[i - 1] == hi) {
            cur[i - 1] = lo;
            --i;
        }
        if (i == 0) {
            return;
        }
        ++cur[i - 1];
    }
}

} // namespace

std::vector<NimPosition> enumerate_nim(std::uint32_t max_heaps, std::uint32_t max_heap_size)
{
    std::vector<NimPosition> out;
    for (std::uint32_t k = 0; k <= max_heaps; ++k) {
        nondecreasing(k, 1, max_heap_size, [&](const Heaps& h) { out.emplace_back(h); });
    }
    return out;
}

std::vector<NimPosition> enumerate_nim_tuples(std::uint32_t heaps, std::uint32_t max_heap_size)
{
    std::vector<NimPosition> out;
    all_lists(heaps, 0, max_heap_size, [&](const Heaps& h) { out.emplace_back(h); });
    return out;
}

std::vector<AntonimPosition> enumerate_antonim(std::uint32_t max_piles, std::uint32_t max_heap_size)
{
    std::vector<AntonimPosition> out;
    for (std::uint32_t k = 0; k <= max_piles; ++k) {
        Heaps cur;
        std::function<void(std::uint32_t)> rec = [&](std::uint32_t from) {
            if (cur.size() == k) {
                out.emplace_back(cur);
                return;
            }
            for (std::uint32_t v = from; v <= max_heap_size; ++v) {
                cur.push_back(v);
                rec(v + 1);
                cur.pop_back();
            }
        };
        rec(1);
    }
    return out;
}

std::vector<TowerNimPosition> enumerate_tower(std::uint32_t max_length, std::uint32_t max_heap_size)
{
    std::vector<TowerNimPosition> out;
    for (std::uint32_t k = 0; k <= max_length; ++k) {
        all_lists(k, 1, max_heap_size, [&](const Heaps& h) { out.emplace_back(h); });
    }
    return out;
}

std::vector<RotisseriePosition> enumerate_rotisserie(std::uint32_t max_length, std::uint32_t max_heap_size,
                                                     std::uint32_t min_heap, std::uint32_t min_length)
{
    std::vector<RotisseriePosition> out;
    for (std::uint32_t k = min_length; k <= max_length; ++k) {
        all_lists(k, std::max<std::uint32_t>(min_heap, 1), max_heap_size, [&](const Heaps& h) { out.emplace_back(h); });
    }
    return out;
}

std::vector<GreedyNimPosition> enumerate_greedy(std::uint32_t max_heaps, std::uint32_t max_heap_size)
{
    std::vector<GreedyNimPosition> out;
    for (std::uint32_t k = 0; k <= max_heaps; ++k) {
        nondecreasing(k, 1, max_heap_size, [&](const Heaps& h) { out.emplace_back(h); });
    }
    return out;
}

std::vector<ColPosition> enumerate_col_paths(std::uint32_t max_vertices)
{
    std::vector<ColPosition> out;
    for (std::uint32_t n = 0; n <= max_vertices; ++n) {
        all_lists(n, 0, 2, [&](const Heaps& digits) {
            std::vector<Color> colors;
            colors.reserve(n);
            for (std::uint32_t d : digits) {
                colors.push_back(static_cast<Color>(d));
            }
            out.push_back(ColPosition::path(std::move(colors)));
        });
    }
    return out;
}

namespace {

struct Shape {
    std::uint32_t size;
    std::string text;
};

// Children of a vertex are written smaller subtree first (by size, then text),
// which makes the shorthand a canonical name for the unordered shape.
bool shape_less(const Shape& a, const Shape& b)
{
    return a.size != b.size ? a.size < b.size : a.text < b.text;
}

} // namespace

std::vector<std::string> enumerate_tree_shapes(std::uint32_t max_vertices, bool root_has_two_children)
{
    std::vector<std::vector<Shape>> by_size(max_vertices + 1);
    std::vector<std::vector<Shape>> two_children(max_vertices + 1);
    for (std::uint32_t n = 1; n <= max_vertices; ++n) {
        if (n == 1) {
            by_size[1].push_back({1, "U"});
            continue;
        }
        for (const Shape& c : by_size[n - 1]) {
            by_size[n].push_back({n, "U(" + c.text + ")"});
        }
        for (std::uint32_t i = 1; 2 * i <= n - 1; ++i) {
            std::uint32_t j = n - 1 - i;
            for (const Shape& a : by_size[i]) {
                for (const Shape& b : by_size[j]) {
                    if (shape_less(b, a)) {
                        continue;
                    }
                    Shape s{n, "U(" + a.text + "," + b.text + ")"};
                    by_size[n].push_back(s);
                    two_children[n].push_back(std::move(s));
                }
            }
        }
        std::sort(by_size[n].begin(), by_size[n].end(), shape_less);
        std::sort(two_children[n].begin(), two_children[n].end(), shape_less);
    }
    std::vector<std::string> out;
    const auto& source = root_has_two_children ? two_children : by_size;
    for (const auto& level : source) {
        for (const Shape& s : level) {
            out.push_back(s.text);
        }
    }
    return out;
}

std::vector<ColPosition> enumerate_colorings(const ColPosition& shape)
{
    std::vector<ColPosition> out;
    const auto n = static_cast<std::uint32_t>(shape.size());
    all_lists(n, 0, 2, [&](const Heaps& digits) {
        std::vector<Color> colors;
        colors.reserve(n);
        for (std::uint32_t d : digits) {
            colors.push_back(static_cast<Color>(d));
        }
        out.emplace_back(std::move(colors), shape.arcs());
    });
    return out;
}

std::vector<std::string> enumerate_positions(Ruleset ruleset, std::uint32_t max_count, std::uint32_t max_size)
{
    std::vector<std::string> out;
    auto collect = [&](const auto& positions) {
        out.reserve(positions.size());
        for (const auto& p : positions) {
            out.push_back(format_position(p));
        }
    };
    switch (ruleset) {
    case Ruleset::Nim:
        collect(enumerate_nim(max_count, max_size));
        break;
    case Ruleset::Antonim:
        collect(enumerate_antonim(max_count, max_size));
        break;
    case Ruleset::Tower:
        collect(enumerate_tower(max_count, max_size));
        break;
    case Ruleset::Rotisserie:
        collect(enumerate_rotisserie(max_count, max_size));
        break;
    case Ruleset::Greedy:
        collect(enumerate_greedy(max_count, max_size));
        break;
    case Ruleset::ColPath:
        for (const ColPosition& p : enumerate_col_paths(max_count)) {
            out.push_back(format_col_path(p));
        }
        break;
    case Ruleset::ColTree:
        out = enumerate_tree_shapes(max_count);
        break;
    }
    return out;
}

} // namespace cgt::verify
