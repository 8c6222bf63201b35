#pragma once

// Deliberately naive reference implementations, written straight from the
// rules and sharing no code with the library. Tests compare the library
// against these.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using State = std::vector<std::uint32_t>;
using MoveFn = std::function<std::vector<State>(const State&)>;

inline std::uint32_t grundy(const State& s, const MoveFn& moves, std::map<State, std::uint32_t>& memo)
{
    if (auto it = memo.find(s); it != memo.end()) {
        return it->second;
    }
    std::set<std::uint32_t> seen;
    for (const State& t : moves(s)) {
        seen.insert(grundy(t, moves, memo));
    }
    std::uint32_t g = 0;
    while (seen.count(g) != 0) {
        ++g;
    }
    memo.emplace(s, g);
    return g;
}

/// Grundy value with a fresh private memo.
inline std::uint32_t grundy(const State& s, const MoveFn& moves)
{
    std::map<State, std::uint32_t> memo;
    return grundy(s, moves, memo);
}

/// Nim: any heap down to any smaller size; heaps kept sorted, zeros dropped.
inline std::vector<State> nim_moves(const State& s)
{
    std::vector<State> out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::uint32_t v = 0; v < s[i]; ++v) {
            State t = s;
            t[i] = v;
            t.erase(std::remove(t.begin(), t.end(), 0U), t.end());
            std::sort(t.begin(), t.end());
            out.push_back(t);
        }
    }
    return out;
}

/// Antonim on a sorted set: a heap x shrinks to y < x; landing on 0 or on a
/// size already present removes it.
inline std::vector<State> antonim_moves(const State& s)
{
    std::vector<State> out;
    for (std::uint32_t x : s) {
        std::set<std::uint32_t> rest(s.begin(), s.end());
        rest.erase(x);
        for (std::uint32_t y = 0; y < x; ++y) {
            std::set<std::uint32_t> t = rest;
            if (y != 0) {
                t.insert(y);
            }
            out.emplace_back(t.begin(), t.end());
        }
    }
    return out;
}

/// Tower Nim: bottom first; only the last (top) heap changes.
inline std::vector<State> tower_moves(const State& s)
{
    std::vector<State> out;
    if (s.empty()) {
        return out;
    }
    for (std::uint32_t b = 0; b < s.back(); ++b) {
        State t(s.begin(), s.end() - 1);
        if (b > 0) {
            t.push_back(b);
        }
        out.push_back(t);
    }
    return out;
}

/// Rotisserie Nim: front heap shrinks and goes to the back, or disappears.
inline std::vector<State> rotisserie_moves(const State& s)
{
    std::vector<State> out;
    if (s.empty()) {
        return out;
    }
    for (std::uint32_t b = 0; b < s.front(); ++b) {
        State t(s.begin() + 1, s.end());
        if (b > 0) {
            t.push_back(b);
        }
        out.push_back(t);
    }
    return out;
}

/// Greedy Nim on a sorted multiset: only a largest heap may shrink.
inline std::vector<State> greedy_moves(const State& s)
{
    std::vector<State> out;
    if (s.empty()) {
        return out;
    }
    std::uint32_t top = *std::max_element(s.begin(), s.end());
    for (std::uint32_t b = 0; b < top; ++b) {
        State t = s;
        t.erase(std::find(t.begin(), t.end(), top));
        if (b > 0) {
            t.push_back(b);
        }
        std::sort(t.begin(), t.end());
        out.push_back(t);
    }
    return out;
}

/// Myopic Col by direct search. colors: 0 uncolored, 1 blue, 2 red;
/// out[v] lists v's out-neighbours. Returns {left_first_wins, right_first_wins}.
struct ColOracle {
    std::vector<std::vector<std::uint32_t>> out;
    std::map<std::pair<State, int>, bool> memo;

    bool mover_wins(const State& colors, int mover)
    {
        auto key = std::make_pair(colors, mover);
        if (auto it = memo.find(key); it != memo.end()) {
            return it->second;
        }
        std::uint32_t mine = mover == 0 ? 1 : 2;
        bool win = false;
        for (std::uint32_t v = 0; v < colors.size() && !win; ++v) {
            if (colors[v] != 0) {
                continue;
            }
            bool blocked = false;
            for (std::uint32_t w : out[v]) {
                blocked = blocked || colors[w] == mine;
            }
            if (blocked) {
                continue;
            }
            State next = colors;
            next[v] = mine;
            win = !mover_wins(next, 1 - mover);
        }
        memo.emplace(key, win);
        return win;
    }

    /// 'P', 'N', 'L' or 'R'.
    char outcome(const State& colors)
    {
        bool left = mover_wins(colors, 0);
        bool right = mover_wins(colors, 1);
        return left && right ? 'N' : left ? 'L' : right ? 'R' : 'P';
    }
};

} // namespace oracle
