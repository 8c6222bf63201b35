#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <ranges>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cgt/errors.hpp"
#include "cgt/game.hpp"
#include "cgt/outcome.hpp"

namespace cgt {

/// A position of a finite, loopfree impartial game. `key()` must be equal for
/// positions with equal game value under the ruleset's normalization (sorted
/// heaps for Nim, verbatim lists for Tower / Rotisserie, ...).
template <class P>
concept ImpartialPosition = std::copyable<P> && requires(const P& p) {
    { p.options() } -> std::same_as<std::vector<P>>;
    { p.key() } -> std::convertible_to<std::string>;
};

template <class P>
concept PartizanPosition = std::copyable<P> && requires(const P& p, Player who) {
    { p.options(who) } -> std::same_as<std::vector<P>>;
    { p.key() } -> std::convertible_to<std::string>;
};

struct EngineConfig {
    static constexpr std::size_t kDefaultMemoCap = 50'000'000;

    /// Exceeding this many memo entries raises ResourceLimitError; entries are never evicted.
    std::size_t memo_cap = kDefaultMemoCap;
    bool memoize = true;
};

/// Exhaustive Sprague-Grundy solver.
///
/// Search is iterative, so deep games (one huge heap) cannot overflow the
/// call stack. Instances are not thread-safe; use one per worker. Results
/// never depend on memoization or on evaluation order.
template <ImpartialPosition P>
class ImpartialSolver {
public:
    explicit ImpartialSolver(EngineConfig config = {}) : config_(config) {}

    Nimber grundy(const P& root)
    {
        if (auto hit = lookup(root.key())) {
            return *hit;
        }
        struct Frame {
            std::vector<P> options;
            std::string key;
            std::size_t next = 0;
            std::vector<Nimber> seen;
        };
        std::vector<Frame> stack;
        stack.push_back(Frame{root.options(), root.key(), 0, {}});
        Nimber result;
        while (!stack.empty()) {
            Frame& top = stack.back();
            if (top.next < top.options.size()) {
                const P& child = top.options[top.next];
                std::string key = child.key();
                if (auto hit = lookup(key)) {
                    top.seen.push_back(*hit);
                    ++top.next;
                    continue;
                }
                Frame frame{child.options(), std::move(key), 0, {}};
                stack.push_back(std::move(frame));
                continue;
            }
            Nimber g = mex(top.seen);
            store(std::move(top.key), g);
            stack.pop_back();
            if (stack.empty()) {
                result = g;
            } else {
                stack.back().seen.push_back(g);
                ++stack.back().next;
            }
        }
        return result;
    }

    Outcome outcome(const P& p) { return grundy(p).value != 0 ? Outcome::N : Outcome::P; }

    /// Options with Grundy value 0, in the ruleset's enumeration order.
    std::vector<P> winning_moves(const P& p)
    {
        std::vector<P> out;
        for (P& o : p.options()) {
            if (grundy(o).value == 0) {
                out.push_back(std::move(o));
            }
        }
        return out;
    }

    std::size_t memo_size() const noexcept { return memo_.size(); }
    const EngineConfig& config() const noexcept { return config_; }

private:
    const Nimber* lookup(const std::string& key) const
    {
        if (!config_.memoize) {
            return nullptr;
        }
        auto it = memo_.find(key);
        return it == memo_.end() ? nullptr : &it->second;
    }

    void store(std::string key, Nimber g)
    {
        if (!config_.memoize) {
            return;
        }
        if (memo_.size() >= config_.memo_cap) {
            throw ResourceLimitError("memo table reached its cap of " + std::to_string(config_.memo_cap) +
                                     " entries; reduce the bounds or raise the cap");
        }
        memo_.emplace(std::move(key), g);
    }

    EngineConfig config_;
    std::unordered_map<std::string, Nimber> memo_;
};

/// Exhaustive partizan solver: canonical values, and outcome classes from two
/// independent who-wins searches that never consult the value algebra.
///
/// Recursion depth is bounded by the position's move count (uncolored
/// vertices for Myopic Col). Instances are not thread-safe.
template <PartizanPosition P>
class PartizanSolver {
public:
    explicit PartizanSolver(EngineConfig config = {}) : config_(config) {}

    Game value(const P& p)
    {
        std::string key = p.key();
        if (config_.memoize) {
            if (auto it = values_.find(key); it != values_.end()) {
                return it->second;
            }
        }
        std::vector<Game> left;
        std::vector<Game> right;
        for (const P& o : p.options(Player::Left)) {
            left.push_back(value(o));
        }
        for (const P& o : p.options(Player::Right)) {
            right.push_back(value(o));
        }
        Game g = make_game(left, right);
        if (config_.memoize) {
            check_cap(values_.size());
            values_.emplace(std::move(key), g);
        }
        return g;
    }

    /// True when `mover` has a winning strategy moving first from p.
    bool wins_moving_first(const P& p, Player mover)
    {
        std::string key;
        if (config_.memoize) {
            key = p.key();
            if (auto it = wins_.find(key); it != wins_.end()) {
                auto bits = it->second;
                std::uint8_t known = mover == Player::Left ? 1 : 4;
                if (bits & known) {
                    return (bits & (known << 1)) != 0;
                }
            }
        }
        bool win = false;
        for (const P& o : p.options(mover)) {
            if (!wins_moving_first(o, opponent(mover))) {
                win = true;
                break;
            }
        }
        if (config_.memoize) {
            std::uint8_t known = mover == Player::Left ? 1 : 4;
            auto [it, inserted] = wins_.try_emplace(std::move(key), 0);
            if (inserted) {
                check_cap(wins_.size() - 1);
            }
            it->second |= known | (win ? known << 1 : 0);
        }
        return win;
    }

    Outcome outcome(const P& p)
    {
        return outcome_from_wins(wins_moving_first(p, Player::Left), wins_moving_first(p, Player::Right));
    }

    /// Options for `mover` after which the opponent, moving next, cannot win.
    std::vector<P> winning_moves(const P& p, Player mover)
    {
        std::vector<P> out;
        for (P& o : p.options(mover)) {
            if (!wins_moving_first(o, opponent(mover))) {
                out.push_back(std::move(o));
            }
        }
        return out;
    }

    std::size_t memo_size() const noexcept { return values_.size() + wins_.size(); }

private:
    void check_cap(std::size_t current) const
    {
        if (current >= config_.memo_cap) {
            throw ResourceLimitError("memo table reached its cap of " + std::to_string(config_.memo_cap) +
                                     " entries; reduce the bounds or raise the cap");
        }
    }

    EngineConfig config_;
    std::unordered_map<std::string, Game> values_;
    // bit 0/1: Left-first known/wins, bit 2/3: Right-first known/wins
    std::unordered_map<std::string, std::uint8_t> wins_;
};

} // namespace cgt
