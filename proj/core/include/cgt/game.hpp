#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "cgt/dyadic.hpp"
#include "cgt/outcome.hpp"

namespace cgt {

/// Handle to the canonical form of a short partizan game.
///
/// Canonical forms live in a process-wide content-addressed store, so two
/// handles compare equal exactly when the games they name have equal value.
/// Handles are trivially copyable and safe to share between threads. A
/// default-constructed Game is 0 = { | }.
class Game {
public:
    constexpr Game() noexcept = default;

    std::uint32_t id() const noexcept { return id_; }

    /// Options of the canonical form, ordered by id.
    std::span<const Game> left_options() const;
    std::span<const Game> right_options() const;

    /// The dyadic value if this game is a number.
    std::optional<Dyadic> number() const;
    bool is_number() const { return number().has_value(); }
    /// k if this game is the nimber *k (0 counts as *0).
    std::optional<std::uint32_t> nimber() const;
    /// x if this game is x + * for a number x; canonically that is {x|x}.
    std::optional<Dyadic> number_plus_star() const;

    /// Day on which the canonical form is born.
    std::uint32_t birthday() const;

    friend constexpr bool operator==(Game, Game) noexcept = default;

private:
    friend class GameStore;
    explicit constexpr Game(std::uint32_t id) noexcept : id_(id) {}

    std::uint32_t id_ = 0;
};

/// Orders handles by store id. Not a game-value order; use leq for that.
struct GameIdLess {
    bool operator()(Game a, Game b) const noexcept { return a.id() < b.id(); }
};

/// Canonical form of {left | right}. Options must themselves be canonical
/// (every Game is). Dominated options are deleted and reversible options
/// bypassed until neither applies.
Game make_game(std::span<const Game> left, std::span<const Game> right);
Game make_game(std::initializer_list<Game> left, std::initializer_list<Game> right);

/// Disjunctive sum.
Game add(Game g, Game h);
Game negate(Game g);
/// g <= h in the usual partial order on games.
bool leq(Game g, Game h);

inline Game operator+(Game g, Game h) { return add(g, h); }
inline Game operator-(Game g) { return negate(g); }
inline Game operator-(Game g, Game h) { return add(g, negate(h)); }

/// P if g = 0, L if g > 0, R if g < 0, N if g is confused with 0.
Outcome outcome_of_value(Game g);

/// Canonical number. Integers n > 0 are {n-1|}; p/2^q in lowest terms is
/// {(p-1)/2^q | (p+1)/2^q}. Integer parts beyond 2^20 in magnitude throw
/// OverflowError since their canonical chains are materialized.
Game number(const Dyadic& d);

/// Canonical *k = {0,*,...,*(k-1) | 0,*,...,*(k-1)}. Throws BoundError for k > 1024.
Game nimber_value(std::uint32_t k);

inline Game zero() { return Game{}; }
Game star();

/// n copies of * plus the number `offset`: offset when n is even, offset + * when odd.
Game star_multiple(std::uint64_t n, const Dyadic& offset = Dyadic{});

/// Every canonical form interned so far, in creation order.
std::vector<Game> all_games();
std::size_t game_store_size();

} // namespace cgt

template <>
struct std::hash<cgt::Game> {
    std::size_t operator()(cgt::Game g) const noexcept { return std::hash<std::uint32_t>{}(g.id()); }
};
