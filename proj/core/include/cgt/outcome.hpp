#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string_view>

namespace cgt {

/// Outcome class under normal play. Impartial positions are only ever P or N.
enum class Outcome : std::uint8_t {
    P, ///< previous player (the one who just moved) wins
    N, ///< next player wins
    L, ///< Left wins whoever starts
    R, ///< Right wins whoever starts
};

std::string_view to_string(Outcome outcome) noexcept;

/// Left is Blue and Right is Red in Myopic Col; positive values favour Left.
enum class Player : std::uint8_t { Left, Right };

constexpr Player opponent(Player p) noexcept { return p == Player::Left ? Player::Right : Player::Left; }

std::string_view to_string(Player player) noexcept;

/// Grundy value of an impartial position.
struct Nimber {
    std::uint32_t value = 0;

    friend constexpr auto operator<=>(Nimber, Nimber) = default;
};

/// Least natural number not in `values`. Input order and duplicates are irrelevant.
Nimber mex(std::span<const Nimber> values);

/// Combines the two "who wins moving first" answers into an outcome class.
constexpr Outcome outcome_from_wins(bool left_first_wins, bool right_first_wins) noexcept
{
    if (left_first_wins && right_first_wins) {
        return Outcome::N;
    }
    if (left_first_wins) {
        return Outcome::L;
    }
    if (right_first_wins) {
        return Outcome::R;
    }
    return Outcome::P;
}

} // namespace cgt
