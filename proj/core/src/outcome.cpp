#include "cgt/outcome.hpp"

#include <vector>

namespace cgt {

std::string_view to_string(Outcome outcome) noexcept
{
    switch (outcome) {
    case Outcome::P: return "P";
    case Outcome::N: return "N";
    case Outcome::L: return "L";
    case Outcome::R: return "R";
    }
    return "?";
}

std::string_view to_string(Player player) noexcept
{
    return player == Player::Left ? "blue" : "red";
}

Nimber mex(std::span<const Nimber> values)
{
    // Only values below size() can block the answer.
    std::vector<bool> present(values.size() + 1, false);
    for (Nimber n : values) {
        if (n.value < present.size()) {
            present[n.value] = true;
        }
    }
    std::uint32_t m = 0;
    while (present[m]) {
        ++m;
    }
    return Nimber{m};
}

} // namespace cgt
