#include "cgt/rulesets/tower_nim.hpp"

#include <algorithm>
#include <stdexcept>

#include "key_encoding.hpp"

namespace cgt {

TowerNimPosition::TowerNimPosition(std::vector<std::uint32_t> stack) : stack_(std::move(stack))
{
    if (std::find(stack_.begin(), stack_.end(), 0u) != stack_.end()) {
        throw std::invalid_argument("Tower Nim heaps must be positive");
    }
}

std::vector<TowerNimPosition> TowerNimPosition::options() const
{
    std::vector<TowerNimPosition> out;
    if (stack_.empty()) {
        return out;
    }
    std::vector<std::uint32_t> base(stack_.begin(), stack_.end() - 1);
    out.emplace_back(base);
    for (std::uint32_t b = 1; b < stack_.back(); ++b) {
        std::vector<std::uint32_t> next = base;
        next.push_back(b);
        out.emplace_back(std::move(next));
    }
    return out;
}

std::string TowerNimPosition::key() const
{
    return detail::encode_key('t', stack_);
}

std::optional<std::size_t> tower_ones_on_top(const TowerNimPosition& p)
{
    const auto& s = p.stack();
    auto it = std::find_if(s.rbegin(), s.rend(), [](std::uint32_t h) { return h != 1; });
    if (it == s.rend()) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - s.rbegin());
}

Outcome tower_outcome_closed(const TowerNimPosition& p)
{
    auto k = tower_ones_on_top(p);
    if (!k) {
        return p.stack().size() % 2 == 0 ? Outcome::P : Outcome::N;
    }
    return *k % 2 == 0 ? Outcome::N : Outcome::P;
}

std::optional<Nimber> tower_nimber_closed(const TowerNimPosition& p)
{
    const auto& s = p.stack();
    auto k = tower_ones_on_top(p);
    if (!k) {
        return Nimber{static_cast<std::uint32_t>(s.size() % 2)};
    }
    if (*k >= 1) {
        return Nimber{*k % 2 == 0 ? 1u : 0u};
    }
    std::uint32_t top = s.back();
    if (s.size() == 1 || s[s.size() - 2] == 1) {
        return Nimber{top};
    }
    return std::nullopt;
}

} // namespace cgt
