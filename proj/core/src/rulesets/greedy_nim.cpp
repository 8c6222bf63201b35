#include "cgt/rulesets/greedy_nim.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "key_encoding.hpp"

namespace cgt {

GreedyNimPosition::GreedyNimPosition(std::vector<std::uint32_t> heaps) : heaps_(std::move(heaps))
{
    if (std::find(heaps_.begin(), heaps_.end(), 0u) != heaps_.end()) {
        throw std::invalid_argument("Greedy Nim heaps must be positive");
    }
    std::sort(heaps_.begin(), heaps_.end(), std::greater<>{});
}

std::vector<GreedyNimPosition> GreedyNimPosition::options() const
{
    std::vector<GreedyNimPosition> out;
    if (heaps_.empty()) {
        return out;
    }
    // Every maximum heap gives the same multisets, so touch the first.
    std::vector<std::uint32_t> rest(heaps_.begin() + 1, heaps_.end());
    out.emplace_back(rest);
    for (std::uint32_t b = 1; b < heaps_.front(); ++b) {
        std::vector<std::uint32_t> next = rest;
        next.push_back(b);
        out.emplace_back(std::move(next));
    }
    return out;
}

std::string GreedyNimPosition::key() const
{
    return detail::encode_key('g', heaps_);
}

Outcome greedy_outcome_closed(const GreedyNimPosition& p)
{
    const auto& h = p.heaps();
    auto maxima = std::count(h.begin(), h.end(), h.empty() ? 0u : h.front());
    return maxima % 2 == 0 ? Outcome::P : Outcome::N;
}

} // namespace cgt
