#include "cgt/rulesets/antonim.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "cgt/errors.hpp"
#include "key_encoding.hpp"

namespace cgt {

AntonimPosition::AntonimPosition(std::vector<std::uint32_t> heaps) : heaps_(std::move(heaps))
{
    std::sort(heaps_.begin(), heaps_.end());
    if (!heaps_.empty() && heaps_.front() == 0) {
        throw std::invalid_argument("Antonim heaps must be positive");
    }
    if (std::adjacent_find(heaps_.begin(), heaps_.end()) != heaps_.end()) {
        throw std::invalid_argument("Antonim heaps must be distinct");
    }
}

std::vector<AntonimPosition> AntonimPosition::options() const
{
    std::vector<AntonimPosition> out;
    std::set<std::vector<std::uint32_t>> seen;
    auto emit = [&](std::vector<std::uint32_t> s) {
        std::sort(s.begin(), s.end());
        if (seen.insert(s).second) {
            out.push_back(AntonimPosition(Trusted{}, std::move(s)));
        }
    };
    for (std::size_t i = 0; i < heaps_.size(); ++i) {
        std::uint32_t x = heaps_[i];
        std::vector<std::uint32_t> rest = heaps_;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
        emit(rest);
        for (std::uint32_t y = 1; y < x; ++y) {
            if (!std::binary_search(heaps_.begin(), heaps_.end(), y)) {
                std::vector<std::uint32_t> next = rest;
                next.push_back(y);
                emit(std::move(next));
            }
        }
    }
    return out;
}

std::string AntonimPosition::key() const
{
    return detail::encode_key('a', heaps_);
}

Outcome antonim_outcome_closed(const AntonimPosition& p)
{
    const auto& h = p.heaps();
    switch (h.size()) {
    case 0:
        return Outcome::P;
    case 1:
        return Outcome::N;
    case 2:
        // {2k+1, 2k+2}; heaps are ascending.
        return (h[0] % 2 == 1 && h[1] == h[0] + 1) ? Outcome::P : Outcome::N;
    case 3:
        return ((h[0] + 1) ^ (h[1] + 1) ^ (h[2] + 1)) == 0 ? Outcome::P : Outcome::N;
    default:
        throw OutOfTheoryError("no closed form is known for Antonim positions with 4 or more piles");
    }
}

} // namespace cgt
