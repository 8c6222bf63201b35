#include "cgt/rulesets/nim.hpp"

#include <algorithm>

#include "key_encoding.hpp"

namespace cgt {

std::vector<NimPosition> NimPosition::options() const
{
    std::vector<NimPosition> out;
    for (std::size_t i = 0; i < heaps_.size(); ++i) {
        for (std::uint32_t m = 0; m < heaps_[i]; ++m) {
            std::vector<std::uint32_t> next = heaps_;
            next[i] = m;
            out.emplace_back(std::move(next));
        }
    }
    return out;
}

std::string NimPosition::key() const
{
    std::vector<std::uint32_t> sorted;
    sorted.reserve(heaps_.size());
    std::copy_if(heaps_.begin(), heaps_.end(), std::back_inserter(sorted), [](std::uint32_t h) { return h > 0; });
    std::sort(sorted.begin(), sorted.end());
    return detail::encode_key('n', sorted);
}

Nimber nim_grundy_closed(const NimPosition& p)
{
    std::uint32_t x = 0;
    for (std::uint32_t h : p.heaps()) {
        x ^= h;
    }
    return Nimber{x};
}

} // namespace cgt
