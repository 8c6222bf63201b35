#pragma once

#include <cstdint>
#include <span>
#include <string>

namespace cgt::detail {

// Fixed-width little-endian bytes with a leading tag so keys of different
// rulesets can never collide if they ever share a table.
inline std::string encode_key(char tag, std::span<const std::uint32_t> values)
{
    std::string key;
    key.reserve(1 + 4 * values.size());
    key.push_back(tag);
    for (std::uint32_t v : values) {
        for (int shift = 0; shift < 32; shift += 8) {
            key.push_back(static_cast<char>((v >> shift) & 0xff));
        }
    }
    return key;
}

} // namespace cgt::detail
