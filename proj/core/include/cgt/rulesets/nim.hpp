#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cgt/outcome.hpp"

namespace cgt {

/// Nim: a list of heaps, any one of which may be lowered. Zero heaps are
/// allowed and behave exactly like absent heaps.
class NimPosition {
public:
    NimPosition() = default;
    explicit NimPosition(std::vector<std::uint32_t> heaps) : heaps_(std::move(heaps)) {}

    const std::vector<std::uint32_t>& heaps() const noexcept { return heaps_; }

    /// Every list obtained by lowering exactly one heap; heap order kept.
    std::vector<NimPosition> options() const;
    /// Sorted nonzero heaps.
    std::string key() const;

    friend bool operator==(const NimPosition&, const NimPosition&) = default;

private:
    std::vector<std::uint32_t> heaps_;
};

/// Bouton: xor of the heap sizes.
Nimber nim_grundy_closed(const NimPosition& p);

} // namespace cgt
