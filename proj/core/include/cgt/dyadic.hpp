#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace cgt {

/// Exact rational numerator / 2^exponent, always in lowest terms.
///
/// The numerator is odd unless the exponent is 0. Every operation that would
/// need more than 64 signed bits for the numerator or an exponent above 62
/// throws OverflowError; nothing wraps around.
class Dyadic {
public:
    static constexpr unsigned kMaxExponent = 62;

    constexpr Dyadic() = default;
    Dyadic(std::int64_t numerator, unsigned exponent = 0);

    std::int64_t numerator() const noexcept { return numerator_; }
    unsigned exponent() const noexcept { return exponent_; }
    bool is_integer() const noexcept { return exponent_ == 0; }

    /// Largest integer <= this.
    std::int64_t floor() const noexcept;

    Dyadic operator-() const;
    friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
    friend Dyadic operator-(const Dyadic& a, const Dyadic& b);

    /// Exact a / 2.
    Dyadic half() const;

    friend bool operator==(const Dyadic&, const Dyadic&) = default;
    friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

    /// "3", "-5/4", "0".
    std::string to_string() const;

private:
    std::int64_t numerator_ = 0;
    unsigned exponent_ = 0;
};

} // namespace cgt
