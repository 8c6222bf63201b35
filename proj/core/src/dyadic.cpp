#include "cgt/dyadic.hpp"

#include <algorithm>
#include <limits>

#include "cgt/errors.hpp"

namespace cgt {

namespace {

using Wide = __int128;

std::int64_t narrow(Wide v)
{
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
        throw OverflowError("dyadic numerator exceeds 64 bits");
    }
    return static_cast<std::int64_t>(v);
}

// Aligns both operands to the larger exponent. Shifts of up to 62 bits on a
// 64-bit numerator fit in 128 bits.
std::pair<Wide, Wide> align(const Dyadic& a, const Dyadic& b, unsigned& exponent)
{
    exponent = std::max(a.exponent(), b.exponent());
    Wide x = static_cast<Wide>(a.numerator()) * (Wide{1} << (exponent - a.exponent()));
    Wide y = static_cast<Wide>(b.numerator()) * (Wide{1} << (exponent - b.exponent()));
    return {x, y};
}

Dyadic from_wide(Wide numerator, unsigned exponent)
{
    while (exponent > 0 && numerator % 2 == 0) {
        numerator /= 2;
        --exponent;
    }
    return Dyadic(narrow(numerator), exponent);
}

} // namespace

Dyadic::Dyadic(std::int64_t numerator, unsigned exponent)
{
    if (numerator == 0) {
        exponent = 0;
    }
    while (exponent > 0 && numerator % 2 == 0) {
        numerator /= 2;
        --exponent;
    }
    if (exponent > kMaxExponent) {
        throw OverflowError("dyadic exponent exceeds " + std::to_string(kMaxExponent));
    }
    numerator_ = numerator;
    exponent_ = exponent;
}

std::int64_t Dyadic::floor() const noexcept
{
    if (exponent_ == 0) {
        return numerator_;
    }
    // Arithmetic shift rounds toward negative infinity.
    return numerator_ >> exponent_;
}

Dyadic Dyadic::operator-() const
{
    if (numerator_ == std::numeric_limits<std::int64_t>::min()) {
        throw OverflowError("dyadic negation overflows");
    }
    return Dyadic(-numerator_, exponent_);
}

Dyadic operator+(const Dyadic& a, const Dyadic& b)
{
    unsigned e = 0;
    auto [x, y] = align(a, b, e);
    return from_wide(x + y, e);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b)
{
    unsigned e = 0;
    auto [x, y] = align(a, b, e);
    return from_wide(x - y, e);
}

Dyadic Dyadic::half() const
{
    if (numerator_ == 0) {
        return *this;
    }
    return Dyadic(numerator_, exponent_ + 1);
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b)
{
    unsigned e = 0;
    auto [x, y] = align(a, b, e);
    return x <=> y;
}

std::string Dyadic::to_string() const
{
    std::string s = std::to_string(numerator_);
    if (exponent_ > 0) {
        s += '/';
        s += std::to_string(std::uint64_t{1} << exponent_);
    }
    return s;
}

} // namespace cgt
