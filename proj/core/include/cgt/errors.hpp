#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cgt {

/// A memo table grew past its configured entry cap.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Dyadic arithmetic left the 64-bit numerator / 62-bit exponent range.
class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/// A requested construction exceeds a fixed table bound (e.g. nimbers above *1024).
class BoundError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// A closed form was asked about a position outside the family it covers.
class OutOfTheoryError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Graph does not have the shape an operation requires (path collection, binary tree).
class ShapeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class IllegalMoveError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed text. `offset()` is the 0-based byte offset where parsing stopped.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t offset)
        : std::runtime_error(message + " (at offset " + std::to_string(offset) + ")"), offset_(offset)
    {
    }

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

} // namespace cgt
