#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace etk {

// Base of everything the library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A letter or word that does not belong to the alphabet in use.
class AlphabetError : public Error {
public:
    using Error::Error;
};

// Requested length exceeds what the input can provide.
class LengthError : public Error {
public:
    using Error::Error;
};

// Malformed text input. `position` is a byte offset into the parsed text.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// A structured input (skew spec, directive, config) violates its invariants.
class SpecError : public Error {
public:
    using Error::Error;
};

class NothingToDecompose : public Error {
public:
    using Error::Error;
};

class NotSkewForm : public Error {
public:
    using Error::Error;
};

// Two independent computations that must agree did not. Always a bug.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

} // namespace etk
