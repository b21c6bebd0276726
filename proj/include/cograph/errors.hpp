#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cograph {

// Caller violated a documented precondition (bad n, mismatched sums, ...).
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A tree that breaks a structural rule of the tree family, e.g. an internal
// node with a single child.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at offset " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace cograph
